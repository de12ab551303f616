"""Strong gcd-condition certificates, Taylor Betti numbers and the Golod bound series.

A linear order on G(I) is a *strong gcd order* if for every pair u ≺ v of
coprime generators some third generator w with u ≺ w divides uv. Such an
order implies that S/I is Golod; this module builds, searches for, checks
and serializes these orders. It never claims that a ring is not Golod.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Sequence

from .ideal import MonomialIdeal, format_ideal, parse_ring_header, _divides
from .linalg import QQ, Field, rank
from .monomial import DEFAULT_ORDER, Monomial, MonomialOrder, format_monomial, parse_monomial

PRECEDES = "≺"
CERT_HEADER = "strong-gcd-certificate v1"


def _coprime(a: tuple, b: tuple) -> bool:
    for x, y in zip(a, b):
        if x and y:
            return False
    return True


@dataclass(frozen=True)
class GeneratorOrder:
    """A linear order ≺ on G(I); ``sequence[0]`` is the ≺-smallest generator."""

    ideal: MonomialIdeal
    sequence: tuple[Monomial, ...]
    source: str = ""

    def __post_init__(self):
        object.__setattr__(self, "sequence", tuple(self.sequence))
        if sorted(g.exps for g in self.sequence) != sorted(g.exps for g in self.ideal.gens) or len(
            set(self.sequence)
        ) != len(self.sequence):
            raise ValueError("order is not a permutation of the minimal generators")

    def position(self) -> dict[Monomial, int]:
        return {g: i for i, g in enumerate(self.sequence)}

    def format(self) -> str:
        return f" {PRECEDES} ".join(format_monomial(g) for g in self.sequence)


@dataclass
class StrongGcdReport:
    order: GeneratorOrder
    passed: bool
    witnesses: dict[tuple[Monomial, Monomial], Monomial] = field(default_factory=dict)
    failing_pair: tuple[Monomial, Monomial] | None = None
    pairs_checked: int = 0

    def __bool__(self) -> bool:
        return self.passed


def check_strong_gcd(ideal: MonomialIdeal, order: GeneratorOrder) -> StrongGcdReport:
    """Check ``order`` and pick the ≺-smallest valid witness for every coprime pair."""
    ideal.require_proper("check_strong_gcd")
    if order.ideal != ideal:
        raise ValueError("order belongs to a different ideal")
    seq = order.sequence
    exps = [g.exps for g in seq]
    report = StrongGcdReport(order, True)
    m = len(seq)
    for i in range(m):
        u = exps[i]
        for j in range(i + 1, m):
            v = exps[j]
            if not _coprime(u, v):
                continue
            report.pairs_checked += 1
            uv = tuple(a + b for a, b in zip(u, v))
            for k in range(i + 1, m):
                if k != j and _divides(exps[k], uv):
                    report.witnesses[seq[i], seq[j]] = seq[k]
                    break
            else:
                report.passed = False
                report.failing_pair = (seq[i], seq[j])
                return report
    return report


def build_product_order(ideal: MonomialIdeal, order: MonomialOrder = DEFAULT_ORDER) -> GeneratorOrder:
    """Higher degree first; within a degree, the order-smaller monomial first."""
    seq = sorted(ideal.gens, key=lambda g: (-g.degree, order.key(g)))
    return GeneratorOrder(ideal, tuple(seq), source=f"product-degree {order.describe(ideal.width)}")


# -- order search -------------------------------------------------------------------


FOUND, NONE, UNKNOWN = "found", "none", "unknown"


@dataclass(frozen=True)
class SearchResult:
    status: str  # found / none (definitive) / unknown (greedy gave up)
    order: GeneratorOrder | None = None
    mode: str = "exhaustive"


class SearchCapExceeded(ValueError):
    pass


def _witness_masks(exps: Sequence[tuple]) -> dict[tuple[int, int], int]:
    """For each coprime pair (a, b): bitmask of the other generators dividing ab."""
    m = len(exps)
    masks = {}
    for a in range(m):
        for b in range(m):
            if a == b or not _coprime(exps[a], exps[b]):
                continue
            uv = tuple(x + y for x, y in zip(exps[a], exps[b]))
            mask = 0
            for k in range(m):
                if k != a and k != b and _divides(exps[k], uv):
                    mask |= 1 << k
            masks[a, b] = mask
    return masks


def search_order(ideal: MonomialIdeal, mode: str = "exhaustive", cap: int = 8) -> SearchResult:
    """Look for a strong gcd order.

    Exhaustive mode returns the lexicographically first passing permutation
    of G(I) (in canonical generator order) or a definitive ``none``. It
    prunes with the observation that whether u may come first only depends
    on the set of generators placed after it, so it memoizes on that set.
    """
    ideal.require_proper("search_order")
    gens = list(ideal.gens)
    exps = [g.exps for g in gens]
    m = len(gens)
    masks = _witness_masks(exps)
    partners = [[b for b in range(m) if (a, b) in masks] for a in range(m)]

    def can_lead(a: int, rest: int) -> bool:
        return all(masks[a, b] & rest for b in partners[a] if rest >> b & 1)

    if mode == "exhaustive":
        if m > cap:
            raise SearchCapExceeded(f"exhaustive search is capped at {cap} generators, ideal has {m}")

        @lru_cache(maxsize=None)
        def first(remaining: int) -> tuple[int, ...] | None:
            if not remaining:
                return ()
            for a in range(m):
                if remaining >> a & 1:
                    rest = remaining & ~(1 << a)
                    if can_lead(a, rest):
                        tail = first(rest)
                        if tail is not None:
                            return (a,) + tail
            return None

        found = first((1 << m) - 1)
        if found is None:
            return SearchResult(NONE, None, mode)
        return SearchResult(FOUND, GeneratorOrder(ideal, tuple(gens[i] for i in found), "exhaustive search"), mode)

    if mode == "greedy":
        remaining = (1 << m) - 1
        seq = []
        while remaining:
            best, best_score = None, None
            for a in range(m):
                if not remaining >> a & 1:
                    continue
                rest = remaining & ~(1 << a)
                live = [b for b in partners[a] if rest >> b & 1]
                ok = sum(1 for b in live if masks[a, b] & rest)
                score = (ok == len(live), ok)
                if best_score is None or score > best_score:
                    best, best_score = a, score
            seq.append(best)
            remaining &= ~(1 << best)
        order = GeneratorOrder(ideal, tuple(gens[i] for i in seq), "greedy search")
        if check_strong_gcd(ideal, order).passed:
            return SearchResult(FOUND, order, mode)
        return SearchResult(UNKNOWN, None, mode)

    raise ValueError(f"unknown search mode {mode!r}")


# -- Betti numbers via the Taylor complex ------------------------------------------------


@dataclass
class BettiTable:
    """Multigraded Betti numbers: (i, multidegree) -> dim Tor_i(S/I, k)_multidegree."""

    width: int
    entries: dict[tuple[int, Monomial], int] = field(default_factory=dict)

    def totals(self) -> dict[int, int]:
        out: dict[int, int] = defaultdict(int)
        for (i, _), d in self.entries.items():
            out[i] += d
        return dict(sorted(out.items()))

    def get(self, i: int, multidegree: Monomial) -> int:
        return self.entries.get((i, multidegree), 0)

    def sorted_entries(self) -> list[tuple[int, Monomial, int]]:
        return sorted(((i, m, d) for (i, m), d in self.entries.items()), key=lambda t: (t[0], t[1].degree, t[1].exps))

    def to_json(self) -> list[dict]:
        return [
            {"i": i, "sigma": sorted(m.support), "multidegree": list(m.exps), "dim": d}
            for i, m, d in self.sorted_entries()
        ]

    def format(self) -> str:
        lines = [f"# betti table, ring n={self.width}; totals " + " ".join(f"b{i}={b}" for i, b in self.totals().items())]
        for i, m, d in self.sorted_entries():
            lines.append(f"{i} {format_monomial(m)} {d}")
        return "\n".join(lines)

    def __eq__(self, other) -> bool:
        return isinstance(other, BettiTable) and self.width == other.width and self.entries == other.entries


class GeneratorCapExceeded(ValueError):
    pass


def taylor_betti(ideal: MonomialIdeal, field: Field = QQ, cap: int = 15) -> BettiTable:
    """Betti numbers from the Taylor complex, one multidegree at a time.

    After tensoring with k, the Taylor differential keeps the face F \\ {g}
    of F exactly when dropping g does not change lcm(F); the strand of each
    lcm is then an ordinary chain complex over k.
    """
    ideal.require_proper("taylor_betti")
    gens = [g.exps for g in ideal.gens]
    m = len(gens)
    if m > cap:
        raise GeneratorCapExceeded(f"Taylor complex is capped at {cap} generators, ideal has {m}")
    n = ideal.width
    lcms: list[tuple] = [(0,) * n] * (1 << m)
    strands: dict[tuple, list[int]] = defaultdict(list)
    strands[lcms[0]].append(0)
    for mask in range(1, 1 << m):
        low = (mask & -mask).bit_length() - 1
        prev = lcms[mask & (mask - 1)]
        lcms[mask] = tuple(max(a, b) for a, b in zip(prev, gens[low]))
        strands[lcms[mask]].append(mask)

    table = BettiTable(n)
    for deg, masks in strands.items():
        by_size: dict[int, list[int]] = defaultdict(list)
        for mask in masks:
            by_size[bin(mask).count("1")].append(mask)
        ranks = {}
        for i, faces in by_size.items():
            if i == 0 or (i - 1) not in by_size:
                ranks[i] = 0
                continue
            target = {f: r for r, f in enumerate(by_size[i - 1])}
            rows = []
            for f in faces:
                col = {}
                bits = [b for b in range(m) if f >> b & 1]
                for pos, b in enumerate(bits):
                    g = f & ~(1 << b)
                    if g in target:
                        col[target[g]] = field(-1 if pos % 2 else 1)
                rows.append(col)
            ranks[i] = rank(rows, field)
        mono = Monomial(deg)
        for i, faces in by_size.items():
            d = len(faces) - ranks[i] - ranks.get(i + 1, 0)
            if d:
                table.entries[i, mono] = d
    return table


# -- Serre bound series ---------------------------------------------------------------


@dataclass(frozen=True)
class SeriesTrunc:
    coefficients: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def format(self) -> str:
        return " ".join(str(c) for c in self.coefficients)


def golod_bound_series(table: BettiTable | dict[int, int], n: int, d: int, max_order: int = 64) -> SeriesTrunc:
    """Coefficients through t^d of (1+t)^n / (1 - sum_{i>=1} b_i t^(i+1))."""
    if d < 0 or d > max_order:
        raise ValueError(f"truncation order must lie in 0..{max_order}")
    totals = table.totals() if isinstance(table, BettiTable) else dict(table)
    num = [comb(n, k) if k <= n else 0 for k in range(d + 1)]
    coeffs: list[int] = []
    for k in range(d + 1):
        c = num[k]
        for i, b in totals.items():
            if i >= 1 and k - i - 1 >= 0:
                c += b * coeffs[k - i - 1]
        coeffs.append(c)
    return SeriesTrunc(tuple(coeffs))


# -- certificates ---------------------------------------------------------------------


def format_certificate(report: StrongGcdReport) -> str:
    order = report.order
    lines = [CERT_HEADER]
    if order.source:
        lines.append(f"# order source: {order.source}")
    lines.append(format_ideal(order.ideal).rstrip("\n"))
    lines.append("order: " + order.format())
    for (u, v), w in report.witnesses.items():
        lines.append(f"witness {format_monomial(u)} {format_monomial(v)} -> {format_monomial(w)}")
    return "\n".join(lines) + "\n"


@dataclass
class Certificate:
    ideal: MonomialIdeal
    sequence: tuple[Monomial, ...]
    witnesses: dict[tuple[Monomial, Monomial], Monomial]


def parse_certificate(text: str) -> Certificate:
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines or lines[0] != CERT_HEADER:
        raise ValueError(f"certificate must start with {CERT_HEADER!r}")
    width = parse_ring_header(lines[1])
    gens, rest = [], lines[2:]
    while rest and not rest[0].startswith("order:"):
        gens.append(parse_monomial(rest.pop(0), width))
    if not rest:
        raise ValueError("certificate has no 'order:' line")
    ideal = MonomialIdeal(width, gens)
    order_text = rest.pop(0)[len("order:"):]
    seq = tuple(parse_monomial(t, width) for t in order_text.replace("<", PRECEDES).split(PRECEDES) if t.strip())
    witnesses = {}
    for line in rest:
        toks = line.split()
        if len(toks) != 5 or toks[0] != "witness" or toks[3] != "->":
            raise ValueError(f"bad witness line {line!r}")
        u, v, w = (parse_monomial(toks[i], width) for i in (1, 2, 4))
        witnesses[u, v] = w
    return Certificate(ideal, seq, witnesses)


@dataclass
class CertificateCheck:
    valid: bool
    problems: list[str]

    def __bool__(self) -> bool:
        return self.valid


def verify_certificate(text: str) -> CertificateCheck:
    """Re-check a certificate using nothing but divisibility and positions."""
    cert = parse_certificate(text)
    problems = []
    gens = set(cert.ideal.gens)
    if set(cert.sequence) != gens or len(cert.sequence) != len(gens):
        problems.append("order is not a permutation of the minimal generators")
        return CertificateCheck(False, problems)
    pos = {g: i for i, g in enumerate(cert.sequence)}
    for u, v in itertools.combinations(cert.sequence, 2):
        if not _coprime(u.exps, v.exps):
            continue
        w = cert.witnesses.get((u, v))
        if w is None:
            problems.append(f"no witness for {u} {PRECEDES} {v}")
            continue
        uv = u * v
        if w not in pos:
            problems.append(f"witness {w} is not a generator")
        elif w in (u, v) or pos[w] <= pos[u] or not _divides(w.exps, uv.exps):
            problems.append(f"invalid witness {w} for {u} {PRECEDES} {v}")
    return CertificateCheck(not problems, problems)
