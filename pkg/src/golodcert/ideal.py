"""Monomial ideals kept as canonical minimal generating sets G(I)."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from typing import Iterable, Sequence

from .monomial import (
    DEFAULT_ORDER,
    Monomial,
    MonomialOrder,
    WidthMismatch,
    format_monomial,
    parse_monomial,
    polarize_monomial,
    polarized_names,
)


class ImproperIdealError(ValueError):
    """An operation that needs a proper nonzero ideal got the zero or unit ideal."""


class NotSquarefreeError(ValueError):
    pass


def _divides(a: tuple, b: tuple) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _minimal_exps(exps: Iterable[tuple]) -> list[tuple]:
    """Divisibility-minimal elements of a collection of exponent vectors."""
    cands = sorted(set(exps), key=sum)
    kept: list[tuple] = []
    for e in cands:
        d = sum(e)
        for k in kept:
            if sum(k) < d and _divides(k, e):
                break
        else:
            kept.append(e)
    return kept


class MonomialIdeal:
    """A monomial ideal in k[x1..xn], identified with its minimal generators.

    Generators are minimalized on construction and sorted decreasingly by
    the default (lex) order, so two ideals are equal exactly when their
    generator tuples are.
    """

    __slots__ = ("width", "gens")

    def __init__(self, width: int, gens: Iterable[Monomial] = ()):
        if width < 1:
            raise ValueError("an ideal needs at least one variable")
        gens = list(gens)
        for g in gens:
            if g.width != width:
                raise WidthMismatch(f"generator {g} has width {g.width}, ring has {width}")
        exps = _minimal_exps(g.exps for g in gens)
        exps.sort(reverse=True)
        object.__setattr__(self, "width", width)
        object.__setattr__(self, "gens", tuple(Monomial(e) for e in exps))

    def __setattr__(self, name, value):
        raise AttributeError("MonomialIdeal is immutable")

    @classmethod
    def _from_minimal_exps(cls, width: int, exps: list[tuple]) -> "MonomialIdeal":
        obj = object.__new__(cls)
        exps = sorted(exps, reverse=True)
        object.__setattr__(obj, "width", width)
        object.__setattr__(obj, "gens", tuple(Monomial(e) for e in exps))
        return obj

    @classmethod
    def zero(cls, width: int) -> "MonomialIdeal":
        return cls(width)

    @classmethod
    def unit(cls, width: int) -> "MonomialIdeal":
        return cls(width, [Monomial.unit(width)])

    @classmethod
    def from_supports(cls, supports: Iterable[Iterable[int]], width: int) -> "MonomialIdeal":
        return cls(width, [Monomial.from_support(s, width) for s in supports])

    @classmethod
    def parse(cls, width: int, texts: Iterable[str]) -> "MonomialIdeal":
        return cls(width, [parse_monomial(t, width) for t in texts])

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return len(self.gens) == 1 and self.gens[0].is_unit()

    def is_proper_nonzero(self) -> bool:
        return bool(self.gens) and not self.is_unit()

    def is_squarefree(self) -> bool:
        return all(g.is_squarefree() for g in self.gens)

    def require_proper(self, what: str = "this operation") -> None:
        if self.is_zero():
            raise ImproperIdealError(f"{what} needs a nonzero ideal")
        if self.is_unit():
            raise ImproperIdealError(f"{what} needs a proper ideal (got the unit ideal)")

    def sorted_gens(self, order: MonomialOrder = DEFAULT_ORDER) -> list[Monomial]:
        return sorted(self.gens, key=order.key, reverse=True)

    def __contains__(self, m: Monomial) -> bool:
        return membership(m, self)

    def __eq__(self, other) -> bool:
        return isinstance(other, MonomialIdeal) and self.width == other.width and self.gens == other.gens

    def __hash__(self) -> int:
        return hash((self.width, self.gens))

    def __mul__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return product(self, other)

    def __len__(self) -> int:
        return len(self.gens)

    def __str__(self) -> str:
        if self.is_zero():
            return "(0)"
        return "(" + ", ".join(format_monomial(g) for g in self.gens) + ")"

    def __repr__(self) -> str:
        return f"MonomialIdeal(n={self.width}, {self})"


def minimalize(gens: Iterable[Monomial], width: int | None = None) -> MonomialIdeal:
    gens = list(gens)
    if width is None:
        if not gens:
            raise ValueError("width is required for an empty generator set")
        width = gens[0].width
    return MonomialIdeal(width, gens)


def membership(m: Monomial, ideal: MonomialIdeal) -> bool:
    if m.width != ideal.width:
        raise WidthMismatch(f"monomial width {m.width}, ideal width {ideal.width}")
    return any(_divides(g.exps, m.exps) for g in ideal.gens)


def _check_widths(a: MonomialIdeal, b: MonomialIdeal) -> None:
    if a.width != b.width:
        raise WidthMismatch(f"ideal widths {a.width} and {b.width}")


def product(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    _check_widths(a, b)
    exps = (tuple(x + y for x, y in zip(u.exps, v.exps)) for u in a.gens for v in b.gens)
    return MonomialIdeal._from_minimal_exps(a.width, _minimal_exps(exps))


def power(ideal: MonomialIdeal, k: int) -> MonomialIdeal:
    """I^k; ``power(I, 0)`` is the unit ideal."""
    if k < 0:
        raise ValueError("negative ideal power")
    if k == 0:
        return MonomialIdeal.unit(ideal.width)
    result = ideal
    for _ in range(k - 1):
        result = product(result, ideal)
    return result


def intersection(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    _check_widths(a, b)
    exps = (tuple(max(x, y) for x, y in zip(u.exps, v.exps)) for u in a.gens for v in b.gens)
    return MonomialIdeal._from_minimal_exps(a.width, _minimal_exps(exps))


def is_subideal(a: MonomialIdeal, b: MonomialIdeal) -> bool:
    """True iff a is contained in b."""
    _check_widths(a, b)
    return all(membership(g, b) for g in a.gens)


def prime_ideal(variables: Iterable[int], width: int) -> MonomialIdeal:
    return MonomialIdeal(width, [Monomial.var(i, width) for i in variables])


# -- minimal primes and symbolic powers ----------------------------------------


@dataclass(frozen=True)
class PrimeDecomposition:
    """Minimal primes of a squarefree ideal; each prime is a set of variable indices."""

    width: int
    primes: tuple[frozenset[int], ...]

    def ideals(self) -> list[MonomialIdeal]:
        return [prime_ideal(sorted(p), self.width) for p in self.primes]

    def intersection(self) -> MonomialIdeal:
        ideals = self.ideals()
        result = ideals[0]
        for p in ideals[1:]:
            result = intersection(result, p)
        return result


def _require_squarefree_proper(ideal: MonomialIdeal, what: str) -> None:
    ideal.require_proper(what)
    if not ideal.is_squarefree():
        raise NotSquarefreeError(f"{what} needs a squarefree ideal, got {ideal}")


def minimal_covers(supports: Iterable[frozenset[int]]) -> set[frozenset[int]]:
    """Inclusion-minimal sets meeting every given support (minimal transversals)."""
    covers: set[frozenset[int]] = {frozenset()}
    for supp in supports:
        grown = set()
        for c in covers:
            if c & supp:
                grown.add(c)
            else:
                grown.update(c | {i} for i in supp)
        covers = {c for c in grown if not any(o < c for o in grown)}
    return covers


def minimal_primes(ideal: MonomialIdeal) -> PrimeDecomposition:
    """Minimal vertex covers of the generator supports, built one generator at a time."""
    _require_squarefree_proper(ideal, "minimal_primes")
    covers = minimal_covers(g.support for g in ideal.gens)
    primes = sorted(covers, key=lambda c: (len(c), sorted(c)))
    return PrimeDecomposition(ideal.width, tuple(primes))


def _prime_power_exps(prime: frozenset[int], k: int, width: int) -> list[tuple]:
    out = []
    for combo in combinations_with_replacement(sorted(prime), k):
        e = [0] * width
        for i in combo:
            e[i - 1] += 1
        out.append(tuple(e))
    return out


def symbolic_power(ideal: MonomialIdeal, k: int) -> MonomialIdeal:
    """I^(k) as the intersection of the k-th powers of the minimal primes."""
    if k < 1:
        raise ValueError("symbolic powers need k >= 1")
    primes = minimal_primes(ideal).primes
    n = ideal.width
    # smallest primes first keeps the running intersection small
    ordered = sorted(primes, key=len)
    current = _prime_power_exps(ordered[0], k, n)
    for p in ordered[1:]:
        nxt = _prime_power_exps(p, k, n)
        current = _minimal_exps(tuple(max(x, y) for x, y in zip(u, v)) for u in current for v in nxt)
    return MonomialIdeal._from_minimal_exps(n, current)


def symbolic_membership(m: Monomial, ideal: MonomialIdeal, k: int) -> bool:
    """m lies in I^(k) iff every minimal prime sees at least k of its degree."""
    if m.width != ideal.width:
        raise WidthMismatch(f"monomial width {m.width}, ideal width {ideal.width}")
    primes = minimal_primes(ideal).primes
    return all(sum(m.exps[i - 1] for i in p) >= k for p in primes)


# -- polarization ------------------------------------------------------------------


@dataclass(frozen=True)
class Polarization:
    ideal: MonomialIdeal
    budget: tuple[int, ...]
    names: tuple[tuple[int, int], ...]  # flattened variable -> (i, j)


def polarize_ideal(ideal: MonomialIdeal) -> Polarization:
    """Polarize with per-variable budget equal to the largest exponent used.

    Variables that occur in no generator get budget 0 and disappear; the
    result keeps at least one variable.
    """
    ideal.require_proper("polarize_ideal")
    budget = tuple(max(g.exps[i] for g in ideal.gens) for i in range(ideal.width))
    pol = [polarize_monomial(g, budget) for g in ideal.gens]
    width = max(sum(budget), 1)
    return Polarization(MonomialIdeal(width, pol), budget, tuple(polarized_names(budget)))


# -- squarefree products ------------------------------------------------------


@dataclass(frozen=True)
class SquarefreeProductVerdict:
    holds: bool
    # a generator of I or J with a square, or a non-coprime pair (u, v)
    witness: tuple[Monomial, ...] = ()

    def __bool__(self) -> bool:
        return self.holds


def squarefree_product_criterion(a: MonomialIdeal, b: MonomialIdeal) -> SquarefreeProductVerdict:
    """Decide whether IJ is squarefree from the factors alone.

    Holds iff both ideals are squarefree and every u in G(I), v in G(J) are
    coprime.
    """
    _check_widths(a, b)
    a.require_proper("squarefree_product_criterion")
    b.require_proper("squarefree_product_criterion")
    for g in a.gens + b.gens:
        if not g.is_squarefree():
            return SquarefreeProductVerdict(False, (g,))
    for u in a.gens:
        for v in b.gens:
            if any(x and y for x, y in zip(u.exps, v.exps)):
                return SquarefreeProductVerdict(False, (u, v))
    return SquarefreeProductVerdict(True)


# -- factorization probe --------------------------------------------------------------


@dataclass
class FactorizationReport:
    """For each k, the c < k with I^(k) = I^(c) I^(k-c)."""

    ideal: MonomialIdeal
    kmax: int
    factors: dict[int, list[int]] = field(default_factory=dict)

    def least(self) -> dict[int, int | None]:
        return {k: (cs[0] if cs else None) for k, cs in self.factors.items()}

    def format(self) -> str:
        lines = [f"# symbolic factorization probe for {self.ideal}"]
        for k, c in self.least().items():
            lines.append(f"k={k}: c={c if c is not None else 'none'}")
        return "\n".join(lines)


def probe_symbolic_factorization(ideal: MonomialIdeal, kmax: int = 10, *, max_kmax: int = 10) -> FactorizationReport:
    """Search for factorizations I^(k) = I^(c) I^(k-c), 1 <= c < k, for 2 <= k <= kmax."""
    _require_squarefree_proper(ideal, "probe_symbolic_factorization")
    if kmax > max_kmax:
        raise ValueError(f"kmax={kmax} exceeds the cap {max_kmax}")
    sym = {k: symbolic_power(ideal, k) for k in range(1, kmax + 1)}
    report = FactorizationReport(ideal, kmax)
    for k in range(2, kmax + 1):
        report.factors[k] = [c for c in range(1, k) if product(sym[c], sym[k - c]) == sym[k]]
    return report


# -- file format --------------------------------------------------------------------


def format_ideal(ideal: MonomialIdeal, order: MonomialOrder = DEFAULT_ORDER) -> str:
    lines = [f"ring n={ideal.width}"]
    lines += [format_monomial(g) for g in ideal.sorted_gens(order)]
    return "\n".join(lines) + "\n"


def _content_lines(text: str) -> list[str]:
    out = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append(line)
    return out


def parse_ring_header(line: str) -> int:
    parts = line.replace(" ", "")
    if not parts.startswith("ringn="):
        raise ValueError(f"expected 'ring n=<width>', got {line!r}")
    try:
        width = int(parts[len("ringn="):])
    except ValueError:
        raise ValueError(f"bad ring width in {line!r}") from None
    if width < 1:
        raise ValueError("ring width must be positive")
    return width


def parse_ideal(text: str) -> MonomialIdeal:
    lines = _content_lines(text)
    if not lines:
        raise ValueError("empty ideal file")
    width = parse_ring_header(lines[0])
    return MonomialIdeal.parse(width, lines[1:])


def read_ideal(path) -> MonomialIdeal:
    with open(path, encoding="utf-8") as fh:
        return parse_ideal(fh.read())

