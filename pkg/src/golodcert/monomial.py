"""Exact monomial arithmetic over a fixed set of variables x1..xn."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence


class WidthMismatch(ValueError):
    """Raised when two monomials live in rings with different numbers of variables."""


class Monomial:
    """A monomial x1^e1 * ... * xn^en, stored as its exponent vector.

    Instances are immutable and hashable. ``Monomial.unit(n)`` is the
    constant monomial 1 in n variables.
    """

    __slots__ = ("exps", "_hash")

    def __init__(self, exps: Iterable[int]):
        exps = tuple(int(e) for e in exps)
        if not exps:
            raise ValueError("a monomial needs at least one variable")
        if any(e < 0 for e in exps):
            raise ValueError(f"negative exponent in {exps}")
        object.__setattr__(self, "exps", exps)
        object.__setattr__(self, "_hash", hash(exps))

    def __setattr__(self, name, value):
        raise AttributeError("Monomial is immutable")

    @classmethod
    def unit(cls, width: int) -> "Monomial":
        return cls((0,) * width)

    @classmethod
    def var(cls, i: int, width: int) -> "Monomial":
        """The variable x_i (1-based)."""
        if not 1 <= i <= width:
            raise ValueError(f"variable x{i} outside x1..x{width}")
        e = [0] * width
        e[i - 1] = 1
        return cls(e)

    @classmethod
    def from_support(cls, support: Iterable[int], width: int) -> "Monomial":
        """The squarefree monomial x_S for a set S of 1-based indices."""
        e = [0] * width
        for i in support:
            if not 1 <= i <= width:
                raise ValueError(f"variable x{i} outside x1..x{width}")
            e[i - 1] = 1
        return cls(e)

    @property
    def width(self) -> int:
        return len(self.exps)

    @property
    def degree(self) -> int:
        return sum(self.exps)

    @property
    def support(self) -> frozenset[int]:
        """1-based indices of the variables dividing this monomial."""
        return frozenset(i + 1 for i, e in enumerate(self.exps) if e)

    def is_unit(self) -> bool:
        return not any(self.exps)

    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exps)

    def _check(self, other: "Monomial") -> None:
        if len(self.exps) != len(other.exps):
            raise WidthMismatch(f"width {len(self.exps)} vs {len(other.exps)}")

    def __mul__(self, other: "Monomial") -> "Monomial":
        self._check(other)
        return Monomial(a + b for a, b in zip(self.exps, other.exps))

    def __pow__(self, k: int) -> "Monomial":
        if k < 0:
            raise ValueError("negative power of a monomial")
        return Monomial(e * k for e in self.exps)

    def __truediv__(self, other: "Monomial") -> "Monomial":
        if not divides(other, self):
            raise ValueError(f"{other} does not divide {self}")
        return Monomial(a - b for a, b in zip(self.exps, other.exps))

    def __eq__(self, other) -> bool:
        return isinstance(other, Monomial) and self.exps == other.exps

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Monomial({format_monomial(self)!r}, width={self.width})"

    def __str__(self) -> str:
        return format_monomial(self)


def gcd(a: Monomial, b: Monomial) -> Monomial:
    a._check(b)
    return Monomial(min(x, y) for x, y in zip(a.exps, b.exps))


def lcm(a: Monomial, b: Monomial) -> Monomial:
    a._check(b)
    return Monomial(max(x, y) for x, y in zip(a.exps, b.exps))


def divides(a: Monomial, b: Monomial) -> bool:
    a._check(b)
    return all(x <= y for x, y in zip(a.exps, b.exps))


def coprime(a: Monomial, b: Monomial) -> bool:
    a._check(b)
    return not any(x and y for x, y in zip(a.exps, b.exps))


# -- monomial orders ---------------------------------------------------------

LEX = "lex"
GRLEX = "grlex"


@dataclass(frozen=True)
class MonomialOrder:
    """Lexicographic or graded-lexicographic order.

    ``precedence`` lists the 1-based variable indices from most to least
    significant; ``None`` means x1 > x2 > ... > xn.
    """

    kind: str = LEX
    precedence: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.kind not in (LEX, GRLEX):
            raise ValueError(f"unknown monomial order kind {self.kind!r}")
        if self.precedence is not None:
            object.__setattr__(self, "precedence", tuple(self.precedence))
            if sorted(self.precedence) != list(range(1, len(self.precedence) + 1)):
                raise ValueError(f"precedence {self.precedence} is not a permutation")

    def key(self, m: Monomial) -> tuple:
        """Sort key; a larger key means a larger monomial."""
        if self.precedence is None:
            lex = m.exps
        else:
            if len(self.precedence) != m.width:
                raise WidthMismatch(f"order on {len(self.precedence)} variables, monomial width {m.width}")
            lex = tuple(m.exps[i - 1] for i in self.precedence)
        if self.kind == GRLEX:
            return (m.degree, lex)
        return lex

    def describe(self, width: int) -> str:
        prec = self.precedence or tuple(range(1, width + 1))
        return f"{self.kind}(" + ">".join(f"x{i}" for i in prec) + ")"

    @classmethod
    def parse(cls, text: str) -> "MonomialOrder":
        """Inverse of :meth:`describe`; also accepts a bare ``lex``/``grlex``."""
        m = re.fullmatch(r"\s*(lex|grlex)\s*(?:\(([^)]*)\))?\s*", text)
        if not m:
            raise ValueError(f"cannot parse monomial order {text!r}")
        prec = None
        if m.group(2):
            prec = tuple(int(v.strip().lstrip("x")) for v in m.group(2).split(">"))
        return cls(m.group(1), prec)


DEFAULT_ORDER = MonomialOrder()


def compare_monomials(a: Monomial, b: Monomial, order: MonomialOrder = DEFAULT_ORDER) -> int:
    """Return -1, 0 or 1 as a is smaller than, equal to or larger than b."""
    a._check(b)
    ka, kb = order.key(a), order.key(b)
    return (ka > kb) - (ka < kb)


# -- polarization ------------------------------------------------------------


def polarization_offsets(budget: Sequence[int]) -> list[int]:
    """Start index (0-based) of the block of fresh variables for each x_i."""
    offsets, total = [], 0
    for b in budget:
        if b < 0:
            raise ValueError("negative polarization budget")
        offsets.append(total)
        total += b
    return offsets


def polarize_monomial(m: Monomial, budget: Sequence[int]) -> Monomial:
    """Replace each x_i^a by x_{i,1}...x_{i,a}.

    The fresh variables x_{i,j} are flattened row-major: variable x_{i,j}
    becomes index sum(budget[:i-1]) + j of the result, whose width is
    sum(budget).
    """
    if len(budget) != m.width:
        raise WidthMismatch(f"budget for {len(budget)} variables, monomial width {m.width}")
    offsets = polarization_offsets(budget)
    out = [0] * sum(budget)
    for i, (e, b) in enumerate(zip(m.exps, budget)):
        if e > b:
            raise ValueError(f"exponent {e} of x{i + 1} exceeds polarization budget {b}")
        for j in range(e):
            out[offsets[i] + j] = 1
    return Monomial(out) if out else Monomial.unit(1)


def polarized_names(budget: Sequence[int]) -> list[tuple[int, int]]:
    """The pair (i, j) behind each flattened polarization variable."""
    return [(i + 1, j + 1) for i, b in enumerate(budget) for j in range(b)]


# -- text syntax ---------------------------------------------------------------

_FACTOR = re.compile(r"x(\d+)(?:\^(\d+))?")


def format_monomial(m: Monomial) -> str:
    if m.is_unit():
        return "1"
    parts = []
    for i, e in enumerate(m.exps):
        if e == 1:
            parts.append(f"x{i + 1}")
        elif e > 1:
            parts.append(f"x{i + 1}^{e}")
    return "*".join(parts)


def parse_monomial(text: str, width: int) -> Monomial:
    """Parse ``x1^2*x3`` (or ``1``) into a monomial with ``width`` variables."""
    text = text.strip()
    if text == "1":
        return Monomial.unit(width)
    if not text:
        raise ValueError("empty monomial")
    exps = [0] * width
    for factor in text.split("*"):
        match = _FACTOR.fullmatch(factor.strip())
        if not match:
            raise ValueError(f"bad monomial factor {factor!r} in {text!r}")
        i = int(match.group(1))
        if not 1 <= i <= width:
            raise ValueError(f"variable x{i} outside x1..x{width}")
        exps[i - 1] += int(match.group(2) or 1)
    return Monomial(exps)
