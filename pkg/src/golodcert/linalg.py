"""Exact sparse linear algebra over Q and prime fields.

Vectors are dicts {index: nonzero coefficient}. Elimination pivots on the
first nonzero position, never on magnitude, so every result is a
deterministic function of the input order.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Hashable, Iterable, Mapping

Vector = dict


class Field:
    name: str
    characteristic: int

    def __call__(self, x):
        raise NotImplementedError

    def inv(self, x):
        raise NotImplementedError

    def __eq__(self, other) -> bool:
        return type(self) is type(other) and self.characteristic == other.characteristic

    def __hash__(self) -> int:
        return hash((type(self).__name__, self.characteristic))

    def __repr__(self) -> str:
        return self.name


class Rationals(Field):
    name = "QQ"
    characteristic = 0

    def __call__(self, x):
        if isinstance(x, Fraction) and x.denominator == 1:
            return x.numerator
        return x

    def inv(self, x):
        return Fraction(1, x) if isinstance(x, int) else 1 / x


class PrimeField(Field):
    def __init__(self, p: int):
        if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        self.characteristic = p
        self.name = f"GF({p})"

    def __call__(self, x):
        if isinstance(x, Fraction):
            return x.numerator * pow(x.denominator, -1, self.characteristic) % self.characteristic
        return x % self.characteristic

    def inv(self, x):
        return pow(x, -1, self.characteristic)


QQ = Rationals()


def field_from_spec(spec: str | int | Field) -> Field:
    """``'q'``/``'QQ'``/``0`` for the rationals, a prime p for GF(p)."""
    if isinstance(spec, Field):
        return spec
    s = str(spec).strip().lower()
    if s in ("q", "qq", "0", "rationals"):
        return QQ
    try:
        return PrimeField(int(s))
    except ValueError:
        raise ValueError(f"unknown field {spec!r}; use 'q' or a prime") from None


def field_spec(field: Field) -> str:
    return "q" if field.characteristic == 0 else str(field.characteristic)


def axpy(y: Vector, a, x: Mapping, field: Field) -> None:
    """y += a * x in place, dropping zeros."""
    for k, v in x.items():
        s = field(y.get(k, 0) + a * v)
        if s:
            y[k] = s
        else:
            y.pop(k, None)


class Echelon:
    """Incrementally grown row echelon form of a span.

    Each stored row is monic at its pivot (its smallest index). With
    ``track=True`` every row also remembers how it is written in terms of
    the labels passed to :meth:`add`, which gives preimages and kernels.
    """

    def __init__(self, field: Field, track: bool = False):
        self.field = field
        self.track = track
        self.rows: dict[int, Vector] = {}
        self.combos: dict[int, Vector] = {}
        self._order: list[int] = []

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, v: Mapping) -> tuple[Vector, Vector]:
        """Return (remainder, combo) with v = remainder + sum(combo[l] * input_l)."""
        f = self.field
        rem = {k: f(x) for k, x in v.items() if f(x)}
        combo: Vector = {}
        for piv in self._order:
            c = rem.get(piv)
            if not c:
                continue
            axpy(rem, -c, self.rows[piv], f)
            if self.track:
                axpy(combo, c, self.combos[piv], f)
        return rem, combo

    def add(self, v: Mapping, label: Hashable | None = None) -> tuple[bool, Vector]:
        """Insert v; returns (independent, combo).

        When v is dependent, ``combo`` expresses it through earlier labels.
        """
        f = self.field
        rem, combo = self.reduce(v)
        if not rem:
            return False, combo
        piv = min(rem)
        scale = f.inv(rem[piv])
        row = {k: f(x * scale) for k, x in rem.items()}
        self.rows[piv] = row
        if self.track:
            # row = scale * (v - combo)
            c = {k: f(-x * scale) for k, x in combo.items()}
            c[label] = f(c.get(label, 0) + scale)
            self.combos[piv] = {k: x for k, x in c.items() if x}
        self._order.append(piv)
        self._order.sort()
        return True, combo

    def contains(self, v: Mapping) -> bool:
        return not self.reduce(v)[0]


def columns_to_echelon(columns: Iterable[tuple[Hashable, Mapping]], field: Field, track: bool = True) -> Echelon:
    ech = Echelon(field, track=track)
    for label, col in columns:
        ech.add(col, label)
    return ech


def rank(rows: Iterable[Mapping], field: Field) -> int:
    ech = Echelon(field)
    for r in rows:
        ech.add(r)
    return ech.rank


def nullspace(columns: list[Mapping], field: Field) -> list[Vector]:
    """Basis of {x : sum_j x_j * columns[j] = 0}, one vector per dependent column."""
    ech = Echelon(field, track=True)
    basis = []
    for j, col in enumerate(columns):
        independent, combo = ech.add(col, j)
        if not independent:
            x = {k: field(-v) for k, v in combo.items() if field(v)}
            x[j] = field(1)
            basis.append(x)
    return basis


def dense(v: Mapping, length: int, field: Field) -> list:
    out = [field(0)] * length
    for k, x in v.items():
        out[k] = x
    return out


def format_matrix(rows: list[list]) -> str:
    """Debug text rendering, one row per line."""
    if not rows:
        return "[]"
    cells = [[str(x) for x in r] for r in rows]
    w = max((len(c) for r in cells for c in r), default=1)
    return "\n".join("[" + " ".join(c.rjust(w) for c in r) + "]" for r in cells)
