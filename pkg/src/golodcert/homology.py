"""Reduced simplicial cohomology with exact coefficients.

The empty face is kept as the unique (-1)-face, so the irrelevant complex
{∅} has H^{-1} of dimension one and the Hochster sums need no special
cases.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .linalg import QQ, Echelon, Field, dense, nullspace
from .simplicial import SimplicialComplex


class NotACocycleError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class Cochain:
    """A reduced p-cochain: coefficients indexed by the sorted p-faces of ``complex``."""

    complex: SimplicialComplex
    degree: int
    coeffs: tuple
    field: Field = QQ

    def __post_init__(self):
        if self.degree < -1:
            raise ValueError("cochain degree must be >= -1")
        nfaces = len(self.complex.faces_of_dim(self.degree))
        if len(self.coeffs) != nfaces:
            raise ValueError(f"{len(self.coeffs)} coefficients for {nfaces} faces of dimension {self.degree}")

    def as_dict(self) -> dict[tuple[int, ...], object]:
        faces = self.complex.faces_of_dim(self.degree)
        return {f: c for f, c in zip(faces, self.coeffs) if c}

    def sparse(self) -> dict[int, object]:
        return {i: c for i, c in enumerate(self.coeffs) if c}

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Cochain)
            and self.complex == other.complex
            and self.degree == other.degree
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.complex, self.degree, self.coeffs))

    def __repr__(self) -> str:
        terms = ", ".join(f"{list(f)}:{c}" for f, c in self.as_dict().items())
        return f"Cochain(p={self.degree}, {{{terms}}})"


class CochainComplex:
    """Cached reduced cochain complex of one simplicial complex over one field."""

    def __init__(self, cx: SimplicialComplex, field: Field = QQ):
        self.cx = cx
        self.field = field
        self._faces: dict[int, list[tuple[int, ...]]] = {}
        self._index: dict[int, dict[tuple[int, ...], int]] = {}
        self._cols: dict[int, list[dict[int, int]]] = {}
        self._image: dict[int, Echelon] = {}
        self._reps: dict[int, list[dict]] = {}

    @cached_property
    def top(self) -> int:
        return self.cx.dimension

    def faces(self, p: int) -> list[tuple[int, ...]]:
        if p not in self._faces:
            self._faces[p] = self.cx.faces_of_dim(p) if p <= self.top else []
            self._index[p] = {f: i for i, f in enumerate(self._faces[p])}
        return self._faces[p]

    def index(self, p: int) -> dict[tuple[int, ...], int]:
        self.faces(p)
        return self._index[p]

    def columns(self, p: int) -> list[dict[int, int]]:
        """Columns of delta_p: column j is delta of the j-th p-face indicator."""
        if p not in self._cols:
            src = self.faces(p)
            cols: list[dict[int, int]] = [{} for _ in src]
            if src:
                idx = self.index(p)
                for r, face in enumerate(self.faces(p + 1)):
                    for i in range(len(face)):
                        g = face[:i] + face[i + 1:]
                        cols[idx[g]][r] = self.field(-1 if i % 2 else 1)
            self._cols[p] = cols
        return self._cols[p]

    def matrix(self, p: int) -> list[list]:
        rows = len(self.faces(p + 1))
        cols = self.columns(p)
        out = [[self.field(0)] * len(cols) for _ in range(rows)]
        for j, col in enumerate(cols):
            for i, v in col.items():
                out[i][j] = v
        return out

    def apply(self, p: int, vec: dict[int, object]) -> dict[int, object]:
        """delta_p applied to a sparse p-cochain."""
        out: dict[int, object] = {}
        cols = self.columns(p)
        f = self.field
        for j, c in vec.items():
            for i, v in cols[j].items():
                s = f(out.get(i, 0) + c * v)
                if s:
                    out[i] = s
                else:
                    out.pop(i, None)
        return out

    def image(self, p: int) -> Echelon:
        """Tracked echelon of the image of delta_{p-1} inside the p-cochains."""
        if p not in self._image:
            ech = Echelon(self.field, track=True)
            if p - 1 >= -1:
                for j, col in enumerate(self.columns(p - 1)):
                    ech.add(col, j)
            self._image[p] = ech
        return self._image[p]

    def cocycle_basis(self, p: int) -> list[dict]:
        return nullspace(self.columns(p), self.field)

    def representatives(self, p: int) -> list[dict]:
        """Cocycles whose classes form a basis of reduced H^p."""
        if p not in self._reps:
            reps = []
            if -1 <= p <= self.top:
                img = self.image(p)
                span = Echelon(self.field)
                for row in img.rows.values():
                    span.add(row)
                for z in self.cocycle_basis(p):
                    if span.add(z)[0]:
                        reps.append(z)
            self._reps[p] = reps
        return self._reps[p]

    def dim(self, p: int) -> int:
        if not -1 <= p <= self.top:
            return 0
        nfaces = len(self.faces(p))
        ker = nfaces - self.image(p + 1).rank
        return ker - self.image(p).rank

    def dims(self) -> dict[int, int]:
        return {p: self.dim(p) for p in range(-1, self.top + 1)}

    def cochain(self, p: int, vec: dict[int, object]) -> Cochain:
        return Cochain(self.cx, p, tuple(dense(vec, len(self.faces(p)), self.field)), self.field)

    def is_cocycle(self, p: int, vec: dict[int, object]) -> bool:
        return not self.apply(p, vec)

    def solve_coboundary(self, p: int, vec: dict[int, object]) -> dict[int, object] | None:
        """A (p-1)-cochain x with delta x = vec, or None when vec is not a coboundary."""
        rem, combo = self.image(p).reduce(vec)
        if rem:
            return None
        return combo


def coboundary_matrix(cx: SimplicialComplex, p: int, field: Field = QQ) -> list[list]:
    """Dense matrix of delta: C^p -> C^{p+1}; rows are (p+1)-faces, columns p-faces."""
    return CochainComplex(cx, field).matrix(p)


def reduced_cohomology_dims(cx: SimplicialComplex, field: Field = QQ) -> dict[int, int]:
    """{p: dim H~^p} for p from -1 to dim(cx); empty for the void complex."""
    if cx.is_void():
        return {}
    return CochainComplex(cx, field).dims()


def cohomology_representatives(cx: SimplicialComplex, p: int, field: Field = QQ) -> list[Cochain]:
    if cx.is_void():
        return []
    cc = CochainComplex(cx, field)
    return [cc.cochain(p, z) for z in cc.representatives(p)]


@dataclass(frozen=True)
class CoboundaryResult:
    is_coboundary: bool
    preimage: Cochain | None = None

    def __bool__(self) -> bool:
        return self.is_coboundary


def is_coboundary(c: Cochain) -> CoboundaryResult:
    cc = CochainComplex(c.complex, c.field)
    vec = c.sparse()
    if not cc.is_cocycle(c.degree, vec):
        raise NotACocycleError("is_coboundary needs a cocycle")
    x = cc.solve_coboundary(c.degree, vec)
    if x is None:
        return CoboundaryResult(False)
    if c.degree == -1:
        # nothing lives in degree -2; only the zero cochain gets here
        return CoboundaryResult(True, None)
    return CoboundaryResult(True, cc.cochain(c.degree - 1, x))
