"""Simplicial complexes on a declared vertex set, with the Stanley-Reisner dictionary."""

from __future__ import annotations

from itertools import combinations
from typing import Iterable

from .ideal import MonomialIdeal, NotSquarefreeError, minimal_covers
from .monomial import Monomial

Face = frozenset


class VoidComplexError(ValueError):
    """The void complex (no faces at all) was passed where faces are needed."""


def _maximal(sets: Iterable[frozenset]) -> list[frozenset]:
    cands = sorted(set(sets), key=len, reverse=True)
    kept: list[frozenset] = []
    for s in cands:
        if not any(s <= k for k in kept):
            kept.append(s)
    return kept


def _face_key(f: Iterable[int]) -> tuple:
    t = tuple(sorted(f))
    return (len(t), t)


class SimplicialComplex:
    """A complex given by its facets on an explicit ground set of vertex labels.

    The ground set is declared, not inferred, so ghost vertices (in no face)
    are allowed. ``facets == ()`` is the void complex, ``facets == (∅,)`` the
    irrelevant complex {∅}.
    """

    __slots__ = ("ground", "facets", "_faces", "_by_dim")

    def __init__(self, ground: Iterable[int], faces: Iterable[Iterable[int]] = ()):
        ground = tuple(sorted(set(ground)))
        gset = set(ground)
        fs = [frozenset(f) for f in faces]
        for f in fs:
            if not f <= gset:
                raise ValueError(f"face {sorted(f)} uses vertices outside the ground set {list(ground)}")
        facets = sorted(_maximal(fs), key=_face_key)
        object.__setattr__(self, "ground", ground)
        object.__setattr__(self, "facets", tuple(facets))
        object.__setattr__(self, "_faces", None)
        object.__setattr__(self, "_by_dim", {})

    def __setattr__(self, name, value):
        raise AttributeError("SimplicialComplex is immutable")

    @classmethod
    def on(cls, n: int, faces: Iterable[Iterable[int]] = ()) -> "SimplicialComplex":
        """Complex on the standard ground set [n] = {1..n}."""
        return cls(range(1, n + 1), faces)

    @classmethod
    def simplex(cls, ground: Iterable[int]) -> "SimplicialComplex":
        ground = tuple(ground)
        return cls(ground, [ground])

    @classmethod
    def irrelevant(cls, ground: Iterable[int]) -> "SimplicialComplex":
        return cls(ground, [()])

    @property
    def n(self) -> int:
        return len(self.ground)

    def is_void(self) -> bool:
        return not self.facets

    def require_nonvoid(self, what: str) -> None:
        if self.is_void():
            raise VoidComplexError(f"{what} is undefined for the void complex")

    @property
    def dimension(self) -> int:
        """Dimension; -1 for {∅}, and -2 by convention for the void complex."""
        if self.is_void():
            return -2
        return max(len(f) for f in self.facets) - 1

    def faces(self) -> list[frozenset]:
        """All faces (including ∅ unless void), sorted by size then lexicographically."""
        if self._faces is None:
            seen: set[frozenset] = set()
            for facet in self.facets:
                verts = sorted(facet)
                for r in range(len(verts) + 1):
                    for c in combinations(verts, r):
                        seen.add(frozenset(c))
            object.__setattr__(self, "_faces", tuple(sorted(seen, key=_face_key)))
        return list(self._faces)

    def faces_of_dim(self, p: int) -> list[tuple[int, ...]]:
        """Sorted vertex tuples of the p-dimensional faces (p = -1 gives the empty face)."""
        if p not in self._by_dim:
            size = p + 1
            out: set[tuple[int, ...]] = set()
            if size >= 0:
                for facet in self.facets:
                    if len(facet) >= size:
                        out.update(combinations(sorted(facet), size))
            self._by_dim[p] = sorted(out)
        return list(self._by_dim[p])

    def __contains__(self, face: Iterable[int]) -> bool:
        f = frozenset(face)
        return any(f <= facet for facet in self.facets)

    def __eq__(self, other) -> bool:
        return isinstance(other, SimplicialComplex) and self.ground == other.ground and self.facets == other.facets

    def __hash__(self) -> int:
        return hash((self.ground, self.facets))

    def __repr__(self) -> str:
        fs = ", ".join("{" + ",".join(map(str, sorted(f))) + "}" for f in self.facets)
        return f"SimplicialComplex(ground={list(self.ground)}, facets=[{fs}])"

    def var_index(self) -> dict[int, int]:
        """Vertex label -> 1-based variable index in the Stanley-Reisner ring."""
        return {v: i + 1 for i, v in enumerate(self.ground)}


def canonicalize(faces: Iterable[Iterable[int]], n: int) -> SimplicialComplex:
    return SimplicialComplex.on(n, faces)


def minimal_nonfaces(cx: SimplicialComplex) -> list[frozenset]:
    """Non-faces all of whose codimension-one subsets are faces."""
    cx.require_nonvoid("minimal_nonfaces")
    faces = set(cx.faces())
    out = []
    # a minimal non-face is some face plus one vertex
    cands = {f | {v} for f in faces for v in cx.ground if v not in f}
    for c in cands:
        if c in faces:
            continue
        if all(c - {v} in faces for v in c):
            out.append(c)
    return sorted(out, key=_face_key)


def stanley_reisner_ideal(cx: SimplicialComplex) -> MonomialIdeal:
    idx = cx.var_index()
    n = max(cx.n, 1)
    gens = [Monomial.from_support((idx[v] for v in nf), n) for nf in minimal_nonfaces(cx)]
    return MonomialIdeal(n, gens)


def complex_from_squarefree_ideal(ideal: MonomialIdeal) -> SimplicialComplex:
    """The complex on [n] whose faces are the sets F with x_F not in I."""
    if not ideal.is_squarefree():
        raise NotSquarefreeError(f"not a squarefree ideal: {ideal}")
    if ideal.is_unit():
        raise ValueError("the unit ideal is not a Stanley-Reisner ideal of a nonvoid complex")
    n = ideal.width
    # facets are complements of the minimal covers of the supports
    covers = minimal_covers(g.support for g in ideal.gens)
    ground = frozenset(range(1, n + 1))
    return SimplicialComplex.on(n, [ground - c for c in covers])


def alexander_dual(cx: SimplicialComplex) -> SimplicialComplex:
    """Faces are the A with ground \\ A not a face.

    Facets of the dual are the complements of minimal non-faces; the void
    complex and the full simplex are handled directly.
    """
    ground = frozenset(cx.ground)
    if cx.is_void():
        return SimplicialComplex.simplex(cx.ground)
    if ground in cx:
        return SimplicialComplex(cx.ground)
    return SimplicialComplex(cx.ground, [ground - nf for nf in minimal_nonfaces(cx)])


def alexander_dual_bruteforce(cx: SimplicialComplex) -> SimplicialComplex:
    """Direct subset enumeration of the dual, for cross-checks."""
    ground = frozenset(cx.ground)
    faces = []
    for r in range(len(ground) + 1):
        for a in combinations(sorted(ground), r):
            if (ground - frozenset(a)) not in cx:
                faces.append(a)
    return SimplicialComplex(cx.ground, faces)


def join(a: SimplicialComplex, b: SimplicialComplex) -> tuple[SimplicialComplex, dict]:
    """Join on the disjoint union of the grounds, relabelled onto [|A| + |B|].

    Vertices of ``a`` map to 1..|A| in order, those of ``b`` to |A|+1...
    Returns the join and the map (side, old label) -> new label with side
    0 for ``a`` and 1 for ``b``.
    """
    na = a.n
    relabel = {(0, v): i + 1 for i, v in enumerate(a.ground)}
    relabel.update({(1, v): na + i + 1 for i, v in enumerate(b.ground)})
    facets = []
    for fa in a.facets:
        for fb in b.facets:
            facets.append({relabel[0, v] for v in fa} | {relabel[1, v] for v in fb})
    return SimplicialComplex.on(na + b.n, facets), relabel


def induced_subcomplex(cx: SimplicialComplex, sigma: Iterable[int]) -> SimplicialComplex:
    """Faces of ``cx`` inside sigma, as a complex on ground sigma (labels kept)."""
    s = frozenset(sigma)
    if not s <= set(cx.ground):
        raise ValueError(f"{sorted(s)} is not inside the ground set")
    if cx.is_void():
        return SimplicialComplex(s)
    return SimplicialComplex(s, [f & s for f in cx.facets])


def relabel_standard(cx: SimplicialComplex) -> SimplicialComplex:
    """Same complex with vertices renamed 1..n in increasing order."""
    idx = cx.var_index()
    return SimplicialComplex.on(cx.n, [[idx[v] for v in f] for f in cx.facets])


# -- file format ---------------------------------------------------------------------


def format_complex(cx: SimplicialComplex) -> str:
    std = relabel_standard(cx)
    lines = [f"vertices {std.n}"]
    for f in std.facets:
        lines.append(" ".join(["facet", *map(str, sorted(f))]))
    return "\n".join(lines) + "\n"


def parse_complex(text: str) -> SimplicialComplex:
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines or not lines[0].startswith("vertices"):
        raise ValueError("complex file must start with 'vertices <n>'")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError(f"bad header {lines[0]!r}")
    try:
        n = int(head[1])
    except ValueError:
        raise ValueError(f"bad vertex count in {lines[0]!r}") from None
    if n < 0:
        raise ValueError("negative vertex count")
    facets = []
    for line in lines[1:]:
        toks = line.split()
        if toks[0] != "facet":
            raise ValueError(f"expected a 'facet' line, got {line!r}")
        try:
            verts = [int(t) for t in toks[1:]]
        except ValueError:
            raise ValueError(f"bad vertex in {line!r}") from None
        for v in verts:
            if not 1 <= v <= n:
                raise ValueError(f"vertex {v} out of range 1..{n}")
        facets.append(verts)
    return SimplicialComplex.on(n, facets)


def read_complex(path) -> SimplicialComplex:
    with open(path, encoding="utf-8") as fh:
        return parse_complex(fh.read())
