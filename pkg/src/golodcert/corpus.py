"""Seeded random ideals and complexes for corpus studies."""

from __future__ import annotations

import random
from itertools import combinations

from .ideal import MonomialIdeal
from .monomial import Monomial
from .simplicial import SimplicialComplex


def random_monomial(rng: random.Random, n: int, max_deg: int) -> Monomial:
    deg = rng.randint(1, max_deg)
    e = [0] * n
    for _ in range(deg):
        e[rng.randrange(n)] += 1
    return Monomial(e)


def random_ideal(rng: random.Random, n: int, max_gens: int = 5, max_deg: int = 3, min_gens: int = 1) -> MonomialIdeal:
    """A proper nonzero ideal in n variables (no generator equals 1).

    ``min_gens`` bounds the number of drawn monomials; minimalization may
    still leave fewer generators.
    """
    m = rng.randint(min_gens, max_gens)
    return MonomialIdeal(n, [random_monomial(rng, n, max_deg) for _ in range(m)])


def random_squarefree_ideal(
    rng: random.Random, n: int, max_gens: int = 5, max_deg: int = 3, min_gens: int = 1, min_deg: int = 1
) -> MonomialIdeal:
    m = rng.randint(min_gens, max_gens)
    gens = []
    for _ in range(m):
        size = rng.randint(min(min_deg, n), min(max_deg, n))
        gens.append(Monomial.from_support(rng.sample(range(1, n + 1), size), n))
    return MonomialIdeal(n, gens)


def random_complex(rng: random.Random, n: int, max_facets: int = 4, proper: bool = False) -> SimplicialComplex:
    """A nonvoid complex on [n].

    With ``proper=True`` the complex is neither the full simplex nor void,
    so its Stanley-Reisner ideal is proper and nonzero.
    """
    verts = list(range(1, n + 1))
    while True:
        k = rng.randint(1, max_facets)
        facets = []
        for _ in range(k):
            size = rng.randint(0, n)
            facets.append(rng.sample(verts, size))
        cx = SimplicialComplex.on(n, facets)
        if not proper or frozenset(verts) not in cx:
            return cx


def all_complexes(n: int) -> list[SimplicialComplex]:
    """Every nonvoid complex on [n] (feasible for n <= 4), via antichains of subsets."""
    subsets = [frozenset(c) for r in range(n + 1) for c in combinations(range(1, n + 1), r)]
    out: list[SimplicialComplex] = []

    def extend(chosen: list[frozenset], start: int) -> None:
        if chosen:
            out.append(SimplicialComplex.on(n, chosen))
        for i in range(start, len(subsets)):
            s = subsets[i]
            if all(not (s <= c or c <= s) for c in chosen):
                extend(chosen + [s], i + 1)

    extend([], 0)
    return out
