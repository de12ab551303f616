import itertools
import random

import pytest

from golodcert.corpus import all_complexes, random_complex, random_squarefree_ideal
from golodcert.ideal import MonomialIdeal, NotSquarefreeError, product
from golodcert.moment_angle import embed_ideal, join_dual
from golodcert.simplicial import (
    SimplicialComplex,
    VoidComplexError,
    alexander_dual,
    alexander_dual_bruteforce,
    canonicalize,
    complex_from_squarefree_ideal,
    format_complex,
    induced_subcomplex,
    join,
    minimal_nonfaces,
    parse_complex,
    stanley_reisner_ideal,
)

from conftest import ideal


def subsets(ground):
    return [frozenset(s) for r in range(len(ground) + 1) for s in itertools.combinations(ground, r)]


def nonfaces_bruteforce(cx):
    faces = set(cx.faces())
    return {
        s for s in subsets(cx.ground) if s not in faces and all(s - {v} in faces for v in s)
    }


def test_canonicalize_examples():
    assert canonicalize([{1, 2}, {1}], 2).facets == (frozenset({1, 2}),)
    void = canonicalize([], 3)
    assert void.is_void()
    irr = canonicalize([set()], 3)
    assert irr.facets == (frozenset(),) and not irr.is_void()
    assert void != irr
    with pytest.raises(ValueError):
        canonicalize([{4}], 3)


def test_minimal_nonfaces_examples(c4):
    assert set(minimal_nonfaces(c4)) == {frozenset({1, 3}), frozenset({2, 4})}
    assert minimal_nonfaces(SimplicialComplex.simplex(range(1, 4))) == []
    two_edges = SimplicialComplex.on(4, [[1, 2], [3, 4]])
    assert set(minimal_nonfaces(two_edges)) == {frozenset(s) for s in ({1, 3}, {1, 4}, {2, 3}, {2, 4})}
    with pytest.raises(VoidComplexError):
        minimal_nonfaces(SimplicialComplex.on(2))


def test_minimal_nonfaces_bruteforce():
    for cx in all_complexes(4):
        assert set(minimal_nonfaces(cx)) == nonfaces_bruteforce(cx)


def test_sr_ideal_examples(c4):
    assert stanley_reisner_ideal(c4) == ideal(4, "x1*x3", "x2*x4")
    assert stanley_reisner_ideal(SimplicialComplex.simplex(range(1, 4))).is_zero()
    assert stanley_reisner_ideal(SimplicialComplex.irrelevant([1, 2])) == ideal(2, "x1", "x2")


def test_complex_from_ideal_examples(c4):
    assert complex_from_squarefree_ideal(ideal(4, "x1*x3", "x2*x4")) == c4
    assert complex_from_squarefree_ideal(MonomialIdeal.zero(3)) == SimplicialComplex.simplex([1, 2, 3])
    with pytest.raises(NotSquarefreeError):
        complex_from_squarefree_ideal(ideal(2, "x1^2"))


def test_complex_from_ideal_faces_are_nonmembers():
    rng = random.Random(2)
    for _ in range(50):
        I = random_squarefree_ideal(rng, rng.randint(1, 5), 4, 3)
        cx = complex_from_squarefree_ideal(I)
        for s in subsets(range(1, I.width + 1)):
            in_ideal = any(g.support <= s for g in I.gens)
            assert (s in cx) == (not in_ideal)


def test_sr_bijection_round_trips():
    rng = random.Random(6)
    for _ in range(200):
        n = rng.randint(1, 6)
        I = random_squarefree_ideal(rng, n, 6, n)
        assert stanley_reisner_ideal(complex_from_squarefree_ideal(I)) == I
    for cx in all_complexes(4):
        assert complex_from_squarefree_ideal(stanley_reisner_ideal(cx)) == cx


def test_dual_examples(c4):
    assert alexander_dual(c4) == SimplicialComplex.on(4, [[1, 3], [2, 4]])
    irr = SimplicialComplex.irrelevant([1, 2])
    assert alexander_dual(irr) == SimplicialComplex.on(2, [[1], [2]])
    assert alexander_dual(SimplicialComplex.on(2)) == SimplicialComplex.simplex([1, 2])
    assert alexander_dual(SimplicialComplex.simplex([1, 2])).is_void()


def test_dual_is_involution_and_matches_definition():
    rng = random.Random(13)
    for _ in range(200):
        cx = random_complex(rng, rng.randint(1, 6))
        d = alexander_dual(cx)
        assert d == alexander_dual_bruteforce(cx)
        assert alexander_dual(d) == cx


def test_dual_facets_are_complements_of_nonfaces():
    rng = random.Random(14)
    for _ in range(100):
        cx = random_complex(rng, rng.randint(1, 6), proper=True)
        ground = frozenset(cx.ground)
        assert set(alexander_dual(cx).facets) == {ground - nf for nf in minimal_nonfaces(cx)}


def test_join_examples():
    pt = SimplicialComplex.on(1, [[1]])
    edge, _ = join(pt, pt)
    assert edge == SimplicialComplex.on(2, [[1, 2]])
    d = SimplicialComplex.on(2, [[1, 2], [2]])
    j, relabel = join(SimplicialComplex.irrelevant([]), d)
    assert j == SimplicialComplex.on(2, [[1, 2]])
    two = SimplicialComplex.on(2, [[1], [2]])
    j, relabel = join(two, two)
    assert j == SimplicialComplex.on(4, [[1, 3], [1, 4], [2, 3], [2, 4]])
    assert relabel == {(0, 1): 1, (0, 2): 2, (1, 1): 3, (1, 2): 4}
    # 4-cycle 1-3-2-4-1 after relabelling
    assert alexander_dual(alexander_dual(j)) == j


def test_join_faces_are_unions():
    rng = random.Random(15)
    for _ in range(30):
        a, b = random_complex(rng, rng.randint(1, 3)), random_complex(rng, rng.randint(1, 3))
        j, relabel = join(a, b)
        want = {
            frozenset(relabel[0, v] for v in fa) | frozenset(relabel[1, v] for v in fb)
            for fa in a.faces()
            for fb in b.faces()
        }
        assert set(j.faces()) == want


def test_induced_examples(c4):
    assert induced_subcomplex(c4, {1, 3}) == SimplicialComplex([1, 3], [[1], [3]])
    assert induced_subcomplex(c4, set()) == SimplicialComplex.irrelevant([])
    assert induced_subcomplex(c4, {1, 2, 3, 4}) == c4
    assert induced_subcomplex(c4, {1, 2}).facets == (frozenset({1, 2}),)


def test_sr_product_identity_exhaustive_small():
    """I(Δ1) I(Δ2) = I((Δ1^v * Δ2^v)^v) over every pair of complexes on [2] x [2]."""
    cxs = [c for c in all_complexes(2) if frozenset({1, 2}) not in c]
    for a in cxs:
        for b in cxs:
            gamma, _ = join_dual(a, b)
            lhs = product(embed_ideal(stanley_reisner_ideal(a), 4, 0), embed_ideal(stanley_reisner_ideal(b), 4, 2))
            assert lhs == stanley_reisner_ideal(gamma)


def test_complex_file_round_trip():
    rng = random.Random(16)
    for _ in range(50):
        cx = random_complex(rng, rng.randint(0, 6))
        text = format_complex(cx)
        assert parse_complex(text) == cx
        assert format_complex(parse_complex(text)) == text
    assert parse_complex("vertices 2\nfacet\n") == SimplicialComplex.irrelevant([1, 2])
    assert parse_complex("vertices 2\n").is_void()
    for bad in ("", "vertices\n", "vertices 2\nfacet 3\n", "vertices 2\nface 1\n"):
        with pytest.raises(ValueError):
            parse_complex(bad)
