import pytest
from hypothesis import settings, strategies as st

from golodcert.ideal import MonomialIdeal
from golodcert.monomial import Monomial
from golodcert.simplicial import SimplicialComplex

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def M(text: str, n: int) -> Monomial:
    from golodcert.monomial import parse_monomial

    return parse_monomial(text, n)


def ideal(n: int, *gens: str) -> MonomialIdeal:
    return MonomialIdeal.parse(n, gens)


def monomials(n: int, max_exp: int = 3):
    return st.lists(st.integers(0, max_exp), min_size=n, max_size=n).map(Monomial)


@st.composite
def ideals(draw, n=None, max_gens=4, max_exp=3, squarefree=False):
    n = n or draw(st.integers(1, 4))
    cap = 1 if squarefree else max_exp
    gens = draw(
        st.lists(
            st.lists(st.integers(0, cap), min_size=n, max_size=n).filter(any).map(Monomial),
            min_size=1,
            max_size=max_gens,
        )
    )
    return MonomialIdeal(n, gens)


@st.composite
def complexes(draw, n=None, max_n=5):
    n = n if n is not None else draw(st.integers(1, max_n))
    facets = draw(st.lists(st.sets(st.integers(1, n)), min_size=1, max_size=5))
    return SimplicialComplex.on(n, facets)


@pytest.fixture
def c4():
    return SimplicialComplex.on(4, [[1, 2], [2, 3], [3, 4], [1, 4]])


@pytest.fixture
def triangle():
    return ideal(3, "x1*x2", "x1*x3", "x2*x3")


def axiom_failures(alg) -> dict[str, int]:
    """Count violations of the algebra axioms over all basis pairs and triples."""
    basis = alg.basis()
    unit = alg.unit()
    bad = {"cocycle": 0, "commutativity": 0, "associativity": 0, "unit": 0}
    for a in basis:
        if not alg.combination_is_zero([(1, alg.product(unit, a)), (-1, a)]):
            bad["unit"] += 1
        if not alg.combination_is_zero([(1, alg.product(a, unit)), (-1, a)]):
            bad["unit"] += 1
        for b in basis:
            ab = alg.product(a, b)
            if ab is None:
                continue
            if not alg.is_cocycle(ab):
                bad["cocycle"] += 1
            sign = (-1) ** (a.total_degree * b.total_degree)
            if not alg.combination_is_zero([(1, ab), (-sign, alg.product(b, a))]):
                bad["commutativity"] += 1
            for c in basis:
                left = alg.product(ab, c)
                bc = alg.product(b, c)
                right = None if bc is None else alg.product(a, bc)
                if (left is None) != (right is None):
                    bad["associativity"] += 1
                elif left is not None and not alg.combination_is_zero([(1, left), (-1, right)]):
                    bad["associativity"] += 1
    return bad


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
