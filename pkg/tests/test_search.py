from math import prod

import pytest
from hypothesis import given
from hypothesis import strategies as st

from a4data import E, J, OMEGA, a4, g3
from trilie import exactnum as xn
from trilie.search import (
    CandidateFamily,
    SQUARE_ID,
    SQUARE_MINUS_ID,
    SearchLimitError,
    candidates,
    complex_structures,
    enumerate_complex,
    enumerate_products,
    involution_matchings,
    pair_search,
    perfect_matchings,
    product_structures,
)
from trilie.threelie import ThreeLieAlgebra


def involution_count(n):
    # telephone numbers: T(n) = T(n-1) + (n-1) T(n-2)
    a, b = 1, 1
    for k in range(2, n + 1):
        a, b = b, b + (k - 1) * a
    return b if n else 1


@given(st.integers(0, 8))
def test_matching_counts(n):
    pm = list(perfect_matchings(range(n)))
    assert len(pm) == (prod(range(n - 1, 0, -2)) if n % 2 == 0 else 0)
    assert len(list(involution_matchings(range(n)))) == involution_count(n)


@given(st.integers(1, 5))
def test_candidates_satisfy_constraint(n):
    I = xn.identity(n)
    for M in candidates(CandidateFamily.signed_involutions(), n):
        assert xn.equal(M @ M, I)
    if n % 2 == 0:
        for M in candidates(CandidateFamily.signed_permutations(), n):
            assert xn.equal(M @ M, -I)


def test_diagonal_search_on_a4():
    results = enumerate_products(a4(), CandidateFamily.diagonal())
    assert len(results) == 14
    found = [Em for Em, _ in product_structures(results)]
    assert len(found) == 6 and all(any(xn.equal(Em, Ei) for Ei in E) for Em in found)


def test_signed_permutation_search_on_a4():
    results = enumerate_complex(a4(), CandidateFamily.signed_permutations())
    assert len(results) == 12 and len(complex_structures(results)) == 12
    assert sum(cc.strong_abelian for _, cc in results) == 4
    for Ji in J:
        assert any(xn.equal(Jm, Ji) for Jm, _ in results)


def test_signed_involution_search():
    results = enumerate_products(a4(), CandidateFamily.signed_involutions())
    assert len(results) == 74
    assert len(product_structures(results)) == 58


def test_search_is_deterministic():
    a = [Em for Em, _ in enumerate_products(g3(), CandidateFamily.signed_involutions())]
    b = [Em for Em, _ in enumerate_products(g3(), CandidateFamily.signed_involutions())]
    assert len(a) == len(b) and all(xn.equal(x, y) for x, y in zip(a, b))


def test_caps():
    with pytest.raises(SearchLimitError):
        enumerate_products(ThreeLieAlgebra.abelian(22), CandidateFamily.diagonal())
    with pytest.raises(SearchLimitError):
        list(candidates(CandidateFamily.signed_permutations(), 12))
    assert len(list(candidates(CandidateFamily.diagonal(), 3, cap=5))) == 8


def test_explicit_family_validation():
    fam = CandidateFamily.of(E[:2], SQUARE_ID)
    assert len(enumerate_products(a4(), fam)) == 2
    with pytest.raises(ValueError):
        list(candidates(CandidateFamily.of([J[0]], SQUARE_ID), 4))
    with pytest.raises(ValueError):
        enumerate_complex(a4(), CandidateFamily.of(E, SQUARE_ID))
    with pytest.raises(ValueError):
        enumerate_products(a4(), CandidateFamily.of(J, SQUARE_MINUS_ID))


def test_pair_search_on_a4():
    products = product_structures(enumerate_products(a4(), CandidateFamily.diagonal()))
    complexes = complex_structures(enumerate_complex(a4(), CandidateFamily.signed_permutations()))
    rep = pair_search(a4(), products, complexes, OMEGA)
    assert len(rep.complex_products) == 48
    assert len(rep.para_kaehler) == 24
    assert len(rep.pseudo_kaehler) == 48
    assert not rep.is_empty()
