import random

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from a4data import a4, induced_prelie_g3, g3
from gen import perturb, rand_unimodular, rand_unimodular_skew
from trilie import exactnum as xn
from trilie.kaehler import metric_prelie_structures
from trilie.prelie import (
    PreLieRep,
    ThreePreLie,
    check_invariant_form,
    check_O_operator,
    check_prelie_axioms,
    check_prelie_representation,
    combined_rep,
    compatible_prelie_from_O,
    conjugate_prelie_rep,
    cyclic_sum,
    dual_prelie_rep,
    invariant_forms,
    left_mult,
    right_mult,
    semidirect_prelie,
    sub_adjacent,
)
from trilie.reps import check_representation, dual_representation, semidirect_product
from trilie.symplectic import prelie_from_symplectic
from trilie.threelie import adjoint_rep, check_fundamental_identity, transport

seeds = st.integers(0, 10**6)


def random_prelie(seed):
    rng = random.Random(seed)
    return prelie_from_symplectic(transport(a4(), rand_unimodular(rng, 4)), rand_unimodular_skew(rng, 4))


def test_induced_prelie_g3_from_o_operator():
    A = compatible_prelie_from_O(g3(), adjoint_rep(g3()), xn.diag([1, 1, -1]))
    assert A == induced_prelie_g3()
    table = {k: [int(v) for v in vec] for k, vec in A.nonzero_products().items()}
    assert table == {(0, 1, 2): [-1, 0, 0], (0, 2, 1): [-1, 0, 0], (1, 2, 0): [1, 0, 0]}
    assert check_prelie_axioms(A).ok
    assert sub_adjacent(A) == g3()


def test_axioms_detect_failures():
    d = induced_prelie_g3().d.copy()
    d[0, 1, 2, 0] = 5
    rep = check_prelie_axioms(ThreePreLie(d, ("a", "b", "c")))
    assert not rep.flags["skew in first two slots"]
    d = perturb(random.Random(0), induced_prelie_g3().d)
    assert not check_prelie_axioms(ThreePreLie(d, ("a", "b", "c"))).ok


def test_from_products_fills_skew_partner():
    A = ThreePreLie.from_products(2, {(1, 0, 0): {1: 3}})
    assert A.d[0, 1, 0, 1] == -3 and A.d[1, 0, 0, 1] == 3
    assert check_prelie_axioms(ThreePreLie.abelian(3)).ok


def test_cyclic_sum():
    d = induced_prelie_g3().d
    expected = d + np.transpose(d, (2, 0, 1, 3)) + np.transpose(d, (1, 2, 0, 3))
    assert xn.equal(cyclic_sum(d), expected)


@given(seeds)
def test_prelie_from_symplectic_is_compatible(seed):
    A = random_prelie(seed)
    assert check_prelie_axioms(A).ok
    assert check_fundamental_identity(sub_adjacent(A)).ok


def test_left_and_right_multiplication():
    A = induced_prelie_g3()
    L = left_mult(A)
    assert check_representation(L).ok
    R = right_mult(A)
    # R(y, z) x = {x, y, z}
    x, y, z = 1, 2, 0
    assert xn.equal(R[y, z][:, x], A.d[x, y, z])
    assert xn.equal(L.rho[x, y][:, z], A.d[x, y, z])


@pytest.mark.parametrize("seed", range(4))
def test_regular_dual_and_conjugate_representations(seed):
    A = random_prelie(seed)
    pr = PreLieRep.regular(A)
    assert check_prelie_representation(pr).ok
    dual = dual_prelie_rep(pr)
    assert check_prelie_representation(dual).ok
    P = rand_unimodular(random.Random(seed), 4)
    assert check_prelie_representation(conjugate_prelie_rep(pr, P)).ok


def test_combined_representation_of_regular_is_adjoint():
    A = induced_prelie_g3()
    pr = PreLieRep.regular(A)
    assert combined_rep(pr) == adjoint_rep(g3())
    assert combined_rep(dual_prelie_rep(pr)) == dual_representation(left_mult(A))


def test_semidirect_prelie_sub_adjacent():
    pr = PreLieRep.regular(induced_prelie_g3())
    S = semidirect_prelie(pr)
    assert check_prelie_axioms(S).ok
    assert sub_adjacent(S) == semidirect_product(g3(), combined_rep(pr))


def test_broken_prelie_representation():
    pr = PreLieRep.regular(induced_prelie_g3())
    bad = PreLieRep(pr.base, pr.rho, pr.mu + xn.diag([1, 0, 0])[None, None, :, :])
    rep = check_prelie_representation(bad)
    assert not rep.ok and rep.failed()
    with pytest.raises(ValueError):
        semidirect_prelie(bad)


def test_o_operator():
    g, ad = g3(), adjoint_rep(g3())
    assert check_O_operator(g, ad, xn.diag([1, 1, -1])).ok
    assert check_O_operator(g, ad, xn.diag([1, -1, 1])).ok
    assert not check_O_operator(g, ad, xn.diag([1, 2, 3])).ok
    with pytest.raises(ValueError):
        compatible_prelie_from_O(g, ad, xn.diag([1, 2, 3]))


def test_invariant_forms_of_induced_prelie_g3():
    A = induced_prelie_g3()
    forms = invariant_forms(A)
    span = np.stack([f.reshape(-1) for f in forms])
    expected = np.stack([_unit(1, 1).reshape(-1), (_unit(1, 2) + _unit(2, 1)).reshape(-1), _unit(2, 2).reshape(-1)])
    assert xn.rank(span) == 3 and xn.rank(np.concatenate([span, expected])) == 3
    assert all(xn.determinant(f) == 0 for f in forms)
    with pytest.raises(ValueError):
        check_invariant_form(A, xn.matrix([[0, 1, 0], [2, 0, 0], [0, 0, 1]]))
    with pytest.raises(ValueError):
        metric_prelie_structures(A, xn.identity(3))


def _unit(a, b):
    M = xn.zeros(3, 3)
    M[a, b] = 1
    return M


def test_abelian_invariant_forms_are_all_symmetric_forms():
    assert len(invariant_forms(ThreePreLie.abelian(3))) == 6
