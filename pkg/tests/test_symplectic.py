import random

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from a4data import OMEGA, a4, induced_prelie_g3
from gen import rand_skew
from trilie import exactnum as xn
from trilie.prelie import ThreePreLie, check_prelie_axioms, cyclic_sum, sub_adjacent
from trilie.symplectic import (
    BilForm,
    canonical_form,
    check_manin_triple,
    check_phase_space,
    check_quadratic_prelie,
    check_symplectic,
    check_symplectic_double,
    manin_mixed_products,
    mp3lie_bracket,
    phase_space,
    prelie_from_symplectic,
    split_manin,
    wedge,
)
from trilie.threelie import ThreeLieAlgebra, check_fundamental_identity, direct_sum


def test_wedge_and_canonical_form():
    W = wedge(2, [(0, 1)]).matrix
    assert W[0, 1] == 1 and W[1, 0] == -1
    C = canonical_form(2).matrix
    assert xn.equal(C, xn.matrix([[0, 0, -1, 0], [0, 0, 0, -1], [1, 0, 0, 0], [0, 1, 0, 0]]))
    assert xn.equal(OMEGA[0].matrix, C)
    assert OMEGA[0](xn.array([0, 0, 1, 0]), xn.array([1, 0, 0, 0])) == 1


def test_bilform_validates_symmetry():
    with pytest.raises(ValueError):
        BilForm.skew(xn.matrix([[0, 1], [1, 0]]))
    with pytest.raises(ValueError):
        BilForm.symmetric(xn.matrix([[0, 1], [-1, 0]]))
    assert not BilForm.skew(xn.zeros(2, 2)).is_nondegenerate()


def test_a4_named_forms_are_symplectic():
    assert all(check_symplectic(a4(), w).ok for w in OMEGA)


@given(st.integers(0, 10**6))
def test_a4_every_nondegenerate_form_is_symplectic(seed):
    assert check_symplectic(a4(), rand_skew(random.Random(seed), 4)).ok


def test_degenerate_form_reports_det_zero():
    rep = check_symplectic(a4(), xn.zeros(4, 4))
    assert not rep.flags["nondegenerate"] and rep.flags["cocycle"]
    assert "det = 0" in rep.notes


def test_cocycle_failure_on_direct_sum():
    g = direct_sum(a4(), ThreeLieAlgebra.abelian(4))
    rep = check_symplectic(g, canonical_form(4))
    assert not rep.flags["cocycle"] and rep.witnesses
    v = check_phase_space(g, canonical_form(4))
    assert not v.is_phase_space and v.perfect


def test_prelie_from_symplectic():
    A = prelie_from_symplectic(a4(), OMEGA[5])
    assert check_prelie_axioms(A).ok
    assert sub_adjacent(A) == a4()
    assert check_quadratic_prelie(A, OMEGA[5])
    with pytest.raises(ValueError):
        check_quadratic_prelie(A, xn.zeros(4, 4))


def test_phase_space_of_induced_prelie_g3():
    A = induced_prelie_g3()
    g, w = phase_space(A)
    assert g.dim == 6 and g.basis[3:] == ("e₁*", "e₂*", "e₃*")
    assert check_fundamental_identity(g).ok and check_symplectic(g, w).ok
    v = check_phase_space(g, w)
    assert v.is_phase_space and v.perfect
    with pytest.raises(ValueError):
        check_phase_space(ThreeLieAlgebra.abelian(3), xn.zeros(3, 3))


def test_manin_triple_and_reassembly():
    g, w = phase_space(induced_prelie_g3())
    Q = prelie_from_symplectic(g, w)
    assert check_manin_triple(Q, w).ok
    A, B = split_manin(Q)
    assert A == induced_prelie_g3()
    assert xn.is_zero(B.d)
    double = manin_mixed_products(A, B)
    assert double.axioms.ok and double.mp3lie_match
    assert xn.equal(double.algebra.d, Q.d)
    assert xn.equal(mp3lie_bracket(A, B), g.c)


def test_iterated_phase_space():
    g, w = phase_space(induced_prelie_g3())
    Q = prelie_from_symplectic(g, w)
    g2, w2 = phase_space(Q)
    assert g2.dim == 12
    assert check_symplectic_double(g2, w2)
    assert check_phase_space(g2, w2).perfect


def test_manin_triple_depends_on_the_splitting():
    # omega6 pairs e1 with e3 and e2 with e4, so span(e1, e2) is isotropic
    assert check_manin_triple(prelie_from_symplectic(a4(), OMEGA[5]), OMEGA[5]).ok
    A = prelie_from_symplectic(a4(), OMEGA[1])
    rep = check_manin_triple(A, OMEGA[1])
    assert rep.flags["pre-Lie: identity 1"] and rep.flags["quadratic"]
    assert not rep.flags["A isotropic"] and not rep.ok


@pytest.mark.parametrize("seed", range(3))
def test_mixed_products_bracket_always_matches(seed):
    rng = random.Random(seed)
    dA = xn.zeros(2, 2, 2, 2)
    dB = xn.zeros(2, 2, 2, 2)
    for t in (dA, dB):
        for k in range(2):
            for l in range(2):
                v = rng.randint(-2, 2)
                t[0, 1, k, l], t[1, 0, k, l] = v, -v
    A = ThreePreLie(dA, ("x", "y"))
    B = ThreePreLie(dB, ("a", "b"))
    double = manin_mixed_products(A, B)
    assert double.mp3lie_match
    assert xn.equal(cyclic_sum(double.algebra.d), mp3lie_bracket(A, B))
