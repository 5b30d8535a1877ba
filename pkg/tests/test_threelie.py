import random

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from a4data import A4_BRACKETS, E, a4, g3
from gen import rand_unimodular
from trilie import exactnum as xn
from trilie.report import witness_limit
from trilie.threelie import (
    Subspace,
    ThreeLieAlgebra,
    check_derivation_form,
    check_fundamental_identity,
    check_nijenhuis,
    direct_sum,
    is_abelian_on,
    is_subalgebra,
    transport,
)

seeds = st.integers(0, 10**6)


def corrupted_a4():
    brackets = dict(A4_BRACKETS)
    brackets[(0, 1, 3)] = {2: 1, 3: 1}
    return ThreeLieAlgebra.from_brackets(4, brackets)


def test_a4_brackets():
    g = a4()
    assert g.dim == 4 and g.basis == ("e₁", "e₂", "e₃", "e₄")
    assert list(g.c[0, 1, 2]) == [0, 0, 0, 1]
    assert list(g.c[2, 1, 0]) == [0, 0, 0, -1]
    assert list(g.c[3, 2, 1]) == [-1, 0, 0, 0]
    table = {k: [int(v) for v in vec] for k, vec in g.canonical_brackets().items()}
    assert table == {
        (0, 1, 2): [0, 0, 0, 1],
        (0, 1, 3): [0, 0, 1, 0],
        (0, 2, 3): [0, 1, 0, 0],
        (1, 2, 3): [1, 0, 0, 0],
    }


def test_from_brackets_reorders_with_sign():
    g = ThreeLieAlgebra.from_brackets(3, {(2, 1, 0): {0: 1}})
    assert g == ThreeLieAlgebra.from_brackets(3, {(0, 1, 2): {0: -1}})


@pytest.mark.parametrize(
    "brackets",
    [{(0, 0, 1): {0: 1}}, {(0, 1, 5): {0: 1}}, {(0, 1, 2): {0: 1}, (1, 0, 2): {0: 1}}],
)
def test_from_brackets_rejects(brackets):
    with pytest.raises(ValueError):
        ThreeLieAlgebra.from_brackets(3, brackets)


def test_constructor_rejects_non_skew():
    c = xn.zeros(3, 3, 3, 3)
    c[0, 1, 2, 0] = 1
    with pytest.raises(ValueError):
        ThreeLieAlgebra(c, ("a", "b", "c"))


def test_fundamental_identity_on_examples():
    assert check_fundamental_identity(a4()).ok
    assert check_fundamental_identity(g3()).ok
    assert check_fundamental_identity(ThreeLieAlgebra.abelian(5)).ok


def test_corrupted_a4_fails_with_witnesses():
    rep = check_fundamental_identity(corrupted_a4())
    assert not rep.ok
    assert rep.counts["fundamental identity"] > 0
    w = rep.witnesses[0]
    assert len(w.args) == 5 and not xn.equal(np.asarray(w.lhs), np.asarray(w.rhs))


def test_witness_limit():
    with witness_limit(2):
        rep = check_fundamental_identity(corrupted_a4())
    assert len(rep.witnesses) == 2
    assert rep.counts["fundamental identity"] > 2


def test_derivation_form_agrees():
    assert check_derivation_form(a4()).ok
    assert not check_derivation_form(corrupted_a4()).ok


@given(seeds)
def test_transport_preserves_fundamental_identity(seed):
    rng = random.Random(seed)
    P = rand_unimodular(rng, 4)
    h = transport(a4(), P)
    assert check_fundamental_identity(h).ok
    assert transport(h, xn.inverse(P)) == a4()


def test_subspace():
    U = Subspace([xn.array([1, 1, 0]), xn.array([2, 2, 0])], 3)
    assert U.dim == 1
    assert U.contains(xn.array([3, 3, 0])) and not U.contains(xn.array([1, 0, 0]))
    V = Subspace.span(3, [0, 2])
    assert U.is_complement(V) and not V.is_complement(Subspace.span(3, [0]))
    assert Subspace.from_columns(V.basis) == V
    assert Subspace.full(3).dim == 3


def test_subalgebras_of_a4():
    g = a4()
    for idx in ([0, 1], [2, 3], [0, 2, 3]):
        W = Subspace.span(4, idx)
        assert is_subalgebra(g, W) == (len(idx) < 3)
    assert is_abelian_on(g, Subspace.span(4, [0, 1]))
    assert not is_abelian_on(g, Subspace.full(4))


def test_nijenhuis():
    g = a4()
    assert all(check_nijenhuis(g, Ei).ok for Ei in E)
    assert check_nijenhuis(g, xn.identity(4)).ok
    N = xn.zeros(4, 4)
    N[0, 1] = 1
    assert check_nijenhuis(g, N).ok == check_nijenhuis(g, N).ok  # deterministic
    with pytest.raises(ValueError):
        check_nijenhuis(g, xn.identity(3))


def test_direct_sum():
    s = direct_sum(a4(), ThreeLieAlgebra.abelian(4))
    assert s.dim == 8 and check_fundamental_identity(s).ok
    assert xn.equal(s.c[:4, :4, :4, :4], a4().c)
    assert xn.is_zero(s.c[4:, :, :, :])
