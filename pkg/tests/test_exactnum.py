from fractions import Fraction
from itertools import permutations

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from trilie import exactnum as xn
from trilie.exactnum import Gauss, format_scalar, parse_scalar

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=12)
gaussians = st.builds(xn.gauss, rationals, rationals)


def small_matrices(n):
    return st.lists(st.lists(st.integers(-4, 4), min_size=n, max_size=n), min_size=n, max_size=n).map(xn.matrix)


def leibniz(M):
    """Determinant straight from the permutation expansion."""
    n = M.shape[0]
    total = 0
    for p in permutations(range(n)):
        sign = 1
        for a in range(n):
            for b in range(a + 1, n):
                if p[a] > p[b]:
                    sign = -sign
        term = sign
        for r in range(n):
            term *= M[r, p[r]]
        total += term
    return total


@pytest.mark.parametrize(
    "text, value",
    [
        ("3", 3),
        ("-3/4", Fraction(-3, 4)),
        ("6/4", Fraction(3, 2)),
        ("i", Gauss(0, 1)),
        ("-i", Gauss(0, -1)),
        ("2+i", Gauss(2, 1)),
        ("1/2-3i/4", Gauss(Fraction(1, 2), Fraction(-3, 4))),
        ("0+0i", 0),
    ],
)
def test_parse_scalar(text, value):
    assert parse_scalar(text) == value


@pytest.mark.parametrize("text", ["", "abc", "1/0", "1i", "3+", "i/0", "1.5"])
def test_parse_scalar_rejects(text):
    with pytest.raises(ValueError):
        parse_scalar(text)


def test_gauss_collapses_to_rational():
    assert xn.gauss(3, 0) == 3 and not isinstance(xn.gauss(3, 0), Gauss)
    assert xn.I * xn.I == -1
    assert isinstance(xn.scalar(Fraction(4, 2)), int)


@given(gaussians)
def test_format_parse_round_trip(x):
    assert parse_scalar(format_scalar(x)) == x


@given(gaussians, gaussians, gaussians)
def test_gauss_field_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a
    assert xn.conj(a * b) == xn.conj(a) * xn.conj(b)
    if a != 0:
        assert a * (1 / a) == 1
        assert (b / a) * a == b


@given(small_matrices(4))
def test_determinant_matches_leibniz(M):
    assert xn.determinant(M) == leibniz(M)


@given(small_matrices(3), small_matrices(3))
def test_determinant_multiplicative(A, B):
    assert xn.determinant(xn.normalize(A @ B)) == xn.determinant(A) * xn.determinant(B)


@given(small_matrices(4))
def test_inverse_and_kernel(M):
    n = M.shape[0]
    r = xn.rank(M)
    kernel = xn.kernel_basis(M)
    assert r + len(kernel) == n
    for v in kernel:
        assert xn.is_zero(M @ v)
    if xn.determinant(M) != 0:
        Minv = xn.inverse(M)
        assert xn.equal(M @ Minv, xn.identity(n))
        b = xn.array([1, -2, 3, 0])
        x = xn.solve_linear(M, b)
        assert xn.equal(M @ x, b)
    else:
        with pytest.raises(ValueError):
            xn.inverse(M)


def test_gaussian_inverse():
    M = xn.matrix([[xn.I, 1], [0, 2 - xn.I]])
    assert xn.equal(M @ xn.inverse(M), xn.identity(2))


def test_rref():
    R, pivots = xn.rref(xn.matrix([[2, 4, 6], [1, 2, 4]]))
    assert list(pivots) == [0, 2]
    assert xn.equal(R, xn.matrix([[1, 2, 0], [0, 0, 1]]))


@given(st.lists(st.sampled_from([1, -1, 0]), min_size=4, max_size=4), small_matrices(4))
def test_signature_by_congruence(signs, P):
    if xn.determinant(P) == 0:
        return
    S = xn.normalize(P.T @ xn.diag(signs) @ P)
    assert xn.signature(S) == (signs.count(1), signs.count(-1), signs.count(0))
    assert xn.is_positive_definite(S) == (signs.count(1) == 4)


def test_signature_zero_diagonal():
    assert xn.signature(xn.matrix([[0, 1], [1, 0]])) == (1, 1, 0)
    with pytest.raises(ValueError):
        xn.signature(xn.matrix([[0, 1], [2, 0]]))


def test_form_predicates():
    W = xn.matrix([[0, 1], [-1, 0]])
    assert xn.is_skew(W) and not xn.is_symmetric(W)
    assert xn.is_real_array(W) and not xn.is_real_array(W * xn.I)
    Z = xn.matrix([[1 + xn.I, 2]])
    assert xn.equal(xn.re_part(Z), xn.matrix([[1, 2]]))
    assert xn.equal(xn.im_part(Z), xn.matrix([[1, 0]]))
    assert xn.equal(xn.conjugate(Z), xn.matrix([[1 - xn.I, 2]]))


def test_arrays_are_exact():
    M = xn.matrix([["1/2", 3]])
    assert M.dtype == object and M[0, 0] == Fraction(1, 2)
    assert isinstance(np.sum(M), Fraction)
