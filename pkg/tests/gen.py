"""Seeded random exact objects for the property suites."""

import random
from fractions import Fraction

import numpy as np

from trilie import exactnum as xn

SMALL = (-3, -2, -1, 0, 1, 2, 3)


def rat(rng: random.Random, span: int = 3, den: int = 3) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, den))


def rand_matrix(rng, n, m=None, span=3, den=3):
    m = n if m is None else m
    return xn.matrix([[rat(rng, span, den) for _ in range(m)] for _ in range(n)])


def rand_invertible(rng, n, span=3, den=3):
    while True:
        P = rand_matrix(rng, n, span=span, den=den)
        if xn.determinant(P) != 0:
            return P


def rand_skew(rng, n, nondegenerate=True):
    while True:
        W = xn.zeros(n, n)
        for a in range(n):
            for b in range(a + 1, n):
                W[a, b] = rat(rng)
                W[b, a] = -W[a, b]
        if not nondegenerate or xn.determinant(W) != 0:
            return W


def rand_symmetric(rng, n, nondegenerate=True):
    while True:
        S = xn.zeros(n, n)
        for a in range(n):
            for b in range(a, n):
                S[a, b] = S[b, a] = rat(rng)
        if not nondegenerate or xn.determinant(S) != 0:
            return S


def rand_unimodular(rng, n, shears=4):
    """A signed permutation times a few random integer shears; integer inverse."""
    perm = list(range(n))
    rng.shuffle(perm)
    P = xn.zeros(n, n)
    for j, i in enumerate(perm):
        P[i, j] = rng.choice((1, -1))
    for _ in range(shears):
        a, b = rng.sample(range(n), 2)
        S = xn.identity(n)
        S[a, b] = rng.choice((-1, 1))
        P = P @ S
    return xn.normalize(P)


def rand_involution(rng, n, proper=True, rational=False):
    """P D P^-1 with D = diag(+-1); ``proper`` forces both signs to occur.

    P is unimodular unless ``rational`` is set, which keeps entries integral.
    """
    while True:
        signs = [rng.choice((1, -1)) for _ in range(n)]
        if not proper or len(set(signs)) == 2:
            break
    P = rand_invertible(rng, n) if rational else rand_unimodular(rng, n)
    return xn.normalize(P @ xn.diag(signs) @ xn.inverse(P))


def perturb(rng, t, skew_axes=(0, 1)):
    """Add a random nonzero entry to ``t`` keeping skewness in ``skew_axes``."""
    t = np.array(t, dtype=object, copy=True)
    while True:
        idx = [rng.randrange(s) for s in t.shape]
        a, b = skew_axes
        if idx[a] != idx[b]:
            break
    v = Fraction(rng.choice((-2, -1, 1, 2)))
    t[tuple(idx)] += v
    idx[a], idx[b] = idx[b], idx[a]
    t[tuple(idx)] -= v
    return t


def rand_unimodular_skew(rng, n, span=2):
    """Integral nondegenerate skew matrix with integral inverse (Pfaffian +-1), n = 4."""
    while True:
        W = xn.zeros(n, n)
        for a in range(n):
            for b in range(a + 1, n):
                W[a, b] = rng.randint(-span, span)
                W[b, a] = -W[a, b]
        if xn.determinant(W) == 1:
            return W
