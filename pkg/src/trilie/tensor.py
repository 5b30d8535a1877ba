"""Contractions on structure-constant tensors stored as object arrays.

A trilinear product is a rank-4 tensor ``t[i, j, k, l]``, the coefficient of
``e_l`` in the product of ``(e_i, e_j, e_k)``.
"""

from __future__ import annotations

import numpy as np


def tri(t, P=None, Q=None, R=None):
    """Pull back each input slot through a matrix.

    Returns ``u[a, b, c, l] = sum P[i, a] Q[j, b] R[k, c] t[i, j, k, l]``, i.e. the
    product evaluated on ``(P e_a, Q e_b, R e_c)``. ``None`` leaves a slot alone.
    Input matrices may be rectangular (n x m) to restrict to a subspace basis.
    """
    u = t
    if P is not None:
        u = np.tensordot(P, u, axes=([0], [0]))
    if Q is not None:
        u = np.moveaxis(np.tensordot(Q, u, axes=([0], [1])), 0, 1)
    if R is not None:
        u = np.moveaxis(np.tensordot(R, u, axes=([0], [2])), 0, 2)
    return u


def out(M, t):
    """Apply a linear map to the value axis (the last axis) of ``t``."""
    return np.tensordot(t, M, axes=([t.ndim - 1], [1]))


def evaluate(t, x, y, z):
    """Trilinear evaluation on coordinate vectors."""
    u = np.tensordot(x, t, axes=([0], [0]))
    u = np.tensordot(y, u, axes=([0], [0]))
    return np.tensordot(z, u, axes=([0], [0]))


def pairing(t, W):
    """``f[..., w] = sum_l t[..., l] W[l, w]``, a bilinear form applied to the value."""
    return np.tensordot(t, W, axes=([t.ndim - 1], [0]))


def permute(t, perm):
    """Reorder the three input slots: ``u[x0, x1, x2] = t[x_perm[0], x_perm[1], x_perm[2]]``."""
    letters = "abc"
    src = "".join(letters[p] for p in perm) + "l"
    return np.einsum(f"{src}->abcl", t)


def skew_expand(t):
    """Fill a tensor given on canonical triples by total skew-symmetry.

    Entries on non-canonical triples must be zero or consistent; the result is
    the alternation of the canonical (i < j < k) part.
    """
    n = t.shape[0]
    u = np.empty_like(t)
    u.fill(0)
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                v = t[i, j, k]
                u[i, j, k] = v
                u[j, k, i] = v
                u[k, i, j] = v
                u[j, i, k] = -v
                u[i, k, j] = -v
                u[k, j, i] = -v
    return u
