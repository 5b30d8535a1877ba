"""Representations of 3-Lie algebras, dual representations, semidirect products."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

import numpy as np

from . import exactnum as xn
from .report import Checker, Report
from .threelie import ThreeLieAlgebra, _disjoint_names


@dataclass(frozen=True, eq=False)
class Representation:
    """rho[i, j] is the (vdim x vdim) matrix of rho(e_i, e_j); skew in (i, j)."""

    base: ThreeLieAlgebra
    rho: np.ndarray

    def __post_init__(self):
        rho = xn.normalize(self.rho)
        n = self.base.dim
        if rho.ndim != 4 or rho.shape[:2] != (n, n) or rho.shape[2] != rho.shape[3]:
            raise ValueError(f"rho must have shape ({n},{n},m,m), got {rho.shape}")
        if not xn.equal(rho, -np.swapaxes(rho, 0, 1)):
            raise ValueError("rho is not skew-symmetric in its two arguments")
        rho.flags.writeable = False
        object.__setattr__(self, "rho", rho)

    @property
    def vdim(self) -> int:
        return self.rho.shape[2]

    @classmethod
    def from_pairs(cls, base: ThreeLieAlgebra, vdim: int, pairs: Mapping[tuple, object]) -> "Representation":
        """Build from matrices on ordered pairs; (j, i) gets the negative of (i, j)."""
        n = base.dim
        rho = xn.zeros(n, n, vdim, vdim)
        for (i, j), M in pairs.items():
            if i == j:
                raise ValueError(f"rho({i},{i}) must vanish")
            M = xn.matrix(M)
            if M.shape != (vdim, vdim):
                raise ValueError(f"rho({i},{j}) must be {vdim}x{vdim}")
            if i > j:
                i, j, M = j, i, -M
            rho[i, j] = M
            rho[j, i] = -M
        return cls(base, rho)

    @classmethod
    def zero(cls, base: ThreeLieAlgebra, vdim: int) -> "Representation":
        return cls(base, xn.zeros(base.dim, base.dim, vdim, vdim))

    def __call__(self, i: int, j: int):
        return self.rho[i, j]

    def __eq__(self, other):
        if not isinstance(other, Representation):
            return NotImplemented
        return self.base == other.base and xn.equal(self.rho, other.rho)

    def __hash__(self):
        return hash((self.base.dim, self.vdim))


def check_representation(r: Representation) -> Report:
    """Both defining identities on all basis 4-tuples.

    (a) rho([x1,x2,x3],x4) + rho(x3,[x1,x2,x4]) = [rho(x1,x2), rho(x3,x4)]
    (b) rho([x1,x2,x3],x4) = rho(x1,x2)rho(x3,x4) + rho(x2,x3)rho(x1,x4) + rho(x3,x1)rho(x2,x4)
    """
    c = r.base.c
    rho = r.rho
    ck = Checker("representation")
    if r.base.dim == 0 or r.vdim == 0:
        ck.flag("commutator identity", True)
        ck.flag("product identity", True)
        return ck.done()
    rho_b = np.einsum("ijkm,mlab->ijklab", c, rho)  # rho([x1,x2,x3], x4)
    rho_c = np.einsum("ijlm,kmab->ijklab", c, rho)  # rho(x3, [x1,x2,x4])
    prod = np.einsum("ijac,klcb->ijklab", rho, rho)  # rho(x1,x2) rho(x3,x4)
    comm = prod - np.einsum("klijab->ijklab", prod)
    ck.compare("commutator identity", rho_b + rho_c, comm, value_ndim=2)
    # prod[i,j,k,l] = rho(e_i,e_j) rho(e_k,e_l); reindex for the cyclic terms
    t2 = np.einsum("jkilab->ijklab", prod)  # rho(x2,x3) rho(x1,x4)
    t3 = np.einsum("kijlab->ijklab", prod)  # rho(x3,x1) rho(x2,x4)
    ck.compare("product identity", rho_b, prod + t2 + t3, value_ndim=2)
    return ck.done()


def dual_representation(r: Representation, validate: bool = True) -> Representation:
    """rho*(x, y) = -rho(x, y)^T."""
    if validate and not check_representation(r):
        raise ValueError("input is not a representation")
    return Representation(r.base, -np.swapaxes(r.rho, 2, 3))


def semidirect_product(g: ThreeLieAlgebra, r: Representation) -> ThreeLieAlgebra:
    """The algebra g + V with [x1+v1, x2+v2, x3+v3] = [x1,x2,x3] + rho(x1,x2)v3 + rho(x2,x3)v1 + rho(x3,x1)v2.

    No validation happens here: the result satisfies the fundamental identity
    exactly when ``r`` is a representation.
    """
    if r.base.dim != g.dim or not xn.equal(r.base.c, g.c):
        raise ValueError("representation belongs to a different algebra")
    if r.base.field != g.field:
        raise ValueError("field mismatch")
    n, m = g.dim, r.vdim
    N = n + m
    c = xn.zeros(N, N, N, N)
    c[:n, :n, :n, :n] = g.c
    # val[i, j, a, b] = coefficient of v_b in rho(e_i, e_j) v_a
    val = np.swapaxes(r.rho, 2, 3)
    c[:n, :n, n:, n:] = val
    c[n:, :n, :n, n:] = np.transpose(val, (2, 0, 1, 3))
    c[:n, n:, :n, n:] = -np.transpose(val, (0, 2, 1, 3))
    basis = _disjoint_names(g.basis, tuple(f"v{k + 1}" for k in range(m)))
    return ThreeLieAlgebra(c, basis, g.field)
