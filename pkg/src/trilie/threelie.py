"""3-Lie algebras given by structure constants.

The bracket ``[e_i, e_j, e_k] = sum_l c[i, j, k, l] e_l`` is totally
skew-symmetric. Algebras are immutable; constructors check skew-symmetry but
not the fundamental identity, which is a separate check.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Mapping, Sequence

import numpy as np

from . import exactnum as xn
from .report import Checker, Report, default_basis
from .tensor import evaluate, out, skew_expand, tri


def _check_field(field: str, data) -> str:
    if field not in xn.FIELDS:
        raise ValueError(f"unknown scalar field {field!r}")
    if field == xn.RATIONAL and not xn.is_real_array(data):
        raise ValueError("Gaussian entries in a rational algebra")
    return field


@dataclass(frozen=True, eq=False)
class ThreeLieAlgebra:
    c: np.ndarray
    basis: tuple
    field: str = xn.RATIONAL

    def __post_init__(self):
        c = xn.normalize(self.c)
        n = c.shape[0]
        if c.shape != (n, n, n, n):
            raise ValueError(f"structure constants must have shape (n,n,n,n), got {c.shape}")
        if len(self.basis) != n:
            raise ValueError("basis length does not match dimension")
        _check_field(self.field, c)
        if not xn.equal(c, -np.swapaxes(c, 0, 1)) or not xn.equal(c, -np.swapaxes(c, 1, 2)):
            raise ValueError("structure constants are not totally skew-symmetric")
        c.flags.writeable = False
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "basis", tuple(self.basis))

    @property
    def dim(self) -> int:
        return self.c.shape[0]

    @classmethod
    def from_brackets(
        cls,
        dim: int,
        brackets: Mapping[tuple, object],
        basis: Sequence[str] | None = None,
        field: str = xn.RATIONAL,
    ) -> "ThreeLieAlgebra":
        """Build from ``{(i, j, k): value}`` with distinct zero-based indices.

        ``value`` is a coordinate vector or a ``{l: coefficient}`` mapping.
        Non-canonical triples are reordered with the matching sign; giving the
        same triple twice with conflicting values is an error.
        """
        t = xn.zeros(dim, dim, dim, dim)
        seen = {}
        for key, value in brackets.items():
            i, j, k = key
            if len({i, j, k}) < 3:
                raise ValueError(f"bracket {key} has a repeated index")
            if not all(0 <= a < dim for a in key):
                raise ValueError(f"bracket {key} out of range for dimension {dim}")
            vec = _as_vector(dim, value)
            order = sorted(key)
            sign = _perm_sign(key, order)
            canon = tuple(order)
            vec = vec if sign > 0 else -vec
            if canon in seen and not xn.equal(seen[canon], vec):
                raise ValueError(f"conflicting values for bracket {canon}")
            seen[canon] = vec
            t[canon] = vec
        return cls(skew_expand(t), basis or default_basis(dim), field)

    @classmethod
    def abelian(cls, dim: int, field: str = xn.RATIONAL) -> "ThreeLieAlgebra":
        return cls(xn.zeros(dim, dim, dim, dim), default_basis(dim), field)

    def bracket(self, x, y, z):
        return bracket(self, x, y, z)

    def canonical_brackets(self) -> dict:
        """Nonzero brackets on canonical triples ``i < j < k``."""
        n = self.dim
        return {
            (i, j, k): self.c[i, j, k].copy()
            for i, j, k in combinations(range(n), 3)
            if not xn.is_zero(self.c[i, j, k])
        }

    def same_structure(self, other: "ThreeLieAlgebra") -> bool:
        return self.dim == other.dim and xn.equal(self.c, other.c)

    def __eq__(self, other):
        if not isinstance(other, ThreeLieAlgebra):
            return NotImplemented
        return self.field == other.field and self.same_structure(other)

    def __hash__(self):
        return hash((self.dim, self.field))

    def __repr__(self):
        return f"ThreeLieAlgebra(dim={self.dim}, field={self.field}, brackets={len(self.canonical_brackets())})"


def _perm_sign(seq, order) -> int:
    perm = [order.index(a) for a in seq]
    sign = 1
    for a in range(len(perm)):
        for b in range(a + 1, len(perm)):
            if perm[a] > perm[b]:
                sign = -sign
    return sign


def _as_vector(dim, value):
    if isinstance(value, Mapping):
        v = xn.zeros(dim)
        for idx, coeff in value.items():
            v[idx] = v[idx] + xn.scalar(coeff)
        return v
    v = xn.array(value)
    if v.shape != (dim,):
        raise ValueError(f"expected a vector of length {dim}")
    return v


def basis_vector(n: int, i: int):
    v = xn.zeros(n)
    v[i] = 1
    return v


def bracket(g: ThreeLieAlgebra, x, y, z):
    """Trilinear extension of the structure constants."""
    vs = [np.asarray(v, dtype=object) for v in (x, y, z)]
    if any(v.shape != (g.dim,) for v in vs):
        raise ValueError(f"vectors must have length {g.dim}")
    return xn.normalize(evaluate(g.c, *vs))


def transport(g: ThreeLieAlgebra, P) -> ThreeLieAlgebra:
    """The same algebra written in the basis given by the columns of ``P``."""
    P = xn.matrix(P)
    Pinv = xn.inverse(P)
    c = out(Pinv, tri(g.c, P, P, P))
    field = g.field if xn.is_real_array(c) else xn.GAUSSIAN
    return ThreeLieAlgebra(c, g.basis, field)


# ---------------------------------------------------------------------------
# fundamental identity


def check_fundamental_identity(g: ThreeLieAlgebra) -> Report:
    """[x,y,[z,w,v]] = [[x,y,z],w,v] + [z,[x,y,w],v] + [z,w,[x,y,v]].

    Both sides are skew in (x, y) and alternating in (z, w, v), so the basis
    tuples with x < y and z < w < v are exhaustive.
    """
    c = g.c
    n = g.dim
    pairs = list(combinations(range(n), 2))
    triples = list(combinations(range(n), 3))
    ck = Checker("fundamental identity")
    if not pairs or not triples:
        ck.flag("fundamental identity", True)
        return ck.done()
    P0, P1 = (np.array(a) for a in zip(*pairs))
    T0, T1, T2 = (np.array(a) for a in zip(*triples))
    cP = c[P0, P1]  # (p, m, l): [x, y, e_m]_l
    cT = c[T0, T1, T2]  # (t, m): [z, w, v]_m
    lhs = np.einsum("tm,pml->ptl", cT, cP)
    r1 = np.einsum("ptm,mtl->ptl", cP[:, T0, :], c[:, T1, T2])
    r2 = np.einsum("ptm,tml->ptl", cP[:, T1, :], c[T0, :, T2])
    r3 = np.einsum("ptm,tml->ptl", cP[:, T2, :], c[T0, T1, :])
    ck.compare(
        "fundamental identity",
        lhs,
        r1 + r2 + r3,
        decode=lambda p, t: pairs[p] + triples[t],
    )
    return ck.done()


def check_derivation_form(g: ThreeLieAlgebra) -> Report:
    """Each ad_{x,y} is a derivation of the bracket (equivalent to the FI)."""
    c = g.c
    n = g.dim
    ck = Checker("ad derivation")
    if n == 0:
        ck.flag("ad derivation", True)
        return ck.done()
    for x, y in combinations(range(n), 2):
        D = c[x, y].T  # D[l, m] = coefficient of e_l in [x, y, e_m]
        lhs = out(D, c)
        rhs = tri(c, D, None, None) + tri(c, None, D, None) + tri(c, None, None, D)
        ck.compare(f"ad(e{x + 1},e{y + 1})", lhs, rhs, decode=lambda a, b, d, x=x, y=y: (x, y, a, b, d))
    rep = ck.done()
    return Report(
        "ad derivation",
        {"ad derivation": all(rep.flags.values())},
        {"ad derivation": sum(rep.counts.values())},
        rep.witnesses,
    )


# ---------------------------------------------------------------------------
# subspaces


class Subspace:
    """A subspace of the coordinate space, kept as a reduced echelon basis."""

    def __init__(self, vectors, ambient: int):
        self.ambient = ambient
        vecs = [np.asarray(v, dtype=object) for v in vectors]
        if any(v.shape != (ambient,) for v in vecs):
            raise ValueError(f"spanning vectors must have length {ambient}")
        if vecs:
            R, pivots = xn.rref(np.stack(vecs))
        else:
            R, pivots = xn.zeros(0, ambient), []
        self._rows = R
        self._pivots = list(pivots)

    @classmethod
    def span(cls, ambient: int, indices: Sequence[int]) -> "Subspace":
        return cls([basis_vector(ambient, i) for i in indices], ambient)

    @classmethod
    def from_columns(cls, M) -> "Subspace":
        M = np.asarray(M, dtype=object)
        return cls(list(M.T), M.shape[0])

    @classmethod
    def full(cls, ambient: int) -> "Subspace":
        return cls.span(ambient, range(ambient))

    @property
    def dim(self) -> int:
        return len(self._pivots)

    @property
    def basis(self) -> np.ndarray:
        """Basis vectors as the columns of an (ambient x dim) matrix."""
        return self._rows.T.copy() if self.dim else xn.zeros(self.ambient, 0)

    def vectors(self) -> list:
        return [self._rows[i].copy() for i in range(self.dim)]

    def residual(self, V):
        """Component of each vector (last axis) not explained by the basis."""
        V = np.asarray(V, dtype=object)
        if self.dim == 0:
            return V
        coords = V[..., self._pivots]
        return V - np.tensordot(coords, self._rows, axes=([coords.ndim - 1], [0]))

    def contains(self, V) -> bool:
        """True if every vector along the last axis of ``V`` lies in the span."""
        return xn.is_zero(self.residual(V))

    def coordinates(self, V):
        """Coordinates in the echelon basis of vectors known to lie in the span."""
        return np.asarray(V, dtype=object)[..., self._pivots]

    def is_complement(self, other: "Subspace") -> bool:
        if self.ambient != other.ambient or self.dim + other.dim != self.ambient:
            return False
        vecs = self.vectors() + other.vectors()
        return not vecs or xn.rank(np.stack(vecs)) == self.ambient

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient == other.ambient and self._pivots == other._pivots and xn.equal(self._rows, other._rows)

    def __hash__(self):
        return hash((self.ambient, tuple(self._pivots)))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient})"


def brackets_of(g: ThreeLieAlgebra, U: Subspace, V: Subspace, W: Subspace):
    """All brackets of basis vectors of U, V, W as an array (u, v, w, n)."""
    return tri(g.c, U.basis, V.basis, W.basis)


def is_subalgebra(g: ThreeLieAlgebra, W: Subspace) -> bool:
    return W.contains(brackets_of(g, W, W, W))


def is_abelian_on(g: ThreeLieAlgebra, W: Subspace) -> bool:
    return xn.is_zero(brackets_of(g, W, W, W))


# ---------------------------------------------------------------------------
# Nijenhuis operators


def deformed_brackets(g: ThreeLieAlgebra, N):
    """The two deformed brackets of an endomorphism N, as tensors."""
    N = xn.matrix(N)
    c = g.c
    b1 = tri(c, N) + tri(c, None, N) + tri(c, None, None, N) - out(N, c)
    b2 = tri(c, N, N) + tri(c, None, N, N) + tri(c, N, None, N) - out(N, b1)
    return xn.normalize(b1), xn.normalize(b2)


def check_nijenhuis(g: ThreeLieAlgebra, N) -> Report:
    """[Nx, Ny, Nz] = N [x, y, z]^2_N on all basis triples."""
    N = xn.matrix(N)
    if N.shape != (g.dim, g.dim):
        raise ValueError(f"N must be {g.dim}x{g.dim}, got {N.shape}")
    _, b2 = deformed_brackets(g, N)
    ck = Checker("Nijenhuis")
    ck.compare("nijenhuis", tri(g.c, N, N, N), out(N, b2))
    return ck.done()


# ---------------------------------------------------------------------------
# constructions


def adjoint_rep(g: ThreeLieAlgebra):
    """rho(e_i, e_j) = matrix of z -> [e_i, e_j, z]."""
    from .reps import Representation

    return Representation(g, np.swapaxes(g.c, 2, 3).copy())


def direct_sum(g1: ThreeLieAlgebra, g2: ThreeLieAlgebra) -> ThreeLieAlgebra:
    if g1.field != g2.field:
        raise ValueError("direct sum needs a common scalar field")
    n1, n2 = g1.dim, g2.dim
    c = xn.zeros(n1 + n2, n1 + n2, n1 + n2, n1 + n2)
    c[:n1, :n1, :n1, :n1] = g1.c
    c[n1:, n1:, n1:, n1:] = g2.c
    basis = _disjoint_names(g1.basis, g2.basis)
    return ThreeLieAlgebra(c, basis, g1.field)


def _disjoint_names(a, b):
    if set(a) & set(b):
        return default_basis(len(a) + len(b))
    return tuple(a) + tuple(b)
