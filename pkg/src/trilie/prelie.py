"""3-pre-Lie algebras, their representations, O-operators and invariant forms.

A 3-pre-Lie product ``{e_i, e_j, e_k} = sum_l d[i, j, k, l] e_l`` is skew in its
first two slots only. Operator products in the representation identities are
compositions that apply the right factor first, so ``XY`` is the matrix
product ``X @ Y``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Mapping, Sequence

import numpy as np

from . import exactnum as xn
from .report import Checker, Report, default_basis
from .reps import Representation, check_representation, semidirect_product
from .tensor import out, pairing, permute, tri
from .threelie import ThreeLieAlgebra, _as_vector, _check_field, _disjoint_names


@dataclass(frozen=True, eq=False)
class ThreePreLie:
    """Structure constants of a ternary product; the axioms are checked separately."""

    d: np.ndarray
    basis: tuple
    field: str = xn.RATIONAL

    def __post_init__(self):
        d = xn.normalize(self.d)
        n = d.shape[0]
        if d.shape != (n, n, n, n):
            raise ValueError(f"product constants must have shape (n,n,n,n), got {d.shape}")
        if len(self.basis) != n:
            raise ValueError("basis length does not match dimension")
        _check_field(self.field, d)
        d.flags.writeable = False
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "basis", tuple(self.basis))

    @property
    def dim(self) -> int:
        return self.d.shape[0]

    @classmethod
    def from_products(
        cls,
        dim: int,
        products: Mapping[tuple, object],
        basis: Sequence[str] | None = None,
        field: str = xn.RATIONAL,
    ) -> "ThreePreLie":
        """Build from ``{(i, j, k): value}``; the (j, i, k) entry gets the negative."""
        t = xn.zeros(dim, dim, dim, dim)
        seen = {}
        for key, value in products.items():
            i, j, k = key
            if i == j:
                raise ValueError(f"product {key} repeats its first two indices")
            if not all(0 <= a < dim for a in key):
                raise ValueError(f"product {key} out of range for dimension {dim}")
            vec = _as_vector(dim, value)
            if i > j:
                i, j, vec = j, i, -vec
            if (i, j, k) in seen and not xn.equal(seen[(i, j, k)], vec):
                raise ValueError(f"conflicting values for product {(i, j, k)}")
            seen[(i, j, k)] = vec
            t[i, j, k] = vec
            t[j, i, k] = -vec
        return cls(t, basis or default_basis(dim), field)

    @classmethod
    def abelian(cls, dim: int, field: str = xn.RATIONAL) -> "ThreePreLie":
        return cls(xn.zeros(dim, dim, dim, dim), default_basis(dim), field)

    def product(self, x, y, z):
        from .tensor import evaluate

        return xn.normalize(evaluate(self.d, *(np.asarray(v, dtype=object) for v in (x, y, z))))

    def nonzero_products(self) -> dict:
        """Nonzero products on index triples with i < j."""
        n = self.dim
        return {
            (i, j, k): self.d[i, j, k].copy()
            for i, j in combinations(range(n), 2)
            for k in range(n)
            if not xn.is_zero(self.d[i, j, k])
        }

    def __eq__(self, other):
        if not isinstance(other, ThreePreLie):
            return NotImplemented
        return self.field == other.field and self.dim == other.dim and xn.equal(self.d, other.d)

    def __hash__(self):
        return hash((self.dim, self.field))

    def __repr__(self):
        return f"ThreePreLie(dim={self.dim}, field={self.field}, products={len(self.nonzero_products())})"


def cyclic_sum(d):
    """[x,y,z]_C = {x,y,z} + {y,z,x} + {z,x,y} as a tensor."""
    return d + permute(d, (1, 2, 0)) + permute(d, (2, 0, 1))


def check_prelie_axioms(A: ThreePreLie) -> Report:
    """Skew-symmetry in the first two slots and both five-variable identities.

    (1) {x1,x2,{x3,x4,x5}} = {[x1,x2,x3]_C,x4,x5} + {x3,[x1,x2,x4]_C,x5} + {x3,x4,{x1,x2,x5}}
    (2) {[x1,x2,x3]_C,x4,x5} = {x1,x2,{x3,x4,x5}} + {x2,x3,{x1,x4,x5}} + {x3,x1,{x2,x4,x5}}

    Given skew-symmetry, (1) is skew in (x1,x2) and in (x3,x4) and (2) is
    alternating in (x1,x2,x3), so canonical index patterns are exhaustive.
    """
    d = A.d
    n = A.dim
    ck = Checker("3-pre-Lie axioms")
    ck.compare("skew in first two slots", d, -np.swapaxes(d, 0, 1))
    pairs = list(combinations(range(n), 2))
    triples = list(combinations(range(n), 3))
    c = cyclic_sum(d)
    if pairs:
        P0, P1 = (np.array(a) for a in zip(*pairs))
        dP = d[P0, P1]  # (p, k, l): {x_a, x_b, e_k}_l
        cP = c[P0, P1]  # (p, k, l): [x_a, x_b, e_k]_C
        lhs = np.einsum("qfm,pml->pqfl", dP, dP)
        r1 = np.einsum("pqm,mqfl->pqfl", cP[:, P0, :], d[:, P1, :, :])
        r2 = np.einsum("pqm,qmfl->pqfl", cP[:, P1, :], d[P0, :, :, :])
        r3 = np.einsum("pfm,qml->pqfl", dP, dP)
        ck.compare("identity 1", lhs, r1 + r2 + r3, decode=lambda p, q, f: pairs[p] + pairs[q] + (f,))
    else:
        ck.flag("identity 1", True)
    if triples:
        T0, T1, T2 = (np.array(a) for a in zip(*triples))
        cT = c[T0, T1, T2]  # (t, m)
        lhs = np.einsum("tm,mabl->tabl", cT, d)
        r1 = np.einsum("tabm,tml->tabl", d[T2], d[T0, T1])
        r2 = np.einsum("tabm,tml->tabl", d[T0], d[T1, T2])
        r3 = np.einsum("tabm,tml->tabl", d[T1], d[T2, T0])
        ck.compare("identity 2", lhs, r1 + r2 + r3, decode=lambda t, a, b: triples[t] + (a, b))
    else:
        ck.flag("identity 2", True)
    return ck.done()


def sub_adjacent(A: ThreePreLie, validate: bool = True) -> ThreeLieAlgebra:
    """The 3-Lie algebra with bracket [x,y,z]_C = {x,y,z} + {y,z,x} + {z,x,y}."""
    if validate:
        rep = check_prelie_axioms(A)
        if not rep:
            raise ValueError(f"not a 3-pre-Lie algebra: {', '.join(rep.failed())}")
    return ThreeLieAlgebra(cyclic_sum(A.d), A.basis, A.field)


def left_mult(A: ThreePreLie, validate: bool = True) -> Representation:
    """L(x, y) z = {x, y, z} as a representation of the sub-adjacent algebra."""
    return Representation(sub_adjacent(A, validate), np.swapaxes(A.d, 2, 3).copy())


def right_mult(A: ThreePreLie) -> np.ndarray:
    """R(x, y) z = {z, x, y}; ``R[i, j]`` is the matrix of R(e_i, e_j)."""
    return np.einsum("kijl->ijlk", A.d).copy()


# ---------------------------------------------------------------------------
# representations


@dataclass(frozen=True, eq=False)
class PreLieRep:
    """A pair (rho, mu): rho[i, j] skew in (i, j), mu[i, j] on all ordered pairs."""

    base: ThreePreLie
    rho: np.ndarray
    mu: np.ndarray

    def __post_init__(self):
        rho = xn.normalize(self.rho)
        mu = xn.normalize(self.mu)
        n = self.base.dim
        if rho.ndim != 4 or rho.shape[:2] != (n, n) or rho.shape[2] != rho.shape[3]:
            raise ValueError(f"rho must have shape ({n},{n},m,m)")
        if mu.shape != rho.shape:
            raise ValueError("rho and mu must have the same shape")
        if not xn.equal(rho, -np.swapaxes(rho, 0, 1)):
            raise ValueError("rho is not skew-symmetric")
        rho.flags.writeable = False
        mu.flags.writeable = False
        object.__setattr__(self, "rho", rho)
        object.__setattr__(self, "mu", mu)

    @property
    def vdim(self) -> int:
        return self.rho.shape[2]

    @classmethod
    def regular(cls, A: ThreePreLie) -> "PreLieRep":
        """The pair (L, R) on A itself."""
        return cls(A, np.swapaxes(A.d, 2, 3).copy(), right_mult(A))

    @classmethod
    def from_rho(cls, A: ThreePreLie, rho) -> "PreLieRep":
        """The pair (rho, 0)."""
        rho = np.asarray(rho, dtype=object)
        return cls(A, rho, xn.zeros(*rho.shape))

    def __eq__(self, other):
        if not isinstance(other, PreLieRep):
            return NotImplemented
        return self.base == other.base and xn.equal(self.rho, other.rho) and xn.equal(self.mu, other.mu)

    def __hash__(self):
        return hash((self.base.dim, self.vdim))


_SLOTS = "ijkl"


class _Products:
    """Tables of products X(p, q) Y(r, s) of operator pairs, each computed once."""

    def __init__(self, **ops):
        self.ops = ops
        self.tables = {}

    def __call__(self, x, a, y, b):
        """out[x1..x4] = X(x_a0, x_a1) Y(x_b0, x_b1), arguments given as slot numbers 1..4."""
        if (x, y) not in self.tables:
            self.tables[x, y] = np.einsum("pqac,rscb->pqrsab", self.ops[x], self.ops[y])
        sa = "".join(_SLOTS[s - 1] for s in a)
        sb = "".join(_SLOTS[s - 1] for s in b)
        return np.einsum(f"{sa}{sb}ab->ijklab", self.tables[x, y])


def check_prelie_representation(pr: PreLieRep) -> Report:
    """rho is a representation of the sub-adjacent algebra, plus the four
    compatibility identities between rho and mu on all basis 4-tuples."""
    A = pr.base
    d = A.d
    c = cyclic_sum(d)
    rho, mu = pr.rho, pr.mu
    ck = Checker("3-pre-Lie representation")
    rep = check_representation(Representation(ThreeLieAlgebra(c, A.basis, A.field), rho))
    ck.report.extend(rep, prefix="rho: ")
    if A.dim == 0 or pr.vdim == 0:
        for name in ("rep1", "rep2", "rep3", "rep4"):
            ck.flag(name, True)
        return ck.done()
    mu_c = np.einsum("ijkm,mlab->ijklab", c, mu)  # mu([x1,x2,x3]_C, x4)
    mu_3_124 = np.einsum("ijlm,kmab->ijklab", d, mu)  # mu(x3, {x1,x2,x4})
    mu_1_234 = np.einsum("jklm,imab->ijklab", d, mu)  # mu(x1, {x2,x3,x4})
    mu_2_134 = np.einsum("iklm,jmab->ijklab", d, mu)  # mu(x2, {x1,x3,x4})
    pp = _Products(rho=rho, mu=mu)

    lhs1 = pp("rho", (1, 2), "mu", (3, 4))
    rhs1 = (
        pp("mu", (3, 4), "rho", (1, 2))
        - pp("mu", (3, 4), "mu", (2, 1))
        + pp("mu", (3, 4), "mu", (1, 2))
        + mu_c
        + mu_3_124
    )
    ck.compare("rep1", lhs1, rhs1, value_ndim=2)

    rhs2 = pp("rho", (1, 2), "mu", (3, 4)) + pp("rho", (2, 3), "mu", (1, 4)) + pp("rho", (3, 1), "mu", (2, 4))
    ck.compare("rep2", mu_c, rhs2, value_ndim=2)

    rhs3 = (
        pp("mu", (3, 4), "mu", (1, 2))
        + pp("mu", (3, 4), "rho", (1, 2))
        - pp("mu", (3, 4), "mu", (2, 1))
        - pp("mu", (2, 4), "mu", (1, 3))
        - pp("mu", (2, 4), "rho", (1, 3))
        + pp("mu", (2, 4), "mu", (3, 1))
        + pp("rho", (2, 3), "mu", (1, 4))
    )
    ck.compare("rep3", mu_1_234, rhs3, value_ndim=2)

    lhs4 = pp("mu", (3, 4), "rho", (1, 2))
    rhs4 = (
        pp("mu", (3, 4), "mu", (2, 1))
        - pp("mu", (3, 4), "mu", (1, 2))
        + pp("rho", (1, 2), "mu", (3, 4))
        - mu_2_134
        + mu_1_234
    )
    ck.compare("rep4", lhs4, rhs4, value_ndim=2)
    return ck.done()


def _require_rep(pr: PreLieRep):
    rep = check_prelie_representation(pr)
    if not rep:
        raise ValueError(f"not a representation: {', '.join(rep.failed())}")


def semidirect_prelie(pr: PreLieRep, validate: bool = True) -> ThreePreLie:
    """{x1+v1, x2+v2, x3+v3} = {x1,x2,x3} + rho(x1,x2)v3 + mu(x2,x3)v1 - mu(x1,x3)v2."""
    if validate:
        _require_rep(pr)
    A = pr.base
    n, m = A.dim, pr.vdim
    N = n + m
    d = xn.zeros(N, N, N, N)
    d[:n, :n, :n, :n] = A.d
    rT = np.swapaxes(pr.rho, 2, 3)  # rT[i, j, a, b] = coefficient of v_b in rho(e_i, e_j) v_a
    mT = np.swapaxes(pr.mu, 2, 3)
    d[:n, :n, n:, n:] = rT
    d[n:, :n, :n, n:] = np.transpose(mT, (2, 0, 1, 3))  # {v_a, x_j, x_k} = mu(x_j, x_k) v_a
    d[:n, n:, :n, n:] = -np.transpose(mT, (0, 2, 1, 3))  # {x_i, v_a, x_k} = -mu(x_i, x_k) v_a
    basis = _disjoint_names(A.basis, tuple(f"v{k + 1}" for k in range(m)))
    return ThreePreLie(d, basis, A.field)


def combined_rep(pr: PreLieRep, validate: bool = True) -> Representation:
    """(rho - mu tau + mu)(x, y) = rho(x, y) - mu(y, x) + mu(x, y), on the sub-adjacent algebra."""
    if validate:
        _require_rep(pr)
    g = ThreeLieAlgebra(cyclic_sum(pr.base.d), pr.base.basis, pr.base.field)
    return Representation(g, pr.rho - np.swapaxes(pr.mu, 0, 1) + pr.mu)


def _star(X):
    return -np.swapaxes(X, 2, 3)


def dual_prelie_rep(pr: PreLieRep, validate: bool = True) -> PreLieRep:
    """(rho* - mu* tau + mu*, -mu*) on the dual space, with X* = -X^T."""
    if validate:
        _require_rep(pr)
    rs, ms = _star(pr.rho), _star(pr.mu)
    return PreLieRep(pr.base, rs - np.swapaxes(ms, 0, 1) + ms, -ms)


def conjugate_prelie_rep(pr: PreLieRep, P) -> PreLieRep:
    """The same representation in the basis of V given by the columns of P."""
    P = xn.matrix(P)
    Pinv = xn.inverse(P)
    return PreLieRep(pr.base, np.matmul(np.matmul(Pinv, pr.rho), P), np.matmul(np.matmul(Pinv, pr.mu), P))


# ---------------------------------------------------------------------------
# O-operators


def check_O_operator(g: ThreeLieAlgebra, r: Representation, T) -> Report:
    """[Tu,Tv,Tw] = T(rho(Tu,Tv)w + rho(Tv,Tw)u + rho(Tw,Tu)v) on basis triples of V."""
    T = xn.matrix(T)
    if T.shape != (g.dim, r.vdim):
        raise ValueError(f"T must be {g.dim}x{r.vdim}, got {T.shape}")
    if r.base.dim != g.dim or not xn.equal(r.base.c, g.c):
        raise ValueError("representation belongs to a different algebra")
    lhs = tri(g.c, T, T, T)
    # R2[u, v] = rho(Tu, Tv)
    R2 = np.tensordot(T, np.tensordot(T, r.rho, axes=([0], [1])), axes=([0], [1]))
    s = np.einsum("uvaw->uvwa", R2) + np.einsum("vwau->uvwa", R2) + np.einsum("wuav->uvwa", R2)
    ck = Checker("O-operator")
    ck.compare("O-operator", lhs, out(T, s))
    return ck.done()


def compatible_prelie_from_O(g: ThreeLieAlgebra, r: Representation, T, validate: bool = True) -> ThreePreLie:
    """{x, y, z} = T rho(x, y) T^{-1} z for an invertible O-operator T."""
    T = xn.matrix(T)
    if T.shape[0] != T.shape[1] or xn.determinant(T) == 0:
        raise ValueError("T must be square and invertible")
    if validate:
        rep = check_O_operator(g, r, T)
        if not rep:
            raise ValueError("T is not an O-operator")
    Tinv = xn.inverse(T)
    M = np.matmul(np.matmul(T, r.rho), Tinv)  # M[x, y] = T rho(x, y) T^{-1}
    return ThreePreLie(np.swapaxes(M, 2, 3), g.basis, g.field)


# ---------------------------------------------------------------------------
# invariant forms


def _invariance_residual(d, B):
    return pairing(d, B) + np.einsum("zl,xywl->xyzw", B, d)


def check_invariant_form(A: ThreePreLie, B) -> bool:
    """B({x,y,z}, w) = -B(z, {x,y,w}) for a symmetric nondegenerate B."""
    B = xn.matrix(getattr(B, "matrix", B))
    if B.shape != (A.dim, A.dim):
        raise ValueError("form has the wrong size")
    if not xn.is_symmetric(B):
        raise ValueError("form is not symmetric")
    if xn.determinant(B) == 0:
        raise ValueError("form is degenerate")
    return xn.is_zero(_invariance_residual(A.d, B))


def invariant_forms(A: ThreePreLie) -> list:
    """Basis of all symmetric B (possibly degenerate) satisfying the invariance identity."""
    n = A.dim
    cols = []
    units = []
    for a in range(n):
        for b in range(a, n):
            E = xn.zeros(n, n)
            E[a, b] = 1
            E[b, a] = 1
            units.append(E)
            cols.append(_invariance_residual(A.d, E).reshape(-1))
    if not cols:
        return []
    M = np.stack(cols, axis=1)
    forms = []
    for v in xn.kernel_basis(M):
        B = xn.zeros(n, n)
        for coeff, E in zip(v, units):
            if coeff != 0:
                B = B + coeff * E
        forms.append(xn.normalize(B))
    return forms
