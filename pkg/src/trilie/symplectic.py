"""Symplectic 3-Lie algebras, quadratic 3-pre-Lie algebras, phase spaces and Manin triples.

On ``h + h*`` the dual basis ``(e_1*, ..., e_n*)`` follows the primal one, and
the canonical form is ``omega(x + a, y + b) = <a, y> - <b, x>``, which has the
matrix ``[[0, -I], [I, 0]]``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import exactnum as xn
from .prelie import ThreePreLie, check_prelie_axioms, cyclic_sum, left_mult, sub_adjacent
from .report import Checker, Report
from .reps import dual_representation, semidirect_product
from .tensor import pairing
from .threelie import Subspace, ThreeLieAlgebra, check_fundamental_identity, is_subalgebra

SKEW = "skew"
SYMMETRIC = "symmetric"


@dataclass(frozen=True, eq=False)
class BilForm:
    """A bilinear form B(x, y) = x^T M y with declared symmetry."""

    matrix: np.ndarray
    kind: str = SKEW

    def __post_init__(self):
        M = xn.matrix(self.matrix)
        if M.shape[0] != M.shape[1]:
            raise ValueError("form matrix must be square")
        if self.kind == SKEW:
            ok = xn.is_skew(M)
        elif self.kind == SYMMETRIC:
            ok = xn.is_symmetric(M)
        else:
            raise ValueError(f"unknown form kind {self.kind!r}")
        if not ok:
            raise ValueError(f"form matrix is not {self.kind}")
        M.flags.writeable = False
        object.__setattr__(self, "matrix", M)

    @classmethod
    def skew(cls, M) -> "BilForm":
        return cls(M, SKEW)

    @classmethod
    def symmetric(cls, M) -> "BilForm":
        return cls(M, SYMMETRIC)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def __call__(self, x, y):
        x = np.asarray(x, dtype=object)
        y = np.asarray(y, dtype=object)
        return xn.scalar(x @ self.matrix @ y)

    def is_nondegenerate(self) -> bool:
        return xn.determinant(self.matrix) != 0

    def __eq__(self, other):
        if not isinstance(other, BilForm):
            return NotImplemented
        return self.kind == other.kind and xn.equal(self.matrix, other.matrix)

    def __hash__(self):
        return hash((self.kind, self.dim))


def _matrix_of(form):
    return xn.matrix(form.matrix if isinstance(form, BilForm) else form)


def wedge(n: int, terms) -> BilForm:
    """Sum of coeff * (e_a* ^ e_b*) over ``terms = [(a, b), ...]`` or ``[(a, b, coeff), ...]``.

    Indices are zero-based; (e_a* ^ e_b*)(x, y) = x_a y_b - x_b y_a.
    """
    W = xn.zeros(n, n)
    for t in terms:
        a, b = t[0], t[1]
        coeff = t[2] if len(t) > 2 else 1
        W[a, b] += coeff
        W[b, a] -= coeff
    return BilForm.skew(W)


def canonical_form(n: int) -> BilForm:
    """The pairing form on h + h* for dim h = n."""
    W = xn.zeros(2 * n, 2 * n)
    for a in range(n):
        W[n + a, a] = 1
        W[a, n + a] = -1
    return BilForm.skew(W)


def cocycle_tensor(g: ThreeLieAlgebra, W):
    """omega([x,y,z],w) - omega([y,z,w],x) + omega([z,w,x],y) - omega([w,x,y],z) on basis 4-tuples."""
    F = pairing(g.c, W)  # F[x,y,z,w] = omega([x,y,z], w)
    return (
        F
        - np.einsum("yzwx->xyzw", F)
        + np.einsum("zwxy->xyzw", F)
        - np.einsum("wxyz->xyzw", F)
    )


def check_symplectic(g: ThreeLieAlgebra, omega) -> Report:
    """Skewness, nondegeneracy and the cocycle identity."""
    W = _matrix_of(omega)
    ck = Checker("symplectic")
    if W.shape != (g.dim, g.dim):
        raise ValueError(f"form must be {g.dim}x{g.dim}")
    ck.compare("skew", W, -W.T, value_ndim=0)
    det = xn.determinant(W) if g.dim else 1
    ck.flag("nondegenerate", det != 0, note="det = 0")
    ck.compare("cocycle", cocycle_tensor(g, W), xn.zeros(*(g.dim,) * 4), value_ndim=0)
    return ck.done()


def prelie_from_symplectic(g: ThreeLieAlgebra, omega, validate: bool = True) -> ThreePreLie:
    """The compatible product with omega({x,y,z}, w) = -omega(z, [x,y,w])."""
    W = _matrix_of(omega)
    if validate:
        rep = check_symplectic(g, W)
        if not rep:
            raise ValueError(f"form is not symplectic: {', '.join(rep.failed())}")
    # rhs[x,y,z,w] = -omega(z, [x,y,w]); the product solves d[x,y,z,:] @ W = rhs[x,y,z,:]
    rhs = -np.einsum("zl,xywl->xyzw", W, g.c)
    d = np.matmul(rhs, xn.inverse(W)) if g.dim else rhs
    return ThreePreLie(d, g.basis, g.field)


def _require_nondegenerate_skew(W):
    if not xn.is_skew(W):
        raise ValueError("form is not skew-symmetric")
    if W.shape[0] and xn.determinant(W) == 0:
        raise ValueError("form is degenerate")


def quadratic_residual(A: ThreePreLie, W):
    return pairing(A.d, W) + np.einsum("zl,xywl->xyzw", W, cyclic_sum(A.d))


def check_quadratic_prelie(A: ThreePreLie, omega) -> bool:
    """omega({x,y,z}, w) = -omega(z, [x,y,w]_C) on all basis 4-tuples."""
    W = _matrix_of(omega)
    if W.shape != (A.dim, A.dim):
        raise ValueError(f"form must be {A.dim}x{A.dim}")
    _require_nondegenerate_skew(W)
    return xn.is_zero(quadratic_residual(A, W))


def dual_names(basis) -> tuple:
    return tuple(f"{b}*" for b in basis)


def phase_space(A: ThreePreLie, validate: bool = True) -> tuple[ThreeLieAlgebra, BilForm]:
    """The semidirect product of the sub-adjacent algebra with A* through L*, and the canonical form."""
    L = left_mult(A, validate)
    g = semidirect_product(L.base, dual_representation(L, validate=False))
    g = ThreeLieAlgebra(g.c, A.basis + dual_names(A.basis), A.field)
    return g, canonical_form(A.dim)


def _half(N: int) -> int:
    if N % 2:
        raise ValueError(f"dimension {N} is odd, no splitting into h and h*")
    return N // 2


@dataclass
class PhaseSpaceVerdict:
    is_phase_space: bool
    perfect: bool
    report: Report

    def __bool__(self):
        return self.is_phase_space


def check_phase_space(g: ThreeLieAlgebra, omega) -> PhaseSpaceVerdict:
    """h = first half of the basis, h* = second half."""
    n = _half(g.dim)
    W = _matrix_of(omega)
    c = g.c
    ck = Checker("phase space")
    ck.compare("canonical form", W, canonical_form(n).matrix, value_ndim=0)
    ck.report.extend(check_symplectic(g, W), prefix="symplectic: ")
    ck.flag("h subalgebra", is_subalgebra(g, Subspace.span(2 * n, range(n))))
    ck.flag("h* subalgebra", is_subalgebra(g, Subspace.span(2 * n, range(n, 2 * n))))
    is_ps = ck.report.ok
    zero = xn.is_zero
    perfect = ck.flag("[h,h,h*] in h*", zero(c[:n, :n, n:, :n])) & ck.flag("[h*,h*,h] in h", zero(c[n:, n:, :n, n:]))
    return PhaseSpaceVerdict(is_ps, perfect, ck.done())


def check_manin_triple(A: ThreePreLie, omega) -> Report:
    """Manin triple for the splitting into the first and second halves of the basis."""
    n = _half(A.dim)
    W = _matrix_of(omega)
    _require_nondegenerate_skew(W)
    d = A.d
    zero = xn.is_zero
    ck = Checker("Manin triple")
    ck.report.extend(check_prelie_axioms(A), prefix="pre-Lie: ")
    ck.compare("quadratic", quadratic_residual(A, W), xn.zeros(*(A.dim,) * 4), value_ndim=0)
    ck.flag("A isotropic", zero(W[:n, :n]))
    ck.flag("A' isotropic", zero(W[n:, n:]))
    ck.flag("A subalgebra", zero(d[:n, :n, :n, n:]))
    ck.flag("A' subalgebra", zero(d[n:, n:, n:, :n]))
    ck.flag("{x,y,a} in A'", zero(d[:n, :n, n:, :n]))
    ck.flag("{a,x,y} in A'", zero(d[n:, :n, :n, :n]))
    ck.flag("{a,b,x} in A", zero(d[n:, n:, :n, n:]))
    ck.flag("{x,a,b} in A", zero(d[:n, n:, n:, n:]))
    return ck.done()


@dataclass
class ManinDouble:
    algebra: ThreePreLie
    axioms: Report
    mp3lie_match: bool


def mixed_product_tensor(A: ThreePreLie, B: ThreePreLie):
    """The product on A + A* assembled from A, A* = B and the four mixed formulas."""
    if A.dim != B.dim:
        raise ValueError("factors must have equal dimension")
    n = A.dim
    dA, dB = A.d, B.d
    cA, cB = cyclic_sum(dA), cyclic_sum(dB)
    d = xn.zeros(2 * n, 2 * n, 2 * n, 2 * n)
    d[:n, :n, :n, :n] = dA
    d[n:, n:, n:, n:] = dB
    # {x, y, a} = (L* - R* tau + R*)(x, y) a
    d[:n, :n, n:, n:] = -np.swapaxes(cA, 2, 3)
    # {a, x, y} = -R*(x, y) a, with its skew partner {x, a, y}
    d[n:, :n, :n, n:] = np.einsum("aijb->bija", dA)
    d[:n, n:, :n, n:] = -np.einsum("aijb->ibja", dA)
    # {a, b, x} = (L* - R* tau + R*)(a, b) x on the A* side
    d[n:, n:, :n, :n] = -np.swapaxes(cB, 2, 3)
    # {x, a, b} = -R*(a, b) x, with its skew partner {a, x, b}
    d[:n, n:, n:, :n] = np.einsum("apqb->bpqa", dB)
    d[n:, :n, n:, :n] = -np.einsum("apqb->pbqa", dB)
    return d


def mp3lie_bracket(A: ThreePreLie, B: ThreePreLie):
    """[x+a, y+b, z+c] = [x,y,z]_A + L*(a,b)z + ... + [a,b,c]_B + L*(x,y)c + ... as constants."""
    n = A.dim
    T = xn.zeros(2 * n, 2 * n, 2 * n, 2 * n)
    T[:n, :n, n:, n:] = -np.swapaxes(A.d, 2, 3)  # L*(x, y) c
    T[n:, n:, :n, :n] = -np.swapaxes(B.d, 2, 3)  # L*(a, b) z on the A* side
    c = cyclic_sum(T)
    c[:n, :n, :n, :n] = cyclic_sum(A.d)
    c[n:, n:, n:, n:] = cyclic_sum(B.d)
    return c


def manin_mixed_products(A: ThreePreLie, B: ThreePreLie) -> ManinDouble:
    """Assemble the product on A + A*; validity is reported, not assumed."""
    d = mixed_product_tensor(A, B)
    basis = A.basis + dual_names(A.basis)
    field = xn.GAUSSIAN if xn.GAUSSIAN in (A.field, B.field) else xn.RATIONAL
    double = ThreePreLie(d, basis, field)
    match = xn.equal(cyclic_sum(d), mp3lie_bracket(A, B))
    return ManinDouble(double, check_prelie_axioms(double), match)


def split_manin(A: ThreePreLie) -> tuple[ThreePreLie, ThreePreLie]:
    """The two factor products of a product on A + A*."""
    n = _half(A.dim)
    return (
        ThreePreLie(A.d[:n, :n, :n, :n], A.basis[:n], A.field),
        ThreePreLie(A.d[n:, n:, n:, n:], A.basis[n:], A.field),
    )


def check_symplectic_double(g: ThreeLieAlgebra, omega) -> bool:
    """FI plus symplectic; a convenience for iterated phase spaces."""
    return bool(check_fundamental_identity(g)) and bool(check_symplectic(g, omega))
