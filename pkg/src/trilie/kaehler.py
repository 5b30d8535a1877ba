"""Complex product, para-Kähler, pseudo-Kähler and Kähler structures, and the
Levi-Civita product of a pseudo-Riemannian metric."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import exactnum as xn
from .prelie import ThreePreLie, check_invariant_form, left_mult, sub_adjacent
from .report import Checker, Report
from .reps import semidirect_product
from .structures import Complexified, classify_complex, classify_product, complexify
from .symplectic import BilForm, _matrix_of, canonical_form, check_symplectic, phase_space, prelie_from_symplectic, split_manin
from .tensor import out, pairing, permute, tri
from .threelie import ThreeLieAlgebra, check_fundamental_identity

THIRD = Fraction(1, 3)
TWO_THIRDS = Fraction(2, 3)

VERDICT_FLAGS = (
    "complex_product",
    "perfect_complex_product",
    "para_kaehler",
    "perfect_para_kaehler",
    "pseudo_kaehler",
    "kaehler",
)


@dataclass
class KaehlerVerdict:
    """Outcome of one compatibility check; ``kind`` names the flag that decides ``ok``."""

    kind: str
    flags: dict = field(default_factory=lambda: dict.fromkeys(VERDICT_FLAGS, False))
    metric: BilForm | None = None
    signature: tuple | None = None
    report: Report | None = None

    @property
    def ok(self) -> bool:
        return self.flags[self.kind]

    def __bool__(self):
        return self.ok


def _square(g, M, name):
    M = xn.matrix(M)
    if M.shape != (g.dim, g.dim):
        raise ValueError(f"{name} must be {g.dim}x{g.dim}, got {M.shape}")
    return M


def _metric(S, field_):
    """Return (BilForm, signature) when S is symmetric and nondegenerate, else (None, None)."""
    if not xn.is_symmetric(S) or (S.shape[0] and xn.determinant(S) == 0):
        return None, None
    sig = xn.signature(S)[:2] if field_ == xn.RATIONAL and xn.is_real_array(S) else None
    return BilForm.symmetric(S), sig


# ---------------------------------------------------------------------------
# complex product structures


def check_complex_product(g: ThreeLieAlgebra, J, E) -> KaehlerVerdict:
    J = _square(g, J, "J")
    E = _square(g, E, "E")
    cc = classify_complex(g, J)
    pc = classify_product(g, E)
    ck = Checker("complex product")
    ck.report.extend(cc.report, prefix="J: ")
    ck.report.extend(pc.report, prefix="E: ")
    ck.flag("J complex", cc.complex)
    ck.flag("E product", pc.product)
    ck.compare("JE = -EJ", J @ E, -(E @ J), value_ndim=0)
    if pc.plus is not None and pc.plus.dim and pc.minus.dim:
        swaps = pc.minus.contains((J @ pc.plus.basis).T) and pc.plus.contains((J @ pc.minus.basis).T)
    else:
        swaps = False
    ck.flag("J swaps g+ and g-", swaps)
    rep = ck.done()
    v = KaehlerVerdict("complex_product", report=rep)
    v.flags["complex_product"] = cc.complex and pc.product and rep.flags["JE = -EJ"]
    v.flags["perfect_complex_product"] = v.flags["complex_product"] and pc.perfect
    return v


def check_phi_condition(g: ThreeLieAlgebra, J, P) -> Report:
    """The integrability condition on phi, with J standing in for phi, on triples from span(P)."""
    c = g.c
    JP = J @ P
    ck = Checker("phi condition")
    lhs = out(J, tri(c, P, P, P))
    rhs = (
        -tri(c, JP, JP, JP)
        + tri(c, JP, P, P)
        + tri(c, P, JP, P)
        + tri(c, P, P, JP)
        + out(J, tri(c, JP, JP, P) + tri(c, P, JP, JP) + tri(c, JP, P, JP))
    )
    ck.compare("phi", lhs, rhs)
    return ck.done()


def complex_product_from_phi(g: ThreeLieAlgebra, E, phi):
    """J(x + a) = phi(x) - phi^{-1}(a) for x in g+, a in g-.

    ``phi`` is an n x n matrix whose restriction to g+ is an isomorphism onto g-.
    """
    E = _square(g, E, "E")
    phi = _square(g, phi, "phi")
    pc = classify_product(g, E)
    if not (pc.perfect and pc.paracomplex):
        raise ValueError("E is not a perfect paracomplex structure")
    P, M = pc.plus.basis, pc.minus.basis
    phiP = phi @ P
    if not pc.minus.contains(phiP.T):
        raise ValueError("phi does not map g+ into g-")
    Phi = xn.solve_linear(M, phiP)
    if Phi is None or xn.determinant(Phi) == 0:
        raise ValueError("phi is not an isomorphism from g+ onto g-")
    basis = np.concatenate([P, M], axis=1)
    images = np.concatenate([phiP, -(P @ xn.inverse(Phi))], axis=1)
    J = xn.normalize(images @ xn.inverse(basis))
    rep = check_phi_condition(g, J, P)
    if not rep:
        raise ValueError("phi fails the integrability condition")
    return J


# ---------------------------------------------------------------------------
# para-Kähler structures


def check_para_kaehler(g: ThreeLieAlgebra, omega, E) -> KaehlerVerdict:
    W = _square(g, _matrix_of(omega), "omega")
    E = _square(g, E, "E")
    sym = check_symplectic(g, W)
    pc = classify_product(g, E)
    ck = Checker("para-Kähler")
    ck.report.extend(sym, prefix="omega: ")
    ck.report.extend(pc.report, prefix="E: ")
    ck.flag("paracomplex", pc.paracomplex)
    ck.compare("omega(Ex,Ey) = -omega(x,y)", E.T @ W @ E, -W, value_ndim=0)
    if pc.plus is not None:
        ck.flag("g+ isotropic", xn.is_zero(pc.plus.basis.T @ W @ pc.plus.basis))
        ck.flag("g- isotropic", xn.is_zero(pc.minus.basis.T @ W @ pc.minus.basis))
    S = xn.normalize(W @ E)
    metric, sig = _metric(S, g.field)
    ck.flag("metric symmetric nondegenerate", metric is not None)
    rep = ck.done()
    v = KaehlerVerdict("para_kaehler", metric=metric, signature=sig, report=rep)
    v.flags["para_kaehler"] = sym.ok and pc.paracomplex and rep.flags["omega(Ex,Ey) = -omega(x,y)"]
    v.flags["perfect_para_kaehler"] = v.flags["para_kaehler"] and pc.perfect
    return v


# ---------------------------------------------------------------------------
# Levi-Civita product


@dataclass(frozen=True, eq=False)
class LeviCivita:
    """nabla[i, j, k, l] = coefficient of e_l in nabla_{e_i, e_j} e_k."""

    nabla: np.ndarray
    basis: tuple
    field: str = xn.RATIONAL

    def as_prelie(self) -> ThreePreLie:
        return ThreePreLie(self.nabla, self.basis, self.field)


def levi_civita(g: ThreeLieAlgebra, S) -> LeviCivita:
    """3 S(nabla_{x,y} z, w) = S([x,y,z],w) - 2S([x,y,w],z) + S([y,z,w],x) + S([z,x,w],y)."""
    S = _square(g, _matrix_of(S), "S")
    if not xn.is_symmetric(S):
        raise ValueError("metric is not symmetric")
    if g.dim and xn.determinant(S) == 0:
        raise ValueError("metric is degenerate")
    F = pairing(g.c, S)  # F[x,y,z,w] = S([x,y,z], w)
    rhs = (
        F
        - 2 * np.einsum("xywz->xyzw", F)
        + np.einsum("yzwx->xyzw", F)
        + np.einsum("zxwy->xyzw", F)
    )
    nabla = np.matmul(rhs, xn.inverse(S)) * THIRD if g.dim else rhs
    return LeviCivita(xn.normalize(nabla), g.basis, g.field)


def check_levi_civita(g: ThreeLieAlgebra, lc: LeviCivita) -> Report:
    """Skew in the first two slots, and the cyclic sum is the bracket."""
    t = lc.nabla
    ck = Checker("Levi-Civita product")
    ck.compare("skew", t, -np.swapaxes(t, 0, 1))
    ck.compare("cyclic", t + permute(t, (1, 2, 0)) + permute(t, (2, 0, 1)), g.c)
    return ck.done()


def _cyc(t, spec):
    """Reindex a (a, b, c, l) tensor, e.g. spec 'bcal' gives u[a,b,c] = t[b,c,a]."""
    return np.einsum(f"{spec}->abcl", t)


def _is_standard_phase_space(W, E) -> bool:
    N = W.shape[0]
    if N % 2:
        return False
    n = N // 2
    return xn.equal(W, canonical_form(n).matrix) and xn.equal(E, xn.diag([1] * n + [-1] * n))


def para_kaehler_mixed_formulas(g: ThreeLieAlgebra, omega, E, phase_space_forms: bool | None = None) -> Report:
    """Compare the Levi-Civita product of S = omega(., E.) with the induced pre-Lie product.

    On g+ and g- the two agree; the mixed formulas need E perfect, otherwise the
    report is marked not applicable. The dual-operator forms are checked when the
    algebra is written as h + h* with the canonical form and E = diag(I, -I), or
    when ``phase_space_forms`` forces it.
    """
    W = _square(g, _matrix_of(omega), "omega")
    E = _square(g, E, "E")
    v = check_para_kaehler(g, W, E)
    if not v.flags["para_kaehler"]:
        raise ValueError("not a para-Kähler structure")
    ck = Checker("para-Kähler Levi-Civita formulas")
    if not v.flags["perfect_para_kaehler"]:
        ck.note("E is not perfect; the mixed formulas do not apply")
        rep = ck.done()
        rep.applicable = False
        return rep
    pc = classify_product(g, E)
    P, M = pc.plus.basis, pc.minus.basis
    nab = levi_civita(g, v.metric).nabla
    d = prelie_from_symplectic(g, W, validate=False).d

    def N(X, Y, Z):
        return tri(nab, X, Y, Z)

    def D(X, Y, Z):
        return tri(d, X, Y, Z)

    ck.compare("pure g+", N(P, P, P), D(P, P, P))
    ck.compare("pure g-", N(M, M, M), D(M, M, M))
    ck.compare("conn1", N(P, P, M), D(P, P, M) + TWO_THIRDS * (_cyc(D(P, M, P), "bcal") + _cyc(D(M, P, P), "cabl")))
    ck.compare("conn2", N(M, P, P), -THIRD * D(M, P, P) + TWO_THIRDS * _cyc(D(P, M, P), "cabl"))
    ck.compare("conn3", N(M, M, P), D(M, M, P) + TWO_THIRDS * (_cyc(D(M, P, M), "bcal") + _cyc(D(P, M, M), "cabl")))
    ck.compare("conn4", N(P, M, M), -THIRD * D(P, M, M) + TWO_THIRDS * _cyc(D(M, P, M), "cabl"))

    use = _is_standard_phase_space(W, E) if phase_space_forms is None else phase_space_forms
    if use:
        if not _is_standard_phase_space(W, E):
            raise ValueError("dual-operator forms need the canonical form and E = diag(I, -I)")
        n = g.dim // 2
        A, B = split_manin(ThreePreLie(d, g.basis, g.field))
        dA, dB = A.d, B.d
        z = xn.zeros(n, n, n, n)

        def block(lower, upper):
            return np.concatenate([lower, upper], axis=3)

        # conn11: (L*(x1,x2) - R*(x2,x1)/3 + R*(x1,x2)/3) a1, values in h*
        v11 = -np.einsum("ijab->ijba", dA) + THIRD * np.einsum("ajib->ijba", dA) - THIRD * np.einsum("aijb->ijba", dA)
        ck.compare("conn11", nab[:n, :n, n:, :], block(z, v11))
        # conn22: (R*(x1,x2)/3 + 2R*(x2,x1)/3) a1
        v22 = -THIRD * np.einsum("aijb->bija", dA) - TWO_THIRDS * np.einsum("ajib->bija", dA)
        ck.compare("conn22", nab[n:, :n, :n, :], block(z, v22))
        # conn33: (L*(a1,a2) - R*(a2,a1)/3 + R*(a1,a2)/3) x1, values in h
        v33 = -np.einsum("pqab->pqba", dB) + THIRD * np.einsum("aqpb->pqba", dB) - THIRD * np.einsum("apqb->pqba", dB)
        ck.compare("conn33", nab[n:, n:, :n, :], block(v33, z))
        # conn44: (R*(a1,a2)/3 + 2R*(a2,a1)/3) x1
        v44 = -THIRD * np.einsum("apqb->bpqa", dB) - TWO_THIRDS * np.einsum("aqpb->bpqa", dB)
        ck.compare("conn44", nab[:n, n:, n:, :], block(v44, z))
    return ck.done()


def check_para_kaehler_connection(g: ThreeLieAlgebra, omega, E) -> Report:
    """E nabla_{x,y} z = nabla_{Ex,Ey} Ez for the metric omega(., E.)."""
    E = _square(g, E, "E")
    S = xn.normalize(_matrix_of(omega) @ E)
    nab = levi_civita(g, S).nabla
    ck = Checker("para-Kähler connection")
    ck.compare("E-invariance", out(E, nab), tri(nab, E, E, E))
    return ck.done()


# ---------------------------------------------------------------------------
# pseudo-Kähler structures


def check_pseudo_kaehler(g: ThreeLieAlgebra, omega, J) -> KaehlerVerdict:
    W = _square(g, _matrix_of(omega), "omega")
    J = _square(g, J, "J")
    sym = check_symplectic(g, W)
    if g.dim % 2:
        cc_ok, cc_rep = False, None
    else:
        cc = classify_complex(g, J)
        cc_ok, cc_rep = cc.complex, cc.report
    ck = Checker("pseudo-Kähler")
    ck.report.extend(sym, prefix="omega: ")
    if cc_rep is not None:
        ck.report.extend(cc_rep, prefix="J: ")
    ck.flag("complex", cc_ok)
    ck.compare("omega(Jx,Jy) = omega(x,y)", J.T @ W @ J, W, value_ndim=0)
    S = xn.normalize(W @ J)
    metric, sig = _metric(S, g.field)
    ck.flag("metric symmetric nondegenerate", metric is not None)
    rep = ck.done()
    v = KaehlerVerdict("pseudo_kaehler", metric=metric, signature=sig, report=rep)
    v.flags["pseudo_kaehler"] = sym.ok and cc_ok and rep.flags["omega(Jx,Jy) = omega(x,y)"]
    v.flags["kaehler"] = v.flags["pseudo_kaehler"] and sig is not None and xn.is_positive_definite(S)
    return v


def complexify_pseudo_kaehler(g: ThreeLieAlgebra, omega, J) -> tuple[Complexified, BilForm, np.ndarray]:
    """(g_C, omega_C, E = -i J_C)."""
    W = _matrix_of(omega)
    J = xn.matrix(J)
    if not check_pseudo_kaehler(g, W, J):
        raise ValueError("input is not pseudo-Kähler")
    gc = complexify(g)
    E = xn.normalize(-xn.I * J)
    return gc, BilForm.skew(W), E


def realify_matrix(M):
    """P + iQ acting on C^n as the real matrix [[P, -Q], [Q, P]] on (real parts, imaginary parts)."""
    M = xn.matrix(M)
    P, Q = xn.re_part(M), xn.im_part(M)
    return xn.normalize(np.block([[P, -Q], [Q, P]]))


def realify_algebra(g: ThreeLieAlgebra) -> ThreeLieAlgebra:
    """The real algebra on basis (e_1..e_n, i e_1..i e_n)."""
    n = g.dim
    c = g.c
    r = xn.zeros(2 * n, 2 * n, 2 * n, 2 * n)
    powers = [1, xn.I, -1, -xn.I]
    for a in (0, 1):
        for b in (0, 1):
            for s in (0, 1):
                v = c * powers[a + b + s]
                sl = (slice(a * n, (a + 1) * n), slice(b * n, (b + 1) * n), slice(s * n, (s + 1) * n))
                r[sl + (slice(0, n),)] = xn.re_part(v)
                r[sl + (slice(n, 2 * n),)] = xn.im_part(v)
    basis = tuple(g.basis) + tuple(f"i{b}" for b in g.basis)
    return ThreeLieAlgebra(r, basis, xn.RATIONAL)


def realify_para_kaehler(g: ThreeLieAlgebra, omega, E) -> tuple[ThreeLieAlgebra, BilForm, np.ndarray]:
    """(g_R, Re omega, J = iE realified)."""
    W = _matrix_of(omega)
    E = xn.matrix(E)
    if not check_para_kaehler(g, W, E):
        raise ValueError("input is not para-Kähler")
    Wr, Wi = xn.re_part(W), xn.im_part(W)
    WR = xn.normalize(np.block([[Wr, -Wi], [-Wi, -Wr]]))
    J = realify_matrix(xn.I * E)
    return realify_algebra(g), BilForm.skew(WR), J


# ---------------------------------------------------------------------------
# constructions from 3-pre-Lie algebras


@dataclass
class MetricStructures:
    algebra: ThreeLieAlgebra
    omega: BilForm
    J: np.ndarray
    E: np.ndarray
    verdicts: dict


def metric_prelie_structures(A: ThreePreLie, B) -> MetricStructures:
    """Phase space of A with E(x+a) = x - a and J(x+a) = -B#^{-1}(a) + B#(x)."""
    Bm = xn.matrix(getattr(B, "matrix", B))
    if not check_invariant_form(A, Bm):
        raise ValueError("form is not invariant")
    n = A.dim
    g, omega = phase_space(A)
    E = xn.diag([1] * n + [-1] * n)
    Z = xn.zeros(n, n)
    J = xn.normalize(np.block([[Z, -xn.inverse(Bm)], [Bm, Z]]))
    pk = check_pseudo_kaehler(g, omega, -J)
    verdicts = {
        "complex_product": check_complex_product(g, J, E),
        "para_kaehler": check_para_kaehler(g, omega, E),
        "pseudo_kaehler": pk,
    }
    verdicts["kaehler"] = pk.flags["kaehler"]
    verdicts["B positive definite"] = xn.is_positive_definite(Bm) if xn.is_real_array(Bm) else False
    return MetricStructures(g, omega, J, E, verdicts)


def aff_complex_product(A: ThreePreLie) -> tuple[ThreeLieAlgebra, np.ndarray, np.ndarray]:
    """aff(A) = A^c semidirect A through L, with J(x, y) = (-y, x) and E(x, y) = (x, -y)."""
    L = left_mult(A)
    g = semidirect_product(L.base, L)
    n = A.dim
    I, Z = xn.identity(n), xn.zeros(n, n)
    J = xn.normalize(np.block([[Z, -I], [I, Z]]))
    E = xn.diag([1] * n + [-1] * n)
    return g, J, E
