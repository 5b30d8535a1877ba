"""Product and complex structures, their four special integrability conditions,
complexification and the J-bracket.

Every named condition is checked as an identity on all basis triples. The
decomposition facts that follow from each condition are recomputed from the
eigenspaces and any disagreement is recorded in ``table_violations``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import exactnum as xn
from .prelie import ThreePreLie, check_prelie_axioms, compatible_prelie_from_O
from .report import Checker, Report
from .tensor import out, tri
from .threelie import (
    Subspace,
    ThreeLieAlgebra,
    adjoint_rep,
    brackets_of,
    is_abelian_on,
    is_subalgebra,
)


def _pullbacks(c, M):
    """All seven ways of applying M to a nonempty set of input slots, keyed by slot string."""
    m1 = tri(c, M)
    m2 = tri(c, None, M)
    m12 = tri(m1, None, M)
    return {
        "MII": m1,
        "IMI": m2,
        "IIM": tri(c, None, None, M),
        "MMI": m12,
        "IMM": tri(m2, None, None, M),
        "MIM": tri(m1, None, None, M),
        "MMM": tri(m12, None, None, M),
    }


def _endo(g: ThreeLieAlgebra, M, name: str):
    M = xn.matrix(M)
    if M.shape != (g.dim, g.dim):
        raise ValueError(f"{name} must be {g.dim}x{g.dim}, got {M.shape}")
    if g.field == xn.RATIONAL and not xn.is_real_array(M):
        raise ValueError(f"{name} has Gaussian entries but the algebra is rational")
    return M


def eigenspace(M, value) -> Subspace:
    n = M.shape[0]
    return Subspace(xn.kernel_basis(M - value * xn.identity(n)), n)


def decomposition_facts(g: ThreeLieAlgebra, P: Subspace, M: Subspace, plus="g+", minus="g-") -> dict:
    """Subalgebra, abelian and mixed-bracket containment facts for a splitting g = P + M."""
    ppm = brackets_of(g, P, P, M)
    mmp = brackets_of(g, M, M, P)
    return {
        f"{plus} subalgebra": is_subalgebra(g, P),
        f"{minus} subalgebra": is_subalgebra(g, M),
        f"{plus} abelian": is_abelian_on(g, P),
        f"{minus} abelian": is_abelian_on(g, M),
        f"[{plus},{plus},{minus}] = 0": xn.is_zero(ppm),
        f"[{minus},{minus},{plus}] = 0": xn.is_zero(mmp),
        f"[{plus},{plus},{minus}] in {plus}": P.contains(ppm),
        f"[{minus},{minus},{plus}] in {minus}": M.contains(mmp),
        f"[{plus},{plus},{minus}] in {minus}": M.contains(ppm),
        f"[{minus},{minus},{plus}] in {plus}": P.contains(mmp),
    }


def _table(plus, minus) -> dict:
    p, m = plus, minus
    return {
        "strict": [f"[{p},{p},{m}] = 0", f"[{m},{m},{p}] = 0"],
        "abelian": [f"{p} abelian", f"{m} abelian"],
        "strong_abelian": [f"{p} abelian", f"{m} abelian", f"[{p},{p},{m}] in {p}", f"[{m},{m},{p}] in {m}"],
        "perfect": [f"[{p},{p},{m}] in {m}", f"[{m},{m},{p}] in {p}"],
    }


def _table_violations(flags: dict, facts: dict, main: str, plus: str, minus: str) -> list:
    rules = {main: [f"{plus} subalgebra", f"{minus} subalgebra"], **_table(plus, minus)}
    return [f"{name} but not {fact}" for name, needed in rules.items() if flags.get(name) for fact in needed if not facts[fact]]


# ---------------------------------------------------------------------------
# product structures


@dataclass
class ProductClass:
    almost: bool
    product: bool
    strict: bool
    abelian: bool
    strong_abelian: bool
    perfect: bool
    paracomplex: bool
    plus: Subspace | None
    minus: Subspace | None
    excluded: str | None = None
    induced_prelie: ThreePreLie | None = None
    facts: dict = field(default_factory=dict)
    table_violations: list = field(default_factory=list)
    report: Report | None = None

    FLAG_NAMES = ("almost", "product", "strict", "abelian", "strong_abelian", "perfect", "paracomplex")

    @property
    def flags(self) -> dict:
        return {k: getattr(self, k) for k in self.FLAG_NAMES}


def product_identities(g: ThreeLieAlgebra, E) -> Report:
    """The product condition and the strict, abelian, strong abelian and perfect conditions."""
    c = g.c
    ck = Checker("product structure identities")
    Ec = out(E, c)
    t = _pullbacks(c, E)
    EII, IEI, IIE, EEI, IEE, EIE, EEE = (t[k] for k in ("MII", "IMI", "IIM", "MMI", "IMM", "MIM", "MMM"))
    ck.compare("product", Ec, EEE + EII + IEI + IIE - out(E, EEI + IEE + EIE))
    ck.compare("strict", Ec, EII)
    ck.compare("abelian", c, -(IEE + EIE + EEI))
    ck.compare("strong_abelian", c, out(E, EII + IEI + IIE))
    ck.compare("perfect", Ec, EEE)
    return ck.done()


def classify_product(g: ThreeLieAlgebra, E) -> ProductClass:
    E = _endo(g, E, "E")
    n = g.dim
    I = xn.identity(n)
    rep = product_identities(g, E)
    involution = xn.equal(E @ E, I)
    excluded = None
    if xn.equal(E, I):
        excluded = "E = Id"
    elif xn.equal(E, -I):
        excluded = "E = -Id"
    almost = involution and excluded is None
    if not involution:
        rep.notes.append("E^2 is not the identity")
    fl = {k: almost and rep.flags[k] for k in ("product", "strict", "abelian", "strong_abelian", "perfect")}
    plus = minus = None
    facts, violations = {}, []
    if involution:
        plus, minus = eigenspace(E, 1), eigenspace(E, -1)
    if almost:
        facts = decomposition_facts(g, plus, minus)
        violations = _table_violations(fl, facts, "product", "g+", "g-")
    paracomplex = fl["product"] and plus is not None and plus.dim == minus.dim
    induced = None
    if fl["strong_abelian"]:
        induced = compatible_prelie_from_O(g, adjoint_rep(g), E)
        if not check_prelie_axioms(induced):
            violations.append("strong_abelian but the induced product fails the pre-Lie axioms")
    return ProductClass(
        almost=almost,
        paracomplex=paracomplex,
        plus=plus,
        minus=minus,
        excluded=excluded,
        induced_prelie=induced,
        facts=facts,
        table_violations=violations,
        report=rep,
        **fl,
    )


def product_from_decomposition(g: ThreeLieAlgebra, plus: Subspace, minus: Subspace):
    """E = +1 on ``plus`` and -1 on ``minus``; both must be complementary subalgebras."""
    if not plus.is_complement(minus):
        raise ValueError("subspaces are not complementary")
    for name, W in (("first", plus), ("second", minus)):
        if not is_subalgebra(g, W):
            raise ValueError(f"{name} subspace is not a subalgebra")
    P = np.concatenate([plus.basis, minus.basis], axis=1)
    D = xn.diag([1] * plus.dim + [-1] * minus.dim)
    return xn.normalize(P @ D @ xn.inverse(P))


# ---------------------------------------------------------------------------
# complexification


@dataclass(frozen=True)
class Complexified:
    algebra: ThreeLieAlgebra
    origin: ThreeLieAlgebra

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @staticmethod
    def sigma(v):
        """Entrywise conjugation, the conjugation of the complexification."""
        return xn.conjugate(v)

    def sigma_subspace(self, q: Subspace) -> Subspace:
        return Subspace([xn.conjugate(v) for v in q.vectors()], q.ambient)


def complexify(g: ThreeLieAlgebra) -> Complexified:
    if g.field != xn.RATIONAL:
        raise ValueError("algebra is already over the Gaussian rationals")
    return Complexified(ThreeLieAlgebra(g.c, g.basis, xn.GAUSSIAN), g)


# ---------------------------------------------------------------------------
# complex structures


@dataclass
class ComplexClass:
    almost: bool
    complex: bool
    strict: bool
    abelian: bool
    strong_abelian: bool
    perfect: bool
    plus_i: Subspace | None
    minus_i: Subspace | None
    induced_prelie: ThreePreLie | None = None
    facts: dict = field(default_factory=dict)
    table_violations: list = field(default_factory=list)
    report: Report | None = None

    FLAG_NAMES = ("almost", "complex", "strict", "abelian", "strong_abelian", "perfect")

    @property
    def flags(self) -> dict:
        return {k: getattr(self, k) for k in self.FLAG_NAMES}


def complex_identities(g: ThreeLieAlgebra, J) -> Report:
    c = g.c
    ck = Checker("complex structure identities")
    Jc = out(J, c)
    t = _pullbacks(c, J)
    JII, IJI, IIJ, JJI, IJJ, JIJ, JJJ = (t[k] for k in ("MII", "IMI", "IIM", "MMI", "IMM", "MIM", "MMM"))
    ck.compare("complex", Jc, -JJJ + JII + IJI + IIJ + out(J, JJI + IJJ + JIJ))
    ck.compare("strict", Jc, JII)
    ck.compare("abelian", c, IJJ + JIJ + JJI)
    ck.compare("strong_abelian", c, -out(J, JII + IJI + IIJ))
    ck.compare("perfect", Jc, -JJJ)
    return ck.done()


def classify_complex(g: ThreeLieAlgebra, J) -> ComplexClass:
    """Flags are checked in g's own field; eigenspaces live in the complexification."""
    J = _endo(g, J, "J")
    n = g.dim
    if n % 2:
        raise ValueError(f"odd dimension {n} admits no almost complex structure")
    rep = complex_identities(g, J)
    almost = xn.equal(J @ J, -xn.identity(n))
    if not almost:
        rep.notes.append("J^2 is not minus the identity")
    fl = {k: almost and rep.flags[k] for k in ("complex", "strict", "abelian", "strong_abelian", "perfect")}
    plus = minus = None
    facts, violations = {}, []
    if almost:
        gc = complexify(g).algebra if g.field == xn.RATIONAL else g
        plus, minus = eigenspace(J, xn.I), eigenspace(J, -xn.I)
        facts = decomposition_facts(gc, plus, minus, "g_i", "g_-i")
        violations = _table_violations(fl, facts, "complex", "g_i", "g_-i")
        if fl["abelian"] and not xn.is_zero(j_bracket_tensor(g, J)):
            violations.append("abelian but the J-bracket is nonzero")
    induced = None
    if fl["strong_abelian"]:
        induced = compatible_prelie_from_O(g, adjoint_rep(g), -J)
        if not check_prelie_axioms(induced):
            violations.append("strong_abelian but the induced product fails the pre-Lie axioms")
    return ComplexClass(
        almost=almost,
        plus_i=plus,
        minus_i=minus,
        induced_prelie=induced,
        facts=facts,
        table_violations=violations,
        report=rep,
        **fl,
    )


def j_bracket_tensor(g: ThreeLieAlgebra, J):
    c = g.c
    p = _pullbacks(c, J)
    t = c - p["IMM"] - p["MIM"] - p["MMI"]
    return xn.normalize(t * Fraction(1, 4))


def phi_map(J):
    """phi(x) = (x - iJx) / 2, mapping g into g_i."""
    n = J.shape[0]
    return xn.normalize((xn.identity(n) - xn.I * xn.matrix(J)) * Fraction(1, 2))


def j_bracket(g: ThreeLieAlgebra, J, validate: bool = True) -> ThreeLieAlgebra:
    """[x,y,z]_J = ([x,y,z] - [x,Jy,Jz] - [Jx,y,Jz] - [Jx,Jy,z]) / 4."""
    J = _endo(g, J, "J")
    if validate and not classify_complex(g, J).complex:
        raise ValueError("J is not a complex structure")
    return ThreeLieAlgebra(j_bracket_tensor(g, J), g.basis, g.field)


def check_phi_intertwines(g: ThreeLieAlgebra, J) -> Report:
    """[phi x, phi y, phi z] = phi [x, y, z]_J on basis triples."""
    J = xn.matrix(J)
    phi = phi_map(J)
    ck = Checker("J-bracket intertwining")
    ck.compare("phi", tri(g.c, phi, phi, phi), out(phi, j_bracket_tensor(g, J)))
    return ck.done()


def complex_from_subalgebra(gc: Complexified, q: Subspace):
    """The real J with J = i on q and -i on sigma(q)."""
    g = gc.algebra
    n = g.dim
    sq = gc.sigma_subspace(q)
    if not q.is_complement(sq):
        raise ValueError("q and its conjugate do not split the complexification")
    if not is_subalgebra(g, q):
        raise ValueError("q is not a subalgebra")
    P = np.concatenate([q.basis, sq.basis], axis=1)
    D = xn.diag([xn.I] * q.dim + [-xn.I] * sq.dim)
    J = xn.normalize(P @ D @ xn.inverse(P))
    if not xn.is_real_array(J):
        raise ValueError("resulting map is not real")
    assert J.shape == (n, n)
    return J


E_TO_J = "E->J"
J_TO_E = "J->E"


def product_complex_duality(g: ThreeLieAlgebra, M, mode: str):
    """J = iE or E = -iJ on an algebra over the Gaussian rationals."""
    if g.field != xn.GAUSSIAN:
        raise ValueError("duality needs an algebra over the Gaussian rationals")
    M = _endo(g, M, "map")
    if mode == E_TO_J:
        return xn.normalize(xn.I * M)
    if mode == J_TO_E:
        return xn.normalize(-xn.I * M)
    raise ValueError(f"unknown mode {mode!r}")
