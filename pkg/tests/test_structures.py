import pytest

from a4data import E, J, a4, g3
from trilie import exactnum as xn
from trilie.prelie import ThreePreLie
from trilie.structures import (
    E_TO_J,
    J_TO_E,
    check_phi_intertwines,
    classify_complex,
    classify_product,
    complex_from_subalgebra,
    complexify,
    eigenspace,
    j_bracket,
    phi_map,
    product_complex_duality,
    product_from_decomposition,
)
from trilie.threelie import Subspace, ThreeLieAlgebra, check_fundamental_identity, is_subalgebra


@pytest.mark.parametrize("i", range(6))
def test_a4_product_structures(i):
    pc = classify_product(a4(), E[i])
    assert pc.product and pc.abelian and pc.perfect and pc.paracomplex
    assert not (pc.strict or pc.strong_abelian)
    assert pc.plus.dim == pc.minus.dim == 2
    assert pc.table_violations == []
    assert pc.induced_prelie is None
    assert pc.facts


def test_g3_product_structures():
    g = g3()
    strong = classify_product(g, xn.diag([1, 1, -1]))
    assert strong.strong_abelian and strong.abelian and not strong.paracomplex
    assert strong.induced_prelie == ThreePreLie.from_products(3, {(0, 1, 2): {0: -1}, (0, 2, 1): {0: -1}, (1, 2, 0): {0: 1}})
    other = classify_product(g, xn.diag([1, -1, 1]))
    assert other.strong_abelian
    assert other.induced_prelie == ThreePreLie.from_products(3, {(0, 1, 2): {0: 1}, (0, 2, 1): {0: 1}, (1, 2, 0): {0: 1}})
    perfect = classify_product(g, xn.diag([-1, 1, 1]))
    assert perfect.perfect and perfect.abelian and not perfect.strong_abelian


@pytest.mark.parametrize("sign", [1, -1])
def test_identity_is_excluded(sign):
    pc = classify_product(a4(), sign * xn.identity(4))
    assert pc.excluded == ("E = Id" if sign == 1 else "E = -Id")
    assert not any(pc.flags[k] for k in ("product", "strict", "abelian", "strong_abelian", "perfect"))


def test_non_involution():
    pc = classify_product(a4(), J[0])
    assert not pc.almost and not pc.product and pc.plus is None
    with pytest.raises(ValueError):
        classify_product(a4(), xn.identity(3))


def test_product_from_decomposition():
    g = a4()
    Em = product_from_decomposition(g, Subspace.span(4, [0, 1]), Subspace.span(4, [2, 3]))
    assert xn.equal(Em, E[0])
    with pytest.raises(ValueError):
        product_from_decomposition(g, Subspace.span(4, [0, 1]), Subspace.span(4, [1, 2]))
    with pytest.raises(ValueError):
        product_from_decomposition(g, Subspace.span(4, [0, 1, 2]), Subspace.span(4, [3]))


def test_eigenspace():
    assert eigenspace(E[0], 1) == Subspace.span(4, [0, 1])
    assert eigenspace(E[0], -1) == Subspace.span(4, [2, 3])


def test_a4_complex_structures():
    classes = [classify_complex(a4(), Ji) for Ji in J]
    assert all(cc.complex and cc.abelian for cc in classes)
    assert [cc.strong_abelian for cc in classes] == [True, False, False, False, False, True]
    assert [cc.perfect for cc in classes] == [False, True, True, True, True, False]
    assert all(cc.table_violations == [] for cc in classes)
    assert all(cc.plus_i.dim == cc.minus_i.dim == 2 for cc in classes)
    assert classes[0].induced_prelie is not None


def test_complex_rejects_odd_dimension_and_non_complex():
    with pytest.raises(ValueError):
        classify_complex(g3(), xn.identity(3))
    assert not classify_complex(a4(), E[0]).almost


def test_j_bracket_and_phi():
    g = a4()
    h = j_bracket(g, J[1])
    assert xn.is_zero(h.c)
    assert check_fundamental_identity(j_bracket(g, J[0])).ok
    assert check_phi_intertwines(g, J[0]).ok and check_phi_intertwines(g, J[1]).ok
    phi = phi_map(J[0])
    assert xn.equal(J[0] @ phi, xn.I * phi)


def test_complex_from_subalgebra():
    g = a4()
    gc = complexify(g)
    assert gc.algebra.field == xn.GAUSSIAN and gc.algebra == ThreeLieAlgebra(g.c, g.basis, xn.GAUSSIAN)
    q = classify_complex(g, J[0]).plus_i
    assert is_subalgebra(gc.algebra, q)
    assert xn.equal(complex_from_subalgebra(gc, q), J[0])
    with pytest.raises(ValueError):
        complex_from_subalgebra(gc, Subspace.span(4, [0, 1]))


def test_product_complex_duality():
    gc = complexify(a4()).algebra
    Jc = product_complex_duality(gc, E[0], E_TO_J)
    cc = classify_complex(gc, Jc)
    assert cc.complex and cc.abelian and cc.perfect
    Ec = product_complex_duality(gc, J[0], J_TO_E)
    pc = classify_product(gc, Ec)
    assert pc.product and pc.abelian and pc.strong_abelian and pc.paracomplex
    assert pc.plus == classify_complex(a4(), J[0]).plus_i
    with pytest.raises(ValueError):
        product_complex_duality(a4(), E[0], E_TO_J)
    with pytest.raises(ValueError):
        product_complex_duality(gc, E[0], "sideways")
