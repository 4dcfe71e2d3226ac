"""The T / Q^H / Q / C tower for module algebras, and the interval module."""

import pytest

from hopfcyclic.algebroid import RIGHT
from hopfcyclic.cyclic import (
    build_CCLS,
    build_QH,
    build_Q_algebra,
    build_T_module_algebra,
    build_hopf_cyclic,
    check_cyclic,
    check_paracyclic,
    check_semicyclic_map,
    interval_edges,
    point_cyclic_module,
    tau_inverse,
    tensor_with_interval,
)
from hopfcyclic.errors import CyclicityError
from hopfcyclic.instances import (
    instance_cm_twist,
    instance_group,
    instance_trivial,
    trivial_with_algebra,
)
from hopfcyclic.algebra import FiniteAlgebra
from hopfcyclic.modules import StableModuleComodule
from hopfcyclic.ratlinalg import Matrix, ONE

N_MAX = 3


@pytest.fixture(scope="module")
def g2_tower():
    b = instance_group(2)
    return build_T_module_algebra(b.right_module_algebra, b.coeff_right, N_MAX)


def test_trivial_instance_T_all_ones():
    b = instance_trivial()
    t = build_T_module_algebra(b.right_module_algebra, b.coeff_right, 4)
    assert t.module.dims == [1, 1, 1, 1, 1]
    for n in range(5):
        assert t.module.tau[n] == Matrix.identity(1)
    for n in range(1, 5):
        for d in t.module.faces[n]:
            assert d == Matrix.identity(1)


def test_product_field_T_dims_and_first_face():
    b = trivial_with_algebra(FiniteAlgebra.product_field(2))
    t = build_T_module_algebra(b.right_module_algebra, b.coeff_right, 2)
    assert t.module.dims == [2, 4, 8]
    # d_0 multiplies the first two legs: e_i (x) e_j (x) m -> (e_i e_j) (x) m
    d0 = t.module.faces[1][0]
    assert d0.col(0) == {0: ONE}        # e0 e0 = e0
    assert d0.col(1) == {}              # e0 e1 = 0
    assert d0.col(3) == {1: ONE}        # e1 e1 = e1


def test_group2_T_is_paracyclic(g2_tower):
    rep = check_paracyclic(g2_tower.module)
    assert rep.ok, rep.summary()
    assert g2_tower.module.dims == [2, 4, 8, 16]


def test_tau_inverse_formula(g2_tower):
    for n in range(N_MAX + 1):
        inv = tau_inverse(g2_tower, n)
        assert inv * g2_tower.module.tau[n] == Matrix.identity(g2_tower.module.dims[n])
    # with trivial coaction the inverse is the inverse rotation; order 2 at n=1
    assert tau_inverse(g2_tower, 1) == g2_tower.module.tau[1]


def test_QH_trivial_action_is_identity_quotient():
    b = instance_trivial()
    t = build_T_module_algebra(b.right_module_algebra, b.coeff_right, 2)
    qh = build_QH(t)
    assert qh.module.dims == t.module.dims


def test_QH_group2_commutators_vanish(g2_tower):
    qh = build_QH(g2_tower)
    # tau commutes with the diagonal group action here: Q^H = T
    assert qh.module.dims == g2_tower.module.dims
    rep = check_paracyclic(qh.module)
    assert rep.ok, rep.summary()


def test_QH_intersection_variant_matches_here(g2_tower):
    qh = build_QH(g2_tower, variant="intersection")
    assert qh.module.dims == g2_tower.module.dims


def test_Q_group2_dims_and_cyclicity(g2_tower):
    q = build_Q_algebra(build_QH(g2_tower))
    assert q.module.dims == [1, 2, 4, 8]
    rep = check_cyclic(q.module)
    assert rep.ok, rep.summary()


def test_Q_cm_twist_dims_match_untwisted():
    b = instance_cm_twist()
    t = build_T_module_algebra(b.right_module_algebra, b.coeff_right, N_MAX)
    q = build_Q_algebra(build_QH(t))
    assert q.module.dims == [1, 2, 4, 8]
    rep = check_cyclic(q.module)
    assert rep.ok, rep.summary()


def test_unstable_coefficients_break_tau_order():
    b = instance_group(2)
    import dataclasses
    scaled = dataclasses.replace(
        b.coeff_right.comodule,
        rho_R_lift=b.coeff_right.comodule.rho_R_lift.scale(2),
        rho_L_lift=b.coeff_right.comodule.rho_L_lift.scale(2))
    bad = StableModuleComodule(b.coeff_right.module, scaled, name="scaled")
    t = build_T_module_algebra(b.right_module_algebra, bad, 2, validate=False)
    n = 1
    power = t.module.tau[n] * t.module.tau[n]
    assert power != Matrix.identity(t.module.dims[n])


def test_hopf_cyclic_ground_base_is_isomorphic_to_Q(g2_tower):
    q = build_Q_algebra(build_QH(g2_tower))
    c = build_hopf_cyclic(q)
    assert c.module.dims == q.module.dims
    assert c.module.rho is None
    rep = check_cyclic(c.module)
    assert rep.ok, rep.summary()
    # over R = Q the identification is degreewise equality of matrices
    for n in range(1, N_MAX + 1):
        for i in range(n + 1):
            assert c.module.faces[n][i] == q.module.faces[n][i]


def test_T_with_H_trivial_matches_classical_rotation():
    b = trivial_with_algebra(FiniteAlgebra.product_field(2))
    t = build_T_module_algebra(b.right_module_algebra, b.coeff_right, 2)
    # tau is the plain rotation of tensor legs
    tau1 = t.module.tau[1]
    # basis (i,j) has code 2i + j; rotation sends it to (j,i)
    for i in range(2):
        for j in range(2):
            assert tau1.col(2 * i + j) == {2 * j + i: ONE}


# -- the interval module -------------------------------------------------------


def test_CCLS_dims_and_cyclicity():
    b = instance_group(2)
    cc = build_CCLS(b.hopf, N_MAX)
    assert cc.module_dims if False else cc.dims == [2, 4, 8, 16]
    rep = check_cyclic(cc)
    assert rep.ok, rep.summary()


def test_CCLS_tau_rotates_tuples():
    b = instance_group(2)
    cc = build_CCLS(b.hopf, 2)
    # degree 1: tuples (W0, W1) coded as 2*W0 + W1; rotation swaps entries
    assert cc.tau[1].col(0b01) == {0b10: ONE}
    assert cc.tau[1].col(0b10) == {0b01: ONE}


def test_CCLS_degeneracy_inserts_identity():
    b = instance_group(2)
    cc = build_CCLS(b.hopf, 2)
    # s_1 at degree 1 appends W0: (W0, W1) -> (W0, W1, W0)
    s1 = cc.degeneracies[1][1]
    assert s1.col(0b01) == {0b010: ONE}


def test_tensor_with_point_module_is_identity():
    b = instance_group(2)
    cc = build_CCLS(b.hopf, 2)
    pt = point_cyclic_module(b.hopf, 2)
    t = tensor_with_interval(cc, pt)
    assert t.dims == cc.dims
    for n in range(1, 3):
        for i in range(n + 1):
            assert t.faces[n][i] == cc.faces[n][i]


def test_interval_edges_semicyclic_and_injective():
    b = instance_group(2)
    t = build_T_module_algebra(b.right_module_algebra, b.coeff_right, 2)
    q = build_Q_algebra(build_QH(t))
    cc = build_CCLS(b.hopf, 2)
    prod = tensor_with_interval(q.module, cc)
    eps0, eps1 = interval_edges(q.module, cc)
    for eps in (eps0, eps1):
        rep = check_semicyclic_map(eps, q.module, prod)
        assert rep.ok, rep.summary()
        for n in range(3):
            assert eps[n].rank() == q.module.dims[n]


def test_tensor_dims_multiply():
    b = instance_group(2)
    cc = build_CCLS(b.hopf, 2)
    t = tensor_with_interval(cc, cc)
    assert t.dims == [d * d for d in cc.dims]
