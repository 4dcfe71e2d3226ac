"""Module algebras, equivariant modules, comodules, stability."""

import pytest

from hopfcyclic.algebroid import LEFT, RIGHT
from hopfcyclic.instances import (
    hopf_cm_twist,
    hopf_enveloping_product_field,
    hopf_group_algebra,
    hopf_trivial,
    instance_cm_twist,
    instance_group,
    shift_module_algebra,
    trivial_module_algebra,
)
from hopfcyclic.algebra import FiniteAlgebra
from hopfcyclic.modules import (
    EquivariantModule,
    HModule,
    HopfComodule,
    ModuleAlgebra,
    StableModuleComodule,
    check_comodule,
    check_equivariant,
    check_hmodule,
    check_module_algebra,
    check_stability,
    convert_action_via_antipode,
    free_equivariant_module,
    module_algebra_over_itself,
    regular_hmodule,
    scalar_module,
    trivial_comodule,
    trivial_stable,
)
from hopfcyclic.ratlinalg import Matrix, ONE, Rat


H2 = hopf_group_algebra(2)


def test_regular_modules_valid():
    assert check_hmodule(regular_hmodule(H2, LEFT)).ok
    assert check_hmodule(regular_hmodule(H2, RIGHT)).ok
    henv = hopf_enveloping_product_field()
    assert check_hmodule(regular_hmodule(henv, RIGHT)).ok


# -- module algebras ---------------------------------------------------------


def test_swap_action_is_right_module_algebra():
    ma = shift_module_algebra(H2, 2, RIGHT)
    rep = check_module_algebra(ma)
    assert rep.ok, rep.summary()


def test_group3_shift_both_orientations():
    bundle = instance_group(3)
    assert check_module_algebra(bundle.right_module_algebra).ok
    assert check_module_algebra(bundle.left_module_algebra).ok


def test_group_like_must_act_by_automorphism():
    # g acting by (x, y) -> (x, 2y) is not an algebra map for 2 != 1: axiom fails
    alg = FiniteAlgebra.product_field(2)
    bad_action = [Matrix.identity(2), Matrix.from_dense([[1, 0], [0, 2]])]
    module = HModule(H2, RIGHT, 2, bad_action)
    rep = check_module_algebra(ModuleAlgebra(alg, module))
    assert not rep.ok
    assert "action-distributes-over-product" in rep.failed_axioms() \
        or "action-associative" in rep.failed_axioms()


def test_trivial_hopf_any_algebra_passes():
    h = hopf_trivial()
    for alg in (FiniteAlgebra.product_field(2), FiniteAlgebra.dual_numbers()):
        assert check_module_algebra(trivial_module_algebra(h, alg, RIGHT)).ok


def test_cm_twist_needs_sign_twisted_action():
    bundle = instance_cm_twist()
    assert check_module_algebra(bundle.right_module_algebra).ok
    # the plain swap fails the unit normalization against eps_R = sign
    plain = shift_module_algebra(hopf_cm_twist(), 2, RIGHT, sign=1)
    rep = check_module_algebra(plain)
    assert not rep.ok
    assert "action-normalizes-unit-source" in rep.failed_axioms()


# -- equivariant modules ---------------------------------------------------------


def left_swap_bundle():
    return instance_group(2).left_module_algebra


def test_module_algebra_over_itself_is_equivariant():
    ma = left_swap_bundle()
    rep = check_equivariant(module_algebra_over_itself(ma))
    assert rep.ok, rep.summary()


def test_free_module_diagonal_action_is_equivariant():
    ma = left_swap_bundle()
    rep = check_equivariant(free_equivariant_module(ma, 2))
    assert rep.ok, rep.summary()


def test_twisted_summand_breaks_equivariance():
    ma = left_swap_bundle()
    e = free_equivariant_module(ma, 2)
    # perturb the H-action on the second summand only by a non-invariant map
    bad = [m for m in e.h_action.action]
    twist = Matrix.from_dense([
        [1, 0, 0, 0],
        [0, 1, 0, 0],
        [0, 0, 1, 0],
        [0, 0, 1, 1],
    ])
    bad[1] = twist * bad[1]
    bad_mod = HModule(ma.module.hopf, LEFT, e.dim, bad)
    rep = check_equivariant(EquivariantModule(ma, e.dim, bad_mod, e.a_action))
    assert not rep.ok


# -- comodules -------------------------------------------------------------------


def test_trivial_comodule_passes():
    m = trivial_stable(H2, RIGHT)
    rep = check_comodule(m.comodule)
    assert rep.ok, rep.summary()


def test_trivial_left_comodule_passes():
    m = trivial_stable(H2, LEFT)
    rep = check_comodule(m.comodule)
    assert rep.ok, rep.summary()


def coring_comodule(h):
    """M = H with coactions the coproduct lifts and coring bimodule actions."""
    alg = h.total
    base_actions = {
        "right_R": [alg.right_mult_vec(h.s_R().apply({b: ONE}))
                    for b in range(h.base_right.dim)],
        "left_R": [alg.right_mult_vec(h.t_R().apply({b: ONE}))
                   for b in range(h.base_right.dim)],
        "right_L": [alg.left_mult_vec(h.t_L().apply({b: ONE}))
                    for b in range(h.base_left.dim)],
        "left_L": [alg.left_mult_vec(h.s_L().apply({b: ONE}))
                   for b in range(h.base_left.dim)],
    }
    return HopfComodule(h, RIGHT, h.dim, h.left.coproduct_lift,
                        h.right.coproduct_lift, base_actions, name="H over itself")


@pytest.mark.parametrize("make", [lambda: hopf_group_algebra(2),
                                  hopf_cm_twist,
                                  hopf_enveloping_product_field])
def test_coproducts_give_comodule(make):
    h = make()
    rep = check_comodule(coring_comodule(h))
    assert rep.ok, rep.summary()


def test_dropped_summand_coaction_fails():
    h = hopf_enveloping_product_field()
    c = coring_comodule(h)
    cols = [dict(col) for col in c.rho_R_lift.cols]
    cols[1].popitem()
    import dataclasses
    bad = dataclasses.replace(c, rho_R_lift=Matrix.from_cols(c.rho_R_lift.nrows, cols))
    rep = check_comodule(bad)
    assert not rep.ok


# -- stability ---------------------------------------------------------------------


def test_trivial_coefficients_stable():
    rep = check_stability(trivial_stable(H2, RIGHT))
    assert rep.ok, rep.summary()
    rep = check_stability(trivial_stable(H2, LEFT))
    assert rep.ok, rep.summary()


def test_regular_module_with_coproduct_coaction_not_stable():
    # on Q[Z/2], acting the Delta-coaction legs of g back onto g gives
    # g.g = 1 != g: stability fails on the group-like basis element
    m = regular_hmodule(H2, RIGHT)
    c = coring_comodule(H2)
    rep = check_stability(StableModuleComodule(m, c))
    assert not rep.ok
    assert any(v.witness == (1,) for v in rep.violations)


def test_scaled_coaction_unstable():
    m = trivial_stable(H2, RIGHT)
    import dataclasses
    scaled = dataclasses.replace(m.comodule,
                                 rho_R_lift=m.comodule.rho_R_lift.scale(2))
    rep = check_stability(StableModuleComodule(m.module, scaled))
    assert not rep.ok
    assert "stability-R" in rep.failed_axioms()


# -- antipode conversion -------------------------------------------------------------


def test_convert_trivial_hopf_identity():
    h = hopf_trivial()
    m = scalar_module(h, LEFT, h.eps_L())
    conv = convert_action_via_antipode(m, "left_to_right")
    assert conv.side == RIGHT
    assert conv.action[0] == m.action[0]


def test_convert_z2_action_unchanged():
    # S(g) = g^-1 = g in Z/2, so conversion leaves the matrices alone
    ma = shift_module_algebra(H2, 2, RIGHT)
    conv = convert_action_via_antipode(ma.module, "right_to_left")
    assert conv.twisted
    for a, b in zip(conv.action, ma.module.action):
        assert a == b


def test_double_conversion_identity_when_involutive():
    henv = hopf_enveloping_product_field()
    m = regular_hmodule(henv, LEFT)
    there = convert_action_via_antipode(m, "left_to_right")
    back = convert_action_via_antipode(there, "right_to_left")
    for a, b in zip(back.action, m.action):
        assert a == b
