"""Axiom checkers for bialgebroids and Hopf algebroids on the shipped instances."""

import pytest

from hopfcyclic.algebroid import (
    LEFT,
    RIGHT,
    HopfAlgebroid,
    LeftBialgebroid,
    base_anti_isomorphisms,
    check_hopf_algebroid,
    check_left_bialgebroid,
    check_right_bialgebroid,
    flip_matrix,
    sweedler_expand,
)
from hopfcyclic.instances import (
    hopf_cm_twist,
    hopf_enveloping_product_field,
    hopf_group_algebra,
    hopf_trivial,
)
from hopfcyclic.ratlinalg import Matrix, ONE, Rat


def test_trivial_hopf_algebroid_passes():
    rep = check_hopf_algebroid(hopf_trivial())
    assert rep.ok, rep.summary()


@pytest.mark.parametrize("n", [2, 3])
def test_group_algebra_hopf_algebroid_passes(n):
    rep = check_hopf_algebroid(hopf_group_algebra(n))
    assert rep.ok, rep.summary()


def test_enveloping_hopf_algebroid_passes():
    rep = check_hopf_algebroid(hopf_enveloping_product_field())
    assert rep.ok, rep.summary()


def test_cm_twist_hopf_algebroid_passes():
    h = hopf_cm_twist()
    rep = check_hopf_algebroid(h)
    assert rep.ok, rep.summary()
    # the two counits genuinely differ: eps_R(g) = -1, eps_L(g) = +1
    assert h.eps_R().entry(0, 1) == -1
    assert h.eps_L().entry(0, 1) == 1


def test_left_bialgebroid_trivial_bialgebra():
    # a bialgebra gives a left bialgebroid with source = target = unit map
    rep = check_left_bialgebroid(hopf_group_algebra(2).left)
    assert rep.ok, rep.summary()


def test_left_bialgebroid_flip_lift_fails():
    h = hopf_enveloping_product_field()
    left = h.left
    flipped = LeftBialgebroid(left.total, left.base, left.source, left.target,
                              flip_matrix(4) * left.coproduct_lift, left.counit)
    rep = check_left_bialgebroid(flipped)
    assert not rep.ok
    failed = set(rep.failed_axioms())
    assert failed & {"left-takeuchi", "left-counit-first", "left-counit-second",
                     "left-coassociativity"}


def test_right_bialgebroid_enveloping_passes():
    rep = check_right_bialgebroid(hopf_enveloping_product_field().right)
    assert rep.ok, rep.summary()


def test_right_bialgebroid_wrong_counit_fails():
    h = hopf_enveloping_product_field()
    r = h.right
    # swap the counit for the composite eps_L . S (wrong normalization here)
    import dataclasses
    bad = dataclasses.replace(r, counit=r.counit * h.antipode * h.total.left_mult(1))
    rep = check_right_bialgebroid(bad)
    assert not rep.ok


def test_scaled_antipode_fails_antipode_axiom():
    h = hopf_enveloping_product_field()
    bad = HopfAlgebroid(h.left, h.right, h.antipode.scale(2))
    rep = check_hopf_algebroid(bad)
    assert not rep.ok
    assert {"antipode-left", "antipode-right"} & set(rep.failed_axioms())


def test_single_structure_constant_flip_detected():
    # criterion-style spot check; the exhaustive sweep lives in acceptance
    h = hopf_enveloping_product_field()
    mult = [[list(cell) for cell in row] for row in h.total.mult]
    mult[1][2][0] += 1
    bad_total = type(h.total)(4, h.total.unit,
                              tuple(tuple(tuple(c) for c in r) for r in mult))
    import dataclasses
    bad_left = dataclasses.replace(h.left, total=bad_total, _square=None)
    rep = check_left_bialgebroid(bad_left)
    assert not rep.ok
    assert rep.failed_axioms()


def test_base_anti_isomorphisms_enveloping():
    h = hopf_enveloping_product_field()
    maps, rep = base_anti_isomorphisms(h)
    assert rep.ok, rep.summary()
    # on this instance all four underlying matrices are the identity
    for m in maps:
        assert m.matrix == Matrix.identity(2)


def test_base_anti_isomorphisms_group():
    maps, rep = base_anti_isomorphisms(hopf_group_algebra(2))
    assert rep.ok
    for m in maps:
        assert m.matrix == Matrix.identity(1)


# -- sweedler expansion ----------------------------------------------------------


def test_sweedler_group_like_three_legs():
    h = hopf_group_algebra(2)
    out = sweedler_expand(h, {1: ONE}, LEFT, 3, check=True)
    # g (x) g (x) g has code 1*4 + 1*2 + 1 = 7 in base-2 legs
    assert out == {7: ONE}


def test_sweedler_unit_any_instance():
    # Delta(1) = 1 (x) 1 holds in H (x)_base H, so compare after projection
    for h in (hopf_group_algebra(3), hopf_enveloping_product_field(),
              hopf_cm_twist()):
        one = h.total.unit_vec()
        out = sweedler_expand(h, one, LEFT, 2, check=True)
        d = h.dim
        expected = {}
        for i, ci in one.items():
            for j, cj in one.items():
                expected[i * d + j] = ci * cj
        square = h.left.tensor_square()
        assert square.project(out) == square.project(expected)


def test_sweedler_enveloping_matches_printed_lift_after_projection():
    h = hopf_enveloping_product_field()
    # basis e_01 = u_0 (x) u_1': printed lift (u_0 (x) 1) (x) (1 (x) u_1)
    printed = {}
    for a in range(2):
        for b in range(2):
            printed[(2 * 0 + a) * 4 + (2 * b + 1)] = ONE
    engine = sweedler_expand(h, {1: ONE}, LEFT, 2, check=True)
    square = h.left.tensor_square()
    assert square.project(printed) == square.project(engine)


def test_sweedler_bracketing_independence_deep():
    h = hopf_cm_twist()
    for legs in (2, 3, 4):
        sweedler_expand(h, {1: ONE}, RIGHT, legs, check=True)


def test_antipode_inverse_computed_when_omitted():
    h = hopf_group_algebra(3)
    assert h.antipode_inverse * h.antipode == Matrix.identity(3)
