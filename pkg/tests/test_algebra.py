"""Tests for finite algebras, bimodules, and balanced tensor products."""

from fractions import Fraction

import pytest

from hopfcyclic.algebra import (
    AlgebraMap,
    FiniteAlgebra,
    balanced_as_bimodule,
    ground_bimodule,
    balanced_tensor,
    check_algebra,
    check_algebra_map,
    check_bimodule,
    leg_operator,
    lift_map_to_tensor,
    opposite,
    regular_bimodule,
    tensor_chain,
    tensor_decode,
    tensor_encode,
    tensor_product_vec,
)
from hopfcyclic.errors import WellDefinednessError
from hopfcyclic.ratlinalg import Matrix, ONE

QQ = FiniteAlgebra.ground_field()
Q2 = FiniteAlgebra.product_field(2)
Z2 = FiniteAlgebra.group_algebra_cyclic(2)


def test_group_algebra_passes():
    assert check_algebra(Z2).ok


def test_product_field_passes():
    assert check_algebra(Q2).ok


def test_dual_numbers_pass():
    assert check_algebra(FiniteAlgebra.dual_numbers()).ok


def test_perturbed_structure_constants_fail_named():
    bad_mult = [[list(cell) for cell in row] for row in Z2.mult]
    bad_mult[0][0][0] += 1
    bad = FiniteAlgebra(2, Z2.unit, tuple(tuple(tuple(c) for c in r) for r in bad_mult))
    rep = check_algebra(bad)
    assert not rep.ok
    assert any(v.axiom in ("associativity", "unit-left", "unit-right")
               for v in rep.violations)
    assert all(v.witness for v in rep.violations)


def test_opposite_involution_and_validity():
    m2 = FiniteAlgebra.group_algebra_cyclic(3)
    op = opposite(m2)
    assert check_algebra(op).ok
    assert opposite(op).mult == m2.mult
    # commutative algebra equals its opposite
    assert opposite(Q2).mult == Q2.mult


def test_matrix_algebra_opposite():
    # 2x2 matrix algebra: basis E11,E12,E21,E22; opposite flips structure constants
    z = Fraction(0)
    o = Fraction(1)
    def unit(i, j):
        return [o if (a, b) == (i, j) else z for a in range(2) for b in range(2)]
    mult = [[None] * 4 for _ in range(4)]
    idx = [(0, 0), (0, 1), (1, 0), (1, 1)]
    for p, (i, j) in enumerate(idx):
        for q, (k, l) in enumerate(idx):
            mult[p][q] = unit(i, l) if j == k else [z] * 4
    m22 = FiniteAlgebra(4, [o, z, z, o], tuple(tuple(tuple(c) for c in r) for r in mult),
                        name="M2(Q)")
    assert check_algebra(m22).ok
    op = opposite(m22)
    assert check_algebra(op).ok
    # E12 * E21 = E11 in M2, = E22 in the opposite
    e12, e21 = {1: ONE}, {2: ONE}
    assert m22.multiply(e12, e21) == {0: ONE}
    assert op.multiply(e12, e21) == {3: ONE}


def test_algebra_map_unit_into_group_algebra():
    f = AlgebraMap(QQ, Z2, Matrix.from_dense([[1], [0]]), name="unit")
    assert check_algebra_map(f).ok


def test_algebra_map_zero_fails_unit():
    f = AlgebraMap(QQ, Z2, Matrix.zero(2, 1))
    rep = check_algebra_map(f)
    assert not rep.ok
    assert "map-unit" in rep.failed_axioms()


def test_bimodule_regular():
    assert check_bimodule(regular_bimodule(Q2)).ok
    assert check_bimodule(regular_bimodule(Z2)).ok


# -- tensor helpers ------------------------------------------------------------


def test_tensor_encode_decode_roundtrip():
    dims = [2, 3, 2]
    for code in range(12):
        assert tensor_encode(dims, tensor_decode(dims, code)) == code


def test_leg_operator_matches_kron():
    a = Matrix.from_dense([[1, 2], [0, 1]])
    i3 = Matrix.identity(3)
    assert leg_operator([2, 3], 0, a) == a.kron(i3)
    assert leg_operator([3, 2], 1, a) == i3.kron(a)


def test_tensor_product_vec():
    v = tensor_product_vec([2, 2], [{0: ONE, 1: Fraction(2)}, {1: Fraction(3)}])
    assert v == {1: Fraction(3), 3: Fraction(6)}


# -- balanced tensors -----------------------------------------------------------


def test_balanced_over_ground_field_is_plain():
    m = ground_bimodule(2)
    bt = balanced_tensor(m, m, QQ)
    # over Q the quotient is trivial: dim = dim(m) * dim(n)
    assert bt.dim == 4


def test_balanced_regular_over_product_field():
    m = regular_bimodule(Q2)
    bt = balanced_tensor(m, m, Q2)
    assert bt.dim == 2


def test_balanced_zero_module():
    zero = type(regular_bimodule(QQ))(QQ, QQ, 0, [Matrix.zero(0, 0)], [Matrix.zero(0, 0)])
    bt = balanced_tensor(zero, ground_bimodule(1), QQ)
    assert bt.dim == 0


def test_lift_map_identity_and_kron():
    m = ground_bimodule(2)
    bt = balanced_tensor(m, m, QQ)
    ident = lift_map_to_tensor(Matrix.identity(2), Matrix.identity(2), bt, bt)
    assert ident == Matrix.identity(4)
    f = Matrix.from_dense([[0, 1], [1, 0]])
    lifted = lift_map_to_tensor(f, Matrix.identity(2), bt, bt)
    assert lifted == f.kron(Matrix.identity(2))


def test_lift_map_unbalanced_raises():
    m = regular_bimodule(Q2)
    bt = balanced_tensor(m, m, Q2)
    # coordinate swap on the left leg only is not balanced over Q x Q
    swap = Matrix.from_dense([[0, 1], [1, 0]])
    with pytest.raises(WellDefinednessError):
        lift_map_to_tensor(swap, Matrix.identity(2), bt, bt)


def test_bracketing_associativity_dimensions():
    # (m (x)_B n) (x)_B p vs flat three-factor chain: equal dimensions
    m = regular_bimodule(Q2)
    base = Q2
    inner = balanced_tensor(m, m, base)
    inner_bm = balanced_as_bimodule(inner)
    outer = balanced_tensor(inner_bm, m, base)
    acts = ([m.right_of({b: ONE}) for b in range(base.dim)],
            [m.left_of({b: ONE}) for b in range(base.dim)])
    flat = tensor_chain([2, 2, 2], [acts, acts])
    assert outer.dim == flat.dim == 2
