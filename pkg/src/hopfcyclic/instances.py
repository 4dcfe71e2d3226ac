"""Built-in validated instances used by tests, the CLI, and acceptance runs.

Each bundle carries a Hopf algebroid, module algebras in both
orientations (where meaningful), and stable coefficients in both
orientations, plus a table of expected values.  Expected values are
always produced by an in-repo independent computation and frozen; the
tags say which route produced them.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import AlgebraMap, FiniteAlgebra
from .algebroid import LEFT, RIGHT, HopfAlgebroid, LeftBialgebroid, RightBialgebroid
from .modules import (
    HModule,
    HopfComodule,
    ModuleAlgebra,
    StableModuleComodule,
    convert_action_via_antipode,
    scalar_module,
    trivial_comodule,
    trivial_stable,
)
from .ratlinalg import Matrix, ONE, Rat


@dataclass
class InstanceBundle:
    name: str
    hopf: HopfAlgebroid
    right_module_algebra: ModuleAlgebra | None = None
    left_module_algebra: ModuleAlgebra | None = None
    coeff_right: StableModuleComodule | None = None
    coeff_left: StableModuleComodule | None = None
    expected: dict = field(default_factory=dict)


# ---------------------------------------------------------------------------
# Hopf algebroids


def _hopf_from_bialgebra(alg: FiniteAlgebra, delta_lift: Matrix, eps: Matrix,
                         s_matrix: Matrix, delta_r_lift: Matrix | None = None,
                         eps_r: Matrix | None = None,
                         antipode: Matrix | None = None,
                         name: str = "") -> HopfAlgebroid:
    """Assemble a Hopf algebroid whose bases are the ground field."""
    qq = FiniteAlgebra.ground_field()
    unit_map = AlgebraMap(qq, alg, s_matrix, name="unit")
    left = LeftBialgebroid(alg, qq, unit_map, unit_map, delta_lift, eps,
                           name=name)
    right = RightBialgebroid(alg, qq, unit_map, unit_map,
                             delta_r_lift if delta_r_lift is not None else delta_lift,
                             eps_r if eps_r is not None else eps,
                             name=name)
    return HopfAlgebroid(left, right, antipode, name=name)


def hopf_trivial() -> HopfAlgebroid:
    """H = Q with every structure map the identity."""
    qq = FiniteAlgebra.ground_field()
    ident = Matrix.identity(1)
    return _hopf_from_bialgebra(qq, ident, ident, ident, antipode=ident,
                                name="trivial")


def hopf_group_algebra(n: int) -> HopfAlgebroid:
    """Q[Z/n] as a Hopf algebroid: group-likes, S(g) = g^-1, bases = Q."""
    alg = FiniteAlgebra.group_algebra_cyclic(n)
    delta = Matrix.from_cols(n * n, [{k * n + k: ONE} for k in range(n)])
    eps = Matrix.from_cols(1, [{0: ONE} for _ in range(n)])
    s_matrix = Matrix.from_cols(n, [{0: ONE}])
    antipode = Matrix.from_cols(n, [{(-k) % n: ONE} for k in range(n)])
    return _hopf_from_bialgebra(alg, delta, eps, s_matrix, antipode=antipode,
                                name=f"group Z/{n}")


def hopf_cm_twist() -> HopfAlgebroid:
    """Q[Z/2] twisted by the sign character on the right-hand structure.

    The right coproduct sends g to -(g (x) g), the right counit is the
    sign character, and the antipode is the sign-twisted flip; this gives
    an instance whose two counits differ.
    """
    alg = FiniteAlgebra.group_algebra_cyclic(2)
    delta_l = Matrix.from_cols(4, [{0: ONE}, {3: ONE}])
    eps_l = Matrix.from_dense([[1, 1]])
    delta_r = Matrix.from_cols(4, [{0: ONE}, {3: Rat(-1)}])
    eps_r = Matrix.from_dense([[1, -1]])
    s_matrix = Matrix.from_dense([[1], [0]])
    antipode = Matrix.from_dense([[1, 0], [0, -1]])
    return _hopf_from_bialgebra(alg, delta_l, eps_l, s_matrix,
                                delta_r_lift=delta_r, eps_r=eps_r,
                                antipode=antipode, name="cm-twist Z/2")


def hopf_enveloping_product_field() -> HopfAlgebroid:
    """The enveloping algebroid L (x) L^op for L = Q x Q, antipode = flip.

    Total algebra basis e_ij = u_i (x) u_j (lexicographic), so the total
    algebra is Q^4 componentwise.  This is the shipped instance with a
    genuinely two-dimensional, mutually opposite pair of base algebras.
    """
    L = FiniteAlgebra.product_field(2)
    H = FiniteAlgebra.product_field(4)
    H.name = "QxQ (x) (QxQ)^op"

    def idx(i, j):
        return 2 * i + j

    s_L = Matrix.from_cols(4, [{idx(i, 0): ONE, idx(i, 1): ONE} for i in range(2)])
    t_L = Matrix.from_cols(4, [{idx(0, j): ONE, idx(1, j): ONE} for j in range(2)])
    eps_L = Matrix.from_cols(2, [({i: ONE} if i == j else {})
                                 for i in range(2) for j in range(2)])
    # shared reduced coproduct lift: e_ij -> sum_c e_ic (x) e_cj
    delta = Matrix.from_cols(16, [
        {idx(i, c) * 4 + idx(c, j): ONE for c in range(2)}
        for i in range(2) for j in range(2)])
    s_R = t_L
    t_R = s_L
    eps_R = eps_L
    antipode = Matrix.from_cols(4, [{idx(j, i): ONE}
                                    for i in range(2) for j in range(2)])
    left = LeftBialgebroid(H, L, AlgebraMap(L, H, s_L, name="s_L"),
                           AlgebraMap(L, H, t_L, name="t_L"),
                           delta, eps_L, name="enveloping")
    right = RightBialgebroid(H, L, AlgebraMap(L, H, s_R, name="s_R"),
                             AlgebraMap(L, H, t_R, name="t_R"),
                             delta, eps_R, name="enveloping")
    return HopfAlgebroid(left, right, antipode, name="enveloping QxQ")


# ---------------------------------------------------------------------------
# module algebras over the group instances


def _cyclic_shift_matrix(n: int) -> Matrix:
    return Matrix.from_cols(n, [{(i + 1) % n: ONE} for i in range(n)])


def shift_module_algebra(h: HopfAlgebroid, n: int, side: str,
                         sign: int = 1) -> ModuleAlgebra:
    """A = Q^n with the group generator acting by coordinate shift.

    The generator g acts by sign * shift; for the sign-twisted right
    structure the unit normalization forces sign = eps_R(g).
    """
    if sign != 1 and n != 2:
        raise ValueError("sign-twisted shifts are only consistent for n = 2")
    alg = FiniteAlgebra.product_field(n)
    shift = _cyclic_shift_matrix(n)
    action = [Matrix.identity(n)]
    power = Matrix.identity(n)
    for _ in range(1, n):
        power = power * shift
        action.append(power.scale(sign))
    module = HModule(h, side, n, action, name=f"shift action on Q^{n}")
    return ModuleAlgebra(alg, module, name=f"Q^{n} with shift")


def trivial_module_algebra(h: HopfAlgebroid, alg: FiniteAlgebra,
                           side: str) -> ModuleAlgebra:
    """Any algebra with the counit (trivial) action; needs base Q."""
    char = h.eps_R() if side == RIGHT else h.eps_L()
    if char.nrows != 1:
        raise ValueError("trivial actions need a one-dimensional base")
    action = [Matrix.identity(alg.dim).scale(char.entry(0, i))
              for i in range(h.dim)]
    module = HModule(h, side, alg.dim, action, name=f"trivial action on {alg.name}")
    return ModuleAlgebra(alg, module, name=f"{alg.name} (trivial action)")


# ---------------------------------------------------------------------------
# instance bundles


def instance_trivial() -> InstanceBundle:
    h = hopf_trivial()
    qq = FiniteAlgebra.ground_field()
    right_ma = trivial_module_algebra(h, qq, RIGHT)
    left_ma = trivial_module_algebra(h, qq, LEFT)
    return InstanceBundle(
        name="trivial",
        hopf=h,
        right_module_algebra=right_ma,
        left_module_algebra=left_ma,
        coeff_right=trivial_stable(h, RIGHT),
        coeff_left=trivial_stable(h, LEFT),
        expected={
            "T_dims": {"value": [1, 1, 1, 1, 1], "provenance": "direct count"},
            "lambda_cohomology": {"value": [1, 0, 1, 0], "provenance": "oracle"},
        },
    )


def trivial_with_algebra(alg: FiniteAlgebra) -> InstanceBundle:
    """The trivial Hopf algebroid paired with an arbitrary coefficient algebra."""
    h = hopf_trivial()
    return InstanceBundle(
        name=f"trivial+{alg.name}",
        hopf=h,
        right_module_algebra=trivial_module_algebra(h, alg, RIGHT),
        left_module_algebra=trivial_module_algebra(h, alg, LEFT),
        coeff_right=trivial_stable(h, RIGHT),
        coeff_left=trivial_stable(h, LEFT),
    )


def instance_group(n: int) -> InstanceBundle:
    if n not in (2, 3):
        raise ValueError("shipped group instances have n in {2, 3}")
    h = hopf_group_algebra(n)
    right_ma = shift_module_algebra(h, n, RIGHT)
    # the left orientation is the antipode transport of the right one:
    # g |> a := a <| S(g), i.e. the generator acts by the inverse shift.
    left_module = convert_action_via_antipode(right_ma.module, "right_to_left")
    left_ma = ModuleAlgebra(right_ma.algebra, left_module,
                            name=f"Q^{n} with inverse shift")
    return InstanceBundle(
        name=f"group{n}",
        hopf=h,
        right_module_algebra=right_ma,
        left_module_algebra=left_ma,
        coeff_right=trivial_stable(h, RIGHT),
        coeff_left=trivial_stable(h, LEFT),
        expected={
            "T_dims": {"value": [n ** (k + 1) for k in range(5)],
                       "provenance": "direct count"},
            "Q_dims": {"value": [n ** k for k in range(5)],
                       "provenance": "engine, cross-checked by orbit count"},
        },
    )


def instance_enveloping() -> InstanceBundle:
    h = hopf_enveloping_product_field()
    return InstanceBundle(
        name="enveloping",
        hopf=h,
        expected={
            "base_anti_iso": {"value": "identity carriers",
                              "provenance": "matrix composition"},
            "antipode_order": {"value": 2, "provenance": "flip involution"},
        },
    )


def instance_cm_twist() -> InstanceBundle:
    h = hopf_cm_twist()
    # unit normalization 1 <| g = eps_R(g) 1 forces the sign-twisted shift
    right_ma = shift_module_algebra(h, 2, RIGHT, sign=-1)
    left_module = convert_action_via_antipode(right_ma.module, "right_to_left")
    left_ma = ModuleAlgebra(right_ma.algebra, left_module,
                            name="QxQ with sign-twisted shift (left)")
    return InstanceBundle(
        name="cm_twist",
        hopf=h,
        right_module_algebra=right_ma,
        left_module_algebra=left_ma,
        coeff_right=trivial_stable(h, RIGHT),
        coeff_left=trivial_stable(h, LEFT),
        expected={
            "eps_R_on_generator": {"value": -1, "provenance": "definition"},
            # the sign twist re-signs both the action and eps_R coherently,
            # so the counit eigenspaces agree with the untwisted instance
            "Q_dims": {"value": [2 ** k for k in range(5)],
                       "provenance": "engine"},
        },
    )


BUILTIN_INSTANCES = {
    "trivial": instance_trivial,
    "group2": lambda: instance_group(2),
    "group3": lambda: instance_group(3),
    "enveloping": instance_enveloping,
    "cm_twist": instance_cm_twist,
}


def builtin(name: str) -> InstanceBundle:
    try:
        return BUILTIN_INSTANCES[name]()
    except KeyError:
        raise KeyError(f"unknown builtin instance {name!r}; "
                       f"choose from {sorted(BUILTIN_INSTANCES)}") from None
