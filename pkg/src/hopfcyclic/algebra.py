"""Finite-dimensional unital associative algebras and balanced tensor products.

Algebras are given by structure constants: mult[i][j] is the coordinate
vector of e_i * e_j.  Bimodule actions are stored as one matrix per
basis element of the acting algebra, which is how every formula in the
cyclic machinery applies single elements.

Balanced tensor products over a base algebra B materialize the plain
tensor ambient space and quotient by span{m.b (x) n - m (x) b.n}; the
projection/section pair of the quotient is exactly what the induced-map
machinery needs to push structure maps defined on lifts.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce

from .errors import WellDefinednessError
from .ratlinalg import (
    Matrix,
    ONE,
    QuotientSpace,
    Rat,
    Subspace,
    induced_map,
    quotient,
    vec_from_dense,
)
from .report import CheckReport


def _dense(v, dim):
    out = [Rat(0)] * dim
    for k, c in v.items():
        out[k] = c
    return out


@dataclass
class FiniteAlgebra:
    """Unital associative algebra via structure constants over Q."""

    dim: int
    unit: tuple
    mult: tuple            # mult[i][j] = dense tuple, coordinates of e_i e_j
    name: str = ""

    def __post_init__(self):
        self.unit = tuple(Rat(x) for x in self.unit)
        self.mult = tuple(tuple(tuple(Rat(x) for x in cell) for cell in row)
                          for row in self.mult)
        self._left = None
        self._right = None

    @classmethod
    def from_tables(cls, unit, mult, name=""):
        return cls(dim=len(unit), unit=tuple(unit), mult=mult, name=name)

    @classmethod
    def ground_field(cls) -> "FiniteAlgebra":
        return cls(1, (ONE,), (((ONE,),),), name="Q")

    @classmethod
    def product_field(cls, n: int) -> "FiniteAlgebra":
        """Q x ... x Q with componentwise multiplication."""
        mult = tuple(tuple(tuple(ONE if (i == j == k) else Rat(0) for k in range(n))
                           for j in range(n)) for i in range(n))
        return cls(n, tuple(ONE for _ in range(n)), mult, name=f"Q^{n}")

    @classmethod
    def group_algebra_cyclic(cls, n: int) -> "FiniteAlgebra":
        """Group algebra of Z/n, basis g^0 .. g^(n-1)."""
        mult = tuple(tuple(tuple(ONE if k == (i + j) % n else Rat(0) for k in range(n))
                           for j in range(n)) for i in range(n))
        unit = tuple(ONE if i == 0 else Rat(0) for i in range(n))
        return cls(n, unit, mult, name=f"Q[Z/{n}]")

    @classmethod
    def dual_numbers(cls) -> "FiniteAlgebra":
        """Q[x]/(x^2), basis {1, x}."""
        z = Rat(0)
        mult = (((ONE, z), (z, ONE)), ((z, ONE), (z, z)))
        return cls(2, (ONE, z), mult, name="Q[x]/(x^2)")

    # -- multiplication ------------------------------------------------------

    def unit_vec(self) -> dict:
        return {i: c for i, c in enumerate(self.unit) if c}

    def left_mult(self, i: int) -> Matrix:
        """Matrix of x -> e_i x."""
        if self._left is None:
            self._left = [Matrix.from_cols(self.dim,
                                           [vec_from_dense(self.mult[a][j])
                                            for j in range(self.dim)])
                          for a in range(self.dim)]
        return self._left[i]

    def right_mult(self, j: int) -> Matrix:
        """Matrix of x -> x e_j."""
        if self._right is None:
            self._right = [Matrix.from_cols(self.dim,
                                            [vec_from_dense(self.mult[i][b])
                                             for i in range(self.dim)])
                           for b in range(self.dim)]
        return self._right[j]

    def left_mult_vec(self, v: dict) -> Matrix:
        out = Matrix.zero(self.dim, self.dim)
        for i, c in v.items():
            out = out + self.left_mult(i).scale(c)
        return out

    def right_mult_vec(self, v: dict) -> Matrix:
        out = Matrix.zero(self.dim, self.dim)
        for j, c in v.items():
            out = out + self.right_mult(j).scale(c)
        return out

    def multiply(self, x: dict, y: dict) -> dict:
        out: dict = {}
        for i, a in x.items():
            row = self.mult[i]
            for j, b in y.items():
                coeff = a * b
                for k, c in enumerate(row[j]):
                    if c:
                        nv = out.get(k, Rat(0)) + coeff * c
                        if nv:
                            out[k] = nv
                        else:
                            del out[k]
        return out

    def __repr__(self):
        return f"FiniteAlgebra({self.name or '?'}, dim={self.dim})"


def check_algebra(a: FiniteAlgebra) -> CheckReport:
    """Associativity on all basis triples and two-sided unit on all basis elements."""
    rep = CheckReport(subject=f"algebra {a.name or '?'}")
    unit = a.unit_vec()
    for i in range(a.dim):
        e = {i: ONE}
        rep.check("unit-left", a.multiply(unit, e) == e, (i,))
        rep.check("unit-right", a.multiply(e, unit) == e, (i,))
    for i in range(a.dim):
        for j in range(a.dim):
            ij = vec_from_dense(a.mult[i][j])
            for k in range(a.dim):
                left = a.multiply(ij, {k: ONE})
                right = a.multiply({i: ONE}, vec_from_dense(a.mult[j][k]))
                rep.check("associativity", left == right, (i, j, k),
                          detail=f"(e{i}e{j})e{k} != e{i}(e{j}e{k})")
    return rep


def opposite(a: FiniteAlgebra) -> FiniteAlgebra:
    mult = tuple(tuple(a.mult[j][i] for j in range(a.dim)) for i in range(a.dim))
    return FiniteAlgebra(a.dim, a.unit, mult, name=f"{a.name}^op" if a.name else "op")


# ---------------------------------------------------------------------------
# algebra maps


@dataclass
class AlgebraMap:
    source: FiniteAlgebra
    target: FiniteAlgebra
    matrix: Matrix
    name: str = ""

    def apply(self, v: dict) -> dict:
        return self.matrix.apply(v)

    def __repr__(self):
        return f"AlgebraMap({self.name or '?'})"


def check_algebra_map(f: AlgebraMap) -> CheckReport:
    rep = CheckReport(subject=f"algebra map {f.name or '?'}")
    rep.check("map-unit", f.apply(f.source.unit_vec()) == f.target.unit_vec(), ())
    for i in range(f.source.dim):
        fi = f.apply({i: ONE})
        for j in range(f.source.dim):
            lhs = f.apply(f.source.multiply({i: ONE}, {j: ONE}))
            rhs = f.target.multiply(fi, f.apply({j: ONE}))
            rep.check("map-multiplicative", lhs == rhs, (i, j))
    return rep


def compose_maps(g: AlgebraMap, f: AlgebraMap, name="") -> AlgebraMap:
    return AlgebraMap(f.source, g.target, g.matrix * f.matrix, name=name)


def identity_map(a: FiniteAlgebra) -> AlgebraMap:
    return AlgebraMap(a, a, Matrix.identity(a.dim), name=f"id_{a.name}")


# ---------------------------------------------------------------------------
# bimodules


@dataclass
class Bimodule:
    """Space with commuting left/right algebra actions, one matrix per basis element."""

    left_algebra: FiniteAlgebra
    right_algebra: FiniteAlgebra
    dim: int
    left_action: list      # left_action[i]: matrix of m -> e_i . m
    right_action: list     # right_action[j]: matrix of m -> m . e_j
    name: str = ""

    def left_of(self, v: dict) -> Matrix:
        out = Matrix.zero(self.dim, self.dim)
        for i, c in v.items():
            out = out + self.left_action[i].scale(c)
        return out

    def right_of(self, v: dict) -> Matrix:
        out = Matrix.zero(self.dim, self.dim)
        for j, c in v.items():
            out = out + self.right_action[j].scale(c)
        return out


def check_bimodule(b: Bimodule) -> CheckReport:
    rep = CheckReport(subject=f"bimodule {b.name or '?'}")
    ident = Matrix.identity(b.dim)
    rep.check("left-action-unital", b.left_of(b.left_algebra.unit_vec()) == ident, ())
    rep.check("right-action-unital", b.right_of(b.right_algebra.unit_vec()) == ident, ())
    la, ra = b.left_algebra, b.right_algebra
    for i in range(la.dim):
        for j in range(la.dim):
            prod = b.left_of(la.multiply({i: ONE}, {j: ONE}))
            rep.check("left-action-associative",
                      b.left_action[i] * b.left_action[j] == prod, (i, j))
    for i in range(ra.dim):
        for j in range(ra.dim):
            prod = b.right_of(ra.multiply({i: ONE}, {j: ONE}))
            rep.check("right-action-associative",
                      b.right_action[j] * b.right_action[i] == prod, (i, j))
    for i in range(la.dim):
        for j in range(ra.dim):
            rep.check("actions-commute",
                      b.left_action[i] * b.right_action[j]
                      == b.right_action[j] * b.left_action[i], (i, j))
    return rep


def regular_bimodule(a: FiniteAlgebra) -> Bimodule:
    return Bimodule(a, a, a.dim,
                    [a.left_mult(i) for i in range(a.dim)],
                    [a.right_mult(j) for j in range(a.dim)],
                    name=f"{a.name} over itself")


def ground_bimodule(dim: int, name="") -> Bimodule:
    """A space as a bimodule over Q: both actions scalar."""
    qq = FiniteAlgebra.ground_field()
    ident = Matrix.identity(dim)
    return Bimodule(qq, qq, dim, [ident], [ident], name=name)


# ---------------------------------------------------------------------------
# tensor index helpers


def tensor_encode(dims, idx) -> int:
    out = 0
    for d, i in zip(dims, idx):
        out = out * d + i
    return out


def tensor_decode(dims, code) -> tuple:
    out = []
    for d in reversed(dims):
        out.append(code % d)
        code //= d
    return tuple(reversed(out))


def leg_operator(dims, leg: int, mat: Matrix) -> Matrix:
    """id (x) ... (x) mat (x) ... (x) id acting on the given tensor leg."""
    if mat.nrows != dims[leg] or mat.ncols != dims[leg]:
        raise ValueError("leg operator must be square of the leg dimension")
    total = 1
    for d in dims:
        total *= d
    stride = 1
    for d in dims[leg + 1:]:
        stride *= d
    cols = []
    for code in range(total):
        i = (code // stride) % dims[leg]
        base = code - i * stride
        col = {}
        for i2, c in mat.cols[i].items():
            col[base + i2 * stride] = c
        cols.append(col)
    return Matrix(total, total, cols)


def tensor_product_vec(dims, vecs) -> dict:
    """Expand a pure tensor of sparse factor vectors into ambient coordinates."""
    out = {0: ONE}
    for d, v in zip(dims, vecs):
        nxt: dict = {}
        for code, c in out.items():
            base = code * d
            for i, x in v.items():
                nxt[base + i] = c * x
        out = nxt
        if not out:
            return {}
    return out


# ---------------------------------------------------------------------------
# balanced tensor products


@dataclass
class BalancedTensor:
    """(m (x)_B n): quotient of the plain tensor by the middle relations."""

    left_factor: Bimodule
    right_factor: Bimodule
    base: FiniteAlgebra
    total: QuotientSpace
    name: str = ""

    @property
    def ambient_dim(self) -> int:
        return self.total.ambient_dim

    @property
    def dim(self) -> int:
        return self.total.dim


def middle_relations(dims, junction, right_acts, left_acts) -> list:
    """Relation vectors (x.b (x) y) - (x (x) b.y) at one tensor junction.

    right_acts[b] acts on factor `junction`, left_acts[b] on factor
    junction+1; b runs over the base algebra basis.
    """
    out = []
    nbase = len(right_acts)
    for b in range(nbase):
        op = leg_operator(dims, junction, right_acts[b]) \
            - leg_operator(dims, junction + 1, left_acts[b])
        for col in op.cols:
            if col:
                out.append(col)
    return out


def balanced_tensor(m: Bimodule, n: Bimodule, base: FiniteAlgebra,
                    name="") -> BalancedTensor:
    """Quotient (m (x) n) / span{ m.b (x) n - m (x) b.n } over base basis b."""
    dims = [m.dim, n.dim]
    rels = middle_relations(dims, 0,
                            [m.right_of({b: ONE}) for b in range(base.dim)],
                            [n.left_of({b: ONE}) for b in range(base.dim)])
    killed = Subspace.from_vectors(m.dim * n.dim, rels)
    return BalancedTensor(m, n, base, quotient(m.dim * n.dim, killed), name=name)


def lift_map_to_tensor(f: Matrix, g: Matrix, src: BalancedTensor,
                       dst: BalancedTensor) -> Matrix:
    """Induced map on quotient coordinates of f (x) g, if it descends."""
    return induced_map(f.kron(g), src.total, dst.total)


def balanced_as_bimodule(bt: BalancedTensor) -> Bimodule:
    """Residual outer bimodule on a balanced tensor.

    The outer left action of the left factor's left algebra and the outer
    right action of the right factor's right algebra descend to the
    quotient; this materializes them so balanced tensors can be chained
    two factors at a time.
    """
    dims = [bt.left_factor.dim, bt.right_factor.dim]
    la = bt.left_factor.left_algebra
    ra = bt.right_factor.right_algebra
    left = [induced_map(leg_operator(dims, 0, bt.left_factor.left_action[i]),
                        bt.total, bt.total) for i in range(la.dim)]
    right = [induced_map(leg_operator(dims, 1, bt.right_factor.right_action[j]),
                         bt.total, bt.total) for j in range(ra.dim)]
    return Bimodule(la, ra, bt.dim, left, right, name=bt.name)


@dataclass
class TensorChain:
    """Multi-factor balanced tensor, materialized as one quotient.

    factors are listed left to right; junction j carries the relations
    between factors j and j+1.  Quotient coordinates are deterministic
    (canonical RREF of the total relation span).
    """

    factor_dims: list
    total: QuotientSpace
    name: str = ""

    @property
    def ambient_dim(self) -> int:
        return self.total.ambient_dim

    @property
    def dim(self) -> int:
        return self.total.dim

    def encode(self, idx) -> int:
        return tensor_encode(self.factor_dims, idx)

    def decode(self, code) -> tuple:
        return tensor_decode(self.factor_dims, code)


def tensor_chain(factor_dims, junction_actions, name="") -> TensorChain:
    """Build a left-to-right chain X_0 (x)_B ... (x)_B X_k as one quotient.

    junction_actions[j] = (right_acts, left_acts): per-base-basis action
    matrices on factors j and j+1 respectively.
    """
    total = 1
    for d in factor_dims:
        total *= d
    rels = []
    for j, (right_acts, left_acts) in enumerate(junction_actions):
        rels.extend(middle_relations(factor_dims, j, right_acts, left_acts))
    killed = Subspace.from_vectors(total, rels)
    return TensorChain(list(factor_dims), quotient(total, killed), name=name)
