"""Para-cyclic machinery and the cyclic modules attached to a module algebra.

The tower of spaces behind every construction is

    plain tensor ambient  ->  T coordinates        (balanced-tensor quotient)
                          ->  Q^H coordinates      (commutator coequalizer)
                          ->  Q subspace           (counit eigenspace + equalizer)

with every structure map materialized as an exact matrix at each stage.
Maps defined by formulas on pure tensors are built on the ambient and
pushed down with explicit well-definedness checks at each stage: a
failed descent means a violated identity in the instance, and raises.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import TensorChain, tensor_chain, tensor_product_vec
from .algebroid import LEFT, RIGHT, HopfAlgebroid
from .errors import CyclicityError, RestrictionError, WellDefinednessError
from .modules import ModuleAlgebra, StableModuleComodule, check_comodule, \
    check_module_algebra, check_stability
from .ratlinalg import (
    Matrix,
    ONE,
    QuotientSpace,
    Rat,
    Subspace,
    induced_map,
    restrict_map,
    subspace_intersect,
    subspace_sum,
    vec_add,
    vec_scale,
)
from .report import CheckReport


# ---------------------------------------------------------------------------
# graded carriers


@dataclass
class ParaCyclicModule:
    """Truncated (para-)cyclic module, optionally with a right H-action.

    faces[n] (n >= 1) holds [d_0 .. d_n] : X_n -> X_{n-1};
    degeneracies[n] (n < n_max) holds [s_0 .. s_n] : X_n -> X_{n+1};
    tau[n] : X_n -> X_n; rho[n][i] is the action of the i-th H-basis
    element (None for plain modules without H-action).

    pseudo = True exempts the top face and tau from H-linearity;
    para = True drops the tau^(n+1) = id requirement.
    """

    n_max: int
    dims: list
    faces: list
    degeneracies: list
    tau: list
    rho: list | None = None
    hopf: HopfAlgebroid | None = None
    para: bool = False
    pseudo: bool = False
    name: str = ""

    def dim(self, n: int) -> int:
        return self.dims[n]

    def rho_of(self, n: int, h_vec: dict) -> Matrix:
        out = Matrix.zero(self.dims[n], self.dims[n])
        for i, c in h_vec.items():
            out = out + self.rho[n][i].scale(c)
        return out


@dataclass
class DegreeSpace:
    """Coordinates of one degree: ambient chain, then optional reductions."""

    chain: TensorChain
    kq: QuotientSpace | None = None        # over T coordinates
    sub: Subspace | None = None            # inside the kq (or T) coordinates

    @property
    def dim(self) -> int:
        if self.sub is not None:
            return self.sub.dim
        if self.kq is not None:
            return self.kq.dim
        return self.chain.dim

    def from_T(self) -> Matrix:
        """Final coordinates -> T coordinates (a section)."""
        out = Matrix.identity(self.chain.dim)
        if self.kq is not None:
            out = self.kq.section
            if self.sub is not None:
                out = out * self.sub.inclusion_matrix()
        elif self.sub is not None:
            out = self.sub.inclusion_matrix()
        return out

    def to_T_coords(self) -> Matrix:
        """T coordinates -> final coordinates (valid on the image)."""
        out = Matrix.identity(self.chain.dim)
        if self.kq is not None:
            out = self.kq.projection
            if self.sub is not None:
                out = self.sub.coords_matrix() * out
        elif self.sub is not None:
            out = self.sub.coords_matrix()
        return out


def push_T_map(f: Matrix, src: DegreeSpace, dst: DegreeSpace) -> Matrix:
    """Push a map on T coordinates down both reductions, with checks."""
    g = f
    if (src.kq is None) != (dst.kq is None):
        raise ValueError("mismatched tower stages")
    if src.kq is not None:
        g = induced_map(g, src.kq, dst.kq)
    if src.sub is not None or dst.sub is not None:
        s = src.sub if src.sub is not None else Subspace.full(g.ncols)
        d = dst.sub if dst.sub is not None else Subspace.full(g.nrows)
        g = restrict_map(g, s, d)
    return g


def push_ambient_map(f: Matrix, src: DegreeSpace, dst: DegreeSpace) -> Matrix:
    """Push an ambient-coordinates map down the full tower, with checks."""
    f_t = induced_map(f, src.chain.total, dst.chain.total)
    return push_T_map(f_t, src, dst)


@dataclass
class ModuleTower:
    """A (para-)cyclic module together with its coordinate tower."""

    module: ParaCyclicModule
    spaces: list
    context: dict = field(default_factory=dict)


# ---------------------------------------------------------------------------
# T(A, M): the para-cyclic module of a right module algebra


def _validate_T_inputs(A: ModuleAlgebra, M: StableModuleComodule) -> None:
    problems = []
    rep = check_module_algebra(A)
    if not rep.ok:
        problems.append(rep.summary())
    rep = check_stability(M)
    if not rep.ok:
        problems.append(rep.summary())
    rep = check_comodule(M.comodule)
    if not rep.ok:
        problems.append(rep.summary())
    if problems:
        raise ValueError("invalid T-module inputs:\n" + "\n".join(problems))


def build_T_module_algebra(A: ModuleAlgebra, M: StableModuleComodule,
                           n_max: int, validate: bool = True) -> ModuleTower:
    """The para-cyclic right H-module on A^(x n+1) (x)_R M, degrees <= n_max.

    Faces multiply adjacent tensor legs (the last face wraps through the
    coaction), the cyclic operator rotates the last algebra leg to the
    front through the coaction, and H acts diagonally through the
    iterated right coproduct with the first leg on the coefficients.
    """
    if A.side != RIGHT or M.module.side != RIGHT:
        raise ValueError("the module-algebra construction needs right-sided data")
    if validate:
        _validate_T_inputs(A, M)
    h = A.module.hopf
    alg = A.algebra
    da, dm, dh = alg.dim, M.dim, h.dim

    a_right_R = A.module.base_action_family("right_R")
    a_left_R = A.module.base_action_family("left_R")
    m_left_R = M.module.base_action_family("left_R")

    spaces = []
    for n in range(n_max + 1):
        dims = [da] * (n + 1) + [dm]
        junctions = [(a_right_R, a_left_R) for _ in range(n)]
        junctions.append((a_right_R, m_left_R))
        spaces.append(DegreeSpace(tensor_chain(dims, junctions)))

    rho_terms = {}
    m_act_col = [[M.module.action[u].cols[m] for m in range(dm)] for u in range(dh)]
    a_act_col = [[A.module.action[u].cols[a] for a in range(da)] for u in range(dh)]
    sinv_cols = h.antipode_inverse.cols

    def basis(i):
        return {i: ONE}

    faces = [None]
    degeneracies = []
    taus = []
    rhos = []
    for n in range(n_max + 1):
        space = spaces[n]
        dims = space.chain.factor_dims
        amb = space.chain.ambient_dim

        # faces
        if n >= 1:
            dmaps = []
            tgt = spaces[n - 1]
            for i in range(n):
                cols = []
                for code in range(amb):
                    idx = space.chain.decode(code)
                    merged = alg.multiply(basis(idx[i]), basis(idx[i + 1]))
                    legs = [basis(k) for k in idx[:i]] + [merged] \
                        + [basis(k) for k in idx[i + 2:]]
                    cols.append(tensor_product_vec(tgt.chain.factor_dims, legs))
                dmaps.append(Matrix.from_cols(tgt.chain.ambient_dim, cols))
            # top face: (a_n m^[1]) a_0 (x) a_1 ... (x) m^[0]
            cols = []
            for code in range(amb):
                idx = space.chain.decode(code)
                out: dict = {}
                for coeff, m2, hh in M.comodule.lift_terms("R", idx[n]):
                    acted = a_act_col[hh][idx[n]]
                    front = alg.multiply(acted, basis(idx[0]))
                    legs = [front] + [basis(k) for k in idx[1:n]] + [basis(m2)]
                    term = tensor_product_vec(tgt.chain.factor_dims, legs)
                    out = vec_add(out, vec_scale(coeff, term))
                cols.append(out)
            dmaps.append(Matrix.from_cols(tgt.chain.ambient_dim, cols))
            faces.append([push_ambient_map(m, space, tgt) for m in dmaps])

        # degeneracies
        if n < n_max:
            smaps = []
            tgt = spaces[n + 1]
            unit = alg.unit_vec()
            for i in range(n + 1):
                cols = []
                for code in range(amb):
                    idx = space.chain.decode(code)
                    legs = [basis(k) for k in idx[:i + 1]] + [unit] \
                        + [basis(k) for k in idx[i + 1:]]
                    cols.append(tensor_product_vec(tgt.chain.factor_dims, legs))
                smaps.append(Matrix.from_cols(tgt.chain.ambient_dim, cols))
            degeneracies.append([push_ambient_map(m, space, tgt) for m in smaps])

        # cyclic operator: a_n m^[1] (x) a_0 ... a_{n-1} (x) m^[0]
        cols = []
        for code in range(amb):
            idx = space.chain.decode(code)
            out = {}
            for coeff, m2, hh in M.comodule.lift_terms("R", idx[n]):
                acted = a_act_col[hh][idx[n]]
                legs = [acted] + [basis(k) for k in idx[:n]] + [basis(m2)]
                term = tensor_product_vec(dims, legs)
                out = vec_add(out, vec_scale(coeff, term))
            cols.append(out)
        taus.append(push_ambient_map(Matrix.from_cols(amb, cols), space, space))

        # right H-action: legs 2..n+2 on the algebra factors, leg 1 on M
        per_h = []
        for hv in range(dh):
            cols = []
            terms = h.sweedler_terms(RIGHT, hv, n + 2)
            for code in range(amb):
                idx = space.chain.decode(code)
                out = {}
                for coeff, legs_h in terms:
                    legs = [a_act_col[legs_h[i + 1]][idx[i]] for i in range(n + 1)]
                    legs.append(m_act_col[legs_h[0]][idx[n + 1]])
                    term = tensor_product_vec(dims, legs)
                    out = vec_add(out, vec_scale(coeff, term))
                cols.append(out)
            per_h.append(push_ambient_map(Matrix.from_cols(amb, cols), space, space))
        rhos.append(per_h)

    module = ParaCyclicModule(
        n_max=n_max,
        dims=[s.dim for s in spaces],
        faces=faces,
        degeneracies=degeneracies,
        tau=taus,
        rho=rhos,
        hopf=h,
        para=True,
        pseudo=False,
        name=f"T({A.name or 'A'}, {M.name or 'M'})",
    )
    return ModuleTower(module, spaces, context={"A": A, "M": M, "kind": "algebra"})


def tau_inverse(tower: ModuleTower, n: int) -> Matrix:
    """Inverse cyclic operator from the explicit formula
    a_1 (x) ... (x) a_n (x) a_0 S^-1(m_[1]) (x) m_[0], verified exactly."""
    if tower.context.get("kind") != "algebra":
        raise ValueError("tau_inverse applies to module-algebra towers")
    A: ModuleAlgebra = tower.context["A"]
    M: StableModuleComodule = tower.context["M"]
    h = A.module.hopf
    space = tower.spaces[n]
    amb = space.chain.ambient_dim
    dims = space.chain.factor_dims
    sinv = h.antipode_inverse
    cols = []
    for code in range(amb):
        idx = space.chain.decode(code)
        out: dict = {}
        for coeff, m2, hh in M.comodule.lift_terms("L", idx[n + 1]):
            acted = A.module.act(sinv.apply({hh: ONE})).apply({idx[0]: ONE})
            legs = [{k: ONE} for k in idx[1:n + 1]] + [acted, {m2: ONE}]
            out = vec_add(out, vec_scale(coeff, tensor_product_vec(dims, legs)))
        cols.append(out)
    inv = push_ambient_map(Matrix.from_cols(amb, cols), space, space)
    tau = tower.module.tau[n]
    ident = Matrix.identity(tower.module.dims[n])
    if tau * inv != ident or inv * tau != ident:
        raise CyclicityError(
            f"the coaction-twisted inverse fails tau.tau^-1 = id at degree {n}; "
            "the coefficient data is not a valid stable module/comodule")
    return inv


# ---------------------------------------------------------------------------
# Q^H: coequalize the commutators [tau^j, rho]


def tau_order(tau: Matrix, bound: int) -> int | None:
    """Multiplicative order of tau, or None if it exceeds the bound."""
    ident = Matrix.identity(tau.nrows)
    power = tau
    for r in range(1, bound + 1):
        if power == ident:
            return r
        power = power * tau
    return None


def commutator_image(tau_pow: Matrix, rho_n: list) -> list:
    """Column generators of im(tau^j rho - rho (tau^j (x) id))."""
    gens = []
    for act in rho_n:
        diff = tau_pow * act - act * tau_pow
        for col in diff.cols:
            if col:
                gens.append(col)
    return gens


def build_QH(tower: ModuleTower, tau_order_bound: int = 64,
             variant: str = "sum") -> ModuleTower:
    """Quotient degreewise by the commutators of tau-powers with the action.

    With variant="sum" (the default) the killed subspace is the SUM of the
    commutator images over the power set J; "intersection" intersects
    them instead.  When tau has finite order r (searched up to the bound)
    J = {1, .., r-1} exactly (negative powers repeat these); otherwise
    powers are accumulated in both directions until the subspace is
    stable for dim-many consecutive steps, and the bound used is recorded
    in the tower context.
    """
    if variant not in ("sum", "intersection"):
        raise ValueError("variant must be 'sum' or 'intersection'")
    mod = tower.module
    if mod.rho is None or mod.hopf is None:
        raise ValueError("Q^H needs a module with an H-action")
    spaces = []
    policy_notes = []
    for n in range(mod.n_max + 1):
        dim = mod.dims[n]
        tau = mod.tau[n]
        order = tau_order(tau, tau_order_bound)
        images = []
        if order is not None:
            power = Matrix.identity(dim)
            for _ in range(1, order):
                power = power * tau
                images.append(Subspace.from_vectors(
                    dim, commutator_image(power, mod.rho[n])))
            policy_notes.append((n, "order", order))
        else:
            # documented heuristic: grow until stable for dim consecutive steps
            tau_inv = tau.inverse()
            acc = Subspace.zero(dim)
            power, power_inv = Matrix.identity(dim), Matrix.identity(dim)
            stable = 0
            j = 0
            while stable < max(dim, 1):
                j += 1
                power = power * tau
                power_inv = power_inv * tau_inv
                step = Subspace.from_vectors(
                    dim, commutator_image(power, mod.rho[n])
                    + commutator_image(power_inv, mod.rho[n]))
                images.append(step)
                new = subspace_sum(acc, step)
                stable = stable + 1 if new.dim == acc.dim else 0
                acc = new
            policy_notes.append((n, "heuristic-powers", j))
        if variant == "sum":
            killed = Subspace.zero(dim)
            for img in images:
                killed = subspace_sum(killed, img)
        else:
            killed = Subspace.full(dim)
            for img in images:
                killed = subspace_intersect(killed, img)
            if not images:
                killed = Subspace.zero(dim)
        old = tower.spaces[n]
        spaces.append(DegreeSpace(old.chain,
                                  kq=QuotientSpace.build(dim, killed),
                                  sub=None))

    new_mod = _push_structure(mod, tower.spaces, spaces,
                              name=f"Q^H[{mod.name}]", para=True, pseudo=False)
    # on the quotient every tau power commutes with the action
    for n in range(new_mod.n_max + 1):
        for act in new_mod.rho[n]:
            if new_mod.tau[n] * act != act * new_mod.tau[n]:
                raise WellDefinednessError(
                    "tau is not H-linear on the commutator quotient; "
                    "the power set did not exhaust the commutators")
    out = ModuleTower(new_mod, spaces, context=dict(tower.context))
    out.context["qh_policy"] = policy_notes
    out.context["qh_variant"] = variant
    return out


def _push_structure(mod: ParaCyclicModule, old_spaces, new_spaces, name,
                    para, pseudo) -> ParaCyclicModule:
    """Push every structure map of `mod` through updated degree spaces."""

    # maps of `mod` live in old final coordinates; express them on T coords
    def on_T(f, n_src, n_dst):
        return old_spaces[n_dst].from_T() * f * old_spaces[n_src].to_T_coords()

    faces = [None]
    for n in range(1, mod.n_max + 1):
        faces.append([push_T_map(on_T(d, n, n - 1), new_spaces[n], new_spaces[n - 1])
                      for d in mod.faces[n]])
    degeneracies = []
    for n in range(mod.n_max):
        degeneracies.append([push_T_map(on_T(s, n, n + 1), new_spaces[n],
                                        new_spaces[n + 1])
                             for s in mod.degeneracies[n]])
    taus = [push_T_map(on_T(mod.tau[n], n, n), new_spaces[n], new_spaces[n])
            for n in range(mod.n_max + 1)]
    rhos = None
    if mod.rho is not None:
        rhos = [[push_T_map(on_T(a, n, n), new_spaces[n], new_spaces[n])
                 for a in mod.rho[n]] for n in range(mod.n_max + 1)]
    return ParaCyclicModule(mod.n_max, [s.dim for s in new_spaces], faces,
                            degeneracies, taus, rhos, mod.hopf,
                            para=para, pseudo=pseudo, name=name)


# ---------------------------------------------------------------------------
# Q: the counit-eigenspace cyclic module


def counit_eigen_subspace(mod: ParaCyclicModule, n: int) -> Subspace:
    """Largest subspace where the action factors through s_R . eps_R."""
    h = mod.hopf
    rows = []
    for i in range(h.dim):
        scalar_act = mod.rho_of(n, h.s_eps_R().apply({i: ONE}))
        diff = mod.rho[n][i] - scalar_act
        rows.extend(r for r in diff.row_vecs() if r)
    return Matrix.from_rows(mod.dims[n], rows).kernel()


def cyclic_reduction(tower: ModuleTower, include_equalizer: bool = False,
                     name: str | None = None) -> ModuleTower:
    """Restrict a Q^H tower to its cyclic part.

    The subspace is the joint counit eigenspace of the H-action (where
    v h = v eps_R(h)); with include_equalizer=True it is additionally
    intersected with ker(tau^(n+1) - id) degreewise.  On valid stable
    input the equalizer step removes nothing (the eigenspace is already
    cyclic); tau^(n+1) = id is asserted on the result either way.
    """
    mod = tower.module
    spaces = []
    for n in range(mod.n_max + 1):
        sub = counit_eigen_subspace(mod, n)
        if include_equalizer:
            tau_pow = Matrix.identity(mod.dims[n])
            for _ in range(n + 1):
                tau_pow = tau_pow * mod.tau[n]
            eq = (tau_pow - Matrix.identity(mod.dims[n])).kernel()
            sub = subspace_intersect(sub, eq)
        old = tower.spaces[n]
        spaces.append(DegreeSpace(old.chain, kq=old.kq, sub=sub))
    try:
        new_mod = _push_structure(mod, tower.spaces, spaces,
                                  name=name or f"Q[{mod.name}]",
                                  para=False, pseudo=False)
    except RestrictionError as exc:
        raise RestrictionError(
            f"a structure map does not preserve the cyclic subspace: {exc}") from exc
    for n in range(new_mod.n_max + 1):
        power = Matrix.identity(new_mod.dims[n])
        for _ in range(n + 1):
            power = power * new_mod.tau[n]
        if power != Matrix.identity(new_mod.dims[n]):
            raise CyclicityError(
                f"tau^(n+1) != id on the counit eigenspace at degree {n}; "
                "the coefficients are not stable")
    out = ModuleTower(new_mod, spaces, context=dict(tower.context))
    return out


def build_Q_algebra(qh_tower: ModuleTower) -> ModuleTower:
    """The equivariant cyclic module of a module-algebra pair."""
    return cyclic_reduction(qh_tower, include_equalizer=False)


# ---------------------------------------------------------------------------
# C = Q (x)_H R: the plain Hopf-cyclic module


def build_hopf_cyclic(q_tower: ModuleTower) -> ModuleTower:
    """Tensor the equivariant cyclic module with R over H.

    C_n = Q_n (x) R / span{ q.h (x) r - q (x) h.r } with
    h.r := eps_R(h s_R(r)); the structure maps descend degreewise.
    The result is a plain cyclic module (no H-action).
    """
    mod = q_tower.module
    h = mod.hopf
    r_alg = h.base_right
    dr = r_alg.dim
    spaces = []
    new_dims = []
    quots = []
    for n in range(mod.n_max + 1):
        dq = mod.dims[n]
        rels = []
        for hi in range(h.dim):
            acted = mod.rho[n][hi]
            hr_cols = [h.eps_R().apply(
                h.total.multiply({hi: ONE}, h.s_R().apply({ri: ONE})))
                for ri in range(dr)]
            for qi in range(dq):
                qh_v = acted.cols[qi]
                for ri in range(dr):
                    left = {k * dr + ri: c for k, c in qh_v.items()}
                    right = {qi * dr + k: c for k, c in hr_cols[ri].items()}
                    rel = vec_add(left, vec_scale(Rat(-1), right))
                    if rel:
                        rels.append(rel)
        killed = Subspace.from_vectors(dq * dr, rels)
        quots.append(QuotientSpace.build(dq * dr, killed))
        new_dims.append(quots[-1].dim)

    ident_r = Matrix.identity(dr)

    def push(f, n_src, n_dst):
        return induced_map(f.kron(ident_r), quots[n_src], quots[n_dst])

    faces = [None]
    for n in range(1, mod.n_max + 1):
        faces.append([push(d, n, n - 1) for d in mod.faces[n]])
    degeneracies = [[push(s, n, n + 1) for s in mod.degeneracies[n]]
                    for n in range(mod.n_max)]
    taus = [push(mod.tau[n], n, n) for n in range(mod.n_max + 1)]
    new_mod = ParaCyclicModule(mod.n_max, new_dims, faces, degeneracies, taus,
                               rho=None, hopf=None, para=False, pseudo=False,
                               name=f"C[{mod.name}]")
    ctx = dict(q_tower.context)
    ctx["hopf_cyclic_quotients"] = quots
    return ModuleTower(new_mod, q_tower.spaces, context=ctx)


# ---------------------------------------------------------------------------
# the interval-like cyclic module CC(LS)


def build_CCLS(h: HopfAlgebroid, n_max: int) -> ParaCyclicModule:
    """The cyclic H-module of the walk category on two objects.

    Basis of degree n: object tuples (W_0, .., W_n) in {0,1}^(n+1), one
    basis vector per cyclically composable string (each hom-set of the
    underlying two-object groupoid is a single morphism).  Faces drop a
    tuple entry, degeneracies duplicate one, the cyclic operator rotates,
    and H acts by the counit scalars of the twisted legs.  Requires a
    one-dimensional left base.
    """
    if h.base_left.dim != 1:
        raise ValueError("the interval module needs a one-dimensional base")

    def codes(n):
        return 1 << (n + 1)

    def tup(code, n):
        return tuple((code >> (n - k)) & 1 for k in range(n + 1))

    def code_of(t):
        c = 0
        for w in t:
            c = (c << 1) | w
        return c

    dims = [codes(n) for n in range(n_max + 1)]
    faces = [None]
    for n in range(1, n_max + 1):
        per = []
        for i in range(n):
            cols = []
            for code in range(codes(n)):
                t = tup(code, n)
                nt = t[:i + 1] + t[i + 2:]
                cols.append({code_of(nt): ONE})
            per.append(Matrix(codes(n - 1), codes(n), cols))
        cols = []
        for code in range(codes(n)):
            t = tup(code, n)
            nt = (t[n],) + t[1:n]
            cols.append({code_of(nt): ONE})
        per.append(Matrix(codes(n - 1), codes(n), cols))
        faces.append(per)
    degeneracies = []
    for n in range(n_max):
        per = []
        for i in range(n + 1):
            cols = []
            for code in range(codes(n)):
                t = tup(code, n)
                if i < n:
                    nt = t[:i + 1] + (t[i + 1],) + t[i + 1:]
                else:
                    nt = t + (t[0],)
                cols.append({code_of(nt): ONE})
            per.append(Matrix(codes(n + 1), codes(n), cols))
        degeneracies.append(per)
    taus = []
    for n in range(n_max + 1):
        cols = []
        for code in range(codes(n)):
            t = tup(code, n)
            nt = (t[n],) + t[:n]
            cols.append({code_of(nt): ONE})
        taus.append(Matrix(codes(n), codes(n), cols))
    # H acts through counit scalars of the inverse-antipode-twisted legs
    eps_sinv = h.eps_L() * h.antipode_inverse
    rhos = []
    for n in range(n_max + 1):
        per = []
        for hv in range(h.dim):
            scal = Rat(0)
            for coeff, legs in h.sweedler_terms(LEFT, hv, n + 2):
                prod = coeff
                for u in legs:
                    prod *= eps_sinv.entry(0, u)
                scal += prod
            per.append(Matrix.identity(codes(n)).scale(scal))
        rhos.append(per)
    return ParaCyclicModule(n_max, dims, faces, degeneracies, taus, rhos, h,
                            para=False, pseudo=False, name="CC(LS)")


def point_cyclic_module(h: HopfAlgebroid | None, n_max: int) -> ParaCyclicModule:
    """One-dimensional cyclic module in every degree; unit for the tensor."""
    ident = Matrix.identity(1)
    rhos = None
    if h is not None:
        rhos = [[ident.scale(h.eps_R().apply({i: ONE}).get(0, Rat(0)))
                 for i in range(h.dim)] for _ in range(n_max + 1)]
    return ParaCyclicModule(
        n_max, [1] * (n_max + 1),
        [None] + [[ident for _ in range(n + 1)] for n in range(1, n_max + 1)],
        [[ident for _ in range(n + 1)] for n in range(n_max)],
        [ident for _ in range(n_max + 1)], rhos, h,
        para=False, pseudo=False, name="point")


def tensor_with_interval(x: ParaCyclicModule, cc: ParaCyclicModule,
                         name="") -> ParaCyclicModule:
    """Degreewise tensor with diagonal structure maps; H acts on x only."""
    if x.n_max != cc.n_max:
        raise ValueError("degree ranges differ")
    n_max = x.n_max
    dims = [x.dims[n] * cc.dims[n] for n in range(n_max + 1)]
    faces = [None]
    for n in range(1, n_max + 1):
        faces.append([x.faces[n][i].kron(cc.faces[n][i]) for i in range(n + 1)])
    degeneracies = [[x.degeneracies[n][i].kron(cc.degeneracies[n][i])
                     for i in range(n + 1)] for n in range(n_max)]
    taus = [x.tau[n].kron(cc.tau[n]) for n in range(n_max + 1)]
    rhos = None
    if x.rho is not None:
        rhos = [[a.kron(Matrix.identity(cc.dims[n])) for a in x.rho[n]]
                for n in range(n_max + 1)]
    return ParaCyclicModule(n_max, dims, faces, degeneracies, taus, rhos,
                            x.hopf, para=x.para, pseudo=x.pseudo,
                            name=name or f"{x.name} (x) {cc.name}")


def edge_inclusion(x: ParaCyclicModule, cc: ParaCyclicModule,
                   corner_index_per_degree) -> list:
    """Degreewise maps x -> x (x) cc picking a fixed cc basis vector."""
    out = []
    for n in range(x.n_max + 1):
        j = corner_index_per_degree(n)
        cols = [{i * cc.dims[n] + j: ONE} for i in range(x.dims[n])]
        out.append(Matrix(x.dims[n] * cc.dims[n], x.dims[n], cols))
    return out


def interval_edges(x: ParaCyclicModule, cc: ParaCyclicModule):
    """The two edge inclusions of the interval tensor (constant tuples)."""
    eps0 = edge_inclusion(x, cc, lambda n: 0)
    eps1 = edge_inclusion(x, cc, lambda n: (1 << (n + 1)) - 1)
    return eps0, eps1


# ---------------------------------------------------------------------------
# structural checks


def check_paracyclic(x: ParaCyclicModule) -> CheckReport:
    """Simplicial, cyclic-compatibility and conjugation identities, tau
    invertibility, and H-linearity with the pseudo exemptions."""
    rep = CheckReport(subject=x.name or "cyclic-type module")
    n_max = x.n_max
    for n in range(1, n_max + 1):
        d = x.faces[n]
        if n >= 2:
            dprev = x.faces[n - 1]
            for j in range(n + 1):
                for i in range(j):
                    rep.check("simplicial-dd",
                              dprev[i] * d[j] == dprev[j - 1] * d[i], (n, i, j))
    for n in range(n_max - 1):
        s = x.degeneracies[n]
        snext = x.degeneracies[n + 1]
        for j in range(n + 1):
            for i in range(j + 1):
                rep.check("simplicial-ss",
                          snext[j + 1] * s[i] == snext[i] * s[j], (n, i, j))
    for n in range(n_max):
        s = x.degeneracies[n]
        d = x.faces[n + 1]
        ident = Matrix.identity(x.dims[n])
        for j in range(n + 1):
            for i in range(n + 2):
                prod = d[i] * s[j]
                if i == j or i == j + 1:
                    rep.check("simplicial-ds-identity", prod == ident, (n, i, j))
                elif i < j:
                    rep.check("simplicial-ds-low",
                              prod == x.degeneracies[n - 1][j - 1] * x.faces[n][i],
                              (n, i, j))
                else:
                    rep.check("simplicial-ds-high",
                              prod == x.degeneracies[n - 1][j] * x.faces[n][i - 1],
                              (n, i, j))
    # tau invertibility and conjugation identities
    tau_invs = []
    for n in range(n_max + 1):
        try:
            tau_invs.append(x.tau[n].inverse())
            rep.record("tau-invertible")
        except ValueError:
            rep.fail("tau-invertible", (n,))
            return rep
    for n in range(1, n_max + 1):
        powers_prev = _powers(x.tau[n - 1], n + 1)
        inv_powers = _powers(tau_invs[n], n + 1)
        for i in range(n + 1):
            rep.check("face-conjugation",
                      x.faces[n][i] == powers_prev[i] * x.faces[n][0] * inv_powers[i],
                      (n, i))
    for n in range(n_max):
        powers_next = _powers(x.tau[n + 1], n + 1)
        inv_powers = _powers(tau_invs[n], n + 1)
        for i in range(n + 1):
            rep.check("degeneracy-conjugation",
                      x.degeneracies[n][i]
                      == powers_next[i] * x.degeneracies[n][0] * inv_powers[i],
                      (n, i))
    if not x.para:
        for n in range(n_max + 1):
            power = _powers(x.tau[n], n + 2)[n + 1]
            rep.check("tau-order", power == Matrix.identity(x.dims[n]), (n,))
    if x.rho is not None:
        h = x.hopf
        alg = h.total
        for n in range(n_max + 1):
            ident = Matrix.identity(x.dims[n])
            rep.check("action-unital", x.rho_of(n, alg.unit_vec()) == ident, (n,))
            for i in range(h.dim):
                for j in range(h.dim):
                    rep.check("action-associative",
                              x.rho[n][j] * x.rho[n][i]
                              == x.rho_of(n, alg.multiply({i: ONE}, {j: ONE})),
                              (n, i, j))
        for n in range(n_max + 1):
            for hi in range(h.dim):
                act = x.rho[n][hi]
                if n >= 1:
                    act_prev = x.rho[n - 1][hi]
                    tops = n if x.pseudo else n + 1
                    for i in range(tops):
                        rep.check("face-H-linear",
                                  act_prev * x.faces[n][i] == x.faces[n][i] * act,
                                  (n, i, hi))
                    if x.pseudo:
                        rep.record("face-H-linear(top face exempt: pseudo)")
                if n < n_max:
                    act_next = x.rho[n + 1][hi]
                    for i in range(n + 1):
                        rep.check("degeneracy-H-linear",
                                  act_next * x.degeneracies[n][i]
                                  == x.degeneracies[n][i] * act, (n, i, hi))
                if not x.pseudo:
                    rep.check("tau-H-linear",
                              act * x.tau[n] == x.tau[n] * act, (n, hi))
                else:
                    rep.record("tau-H-linear(exempt: pseudo)")
    return rep


def _powers(m: Matrix, upto: int) -> list:
    out = [Matrix.identity(m.nrows)]
    for _ in range(upto):
        out.append(out[-1] * m)
    return out


def check_cyclic(x: ParaCyclicModule) -> CheckReport:
    rep = check_paracyclic(x)
    if x.para:
        rep.fail("flags", (), "module is flagged para-cyclic, not cyclic")
    return rep


def check_semicyclic_map(f: list, x: ParaCyclicModule,
                         y: ParaCyclicModule) -> CheckReport:
    """f commutes with faces, tau, and the H-action; degeneracies exempt."""
    rep = CheckReport(subject="semi-cyclic map")
    n_max = min(x.n_max, y.n_max, len(f) - 1)
    for n in range(n_max + 1):
        if n >= 1:
            for i in range(n + 1):
                rep.check("commutes-with-faces",
                          f[n - 1] * x.faces[n][i] == y.faces[n][i] * f[n],
                          (n, i))
        rep.check("commutes-with-tau", f[n] * x.tau[n] == y.tau[n] * f[n], (n,))
        if x.rho is not None and y.rho is not None:
            for hi in range(x.hopf.dim):
                rep.check("commutes-with-action",
                          f[n] * x.rho[n][hi] == y.rho[n][hi] * f[n], (n, hi))
        rep.record("degeneracies-exempt")
    return rep


def check_cyclic_map(f: list, x: ParaCyclicModule,
                     y: ParaCyclicModule) -> CheckReport:
    """Full cyclic map check: semi-cyclic plus degeneracies."""
    rep = check_semicyclic_map(f, x, y)
    n_max = min(x.n_max, y.n_max, len(f) - 1)
    for n in range(n_max):
        for i in range(n + 1):
            rep.check("commutes-with-degeneracies",
                      f[n + 1] * x.degeneracies[n][i]
                      == y.degeneracies[n][i] * f[n], (n, i))
    return rep
