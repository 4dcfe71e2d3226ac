"""Exact linear algebra over the rational field.

This is the substrate for every quotient, equalizer and coequalizer in
the engine.  Scalars are `fractions.Fraction` (exact, canonical form by
construction); vectors are sparse ``{index: Fraction}`` dicts; matrices
store sparse columns.  The spaces met in practice are either tiny and
dense or large and extremely sparse (signed permutations, composition
tensors), so sparse dict storage is used throughout; dense row-major
grids appear only in serialization.

Subspaces are kept in reduced row-echelon form, so equal subspaces have
identical representations and equality is representation equality.
"""

from __future__ import annotations

import heapq
from fractions import Fraction

from .errors import RestrictionError, WellDefinednessError

Rat = Fraction

ZERO = Rat(0)
ONE = Rat(1)

# ---------------------------------------------------------------------------
# sparse vectors


def vec(entries=None) -> dict:
    """Build a sparse vector from {index: scalar}, dropping zeros."""
    if not entries:
        return {}
    return {k: Rat(v) for k, v in entries.items() if v}


def vec_add(u: dict, v: dict) -> dict:
    out = dict(u)
    for k, c in v.items():
        nc = out.get(k, ZERO) + c
        if nc:
            out[k] = nc
        else:
            out.pop(k, None)
    return out


def vec_sub(u: dict, v: dict) -> dict:
    out = dict(u)
    for k, c in v.items():
        nc = out.get(k, ZERO) - c
        if nc:
            out[k] = nc
        else:
            out.pop(k, None)
    return out


def vec_scale(c, v: dict) -> dict:
    c = Rat(c)
    if not c:
        return {}
    return {k: c * x for k, x in v.items()}


def vec_axpy(target: dict, c, source: dict) -> None:
    """In place: target -= c * source."""
    for k, x in source.items():
        nv = target.get(k, ZERO) - c * x
        if nv:
            target[k] = nv
        else:
            target.pop(k, None)


def vec_dot(u: dict, v: dict) -> Rat:
    if len(u) > len(v):
        u, v = v, u
    s = ZERO
    for k, c in u.items():
        x = v.get(k)
        if x is not None:
            s += c * x
    return s


def vec_from_dense(values) -> dict:
    return {i: Rat(x) for i, x in enumerate(values) if x}


def vec_to_dense(v: dict, dim: int) -> list:
    out = [ZERO] * dim
    for k, c in v.items():
        out[k] = c
    return out


# ---------------------------------------------------------------------------
# canonical sparse RREF


def rref_vectors(vectors, ncols) -> tuple[list, list]:
    """Reduced row echelon form of a family of sparse row vectors.

    Returns (rows, pivots): the nonzero RREF rows with unit leading
    entries and the ascending pivot column list.  The output is the
    canonical basis of the row space (RREF is unique), independent of
    the input order.
    """
    buckets: dict[int, list[dict]] = {}
    heap: list[int] = []

    def push(row: dict) -> None:
        if not row:
            return
        lead = min(row)
        if lead not in buckets:
            heapq.heappush(heap, lead)
            buckets[lead] = []
        buckets[lead].append(row)

    for v in vectors:
        push({k: c for k, c in v.items() if c})

    pivot_rows: list[tuple[int, dict]] = []
    while heap:
        lead = heapq.heappop(heap)
        rows = buckets.pop(lead, None)
        if not rows:
            continue
        pivot = min(rows, key=len)
        inv = ONE / pivot[lead]
        if inv != ONE:
            for k in pivot:
                pivot[k] *= inv
        for row in rows:
            if row is pivot:
                continue
            vec_axpy(row, row[lead], pivot)
            push(row)
        pivot_rows.append((lead, pivot))

    # back substitution: clear pivot columns above, bottom-up
    lead_index = {lead: i for i, (lead, _) in enumerate(pivot_rows)}
    for i in range(len(pivot_rows) - 1, -1, -1):
        lead_i, row = pivot_rows[i]
        hits = [k for k in row if k != lead_i and k in lead_index]
        for k in sorted(hits, reverse=True):
            c = row.get(k)
            if c:
                vec_axpy(row, c, pivot_rows[lead_index[k]][1])

    rows = [r for _, r in pivot_rows]
    pivots = [lead for lead, _ in pivot_rows]
    return rows, pivots


# ---------------------------------------------------------------------------
# matrices


class Matrix:
    """Immutable exact matrix with sparse column storage.

    Acts on column vectors: ``m.apply(v)`` computes m @ v.  Do not
    mutate the dicts returned by :meth:`col`.
    """

    __slots__ = ("nrows", "ncols", "cols")

    def __init__(self, nrows: int, ncols: int, cols):
        self.nrows = nrows
        self.ncols = ncols
        self.cols = tuple(cols)
        if len(self.cols) != ncols:
            raise ValueError("column count mismatch")

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_cols(cls, nrows: int, cols) -> "Matrix":
        cleaned = [{k: Rat(v) for k, v in c.items() if v} for c in cols]
        return cls(nrows, len(cleaned), cleaned)

    @classmethod
    def from_rows(cls, ncols: int, rows) -> "Matrix":
        rows = list(rows)
        cols: list[dict] = [{} for _ in range(ncols)]
        for i, row in enumerate(rows):
            for j, c in row.items():
                if c:
                    cols[j][i] = Rat(c)
        return cls(len(rows), ncols, cols)

    @classmethod
    def from_dense(cls, rows) -> "Matrix":
        rows = [list(r) for r in rows]
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        cols = [{} for _ in range(ncols)]
        for i, row in enumerate(rows):
            if len(row) != ncols:
                raise ValueError("ragged rows")
            for j, c in enumerate(row):
                if c:
                    cols[j][i] = Rat(c)
        return cls(nrows, ncols, cols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, [{i: ONE} for i in range(n)])

    @classmethod
    def zero(cls, nrows: int, ncols: int) -> "Matrix":
        return cls(nrows, ncols, [{} for _ in range(ncols)])

    @classmethod
    def from_entries(cls, nrows: int, ncols: int, entries) -> "Matrix":
        cols = [{} for _ in range(ncols)]
        for (i, j), c in entries.items():
            if c:
                cols[j][i] = Rat(c)
        return cls(nrows, ncols, cols)

    @classmethod
    def hstack(cls, mats) -> "Matrix":
        mats = list(mats)
        nrows = mats[0].nrows
        cols = []
        for m in mats:
            if m.nrows != nrows:
                raise ValueError("row count mismatch in hstack")
            cols.extend(m.cols)
        return cls(nrows, len(cols), cols)

    @classmethod
    def vstack(cls, mats) -> "Matrix":
        mats = list(mats)
        ncols = mats[0].ncols
        cols = [{} for _ in range(ncols)]
        offset = 0
        for m in mats:
            if m.ncols != ncols:
                raise ValueError("column count mismatch in vstack")
            for j, col in enumerate(m.cols):
                for i, c in col.items():
                    cols[j][offset + i] = c
            offset += m.nrows
        return cls(offset, ncols, cols)

    # -- access ------------------------------------------------------------

    def col(self, j: int) -> dict:
        return self.cols[j]

    def entry(self, i: int, j: int) -> Rat:
        return self.cols[j].get(i, ZERO)

    def row_vecs(self) -> list[dict]:
        rows: list[dict] = [{} for _ in range(self.nrows)]
        for j, col in enumerate(self.cols):
            for i, c in col.items():
                rows[i][j] = c
        return rows

    def to_dense(self) -> list[list]:
        out = [[ZERO] * self.ncols for _ in range(self.nrows)]
        for j, col in enumerate(self.cols):
            for i, c in col.items():
                out[i][j] = c
        return out

    def nnz(self) -> int:
        return sum(len(c) for c in self.cols)

    # -- arithmetic ---------------------------------------------------------

    def apply(self, v: dict) -> dict:
        out: dict = {}
        for k, c in v.items():
            col = self.cols[k]
            for i, x in col.items():
                nv = out.get(i, ZERO) + c * x
                if nv:
                    out[i] = nv
                else:
                    del out[i]
        return out

    def __mul__(self, other):
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
            return Matrix(self.nrows, other.ncols,
                          [self.apply(c) for c in other.cols])
        return NotImplemented

    def scale(self, c) -> "Matrix":
        c = Rat(c)
        return Matrix(self.nrows, self.ncols,
                      [vec_scale(c, col) for col in self.cols])

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch in addition")
        return Matrix(self.nrows, self.ncols,
                      [vec_add(a, b) for a, b in zip(self.cols, other.cols)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch in subtraction")
        return Matrix(self.nrows, self.ncols,
                      [vec_sub(a, b) for a, b in zip(self.cols, other.cols)])

    def __neg__(self) -> "Matrix":
        return self.scale(-1)

    def transpose(self) -> "Matrix":
        return Matrix(self.ncols, self.nrows, self.row_vecs())

    def kron(self, other: "Matrix") -> "Matrix":
        """Kronecker product, row-major index pairing (self index major)."""
        cols = []
        for ja in range(self.ncols):
            ca = self.cols[ja]
            for jb in range(other.ncols):
                cb = other.cols[jb]
                col = {}
                for ia, x in ca.items():
                    base = ia * other.nrows
                    for ib, y in cb.items():
                        col[base + ib] = x * y
                cols.append(col)
        return Matrix(self.nrows * other.nrows, self.ncols * other.ncols, cols)

    # -- predicates ----------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def is_zero(self) -> bool:
        return all(not c for c in self.cols)

    def is_identity(self) -> bool:
        if self.nrows != self.ncols:
            return False
        return all(col == {j: ONE} for j, col in enumerate(self.cols))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.cols == other.cols

    def __hash__(self):
        raise TypeError("Matrix is not hashable")

    def __repr__(self) -> str:
        return f"Matrix({self.nrows}x{self.ncols}, nnz={self.nnz()})"

    # -- rank machinery -------------------------------------------------------

    def rref(self) -> tuple["Matrix", list[int]]:
        """Full-shape reduced row-echelon form and pivot columns."""
        rows, pivots = rref_vectors(self.row_vecs(), self.ncols)
        rows = rows + [{} for _ in range(self.nrows - len(rows))]
        return Matrix.from_rows(self.ncols, rows), pivots

    def rank(self) -> int:
        _, pivots = rref_vectors(self.row_vecs(), self.ncols)
        return len(pivots)

    def inverse(self) -> "Matrix":
        """Exact inverse of a square matrix (raises on singular input)."""
        if self.nrows != self.ncols:
            raise ValueError("only square matrices can be inverted")
        n = self.nrows
        augmented = []
        for i, row in enumerate(self.row_vecs()):
            row = dict(row)
            row[n + i] = ONE
            augmented.append(row)
        rows, pivots = rref_vectors(augmented, 2 * n)
        if pivots[:n] != list(range(n)) or len(pivots) < n:
            raise ValueError("matrix is singular")
        inv_rows = [{k - n: c for k, c in rows[i].items() if k >= n}
                    for i in range(n)]
        return Matrix.from_rows(n, inv_rows)

    def kernel(self) -> "Subspace":
        """Kernel acting on column vectors of length ncols."""
        rows, pivots = rref_vectors(self.row_vecs(), self.ncols)
        pivot_set = set(pivots)
        basis = []
        for f in range(self.ncols):
            if f in pivot_set:
                continue
            v = {f: ONE}
            for i, p in enumerate(pivots):
                c = rows[i].get(f)
                if c:
                    v[p] = -c
            basis.append(v)
        return Subspace.from_vectors(self.ncols, basis)

    def column_space(self) -> "Subspace":
        return Subspace.from_vectors(self.nrows, list(self.cols))


def kernel(m: Matrix) -> "Subspace":
    return m.kernel()


def rref(m: Matrix) -> tuple[Matrix, list[int]]:
    return m.rref()


# ---------------------------------------------------------------------------
# subspaces


class Subspace:
    """A subspace of Q^n with canonical RREF basis rows."""

    __slots__ = ("ambient_dim", "basis", "pivots")

    def __init__(self, ambient_dim: int, basis, pivots):
        self.ambient_dim = ambient_dim
        self.basis = tuple(basis)
        self.pivots = tuple(pivots)

    @classmethod
    def from_vectors(cls, ambient_dim: int, vectors) -> "Subspace":
        rows, pivots = rref_vectors(vectors, ambient_dim)
        return cls(ambient_dim, rows, pivots)

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, (), ())

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, tuple({i: ONE} for i in range(ambient_dim)),
                   tuple(range(ambient_dim)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def reduce(self, v: dict) -> dict:
        """Representative of v modulo this subspace."""
        out = dict(v)
        for i, p in enumerate(self.pivots):
            c = out.get(p)
            if c:
                vec_axpy(out, c, self.basis[i])
        return out

    def contains(self, v: dict) -> bool:
        return not self.reduce(v)

    def coords(self, v: dict) -> dict | None:
        """Coordinates of v in the RREF basis, or None if v is outside."""
        c = {}
        residual = dict(v)
        for i, p in enumerate(self.pivots):
            x = residual.get(p)
            if x:
                c[i] = x
                vec_axpy(residual, x, self.basis[i])
        return None if residual else c

    def basis_matrix(self) -> Matrix:
        """dim x ambient matrix whose rows are the basis."""
        return Matrix.from_rows(self.ambient_dim, list(self.basis))

    def inclusion_matrix(self) -> Matrix:
        """ambient x dim matrix whose columns are the basis vectors."""
        return Matrix(self.ambient_dim, self.dim, [dict(b) for b in self.basis])

    def coords_matrix(self) -> Matrix:
        """dim x ambient coordinate map (valid on vectors inside the space)."""
        return Matrix.from_entries(self.dim, self.ambient_dim,
                                   {(i, p): ONE for i, p in enumerate(self.pivots)})

    def annihilator(self) -> "Subspace":
        """Vectors y with b . y = 0 for every basis row b."""
        return self.basis_matrix().kernel()

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self):
        raise TypeError("Subspace is not hashable")

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"


def subspace_sum(u: Subspace, v: Subspace) -> Subspace:
    if u.ambient_dim != v.ambient_dim:
        raise ValueError("ambient dimension mismatch")
    return Subspace.from_vectors(u.ambient_dim, list(u.basis) + list(v.basis))


def subspace_intersect(u: Subspace, v: Subspace) -> Subspace:
    if u.ambient_dim != v.ambient_dim:
        raise ValueError("ambient dimension mismatch")
    # x lies in u iff it is orthogonal to ann(u); stack both annihilators
    constraints = list(u.annihilator().basis) + list(v.annihilator().basis)
    return Matrix.from_rows(u.ambient_dim, constraints).kernel()


# ---------------------------------------------------------------------------
# quotients


class QuotientSpace:
    """Q^ambient / killed with an explicit projection/section pair.

    projection . section = id on quotient coordinates, and the kernel of
    the projection is exactly `killed`.  Quotient coordinates are the
    non-pivot columns of the killed subspace's RREF basis, in ascending
    order, which makes every quotient deterministic.
    """

    __slots__ = ("ambient_dim", "killed", "dim", "projection", "section", "free_cols")

    def __init__(self, ambient_dim, killed, dim, projection, section, free_cols):
        self.ambient_dim = ambient_dim
        self.killed = killed
        self.dim = dim
        self.projection = projection
        self.section = section
        self.free_cols = free_cols

    @classmethod
    def build(cls, ambient_dim: int, killed: Subspace) -> "QuotientSpace":
        if killed.ambient_dim != ambient_dim:
            raise ValueError("killed subspace has wrong ambient dimension")
        pivot_set = set(killed.pivots)
        free = [j for j in range(ambient_dim) if j not in pivot_set]
        dim = len(free)
        proj_cols: list[dict] = [{} for _ in range(ambient_dim)]
        for r, f in enumerate(free):
            proj_cols[f][r] = ONE
        for i, p in enumerate(killed.pivots):
            row = killed.basis[i]
            col = proj_cols[p]
            for r, f in enumerate(free):
                c = row.get(f)
                if c:
                    col[r] = -c
        projection = Matrix(dim, ambient_dim, proj_cols)
        section = Matrix(ambient_dim, dim, [{f: ONE} for f in free])
        return cls(ambient_dim, killed, dim, projection, section, tuple(free))

    def project(self, v: dict) -> dict:
        return self.projection.apply(v)

    def lift(self, v: dict) -> dict:
        return self.section.apply(v)

    def __repr__(self) -> str:
        return f"QuotientSpace({self.ambient_dim} -> {self.dim})"


def quotient(ambient_dim: int, killed: Subspace) -> QuotientSpace:
    return QuotientSpace.build(ambient_dim, killed)


def induced_map(f: Matrix, dom: QuotientSpace, cod: QuotientSpace) -> Matrix:
    """The unique map on quotient coordinates lifting f, if f descends.

    Raises WellDefinednessError when f does not carry dom.killed into
    cod.killed; for the paper-derived structure maps that signals a
    violated identity in the instance, not an engine bug.
    """
    if f.ncols != dom.ambient_dim or f.nrows != cod.ambient_dim:
        raise ValueError("map shape is incompatible with the quotients")
    for b in dom.killed.basis:
        if cod.projection.apply(f.apply(b)):
            raise WellDefinednessError(
                "map does not preserve the killed subspace; "
                "a lifted identity fails to descend")
    return cod.projection * f * dom.section


def restrict_map(f: Matrix, dom: Subspace, cod: Subspace) -> Matrix:
    """Restrict an ambient map to subspace coordinates, checking closure."""
    cols = []
    for b in dom.basis:
        image = f.apply(b)
        c = cod.coords(image)
        if c is None:
            raise RestrictionError("map does not preserve the subspace")
        cols.append(c)
    return Matrix(cod.dim, dom.dim, cols)
