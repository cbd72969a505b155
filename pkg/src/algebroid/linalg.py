"""Exact sparse linear algebra over the Gaussian rationals.

Vectors are sparse dicts {index: QRat} with zeros omitted.  Matrices are
column-major sparse maps.  Elimination is fraction-free in the Bareiss
spirit: rows are kept denominator-cleared and content-reduced during the
forward pass and only normalised to monic reduced row echelon form at
the end, which keeps coefficient growth under control without ever
leaving Q(i).  Pivoting is deterministic (first nonzero column, rows in
input order) so that every derived object is reproducible.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .scalars import ONE, QRat, ZERO

Vec = dict  # {int: QRat}


# ---------------------------------------------------------------- vectors

def vadd(u: Vec, v: Vec) -> Vec:
    out = dict(u)
    for k, x in v.items():
        y = out.get(k)
        if y is None:
            out[k] = x
        else:
            z = y + x
            if z:
                out[k] = z
            else:
                del out[k]
    return out


def vaxpy(out: Vec, c: QRat, v: Vec) -> None:
    """In place out += c*v."""
    if not c:
        return
    for k, x in v.items():
        y = out.get(k)
        z = c * x if y is None else y + c * x
        if z:
            out[k] = z
        elif y is not None:
            del out[k]


def vscale(c: QRat, v: Vec) -> Vec:
    if not c:
        return {}
    return {k: c * x for k, x in v.items()}


def vneg(v: Vec) -> Vec:
    return {k: -x for k, x in v.items()}


def vsub(u: Vec, v: Vec) -> Vec:
    out = dict(u)
    vaxpy(out, QRat(-1), v)
    return out


def vconj(v: Vec) -> Vec:
    return {k: x.conjugate() for k, x in v.items()}


def unit(k: int) -> Vec:
    return {k: ONE}


def veq(u: Vec, v: Vec) -> bool:
    return not vsub(u, v)


# ------------------------------------------------------------ row algebra

def _content_reduce(row: Vec) -> Vec:
    """Scale a row by a positive rational so entries are coprime Gaussian
    integers.  The scale is irrelevant for span computations."""
    if not row:
        return row
    den = 1
    for x in row.values():
        den = den * x.re.denominator // math.gcd(den, x.re.denominator)
        den = den * x.im.denominator // math.gcd(den, x.im.denominator)
    g = 0
    for x in row.values():
        g = math.gcd(g, abs(x.re.numerator * den) // x.re.denominator)
        g = math.gcd(g, abs(x.im.numerator * den) // x.im.denominator)
    if den == 1 and g in (0, 1):
        return row
    c = QRat(Fraction(den, g if g else 1))
    return {k: c * x for k, x in row.items()}


def rref(vectors, ncols: int):
    """Reduced row echelon basis of the span of `vectors`.

    Returns (pivots, rows): pivot columns in increasing order and the
    matching monic, fully reduced rows.
    """
    piv: dict[int, Vec] = {}  # pivot col -> content-reduced row
    for v in vectors:
        row = _content_reduce({k: x for k, x in v.items() if x})
        while row:
            c = min(row)
            r = piv.get(c)
            if r is None:
                piv[c] = row
                break
            # fraction-free combine: row := r[c]*row - row[c]*r
            a, b = r[c], row[c]
            new = {}
            for k, x in row.items():
                new[k] = a * x
            for k, x in r.items():
                y = new.get(k)
                z = -b * x if y is None else y - b * x
                if z:
                    new[k] = z
                elif y is not None:
                    del new[k]
            row = _content_reduce(new)
    # back-eliminate to fully reduced form, then normalise monic
    pivots = sorted(piv)
    for i in range(len(pivots) - 1, -1, -1):
        c = pivots[i]
        r = piv[c]
        r = vscale(r[c].inv(), r)
        piv[c] = r
        for c2 in pivots[:i]:
            other = piv[c2]
            coef = other.get(c)
            if coef:
                vaxpy(other, -coef, r)
    return pivots, [piv[c] for c in pivots]


class Subspace:
    """A subspace of an ambient coordinate space, held as an RREF basis.

    The representation is canonical: two generating sets with the same
    span produce identical (pivots, rows).
    """

    __slots__ = ("ambient", "pivots", "rows", "_pivset")

    def __init__(self, ambient: int, vectors=()):
        self.ambient = ambient
        self.pivots, self.rows = rref(vectors, ambient)
        self._pivset = dict(zip(self.pivots, self.rows))

    @staticmethod
    def _raw(ambient, pivots, rows):
        s = Subspace.__new__(Subspace)
        s.ambient = ambient
        s.pivots = pivots
        s.rows = rows
        s._pivset = dict(zip(pivots, rows))
        return s

    @property
    def dim(self) -> int:
        return len(self.pivots)

    def reduce(self, v: Vec) -> Vec:
        """Remainder of v modulo this subspace (zero iff v is a member).

        Rows are fully reduced, so eliminating one pivot coordinate never
        reintroduces another; a single pass suffices.
        """
        out = dict(v)
        for c in sorted(set(out) & set(self._pivset)):
            coef = out.get(c)
            if coef:
                vaxpy(out, -coef, self._pivset[c])
        return out

    def contains(self, v: Vec) -> bool:
        return not self.reduce(v)

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.ambient == other.ambient
            and self.pivots == other.pivots
            and all(veq(a, b) for a, b in zip(self.rows, other.rows))
        )

    def __repr__(self):
        return "Subspace(dim %d of %d)" % (self.dim, self.ambient)


# ---------------------------------------------------------------- matrices

class Matrix:
    """Sparse linear map, column-major: cols[j] is the image of e_j."""

    __slots__ = ("nrows", "ncols", "cols")

    def __init__(self, nrows: int, ncols: int, cols=None):
        self.nrows = nrows
        self.ncols = ncols
        self.cols = cols if cols is not None else {}

    @staticmethod
    def identity(n: int) -> "Matrix":
        return Matrix(n, n, {j: {j: ONE} for j in range(n)})

    @staticmethod
    def zero(nrows: int, ncols: int) -> "Matrix":
        return Matrix(nrows, ncols, {})

    @staticmethod
    def from_cols(nrows: int, columns) -> "Matrix":
        cols = {j: dict(c) for j, c in enumerate(columns) if c}
        return Matrix(nrows, len(columns), cols)

    @staticmethod
    def from_entries(nrows: int, ncols: int, entries) -> "Matrix":
        """entries: iterable of (i, j, QRat)."""
        cols: dict[int, Vec] = {}
        for i, j, x in entries:
            if x:
                cols.setdefault(j, {})[i] = x
        return Matrix(nrows, ncols, cols)

    def col(self, j: int) -> Vec:
        return self.cols.get(j, {})

    def apply(self, v: Vec) -> Vec:
        out: Vec = {}
        for j, x in v.items():
            c = self.cols.get(j)
            if c:
                vaxpy(out, x, c)
        return out

    def apply_conj(self, v: Vec) -> Vec:
        """Apply after coordinate conjugation (antilinear convention)."""
        out: Vec = {}
        for j, x in v.items():
            c = self.cols.get(j)
            if c:
                vaxpy(out, x.conjugate(), c)
        return out

    def __matmul__(self, other: "Matrix") -> "Matrix":
        assert self.ncols == other.nrows, "shape mismatch"
        cols = {}
        for j, c in other.cols.items():
            img = self.apply(c)
            if img:
                cols[j] = img
        return Matrix(self.nrows, other.ncols, cols)

    def __add__(self, other: "Matrix") -> "Matrix":
        assert (self.nrows, self.ncols) == (other.nrows, other.ncols)
        cols = {j: dict(c) for j, c in self.cols.items()}
        for j, c in other.cols.items():
            tgt = cols.setdefault(j, {})
            vaxpy(tgt, ONE, c)
            if not tgt:
                del cols[j]
        return Matrix(self.nrows, self.ncols, cols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + other.scale(QRat(-1))

    def scale(self, c: QRat) -> "Matrix":
        if not c:
            return Matrix.zero(self.nrows, self.ncols)
        return Matrix(self.nrows, self.ncols,
                      {j: vscale(c, col) for j, col in self.cols.items()})

    def conj(self) -> "Matrix":
        return Matrix(self.nrows, self.ncols,
                      {j: vconj(c) for j, c in self.cols.items()})

    def transpose(self) -> "Matrix":
        cols: dict[int, Vec] = {}
        for j, c in self.cols.items():
            for i, x in c.items():
                cols.setdefault(i, {})[j] = x
        return Matrix(self.ncols, self.nrows, cols)

    def rows(self):
        """Row list (sparse), for elimination."""
        rows: list[Vec] = [dict() for _ in range(self.nrows)]
        for j, c in self.cols.items():
            for i, x in c.items():
                rows[i][j] = x
        return rows

    def entries(self):
        for j, c in self.cols.items():
            for i, x in c.items():
                yield i, j, x

    def is_zero(self) -> bool:
        return all(not c for c in self.cols.values())

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            return False
        return (self - other).is_zero()

    def __repr__(self):
        return "Matrix(%dx%d, %d nnz)" % (
            self.nrows, self.ncols, sum(len(c) for c in self.cols.values()))


def kernel(m: Matrix) -> Subspace:
    """Null space of m, as an RREF subspace of the domain."""
    pivots, rows = rref(m.rows(), m.ncols)
    pivset = dict(zip(pivots, rows))
    free = [j for j in range(m.ncols) if j not in pivset]
    basis = []
    for f in free:
        v = {f: ONE}
        for p in pivots:
            x = pivset[p].get(f)
            if x:
                v[p] = -x
        basis.append(v)
    return Subspace(m.ncols, basis)


def image(m: Matrix) -> Subspace:
    return Subspace(m.nrows, [m.col(j) for j in range(m.ncols)])


def rank(m: Matrix) -> int:
    return len(rref(m.rows(), m.ncols)[0])


def solve(m: Matrix, b: Vec):
    """Some x with m x = b, or None.  Free variables are set to zero after
    reduction, so the choice is deterministic."""
    n = m.ncols
    rows = m.rows()
    for i, x in b.items():
        rows[i] = dict(rows[i])
        rows[i][n] = x
    pivots, rrows = rref(rows, n + 1)
    x: Vec = {}
    for p, r in zip(pivots, rrows):
        if p == n:
            return None
        val = r.get(n)
        if val:
            x[p] = val
    return x


class MapInverse:
    """Invertibility certificate for a sparse linear map.

    Either .inverse is a Matrix with m @ inverse = inverse @ m = id, or
    .witness is a nonzero cokernel functional / kernel vector showing m
    is not bijective.
    """

    __slots__ = ("inverse", "witness", "reason")

    def __init__(self, inverse=None, witness=None, reason=""):
        self.inverse = inverse
        self.witness = witness
        self.reason = reason

    def __bool__(self):
        return self.inverse is not None


def invert(m: Matrix) -> MapInverse:
    if m.nrows != m.ncols:
        k = kernel(m)
        if k.dim:
            return MapInverse(witness=k.rows[0], reason="kernel")
        return MapInverse(witness={}, reason="shape %dx%d" % (m.nrows, m.ncols))
    n = m.nrows
    rows = m.rows()
    for i in range(n):
        rows[i] = dict(rows[i])
        rows[i][n + i] = ONE
    pivots, rrows = rref(rows, 2 * n)
    if len(pivots) < n or any(p >= n for p in pivots[:n]) or pivots[:n] != list(range(n)):
        k = kernel(m)
        if k.dim:
            return MapInverse(witness=k.rows[0], reason="kernel")
        return MapInverse(witness={}, reason="rank deficiency")
    inv = Matrix.from_entries(
        n, n,
        ((i, j - n, x) for i, r in zip(pivots, rrows) for j, x in r.items() if j >= n),
    )
    return MapInverse(inverse=inv)


# ------------------------------------------------------------- quotients

class QuotientSpace:
    """Quotient of a coordinate space by a relation subspace.

    projection . section = identity on the quotient, and the projection
    annihilates exactly the relations.  Representatives are canonical:
    the section hits the non-pivot coordinates of the relation RREF.
    """

    __slots__ = ("ambient", "relations", "free", "_free_pos", "projection", "section")

    def __init__(self, ambient: int, relations: Subspace):
        assert relations.ambient == ambient
        self.ambient = ambient
        self.relations = relations
        pivset = relations._pivset
        self.free = [j for j in range(ambient) if j not in pivset]
        self._free_pos = {c: k for k, c in enumerate(self.free)}
        proj_cols: dict[int, Vec] = {}
        for k, c in enumerate(self.free):
            proj_cols[c] = {k: ONE}
        for p, row in zip(relations.pivots, relations.rows):
            col: Vec = {}
            for c, x in row.items():
                if c != p:
                    col[self._free_pos[c]] = -x
            if col:
                proj_cols[p] = col
        self.projection = Matrix(len(self.free), ambient, proj_cols)
        self.section = Matrix(ambient, len(self.free),
                              {k: {c: ONE} for k, c in enumerate(self.free)})

    @property
    def dim(self) -> int:
        return len(self.free)

    def project(self, v: Vec) -> Vec:
        return self.projection.apply(v)

    def lift(self, q: Vec) -> Vec:
        return self.section.apply(q)


def quotient_by_vectors(ambient: int, vectors) -> QuotientSpace:
    return QuotientSpace(ambient, Subspace(ambient, vectors))


def induced_map(q_src: QuotientSpace, q_dst: QuotientSpace, m: Matrix) -> Matrix:
    """proj_dst . m . sect_src — use only when m descends (caller checks)."""
    return q_dst.projection @ (m @ q_src.section)


def descends(q_src: QuotientSpace, q_dst: QuotientSpace, m: Matrix) -> bool:
    """True iff m maps the source relations into the target relations."""
    for row in q_src.relations.rows:
        if q_dst.projection.apply(m.apply(row)):
            return False
    return True


# ------------------------------------------------------- tensor products

def kron_vec(u: Vec, v: Vec, dim_v: int) -> Vec:
    out = {}
    for i, x in u.items():
        base = i * dim_v
        for j, y in v.items():
            z = x * y
            if z:
                out[base + j] = z
    return out


def kron_mat(a: Matrix, b: Matrix) -> Matrix:
    cols = {}
    for ja, ca in a.cols.items():
        for jb, cb in b.cols.items():
            col = kron_vec(ca, cb, b.nrows)
            if col:
                cols[ja * b.ncols + jb] = col
    return Matrix(a.nrows * b.nrows, a.ncols * b.ncols, cols)


def split_index(k: int, dim_second: int):
    return divmod(k, dim_second)


# --------------------------------------------------------- antilinear maps

class AntilinearMap:
    """Antilinear map stored as (Matrix, conjugate-first): v -> M conj(v).

    Composing two antilinear maps yields a plain Matrix; mixed compositions
    stay antilinear.
    """

    __slots__ = ("mat",)

    def __init__(self, mat: Matrix):
        self.mat = mat

    def apply(self, v: Vec) -> Vec:
        return self.mat.apply_conj(v)

    def compose_anti(self, other: "AntilinearMap") -> Matrix:
        """self . other as a plain linear map."""
        return self.mat @ other.mat.conj()

    def after_linear(self, m: Matrix) -> "AntilinearMap":
        """self . m (apply m first)."""
        return AntilinearMap(self.mat @ m.conj())

    def before_linear(self, m: Matrix) -> "AntilinearMap":
        """m . self (apply self first)."""
        return AntilinearMap(m @ self.mat)

    def conjugate_by(self, u: Matrix, u_inv: Matrix) -> "AntilinearMap":
        return AntilinearMap(u @ self.mat @ u_inv.conj())
