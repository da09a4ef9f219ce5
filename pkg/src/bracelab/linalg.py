"""Exact dense linear algebra over the rationals and over prime fields.

Scalars are ``fractions.Fraction`` over the rationals and ``Residue``
wrappers over a prime field; both support the usual operators, so the
matrix code below is field-agnostic.  Matrices act on column vectors.
A ``Subspace`` stores the unique reduced row echelon basis of its row
span, which makes subspace equality plain structural equality.
"""

from fractions import Fraction
from math import lcm

from .errors import DimensionMismatch, FieldMismatch, RestrictionFailure


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class Residue:
    """An element of the integers mod a prime, with field arithmetic."""

    __slots__ = ("v", "p")

    def __init__(self, v, p):
        self.v = v % p
        self.p = p

    def __add__(self, other):
        return Residue(self.v + other.v, self.p)

    def __sub__(self, other):
        return Residue(self.v - other.v, self.p)

    def __mul__(self, other):
        return Residue(self.v * other.v, self.p)

    def __neg__(self):
        return Residue(-self.v, self.p)

    def __truediv__(self, other):
        return self * other.inverse()

    def inverse(self):
        if not self.v:
            raise ZeroDivisionError("division by zero in residue field")
        return Residue(pow(self.v, self.p - 2, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, Residue):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return self.v == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __repr__(self):
        return "%d" % self.v


class Field:
    """The rationals (``p == 0``) or the prime field with ``p`` elements."""

    __slots__ = ("p", "zero", "one")

    def __init__(self, p=0):
        if p and not _is_prime(p):
            raise ValueError("modulus must be prime, got %r" % (p,))
        self.p = p
        if p:
            self.zero = Residue(0, p)
            self.one = Residue(1, p)
        else:
            self.zero = Fraction(0)
            self.one = Fraction(1)

    @property
    def characteristic(self):
        return self.p

    def of(self, num, den=1):
        """Coerce an integer (or numerator/denominator pair) into the field."""
        if self.p:
            if isinstance(num, Residue):
                if num.p != self.p:
                    raise FieldMismatch("residue mod %d in field mod %d" % (num.p, self.p))
                num = num.v
            d = den.v if isinstance(den, Residue) else den % self.p
            if d % self.p == 0:
                raise ZeroDivisionError("denominator vanishes mod %d" % self.p)
            return Residue(num * pow(d, self.p - 2, self.p), self.p)
        return Fraction(num, den)

    def sort_key(self, a):
        """A total order on field elements, used only for determinism."""
        return a.v if self.p else a

    def __eq__(self, other):
        return isinstance(other, Field) and self.p == other.p

    def __hash__(self):
        return hash(("Field", self.p))

    def __repr__(self):
        return "QQ" if self.p == 0 else "GF(%d)" % self.p


QQ = Field()


def GF(p):
    return Field(p)


def zero_vec(field, n):
    return [field.zero] * n


def basis_vec(field, n, i):
    v = [field.zero] * n
    v[i] = field.one
    return v


def vec_add(a, b):
    return [x + y for x, y in zip(a, b)]


def vec_sub(a, b):
    return [x - y for x, y in zip(a, b)]


def vec_scale(c, a):
    return [c * x for x in a]


def vec_is_zero(a):
    return not any(a)


def kron_vec(a, b):
    """Flattened tensor a (x) b with index i * len(b) + j."""
    out = []
    for x in a:
        out.extend(x * y for y in b)
    return out


class Mat:
    """A dense matrix over one exact field, acting on column vectors."""

    __slots__ = ("field", "rows", "cols", "data")

    def __init__(self, field, data, cols=None):
        self.field = field
        self.data = [list(row) for row in data]
        self.rows = len(self.data)
        self.cols = len(self.data[0]) if self.data else (cols or 0)
        for row in self.data:
            if len(row) != self.cols:
                raise DimensionMismatch("ragged matrix rows")

    @classmethod
    def identity(cls, field, n):
        return cls(field, [basis_vec(field, n, i) for i in range(n)])

    @classmethod
    def zeros(cls, field, rows, cols):
        return cls(field, [[field.zero] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def from_cols(cls, field, cols):
        m = cls.zeros(field, len(cols[0]) if cols else 0, len(cols))
        for j, c in enumerate(cols):
            for i, x in enumerate(c):
                m.data[i][j] = x
        return m

    def __getitem__(self, i):
        return self.data[i]

    def col(self, j):
        return [row[j] for row in self.data]

    def columns(self):
        return [self.col(j) for j in range(self.cols)]

    def __eq__(self, other):
        return (isinstance(other, Mat) and self.field == other.field
                and self.data == other.data)

    def __mul__(self, other):
        if isinstance(other, Mat):
            if self.cols != other.rows:
                raise DimensionMismatch("matrix product %dx%d by %dx%d"
                                        % (self.rows, self.cols, other.rows, other.cols))
            out = Mat.zeros(self.field, self.rows, other.cols)
            odata = out.data
            bdata = other.data
            for i, arow in enumerate(self.data):
                orow = odata[i]
                for k, a in enumerate(arow):
                    if not a:
                        continue
                    for j, b in enumerate(bdata[k]):
                        if b:
                            orow[j] = orow[j] + a * b
            return out
        return NotImplemented

    def __add__(self, other):
        self._same_shape(other)
        return Mat(self.field, [[a + b for a, b in zip(r, s)]
                                for r, s in zip(self.data, other.data)])

    def __sub__(self, other):
        self._same_shape(other)
        return Mat(self.field, [[a - b for a, b in zip(r, s)]
                                for r, s in zip(self.data, other.data)])

    def _same_shape(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise DimensionMismatch("shapes %dx%d and %dx%d"
                                    % (self.rows, self.cols, other.rows, other.cols))

    def scaled(self, c):
        return Mat(self.field, [[c * a for a in row] for row in self.data])

    def transpose(self):
        return Mat(self.field, [list(col) for col in zip(*self.data)]
                   if self.data else [])

    def kron(self, other):
        """Tensor product; block (i, k) is self[i][k] * other."""
        out = Mat.zeros(self.field, self.rows * other.rows, self.cols * other.cols)
        for i, arow in enumerate(self.data):
            for k, a in enumerate(arow):
                if not a:
                    continue
                for j, brow in enumerate(other.data):
                    orow = out.data[i * other.rows + j]
                    base = k * other.cols
                    for l, b in enumerate(brow):
                        if b:
                            orow[base + l] = a * b
        return out

    def apply(self, vec):
        """Matrix times column vector."""
        if len(vec) != self.cols:
            raise DimensionMismatch("vector of length %d under %dx%d matrix"
                                    % (len(vec), self.rows, self.cols))
        out = [self.field.zero] * self.rows
        for j, x in enumerate(vec):
            if not x:
                continue
            for i, row in enumerate(self.data):
                a = row[j]
                if a:
                    out[i] = out[i] + a * x
        return out

    def is_zero(self):
        return all(not a for row in self.data for a in row)

    def rref(self):
        """Reduced row echelon form; returns (matrix, pivot column tuple)."""
        m = [list(row) for row in self.data]
        rows, cols = self.rows, self.cols
        pivots = []
        r = 0
        for c in range(cols):
            pr = None
            for i in range(r, rows):
                if m[i][c]:
                    pr = i
                    break
            if pr is None:
                continue
            m[r], m[pr] = m[pr], m[r]
            inv = self.field.one / m[r][c]
            if inv != self.field.one:
                m[r] = [inv * a for a in m[r]]
            prow = m[r]
            for i in range(rows):
                if i != r and m[i][c]:
                    f = m[i][c]
                    m[i] = [a - f * b for a, b in zip(m[i], prow)]
            pivots.append(c)
            r += 1
            if r == rows:
                break
        return Mat(self.field, m, cols=cols), tuple(pivots)

    def rank(self):
        return len(self.rref()[1])

    def solve(self, rhs):
        """One exact solution of self * x = rhs, or None if inconsistent.

        Free coordinates are set to zero, so the answer is deterministic.
        """
        if len(rhs) != self.rows:
            raise DimensionMismatch("rhs length %d for %d equations" % (len(rhs), self.rows))
        if self.rows == 0:
            return [self.field.zero] * self.cols
        aug = Mat(self.field, [row + [b] for row, b in zip(self.data, rhs)])
        red, pivots = aug.rref()
        if self.cols in pivots:
            return None
        x = [self.field.zero] * self.cols
        for r, c in enumerate(pivots):
            x[c] = red[r][self.cols]
        return x

    def inv(self):
        """Exact inverse, or None when the matrix is singular."""
        if self.rows != self.cols:
            return None
        n = self.rows
        aug = Mat(self.field, [row + ident_row
                               for row, ident_row in zip(self.data, Mat.identity(self.field, n).data)])
        red, pivots = aug.rref()
        if tuple(pivots[:n]) != tuple(range(n)) or len(pivots) != n:
            return None
        return Mat(self.field, [row[n:] for row in red.data], cols=n)

    def power(self, e):
        if self.rows != self.cols:
            raise DimensionMismatch("power of a non-square matrix")
        result = Mat.identity(self.field, self.rows)
        base = self
        while e > 0:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __repr__(self):
        return "Mat(%r, %r)" % (self.field, self.data)


def rref(m):
    """Module-level alias: canonical reduced row echelon form of a Mat."""
    return m.rref()


def char_poly(m):
    """Characteristic polynomial of a square matrix, leading coefficient
    first, by the division-free Berkowitz method (valid in any
    characteristic)."""
    n = m.rows
    if n != m.cols:
        raise DimensionMismatch("characteristic polynomial of a non-square matrix")
    F = m.field
    poly = [F.one]
    for r in range(1, n + 1):
        a = m[r - 1][r - 1]
        row = m.data[r - 1][: r - 1]
        colv = [m.data[i][r - 1] for i in range(r - 1)]
        block = [m.data[i][: r - 1] for i in range(r - 1)]
        coeffs = [F.one, -a]
        v = colv
        for k in range(r - 1):
            if k:
                v = [sum((brow[j] * v[j] for j in range(r - 1) if v[j]), F.zero)
                     for brow in block]
            dot = sum((row[j] * v[j] for j in range(r - 1) if v[j]), F.zero)
            coeffs.append(-dot)
        new = [F.zero] * (r + 1)
        for i, pc in enumerate(poly):
            if not pc:
                continue
            top = min(r - i, len(coeffs) - 1)
            for j in range(top + 1):
                if coeffs[j]:
                    new[i + j] = new[i + j] + pc * coeffs[j]
        poly = new
    return poly


def _divisors(n):
    n = abs(n)
    out = set()
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.add(d)
            out.add(n // d)
        d += 1
    return sorted(out)


def poly_roots_in_field(coeffs, field):
    """Roots in the ground field of a polynomial given leading-first.

    Over the rationals this is a rational-root search on the primitive
    integer form; over a prime field every residue is tried.
    """
    while coeffs and not coeffs[0]:
        coeffs = coeffs[1:]
    if not coeffs or len(coeffs) == 1:
        return []

    def value(x):
        acc = field.zero
        for c in coeffs:
            acc = acc * x + c
        return acc

    if field.p:
        return [Residue(v, field.p) for v in range(field.p)
                if not value(Residue(v, field.p))]

    roots = []
    tail = list(coeffs)
    while tail and not tail[-1]:
        tail.pop()
    if len(tail) < len(coeffs):
        roots.append(Fraction(0))
    if len(tail) <= 1:
        return roots
    scale = lcm(*[c.denominator for c in tail])
    ints = [int(c * scale) for c in tail]
    lead, const = ints[0], ints[-1]
    for p in _divisors(const):
        for q in _divisors(lead):
            for cand in (Fraction(p, q), Fraction(-p, q)):
                if cand not in roots and not value(cand):
                    roots.append(cand)
    return sorted(roots)


class Subspace:
    """A subspace of k^n held as its canonical reduced echelon basis."""

    __slots__ = ("field", "ambient_dim", "basis", "pivots")

    def __init__(self, field, ambient_dim, vectors=()):
        self.field = field
        self.ambient_dim = ambient_dim
        vectors = [list(v) for v in vectors]
        for v in vectors:
            if len(v) != ambient_dim:
                raise DimensionMismatch("vector of length %d in k^%d" % (len(v), ambient_dim))
        if vectors:
            red, pivots = Mat(field, vectors).rref()
            self.basis = [red.data[i] for i in range(len(pivots))]
            self.pivots = pivots
        else:
            self.basis = []
            self.pivots = ()

    @classmethod
    def zero(cls, field, n):
        return cls(field, n)

    @classmethod
    def full(cls, field, n):
        return cls(field, n, Mat.identity(field, n).data)

    @property
    def dim(self):
        return len(self.basis)

    def basis_mat(self):
        m = Mat(self.field, self.basis) if self.basis else Mat.zeros(self.field, 0, self.ambient_dim)
        return m

    def reduce(self, v):
        """Subtract the pivot-determined part of v lying in this subspace."""
        v = list(v)
        for row, p in zip(self.basis, self.pivots):
            c = v[p]
            if c:
                v = [a - c * b for a, b in zip(v, row)]
        return v

    def contains(self, v):
        if len(v) != self.ambient_dim:
            raise DimensionMismatch("vector of length %d in k^%d" % (len(v), self.ambient_dim))
        return not any(self.reduce(v))

    def coords(self, v):
        """Coefficients of v in the canonical basis, or None if outside."""
        c = [v[p] for p in self.pivots]
        acc = list(v)
        for coef, row in zip(c, self.basis):
            if coef:
                acc = [a - coef * b for a, b in zip(acc, row)]
        if any(acc):
            return None
        return c

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.field == other.field
                and self.ambient_dim == other.ambient_dim and self.basis == other.basis)

    def __repr__(self):
        return "Subspace(dim=%d, ambient=%d)" % (self.dim, self.ambient_dim)

    def tensor(self, other):
        """Image of the tensor product inside k^(n*m), spanned pairwise."""
        vecs = [kron_vec(a, b) for a in self.basis for b in other.basis]
        return Subspace(self.field, self.ambient_dim * other.ambient_dim, vecs)


def _check_compatible(a, b):
    if a.field != b.field:
        raise FieldMismatch("subspaces over %r and %r" % (a.field, b.field))
    if a.ambient_dim != b.ambient_dim:
        raise DimensionMismatch("ambient dimensions %d and %d" % (a.ambient_dim, b.ambient_dim))


def subspace_sum(a, b):
    _check_compatible(a, b)
    return Subspace(a.field, a.ambient_dim, a.basis + b.basis)


def intersect(a, b):
    """Intersection by the stacked-kernel method: pairs (u, v) with
    u * basis(a) = v * basis(b) parameterize the common vectors."""
    _check_compatible(a, b)
    if not a.basis or not b.basis:
        return Subspace.zero(a.field, a.ambient_dim)
    cols = [list(r) for r in a.basis] + [vec_scale(-(a.field.one), r) for r in b.basis]
    m = Mat.from_cols(a.field, cols)
    ker = map_kernel(m)
    da = len(a.basis)
    vecs = []
    for w in ker.basis:
        acc = [a.field.zero] * a.ambient_dim
        for c, row in zip(w[:da], a.basis):
            if c:
                acc = [x + c * y for x, y in zip(acc, row)]
        vecs.append(acc)
    return Subspace(a.field, a.ambient_dim, vecs)


def contains(space, v):
    return space.contains(v)


def map_kernel(m):
    """Kernel of a matrix as a subspace of k^cols."""
    red, pivots = m.rref()
    free = [c for c in range(m.cols) if c not in pivots]
    vecs = []
    for f in free:
        v = [m.field.zero] * m.cols
        v[f] = m.field.one
        for r, p in enumerate(pivots):
            v[p] = -red[r][f]
        vecs.append(v)
    return Subspace(m.field, m.cols, vecs)


def quotient_with_section(ambient_dim, space):
    """Projection k^n -> k^(n-d) with kernel ``space`` plus a right
    inverse landing on the non-pivot coordinates.

    The quotient basis convention is fixed once and for all: coordinates
    are the complement of the pivot columns of the canonical basis.
    """
    if space.ambient_dim != ambient_dim:
        raise DimensionMismatch("subspace of k^%d inside k^%d" % (space.ambient_dim, ambient_dim))
    F = space.field
    free = [c for c in range(ambient_dim) if c not in space.pivots]
    proj = Mat.zeros(F, len(free), ambient_dim)
    for a, f in enumerate(free):
        proj.data[a][f] = F.one
        for row, p in zip(space.basis, space.pivots):
            if row[f]:
                proj.data[a][p] = -row[f]
    sect = Mat.zeros(F, ambient_dim, len(free))
    for a, f in enumerate(free):
        sect.data[f][a] = F.one
    return proj, sect


def restriction_matrix(op, space):
    """The matrix of op on ``space`` in its canonical basis; raises
    RestrictionFailure when op does not preserve the space."""
    cols = []
    for b in space.basis:
        img = op.apply(b)
        c = space.coords(img)
        if c is None:
            raise RestrictionFailure("operator image leaves the subspace")
        cols.append(c)
    return Mat.from_cols(space.field, cols) if cols else Mat.zeros(space.field, 0, 0)


def _lift_rows(space, rows):
    out = []
    for w in rows:
        acc = [space.field.zero] * space.ambient_dim
        for c, b in zip(w, space.basis):
            if c:
                acc = [x + c * y for x, y in zip(acc, b)]
        out.append(acc)
    return out


def rational_generalized_eigenspaces(op, space):
    """Eigenvalues of op restricted to an invariant subspace, together
    with their eigenspaces and generalized eigenspaces, all expressed in
    ambient coordinates.  Only eigenvalues in the ground field appear.
    """
    R = restriction_matrix(op, space)
    d = space.dim
    if d == 0:
        return []
    F = space.field
    roots = poly_roots_in_field(char_poly(R), F)
    out = []
    for lam in sorted(roots, key=F.sort_key):
        shifted = R - Mat.identity(F, d).scaled(lam)
        eig = map_kernel(shifted)
        if eig.dim == 0:
            continue
        gen = map_kernel(shifted.power(d))
        out.append((lam,
                    Subspace(F, space.ambient_dim, _lift_rows(space, eig.basis)),
                    Subspace(F, space.ambient_dim, _lift_rows(space, gen.basis))))
    return out
