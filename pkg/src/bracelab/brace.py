"""Hopf braces: one coalgebra carrying two compatible Hopf algebra
structures, the actions they induce on themselves, and the resulting
Yang-Baxter operators.

Conventions.  The two products are written ``dot`` and ``bullet``; the
compatibility between them reads, for all a, b, c,

    a bullet (b dot c)
      = (a1 bullet b) dot S(a2) dot (a3 bullet c)

in Sweedler notation, with S the dot antipode.  The left derived action
is  a -> b = S(a1) dot (a2 bullet b); the right one is
a <- b = T((a1 -> b1)) bullet a2 bullet b2, with T the bullet antipode.
"""

from .errors import (DimensionMismatch, FieldMismatch, NotCocommutative,
                     VerificationFailure)
from .hopf import (Check, Coalgebra, HopfAlgebra, VerificationReport,
                   norm_terms, verify_coalgebra, verify_hopf_algebra)
from .linalg import Mat, basis_vec, kron_vec, zero_vec


class HopfBrace:
    """Two Hopf algebra structures on one shared coalgebra and unit."""

    def __init__(self, coalg, mul_dot, mul_bullet, unit, antipode_dot=None,
                 antipode_bullet=None):
        self.coalg = coalg
        self.dot = HopfAlgebra(coalg, mul_dot, unit, antipode_dot)
        self.bullet = HopfAlgebra(coalg, mul_bullet, unit, antipode_bullet)
        self.unit = self.dot.unit
        self._act_left = None
        self._act_right = None

    @property
    def field(self):
        return self.coalg.field

    @property
    def dim(self):
        return self.coalg.dim

    def unit_vec(self):
        return list(self.unit)

    def __eq__(self, other):
        return (isinstance(other, HopfBrace) and self.coalg == other.coalg
                and self.dot == other.dot and self.bullet == other.bullet)

    def act_left_table(self):
        """Dense table of basis-pair values of the left derived action."""
        if self._act_left is None:
            n = self.dim
            F = self.field
            table = []
            for i in range(n):
                row = []
                for j in range(n):
                    acc = zero_vec(F, n)
                    ej = basis_vec(F, n, j)
                    for p, q, c in self.coalg.comul[i]:
                        term = self.dot.product(self.dot.antipode.col(p),
                                                self.bullet.product(basis_vec(F, n, q), ej))
                        acc = [x + c * y for x, y in zip(acc, term)]
                    row.append(acc)
                table.append(row)
            self._act_left = table
        return self._act_left

    def act_right_table(self):
        """Dense table of basis-pair values of the right derived action."""
        if self._act_right is None:
            n = self.dim
            F = self.field
            left = self.act_left_table()
            table = []
            for i in range(n):
                row = []
                for j in range(n):
                    acc = zero_vec(F, n)
                    for p, q, ca in self.coalg.comul[i]:
                        for r, s, cb in self.coalg.comul[j]:
                            term = self.bullet.product_many(
                                self.bullet.antipode.apply(left[p][r]),
                                basis_vec(F, n, q), basis_vec(F, n, s))
                            f = ca * cb
                            acc = [x + f * y for x, y in zip(acc, term)]
                    row.append(acc)
                table.append(row)
            self._act_right = table
        return self._act_right


def brace_from_pair(hdot, hbullet):
    """Assemble a brace from two Hopf algebras; they must share the
    coalgebra and the unit."""
    if hdot.coalg != hbullet.coalg:
        raise DimensionMismatch("the two Hopf algebras do not share a coalgebra")
    if hdot.unit != hbullet.unit:
        raise DimensionMismatch("the two Hopf algebras do not share a unit")
    return HopfBrace(hdot.coalg, hdot.mul, hbullet.mul, hdot.unit,
                     hdot.antipode, hbullet.antipode)


def left_action(b, a, x):
    """a -> x for arbitrary vectors a and x."""
    table = b.act_left_table()
    acc = zero_vec(b.field, b.dim)
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j, xj in enumerate(x):
            if xj:
                f = ai * xj
                acc = [u + f * v for u, v in zip(acc, table[i][j])]
    return acc


def right_action(b, a, x):
    """a <- x for arbitrary vectors a and x."""
    table = b.act_right_table()
    acc = zero_vec(b.field, b.dim)
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j, xj in enumerate(x):
            if xj:
                f = ai * xj
                acc = [u + f * v for u, v in zip(acc, table[i][j])]
    return acc


def _compatibility_witness(b):
    """First basis triple violating the two-product compatibility law."""
    n = b.dim
    F = b.field
    for i in range(n):
        d2 = b.coalg.delta2(i)
        for j in range(n):
            for k in range(n):
                lhs = b.bullet.product(basis_vec(F, n, i), b.dot.col(j, k))
                acc = zero_vec(F, n)
                for p, q, r, c in d2:
                    term = b.dot.product_many(
                        b.bullet.col(p, j),
                        b.dot.antipode.col(q),
                        b.bullet.col(r, k))
                    acc = [x + c * y for x, y in zip(acc, term)]
                if lhs != acc:
                    return (i, j, k)
    return None


def verify_hopf_brace(b, expect_cocommutative=True):
    """Verify both Hopf algebra structures on the shared coalgebra plus
    the compatibility law; check names are prefixed dot./bullet."""
    checks = verify_coalgebra(b.coalg, expect_cocommutative).checks
    for label, alg in (("dot", b.dot), ("bullet", b.bullet)):
        rep = verify_hopf_algebra(alg, expect_cocommutative=False)
        for c in rep.checks:
            if c.name in ("coassociativity", "counit_law"):
                continue
            checks.append(Check("%s.%s" % (label, c.name), c.passed, c.witness))
    w = _compatibility_witness(b)
    checks.append(Check("compatibility", w is None, w))
    return VerificationReport(checks)


def trivial_brace(h):
    """The brace with bullet equal to dot; needs cocommutativity."""
    if not h.coalg.is_cocommutative():
        raise NotCocommutative("trivial brace requires a cocommutative carrier")
    return HopfBrace(h.coalg, h.mul, h.mul, h.unit, h.antipode, h.antipode)


def cocycle_check(b):
    """Whether a bullet b = a1 dot (a2 -> b) holds on all basis pairs:
    the identity map as a 1-cocycle condition."""
    n = b.dim
    F = b.field
    table = b.act_left_table()
    for i in range(n):
        for j in range(n):
            rhs = zero_vec(F, n)
            for p, q, c in b.coalg.comul[i]:
                term = b.dot.product(basis_vec(F, n, p), table[q][j])
                rhs = [x + c * y for x, y in zip(rhs, term)]
            if b.bullet.col(i, j) != rhs:
                return False
    return True


class YBEOperator:
    """A linear operator on the tensor square of a brace carrier, stored
    as an n^2 by n^2 matrix on flattened tensors."""

    def __init__(self, brace, mat):
        self.brace = brace
        self.mat = mat

    @property
    def dim(self):
        return self.brace.dim


def ybe_operator(b):
    """The braiding  a (x) b  |->  (a1 -> b1) (x) (a2 <- b2)."""
    n = b.dim
    F = b.field
    left = b.act_left_table()
    right = b.act_right_table()
    mat = Mat.zeros(F, n * n, n * n)
    for i in range(n):
        for j in range(n):
            col = i * n + j
            for p, q, ca in b.coalg.comul[i]:
                for r, s, cb in b.coalg.comul[j]:
                    f = ca * cb
                    lv = left[p][r]
                    rv = right[q][s]
                    for a, x in enumerate(lv):
                        if not x:
                            continue
                        fx = f * x
                        base = a * n
                        for bb, y in enumerate(rv):
                            if y:
                                mat.data[base + bb][col] = mat.data[base + bb][col] + fx * y
    return YBEOperator(b, mat)


def _sparse_col(mat, j):
    return [(i, row[j]) for i, row in enumerate(mat.data) if row[j]]


def braid_check(op):
    """Exact braid relation on the triple tensor power, plus the checks
    that the operator is bijective and a coalgebra map."""
    b = op.brace
    n = b.dim
    F = b.field
    cols = [_sparse_col(op.mat, j) for j in range(n * n)]

    def apply12(vec):
        out = {}
        for (i, j, k), c in vec.items():
            for idx, x in cols[i * n + j]:
                key = (idx // n, idx % n, k)
                out[key] = out.get(key, F.zero) + c * x
        return {k: v for k, v in out.items() if v}

    def apply23(vec):
        out = {}
        for (i, j, k), c in vec.items():
            for idx, x in cols[j * n + k]:
                key = (i, idx // n, idx % n)
                out[key] = out.get(key, F.zero) + c * x
        return {k: v for k, v in out.items() if v}

    for i in range(n):
        for j in range(n):
            for k in range(n):
                start = {(i, j, k): F.one}
                lhs = apply12(apply23(apply12(start)))
                rhs = apply23(apply12(apply23(start)))
                if lhs != rhs:
                    return False

    if op.mat.rank() != n * n:
        return False

    # coalgebra map: comultiplication of the tensor square intertwines
    # with op (x) op, and the tensor counit is preserved.
    for i in range(n):
        for j in range(n):
            image = _sparse_col(op.mat, i * n + j)
            lhs = {}
            for idx, x in image:
                a, bb = idx // n, idx % n
                for p, q, ca in b.coalg.comul[a]:
                    for r, s, cb in b.coalg.comul[bb]:
                        key = (p, r, q, s)
                        lhs[key] = lhs.get(key, F.zero) + x * ca * cb
            lhs = {k: v for k, v in lhs.items() if v}
            rhs = {}
            for p, q, ca in b.coalg.comul[i]:
                for r, s, cb in b.coalg.comul[j]:
                    f = ca * cb
                    for idx1, x1 in cols[p * n + r]:
                        for idx2, x2 in cols[q * n + s]:
                            key = (idx1 // n, idx1 % n, idx2 // n, idx2 % n)
                            rhs[key] = rhs.get(key, F.zero) + f * x1 * x2
            rhs = {k: v for k, v in rhs.items() if v}
            if lhs != rhs:
                return False
            eps = F.zero
            for idx, x in image:
                eps = eps + x * b.coalg.counit[idx // n] * b.coalg.counit[idx % n]
            if eps != b.coalg.counit[i] * b.coalg.counit[j]:
                return False
    return True


def tensor_coalgebra(a, b):
    """The tensor product coalgebra with the middle flip built in;
    index (i, j) flattens to i * dim(b) + j."""
    if a.field != b.field:
        raise FieldMismatch("tensor of coalgebras over different fields")
    F = a.field
    nb = b.dim
    names = ["%s*%s" % (x, y) for x in a.names for y in b.names]
    comul = []
    counit = []
    for i in range(a.dim):
        for j in range(b.dim):
            terms = []
            for p, q, ca in a.comul[i]:
                for r, s, cb in b.comul[j]:
                    terms.append((p * nb + r, q * nb + s, ca * cb))
            comul.append(terms)
            counit.append(a.counit[i] * b.counit[j])
    return Coalgebra(F, names, comul, counit)


def _tensor_mul(alg_a, alg_b):
    na, nb = alg_a.dim, alg_b.dim
    n = na * nb
    mul = [[None] * n for _ in range(n)]
    for i in range(na):
        for j in range(nb):
            for k in range(na):
                for l in range(nb):
                    terms = []
                    for x, c1 in alg_a.mul[i][k]:
                        for y, c2 in alg_b.mul[j][l]:
                            terms.append((x * nb + y, c1 * c2))
                    mul[i * nb + j][k * nb + l] = terms
    return mul


def tensor_brace(a, b):
    """The brace structure on the tensor product, together with the two
    counit-against-identity projections as morphisms."""
    from .subobjects import BraceMorphism
    if a.field != b.field:
        raise FieldMismatch("tensor of braces over different fields")
    F = a.field
    coalg = tensor_coalgebra(a.coalg, b.coalg)
    mul_dot = _tensor_mul(a.dot, b.dot)
    mul_bullet = _tensor_mul(a.bullet, b.bullet)
    unit = kron_vec(a.unit_vec(), b.unit_vec())
    s = a.dot.antipode.kron(b.dot.antipode)
    t = a.bullet.antipode.kron(b.bullet.antipode)
    prod = HopfBrace(coalg, mul_dot, mul_bullet, unit, s, t)
    na, nb = a.dim, b.dim
    pa = Mat.zeros(F, na, na * nb)
    pb = Mat.zeros(F, nb, na * nb)
    for i in range(na):
        for j in range(nb):
            pa.data[i][i * nb + j] = b.coalg.counit[j]
            pb.data[j][i * nb + j] = a.coalg.counit[i]
    return prod, BraceMorphism(prod, a, pa), BraceMorphism(prod, b, pb)


def pair_into_product(f, g):
    """The mediating morphism into a tensor product brace determined by
    two morphisms out of one domain: x |-> (f (x) g) comul(x)."""
    from .subobjects import BraceMorphism
    if f.dom is not g.dom and f.dom != g.dom:
        raise DimensionMismatch("pairing needs a shared domain")
    prod, _, _ = tensor_brace(f.cod, g.cod)
    na, nb = f.cod.dim, g.cod.dim
    L = f.dom
    mat = Mat.zeros(L.field, na * nb, L.dim)
    for l in range(L.dim):
        for p, q, c in L.coalg.comul[l]:
            fv = f.mat.col(p)
            gv = g.mat.col(q)
            for i, x in enumerate(fv):
                if not x:
                    continue
                for j, y in enumerate(gv):
                    if y:
                        mat.data[i * nb + j][l] = mat.data[i * nb + j][l] + c * x * y
    return BraceMorphism(L, prod, mat)


class MatchedPair:
    """A Hopf algebra acting on itself on both sides: the data of the
    bullet product with the two derived action tables."""

    def __init__(self, bullet, act_left, act_right):
        self.bullet = bullet
        n = bullet.dim
        self.act_left = tuple(tuple(norm_terms(t) for t in row) for row in act_left)
        self.act_right = tuple(tuple(norm_terms(t) for t in row) for row in act_right)
        if len(self.act_left) != n or len(self.act_right) != n:
            raise DimensionMismatch("action table size mismatch")

    @property
    def field(self):
        return self.bullet.field

    @property
    def dim(self):
        return self.bullet.dim

    def left_col(self, i, j):
        out = zero_vec(self.field, self.dim)
        for k, c in self.act_left[i][j]:
            out[k] = c
        return out

    def right_col(self, i, j):
        out = zero_vec(self.field, self.dim)
        for k, c in self.act_right[i][j]:
            out[k] = c
        return out

    def left_apply(self, a, x):
        acc = zero_vec(self.field, self.dim)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, xj in enumerate(x):
                if xj:
                    f = ai * xj
                    for k, c in self.act_left[i][j]:
                        acc[k] = acc[k] + f * c
        return acc

    def right_apply(self, a, x):
        acc = zero_vec(self.field, self.dim)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, xj in enumerate(x):
                if xj:
                    f = ai * xj
                    for k, c in self.act_right[i][j]:
                        acc[k] = acc[k] + f * c
        return acc


def _terms_of(vec):
    return [(k, c) for k, c in enumerate(vec) if c]


def to_matched_pair(b):
    """Extract the bullet Hopf algebra with both derived action tables."""
    left = b.act_left_table()
    right = b.act_right_table()
    return MatchedPair(b.bullet,
                       [[_terms_of(v) for v in row] for row in left],
                       [[_terms_of(v) for v in row] for row in right])


def verify_matched_pair(mp):
    """Module laws, comodule-compatibility laws and the three matched
    pair equations, each searched for a witness over basis tuples."""
    n = mp.dim
    F = mp.field
    H = mp.bullet
    coalg = H.coalg
    checks = []
    one = H.unit_vec()

    def bvec(i):
        return basis_vec(F, n, i)

    witness = None
    for j in range(n):
        if mp.left_apply(one, bvec(j)) != bvec(j):
            witness = (j,)
            break
    checks.append(Check("left_action_unital", witness is None, witness))

    witness = None
    for i in range(n):
        if witness:
            break
        for j in range(n):
            if witness:
                break
            ij = H.col(i, j)
            for k in range(n):
                lhs = mp.left_apply(ij, bvec(k))
                rhs = mp.left_apply(bvec(i), mp.left_col(j, k))
                if lhs != rhs:
                    witness = (i, j, k)
                    break
    checks.append(Check("left_action_associative", witness is None, witness))

    witness = None
    for j in range(n):
        if mp.right_apply(bvec(j), one) != bvec(j):
            witness = (j,)
            break
    checks.append(Check("right_action_unital", witness is None, witness))

    witness = None
    for i in range(n):
        if witness:
            break
        for j in range(n):
            if witness:
                break
            for k in range(n):
                lhs = mp.right_apply(bvec(i), H.col(j, k))
                rhs = mp.right_apply(mp.right_col(i, j), bvec(k))
                if lhs != rhs:
                    witness = (i, j, k)
                    break
    checks.append(Check("right_action_associative", witness is None, witness))

    for name, col in (("left_action_coalgebra_map", mp.left_col),
                      ("right_action_coalgebra_map", mp.right_col)):
        witness = None
        for i in range(n):
            if witness:
                break
            for j in range(n):
                lhs = coalg.comul_vec(col(i, j))
                rhs = {}
                for p, q, ca in coalg.comul[i]:
                    for r, s, cb in coalg.comul[j]:
                        f = ca * cb
                        for a, x in _terms_of(col(p, r)):
                            for bb, y in _terms_of(col(q, s)):
                                key = (a, bb)
                                rhs[key] = rhs.get(key, F.zero) + f * x * y
                rhs = {k: v for k, v in rhs.items() if v}
                if lhs != rhs:
                    witness = (i, j)
                    break
                eps = coalg.counit_vec(col(i, j))
                if eps != coalg.counit[i] * coalg.counit[j]:
                    witness = (i, j)
                    break
        checks.append(Check(name, witness is None, witness))

    witness = None
    for i in range(n):
        if witness:
            break
        for j in range(n):
            if witness:
                break
            for k in range(n):
                lhs = mp.left_apply(bvec(i), H.col(j, k))
                acc = zero_vec(F, n)
                for p, q, ca in coalg.comul[i]:
                    for r, s, cb in coalg.comul[j]:
                        f = ca * cb
                        term = H.product(mp.left_col(p, r),
                                         mp.left_apply(mp.right_col(q, s), bvec(k)))
                        acc = [x + f * y for x, y in zip(acc, term)]
                if lhs != acc:
                    witness = (i, j, k)
                    break
    checks.append(Check("left_action_on_products", witness is None, witness))

    witness = None
    for i in range(n):
        if witness:
            break
        for j in range(n):
            if witness:
                break
            for k in range(n):
                lhs = mp.right_apply(H.col(i, j), bvec(k))
                acc = zero_vec(F, n)
                for p, q, ca in coalg.comul[j]:
                    for r, s, cb in coalg.comul[k]:
                        f = ca * cb
                        term = H.product(
                            mp.right_apply(bvec(i), mp.left_col(p, r)),
                            mp.right_col(q, s))
                        acc = [x + f * y for x, y in zip(acc, term)]
                if lhs != acc:
                    witness = (i, j, k)
                    break
    checks.append(Check("right_action_on_products", witness is None, witness))

    witness = None
    for i in range(n):
        if witness:
            break
        for j in range(n):
            acc = zero_vec(F, n)
            for p, q, ca in coalg.comul[i]:
                for r, s, cb in coalg.comul[j]:
                    f = ca * cb
                    term = H.product(mp.left_col(p, r), mp.right_col(q, s))
                    acc = [x + f * y for x, y in zip(acc, term)]
            if acc != H.col(i, j):
                witness = (i, j)
                break
    checks.append(Check("actions_recompose_product", witness is None, witness))
    return VerificationReport(checks)


def from_matched_pair(mp):
    """Rebuild the brace: a dot b = a1 bullet (T(a2) -> b), with the dot
    antipode S(a) = a1 -> T(a2); the result is verified."""
    n = mp.dim
    F = mp.field
    H = mp.bullet
    coalg = H.coalg
    T = H.antipode
    mul_dot = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = zero_vec(F, n)
            for p, q, c in coalg.comul[i]:
                term = H.product(basis_vec(F, n, p),
                                 mp.left_apply(T.col(q), basis_vec(F, n, j)))
                acc = [x + c * y for x, y in zip(acc, term)]
            row.append(_terms_of(acc))
        mul_dot.append(row)
    s = Mat.zeros(F, n, n)
    for i in range(n):
        acc = zero_vec(F, n)
        for p, q, c in coalg.comul[i]:
            term = mp.left_apply(basis_vec(F, n, p), T.col(q))
            acc = [x + c * y for x, y in zip(acc, term)]
        for r in range(n):
            s.data[r][i] = acc[r]
    out = HopfBrace(coalg, mul_dot, [[list(t) for t in row] for row in H.mul],
                    H.unit, s, T)
    rep = verify_hopf_brace(out)
    if not rep.ok:
        raise VerificationFailure("matched pair does not reassemble into a brace",
                                  rep)
    return out
