"""Coalgebras and Hopf algebras as exact structure constants.

A coalgebra is stored by its comultiplication terms per basis element
plus the counit; an algebra by its multiplication columns.  Everything
is verified by iterating basis tuples, which yields a concrete witness
index whenever an axiom fails.
"""

from .errors import (AntipodeAsymmetry, DimensionMismatch, NoAntipode,
                     NotCocommutative, NotPointed)
from .linalg import (Mat, Subspace, basis_vec, map_kernel,
                     rational_generalized_eigenspaces, subspace_sum, zero_vec)


def norm_terms(terms):
    """Merge duplicate indices, drop zero coefficients, sort by index."""
    acc = {}
    for *idx, c in terms:
        key = tuple(idx)
        acc[key] = acc[key] + c if key in acc else c
    out = []
    for key in sorted(acc):
        if acc[key]:
            out.append(key + (acc[key],))
    return tuple(out)


class Check:
    """One named axiom check with an optional failing basis tuple."""

    __slots__ = ("name", "passed", "witness")

    def __init__(self, name, passed, witness=None):
        self.name = name
        self.passed = passed
        self.witness = witness

    def __repr__(self):
        tail = "" if self.passed else " witness=%r" % (self.witness,)
        return "%s: %s%s" % (self.name, "pass" if self.passed else "FAIL", tail)


class VerificationReport:
    """An ordered list of checks; truthy exactly when all pass."""

    def __init__(self, checks):
        self.checks = list(checks)

    @property
    def ok(self):
        return all(c.passed for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.passed]

    def __bool__(self):
        return self.ok

    def __str__(self):
        return "\n".join(repr(c) for c in self.checks)

    def as_obj(self):
        return [{"name": c.name, "passed": c.passed,
                 "witness": list(c.witness) if c.witness is not None else None}
                for c in self.checks]


class Coalgebra:
    """A finite-dimensional coalgebra with a distinguished basis."""

    def __init__(self, field, names, comul, counit):
        self.field = field
        self.names = tuple(names)
        self.dim = len(self.names)
        if len(comul) != self.dim or len(counit) != self.dim:
            raise DimensionMismatch("comultiplication/counit size mismatch")
        self.comul = tuple(norm_terms(t) for t in comul)
        self.counit = tuple(counit)
        self._delta2 = None
        self._hits = None

    def __eq__(self, other):
        return (isinstance(other, Coalgebra) and self.field == other.field
                and self.comul == other.comul and self.counit == other.counit)

    def comul_vec(self, v):
        """Comultiplication of an arbitrary vector as a dict (j, k) -> c."""
        out = {}
        for i, a in enumerate(v):
            if not a:
                continue
            for j, k, c in self.comul[i]:
                key = (j, k)
                prev = out.get(key)
                out[key] = a * c if prev is None else prev + a * c
        return {k: c for k, c in out.items() if c}

    def delta2(self, i):
        """Terms of the twice-iterated comultiplication of basis element i."""
        if self._delta2 is None:
            table = []
            for idx in range(self.dim):
                terms = []
                for a, b, c1 in self.comul[idx]:
                    for p, q, c2 in self.comul[a]:
                        terms.append((p, q, b, c1 * c2))
                table.append(norm_terms(terms))
            self._delta2 = table
        return self._delta2[i]

    def counit_vec(self, v):
        acc = self.field.zero
        for a, e in zip(v, self.counit):
            if a and e:
                acc = acc + a * e
        return acc

    def comul_mat(self):
        """Comultiplication as an n^2 x n matrix on flattened tensors."""
        n = self.dim
        m = Mat.zeros(self.field, n * n, n)
        for i in range(n):
            for j, k, c in self.comul[i]:
                m.data[j * n + k][i] = c
        return m

    def hit_ops(self):
        """Matrices of the left and right coordinate hits
        (f (x) id) o comul and (id (x) f) o comul for dual basis f."""
        if self._hits is None:
            n = self.dim
            left = [Mat.zeros(self.field, n, n) for _ in range(n)]
            right = [Mat.zeros(self.field, n, n) for _ in range(n)]
            for i in range(n):
                for j, k, c in self.comul[i]:
                    left[j].data[k][i] = left[j].data[k][i] + c
                    right[k].data[j][i] = right[k].data[j][i] + c
            self._hits = (left, right)
        return self._hits

    def is_cocommutative(self):
        for i in range(self.dim):
            flipped = norm_terms((k, j, c) for j, k, c in self.comul[i])
            if flipped != self.comul[i]:
                return False
        return True


def verify_coalgebra(c, expect_cocommutative=True):
    """Coassociativity, the counit laws and (optionally) cocommutativity."""
    checks = []
    witness = None
    for i in range(c.dim):
        left = {}
        right = {}
        for j, k, cc in c.comul[i]:
            for p, q, c2 in c.comul[j]:
                key = (p, q, k)
                left[key] = left.get(key, c.field.zero) + cc * c2
            for p, q, c2 in c.comul[k]:
                key = (j, p, q)
                right[key] = right.get(key, c.field.zero) + cc * c2
        left = {k: v for k, v in left.items() if v}
        right = {k: v for k, v in right.items() if v}
        if left != right:
            witness = (i,)
            break
    checks.append(Check("coassociativity", witness is None, witness))

    witness = None
    for i in range(c.dim):
        lvec = zero_vec(c.field, c.dim)
        rvec = zero_vec(c.field, c.dim)
        for j, k, cc in c.comul[i]:
            lvec[k] = lvec[k] + c.counit[j] * cc
            rvec[j] = rvec[j] + c.counit[k] * cc
        if lvec != basis_vec(c.field, c.dim, i) or rvec != basis_vec(c.field, c.dim, i):
            witness = (i,)
            break
    checks.append(Check("counit_law", witness is None, witness))

    if expect_cocommutative:
        witness = None
        for i in range(c.dim):
            if norm_terms((k, j, cc) for j, k, cc in c.comul[i]) != c.comul[i]:
                witness = (i,)
                break
        checks.append(Check("cocommutativity", witness is None, witness))
    return VerificationReport(checks)


class HopfAlgebra:
    """A Hopf algebra sharing its coalgebra with possibly other products.

    ``mul[i][j]`` lists the terms of the product of basis elements i, j.
    The antipode is solved for from the convolution equation when not
    supplied.
    """

    def __init__(self, coalg, mul, unit, antipode=None):
        self.coalg = coalg
        n = coalg.dim
        if len(mul) != n or any(len(row) != n for row in mul):
            raise DimensionMismatch("multiplication table size mismatch")
        self.mul = tuple(tuple(norm_terms(col) for col in row) for row in mul)
        self.unit = tuple(unit)
        if len(self.unit) != n:
            raise DimensionMismatch("unit vector size mismatch")
        if antipode is None:
            antipode = compute_antipode(coalg, self.mul, self.unit)
        self.antipode = antipode

    @property
    def field(self):
        return self.coalg.field

    @property
    def dim(self):
        return self.coalg.dim

    def __eq__(self, other):
        return (isinstance(other, HopfAlgebra) and self.coalg == other.coalg
                and self.mul == other.mul and self.unit == other.unit
                and self.antipode == other.antipode)

    def col(self, i, j):
        """The product of basis elements i and j as a dense vector."""
        out = zero_vec(self.field, self.dim)
        for (k, c) in self.mul[i][j]:
            out[k] = c
        return out

    def product(self, v, w):
        """The product of two arbitrary vectors."""
        out = zero_vec(self.field, self.dim)
        for i, a in enumerate(v):
            if not a:
                continue
            row = self.mul[i]
            for j, b in enumerate(w):
                if not b:
                    continue
                ab = a * b
                for k, c in row[j]:
                    out[k] = out[k] + ab * c
        return out

    def product_many(self, *vecs):
        acc = vecs[0]
        for v in vecs[1:]:
            acc = self.product(acc, v)
        return acc

    def apply_antipode(self, v):
        return self.antipode.apply(v)

    def unit_vec(self):
        return list(self.unit)


def compute_antipode(coalg, mul, unit):
    """Solve the left convolution equation for the antipode and verify
    the right one; raises NoAntipode / AntipodeAsymmetry."""
    n = coalg.dim
    F = coalg.field
    mul_cols = {}
    for a in range(n):
        for q in range(n):
            mul_cols[(a, q)] = mul[a][q]
    big = Mat.zeros(F, n * n, n * n)
    rhs = []
    for i in range(n):
        for j, k, c in coalg.comul[i]:
            for a in range(n):
                for b, cc in mul_cols[(a, k)]:
                    big.data[i * n + b][a * n + j] = big.data[i * n + b][a * n + j] + c * cc
        for b in range(n):
            rhs.append(coalg.counit[i] * unit[b])
    sol = big.solve(rhs)
    if sol is None:
        raise NoAntipode("no solution to the antipode convolution equation")
    S = Mat.zeros(F, n, n)
    for a in range(n):
        for p in range(n):
            S.data[a][p] = sol[a * n + p]
    for i in range(n):
        acc = zero_vec(F, n)
        for j, k, c in coalg.comul[i]:
            sk = S.col(k)
            for a, sa in enumerate(sk):
                if not sa:
                    continue
                for kk, mc in mul[j][a]:
                    acc[kk] = acc[kk] + c * sa * mc
        if acc != [coalg.counit[i] * u for u in unit]:
            raise AntipodeAsymmetry("left antipode fails the right convolution law "
                                    "at basis index %d" % i)
    return S


def _convolution_check(h, S, side):
    """Witness search for m (S (x) id) comul = unit counit (or mirrored)."""
    n = h.dim
    F = h.field
    for i in range(n):
        acc = zero_vec(F, n)
        for j, k, c in h.coalg.comul[i]:
            if side == "left":
                left, right = S.col(j), basis_vec(F, n, k)
            else:
                left, right = basis_vec(F, n, j), S.col(k)
            prod = h.product(left, right)
            acc = [x + c * y for x, y in zip(acc, prod)]
        if acc != [h.coalg.counit[i] * u for u in h.unit]:
            return (i,)
    return None


def verify_hopf_algebra(h, expect_cocommutative=True):
    """Full axiom sweep; returns a VerificationReport."""
    checks = verify_coalgebra(h.coalg, expect_cocommutative).checks
    n = h.dim
    F = h.field

    witness = None
    for i in range(n):
        if witness:
            break
        for j in range(n):
            if witness:
                break
            ij = h.col(i, j)
            for k in range(n):
                lhs = h.product(ij, basis_vec(F, n, k))
                rhs = h.product(basis_vec(F, n, i), h.col(j, k))
                if lhs != rhs:
                    witness = (i, j, k)
                    break
    checks.append(Check("associativity", witness is None, witness))

    witness = None
    one = h.unit_vec()
    for i in range(n):
        e = basis_vec(F, n, i)
        if h.product(one, e) != e or h.product(e, one) != e:
            witness = (i,)
            break
    checks.append(Check("unit_law", witness is None, witness))

    witness = None
    for i in range(n):
        if witness:
            break
        for j in range(n):
            lhs = h.coalg.comul_vec(h.col(i, j))
            rhs = {}
            for p, q, ca in h.coalg.comul[i]:
                for r, s, cb in h.coalg.comul[j]:
                    f = ca * cb
                    for a, c1 in h.mul[p][r]:
                        for b, c2 in h.mul[q][s]:
                            key = (a, b)
                            rhs[key] = rhs.get(key, F.zero) + f * c1 * c2
            rhs = {k: v for k, v in rhs.items() if v}
            if lhs != rhs:
                witness = (i, j)
                break
    checks.append(Check("comul_multiplicative", witness is None, witness))

    unit_comul = h.coalg.comul_vec(one)
    expected = {}
    for a, x in enumerate(one):
        if not x:
            continue
        for b, y in enumerate(one):
            if y:
                expected[(a, b)] = x * y
    checks.append(Check("comul_unit", unit_comul == expected,
                        None if unit_comul == expected else ()))

    witness = None
    for i in range(n):
        if witness:
            break
        for j in range(n):
            if h.coalg.counit_vec(h.col(i, j)) != h.coalg.counit[i] * h.coalg.counit[j]:
                witness = (i, j)
                break
    checks.append(Check("counit_multiplicative", witness is None, witness))
    eps_one = h.coalg.counit_vec(one)
    checks.append(Check("counit_unit", eps_one == F.one,
                        None if eps_one == F.one else ()))

    w = _convolution_check(h, h.antipode, "left")
    checks.append(Check("antipode_left", w is None, w))
    w = _convolution_check(h, h.antipode, "right")
    checks.append(Check("antipode_right", w is None, w))
    return VerificationReport(checks)


def group_likes(h):
    """All group-like vectors over the ground field, sorted by coordinates.

    Candidates are common eigenvectors of the coordinate hit operators;
    since a group-like equals its own eigenvalue pattern, each surviving
    pattern is checked directly, which makes the search complete over k.
    """
    coalg = h.coalg if isinstance(h, HopfAlgebra) else h
    if not coalg.is_cocommutative():
        raise NotCocommutative("group-like search requires cocommutativity")
    n = coalg.dim
    F = coalg.field
    left, _ = coalg.hit_ops()
    patterns = [(Subspace.full(F, n), ())]
    for i in range(n):
        refined = []
        for space, pat in patterns:
            for lam, eig, _gen in rational_generalized_eigenspaces(left[i], space):
                refined.append((eig, pat + (lam,)))
        patterns = refined
        if not patterns:
            return []
    out = []
    for _space, pat in patterns:
        x = list(pat)
        if not any(x):
            continue
        if coalg.counit_vec(x) != F.one:
            continue
        expected = {}
        for a, xa in enumerate(x):
            if not xa:
                continue
            for b, xb in enumerate(x):
                if xb:
                    expected[(a, b)] = xa * xb
        if coalg.comul_vec(x) == expected and x not in out:
            out.append(x)
    out.sort(key=lambda v: tuple(F.sort_key(a) for a in v))
    return out


def primitives(h):
    """The subspace of primitive elements of a Hopf algebra."""
    n = h.dim
    F = h.field
    m = h.coalg.comul_mat()
    one = h.unit_vec()
    cond = Mat.zeros(F, n * n, n)
    for i in range(n):
        for r in range(n * n):
            cond.data[r][i] = m.data[r][i]
        for b, u in enumerate(one):
            if u:
                cond.data[i * n + b][i] = cond.data[i * n + b][i] - u
                cond.data[b * n + i][i] = cond.data[b * n + i][i] - u
    return map_kernel(cond)


def generated_subcoalgebra(coalg, seed):
    """Smallest subspace containing ``seed`` closed under both coordinate
    hits; for a finite-dimensional coalgebra this is the subcoalgebra
    generated by the seed."""
    left, right = coalg.hit_ops()
    space = seed
    while True:
        grown = space
        for op in left + right:
            imgs = [op.apply(b) for b in space.basis]
            if imgs:
                grown = subspace_sum(grown, Subspace(coalg.field, coalg.dim, imgs))
        if grown.dim == space.dim:
            return grown
        space = grown


def irreducible_components(h):
    """The component of each group-like: the joint generalized eigenspace
    of the hit operators with that group-like's eigenvalue pattern.

    Raises NotPointed when the components do not fill the whole space
    over the ground field.
    """
    coalg = h.coalg if isinstance(h, HopfAlgebra) else h
    n = coalg.dim
    F = coalg.field
    gls = group_likes(h)
    left, _ = coalg.hit_ops()
    components = []
    total = 0
    for g in gls:
        space = Subspace.full(F, n)
        for i in range(n):
            found = None
            for lam, _eig, gen in rational_generalized_eigenspaces(left[i], space):
                if lam == g[i]:
                    found = gen
                    break
            space = found if found is not None else Subspace.zero(F, n)
            if space.dim == 0:
                break
        components.append((g, space))
        total += space.dim
    if total < n:
        raise NotPointed("group-like components span %d of %d dimensions" % (total, n))
    return components
