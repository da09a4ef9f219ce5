"""Set-level skew braces: two group structures on one finite set with a
shared identity, linked by the distributivity-style compatibility law

    g o (h . k) = (g o h) . inv.(g) . (g o k)

where inv. is inversion in the dot group.  Linearizing over a field
turns a skew brace into a brace on the group algebra carrier; the
lambda/rho maps give the associated set-theoretic solution.
"""

from .errors import DimensionMismatch, VerificationFailure
from .hopf import Check, Coalgebra, VerificationReport
from .linalg import Mat


class SkewBrace:
    """Two Cayley tables over indices 0..order-1 and a shared identity."""

    def __init__(self, order, dot_table, bullet_table, identity=0, name=None):
        self.order = order
        self.dot_table = [list(r) for r in dot_table]
        self.bullet_table = [list(r) for r in bullet_table]
        self.identity = identity
        self.name = name
        for t in (self.dot_table, self.bullet_table):
            if len(t) != order or any(len(r) != order for r in t):
                raise DimensionMismatch("Cayley table must be %d x %d" % (order, order))
            for r in t:
                for v in r:
                    if not 0 <= v < order:
                        raise DimensionMismatch("table entry %r out of range" % (v,))

    def dot(self, x, y):
        return self.dot_table[x][y]

    def bullet(self, x, y):
        return self.bullet_table[x][y]

    def dot_inv(self, x):
        for y in range(self.order):
            if self.dot_table[x][y] == self.identity:
                return y
        return None

    def bullet_inv(self, x):
        for y in range(self.order):
            if self.bullet_table[x][y] == self.identity:
                return y
        return None


def _group_checks(label, table, order, identity):
    checks = []
    witness = None
    for i in range(order):
        if witness:
            break
        for j in range(order):
            if witness:
                break
            for k in range(order):
                if table[table[i][j]][k] != table[i][table[j][k]]:
                    witness = (i, j, k)
                    break
    checks.append(Check("%s.associativity" % label, witness is None, witness))

    witness = None
    for i in range(order):
        if table[identity][i] != i or table[i][identity] != i:
            witness = (i,)
            break
    checks.append(Check("%s.identity" % label, witness is None, witness))

    witness = None
    for i in range(order):
        if not any(table[i][j] == identity and table[j][i] == identity
                   for j in range(order)):
            witness = (i,)
            break
    checks.append(Check("%s.inverses" % label, witness is None, witness))
    return checks


def verify_skew_brace(s):
    """Group axioms for both tables plus the compatibility law."""
    checks = _group_checks("dot", s.dot_table, s.order, s.identity)
    checks += _group_checks("bullet", s.bullet_table, s.order, s.identity)

    witness = None
    inv = [s.dot_inv(g) for g in range(s.order)]
    if all(v is not None for v in inv):
        for g in range(s.order):
            if witness:
                break
            for h in range(s.order):
                if witness:
                    break
                for k in range(s.order):
                    lhs = s.bullet(g, s.dot(h, k))
                    rhs = s.dot(s.dot(s.bullet(g, h), inv[g]), s.bullet(g, k))
                    if lhs != rhs:
                        witness = (g, h, k)
                        break
    else:
        witness = (inv.index(None),)
    checks.append(Check("compatibility", witness is None, witness))
    return VerificationReport(checks)


def linearize(s, field):
    """The group-algebra brace of a skew brace: basis elements are
    group-like, products follow the two tables, antipodes come from the
    two inversions."""
    from .brace import HopfBrace
    rep = verify_skew_brace(s)
    if not rep.ok:
        raise VerificationFailure("cannot linearize an invalid skew brace", rep)
    n = s.order
    one, zero = field.one, field.zero
    names = ["e%d" % i for i in range(n)]
    coalg = Coalgebra(field, names,
                      [[(i, i, one)] for i in range(n)],
                      [one] * n)
    mul_dot = [[[(s.dot(i, j), one)] for j in range(n)] for i in range(n)]
    mul_bullet = [[[(s.bullet(i, j), one)] for j in range(n)] for i in range(n)]
    unit = [one if i == s.identity else zero for i in range(n)]
    sa = Mat.zeros(field, n, n)
    ta = Mat.zeros(field, n, n)
    for i in range(n):
        sa.data[s.dot_inv(i)][i] = one
        ta.data[s.bullet_inv(i)][i] = one
    return HopfBrace(coalg, mul_dot, mul_bullet, unit, sa, ta)


class SetSolution:
    """A set-theoretic solution r(x, y) = (lambda_x(y), rho_y(x)) on the
    underlying set of a skew brace."""

    def __init__(self, size, lam, rho):
        self.size = size
        self.lam = [list(r) for r in lam]
        self.rho = [list(r) for r in rho]

    def r(self, x, y):
        return (self.lam[x][y], self.rho[y][x])

    def braid_holds(self):
        """The set-level braid relation on all triples."""
        def r12(t):
            a, b = self.r(t[0], t[1])
            return (a, b, t[2])

        def r23(t):
            a, b = self.r(t[1], t[2])
            return (t[0], a, b)

        for x in range(self.size):
            for y in range(self.size):
                for z in range(self.size):
                    t = (x, y, z)
                    if r12(r23(r12(t))) != r23(r12(r23(t))):
                        return False
        return True

    def bijective(self):
        seen = set()
        for x in range(self.size):
            for y in range(self.size):
                seen.add(self.r(x, y))
        return len(seen) == self.size * self.size


def set_solution(s):
    """The solution attached to a skew brace:
    lambda_x(y) = inv.(x) . (x o y)   and
    rho_y(x) = invo(lambda_x(y)) o x o y."""
    n = s.order
    lam = [[s.dot(s.dot_inv(x), s.bullet(x, y)) for y in range(n)] for x in range(n)]
    rho = [[None] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            l = lam[x][y]
            rho[y][x] = s.bullet(s.bullet(s.bullet_inv(l), x), y)
    sol = SetSolution(n, lam, rho)
    if not sol.braid_holds() or not sol.bijective():
        raise VerificationFailure("derived set solution fails the braid relation")
    return sol


def cyclic_table(n):
    return [[(i + j) % n for j in range(n)] for i in range(n)]


def direct_product_table(ta, tb):
    na, nb = len(ta), len(tb)
    out = [[0] * (na * nb) for _ in range(na * nb)]
    for i in range(na):
        for j in range(nb):
            for k in range(na):
                for l in range(nb):
                    out[i * nb + j][k * nb + l] = ta[i][k] * nb + tb[j][l]
    return out


def symmetric3_table():
    """S3 as permutations of {0,1,2} in a fixed enumeration; entry (i, j)
    is the index of 'first apply j, then i'."""
    perms = [(0, 1, 2), (1, 0, 2), (0, 2, 1), (2, 1, 0), (1, 2, 0), (2, 0, 1)]
    index = {p: i for i, p in enumerate(perms)}
    table = []
    for p in perms:
        row = []
        for q in perms:
            comp = tuple(p[q[i]] for i in range(3))
            row.append(index[comp])
        table.append(row)
    return table


def opposite_table(t):
    n = len(t)
    return [[t[j][i] for j in range(n)] for i in range(n)]


def trivial_skew_brace(table, name=None):
    return SkewBrace(len(table), table, [list(r) for r in table], 0, name)


def cyclic_mod4_brace():
    """Dot is addition mod 4; bullet is x + y + 2xy mod 4, which makes
    the bullet group a Klein four group on the same set."""
    dot = cyclic_table(4)
    bullet = [[(x + y + 2 * x * y) % 4 for y in range(4)] for x in range(4)]
    return SkewBrace(4, dot, bullet, 0, "B4")


def catalog():
    """Deterministic list of built-in skew braces, all verified."""
    s3 = symmetric3_table()
    out = [
        trivial_skew_brace(cyclic_table(2), "C2_trivial"),
        trivial_skew_brace(cyclic_table(3), "C3_trivial"),
        trivial_skew_brace(cyclic_table(4), "C4_trivial"),
        trivial_skew_brace(direct_product_table(cyclic_table(2), cyclic_table(2)),
                           "C2xC2_trivial"),
        trivial_skew_brace(s3, "S3_trivial"),
        cyclic_mod4_brace(),
        SkewBrace(6, s3, opposite_table(s3), 0, "S3_almost_trivial"),
    ]
    for s in out:
        rep = verify_skew_brace(s)
        if not rep.ok:
            raise VerificationFailure("catalog entry %s failed" % s.name, rep)
    return out
