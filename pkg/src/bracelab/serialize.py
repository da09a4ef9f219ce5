"""JSON file formats for braces, skew braces, morphisms, subspaces and matched pairs.

Every scalar on the wire is an integer numerator/denominator pair, so files are
bit-exact and contain no floating point.  Emission is canonical (sorted keys,
fixed indentation, trailing newline), which makes reports byte-for-byte
reproducible.  All loaders raise :class:`ParseError` with the file name and the
offending field on malformed input.
"""

import json
import os
from fractions import Fraction

from .brace import HopfBrace, MatchedPair
from .errors import ParseError
from .hopf import Coalgebra, HopfAlgebra
from .linalg import GF, Mat, QQ, Residue, Subspace
from .skew import SkewBrace
from .subobjects import BraceMorphism


def dumps(obj):
    """Canonical JSON text for an object tree."""
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def loads(text, where="<data>"):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError("%s: invalid JSON at line %d column %d: %s"
                         % (where, e.lineno, e.colno, e.msg))


def save(path, obj):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(obj))


def load_file(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise ParseError("%s: cannot read file: %s" % (path, e.strerror))
    return loads(text, where=path)


def jsonable(x):
    """Recursively rewrite scalars and containers into JSON-safe values.

    Used for check witnesses in reports; unknown leaves fall back to str,
    which keeps the output deterministic."""
    if isinstance(x, Residue):
        return [x.v, 1]
    if isinstance(x, Fraction):
        return [x.numerator, x.denominator]
    if x is None or isinstance(x, (bool, int, str)):
        return x
    if isinstance(x, (list, tuple)):
        return [jsonable(y) for y in x]
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, Mat):
        return mat_to_obj(x)
    if isinstance(x, Subspace):
        return [vec_to_obj(v) for v in x.basis]
    return str(x)


# ---------------------------------------------------------------- scalars


def field_to_obj(field):
    return "Q" if field.p == 0 else {"Fp": field.p}


def field_from_obj(obj, where):
    if obj == "Q":
        return QQ
    if isinstance(obj, dict) and set(obj) == {"Fp"} and isinstance(obj["Fp"], int):
        try:
            return GF(obj["Fp"])
        except ValueError as e:
            raise ParseError("%s: field: %s" % (where, e))
    raise ParseError('%s: field: expected "Q" or {"Fp": p}, got %r' % (where, obj))


def scalar_to_obj(c):
    if isinstance(c, Residue):
        return [c.v, 1]
    f = Fraction(c)
    return [f.numerator, f.denominator]


def _as_int(x, where):
    # bool is an int subclass but is not a legal scalar component
    if not isinstance(x, int) or isinstance(x, bool):
        raise ParseError("%s: expected an integer, got %r" % (where, x))
    return x


def scalar_from_obj(field, obj, where):
    if not isinstance(obj, list) or len(obj) != 2:
        raise ParseError("%s: expected [numerator, denominator], got %r" % (where, obj))
    num = _as_int(obj[0], where + "[0]")
    den = _as_int(obj[1], where + "[1]")
    if den == 0:
        raise ParseError("%s: denominator is zero" % where)
    try:
        return field.of(num, den)
    except (ValueError, ZeroDivisionError) as e:
        raise ParseError("%s: %s" % (where, e))


def vec_to_obj(v):
    return [scalar_to_obj(c) for c in v]


def vec_from_obj(field, obj, n, where):
    if not isinstance(obj, list) or len(obj) != n:
        raise ParseError("%s: expected a vector of length %d" % (where, n))
    return [scalar_from_obj(field, c, "%s[%d]" % (where, i)) for i, c in enumerate(obj)]


def mat_to_obj(m):
    return [vec_to_obj(row) for row in m.data]


def mat_from_obj(field, obj, rows, cols, where):
    if not isinstance(obj, list) or len(obj) != rows:
        raise ParseError("%s: expected %d matrix rows" % (where, rows))
    data = [vec_from_obj(field, row, cols, "%s[%d]" % (where, i))
            for i, row in enumerate(obj)]
    return Mat(field, data, cols)


def _index(obj, bound, where):
    i = _as_int(obj, where)
    if not 0 <= i < bound:
        raise ParseError("%s: index %d out of range [0, %d)" % (where, i, bound))
    return i


def _require(obj, keys, where, optional=()):
    if not isinstance(obj, dict):
        raise ParseError("%s: expected an object" % where)
    missing = [k for k in keys if k not in obj]
    if missing:
        raise ParseError("%s: missing field(s) %s" % (where, ", ".join(sorted(missing))))
    extra = [k for k in obj if k not in keys and k not in optional]
    if extra:
        raise ParseError("%s: unknown field(s) %s" % (where, ", ".join(sorted(extra))))


def _check_kind(obj, kind, where):
    _require_kind = obj.get("kind") if isinstance(obj, dict) else None
    if _require_kind != kind:
        raise ParseError('%s: expected kind "%s", got %r' % (where, kind, _require_kind))


# ------------------------------------------------------- sparse term tables


def comul_to_obj(coalg):
    out = {}
    for i in range(coalg.dim):
        out[str(i)] = [[j, k, *scalar_to_obj(c)] for j, k, c in coalg.comul[i]]
    return out


def comul_from_obj(field, obj, n, where):
    if not isinstance(obj, dict):
        raise ParseError("%s: expected an object keyed by basis index" % where)
    comul = [[] for _ in range(n)]
    seen = set()
    for key, terms in obj.items():
        try:
            i = int(key)
        except ValueError:
            raise ParseError("%s: key %r is not a basis index" % (where, key))
        i = _index(i, n, "%s[%r]" % (where, key))
        seen.add(i)
        if not isinstance(terms, list):
            raise ParseError("%s[%r]: expected a term list" % (where, key))
        for t, term in enumerate(terms):
            here = "%s[%r][%d]" % (where, key, t)
            if not isinstance(term, list) or len(term) != 4:
                raise ParseError("%s: expected [j, k, num, den]" % here)
            j = _index(term[0], n, here + ".j")
            k = _index(term[1], n, here + ".k")
            c = scalar_from_obj(field, term[2:], here)
            comul[i].append((j, k, c))
    if seen != set(range(n)):
        raise ParseError("%s: missing comultiplication rows" % where)
    return comul


def mul_to_obj(mul):
    out = {}
    for i, row in enumerate(mul):
        for j, terms in enumerate(row):
            if terms:
                out["%d,%d" % (i, j)] = [[k, *scalar_to_obj(c)] for k, c in terms]
    return out


def mul_from_obj(field, obj, n, where):
    if not isinstance(obj, dict):
        raise ParseError('%s: expected an object keyed by "i,j"' % where)
    mul = [[[] for _ in range(n)] for _ in range(n)]
    for key, terms in obj.items():
        parts = key.split(",")
        try:
            i, j = (int(p) for p in parts)
        except ValueError:
            raise ParseError('%s: key %r is not an "i,j" pair' % (where, key))
        i = _index(i, n, "%s[%r].i" % (where, key))
        j = _index(j, n, "%s[%r].j" % (where, key))
        if not isinstance(terms, list):
            raise ParseError("%s[%r]: expected a term list" % (where, key))
        for t, term in enumerate(terms):
            here = "%s[%r][%d]" % (where, key, t)
            if not isinstance(term, list) or len(term) != 3:
                raise ParseError("%s: expected [k, num, den]" % here)
            k = _index(term[0], n, here + ".k")
            mul[i][j].append((k, scalar_from_obj(field, term[1:], here)))
    return mul


def _names_from_obj(obj, n, where):
    if not isinstance(obj, list) or len(obj) != n or not all(isinstance(s, str) for s in obj):
        raise ParseError("%s: expected %d basis names" % (where, n))
    return list(obj)


# ----------------------------------------------------------------- braces


def brace_to_obj(name, brace):
    obj = {
        "kind": "hopf_brace",
        "name": name,
        "field": field_to_obj(brace.field),
        "dim": brace.dim,
        "basis": list(brace.coalg.names),
        "counit": vec_to_obj(brace.coalg.counit),
        "comul": comul_to_obj(brace.coalg),
        "unit": vec_to_obj(brace.unit),
        "mul_dot": mul_to_obj(brace.dot.mul),
        "mul_bullet": mul_to_obj(brace.bullet.mul),
        "antipode_dot": mat_to_obj(brace.dot.antipode),
        "antipode_bullet": mat_to_obj(brace.bullet.antipode),
    }
    if all(brace.coalg.comul[i] == ((i, i, brace.field.one),) for i in range(brace.dim)):
        obj["flags"] = {"all_grouplike": True}
    return obj


def brace_from_obj(obj, where="<data>"):
    _check_kind(obj, "hopf_brace", where)
    _require(obj, ("kind", "name", "field", "dim", "basis", "counit", "comul",
                   "unit", "mul_dot", "mul_bullet"),
             where, optional=("antipode_dot", "antipode_bullet", "flags"))
    field = field_from_obj(obj["field"], where)
    n = _as_int(obj["dim"], where + ".dim")
    if n <= 0:
        raise ParseError("%s.dim: must be positive" % where)
    names = _names_from_obj(obj["basis"], n, where + ".basis")
    counit = vec_from_obj(field, obj["counit"], n, where + ".counit")
    comul = comul_from_obj(field, obj["comul"], n, where + ".comul")
    unit = vec_from_obj(field, obj["unit"], n, where + ".unit")
    mul_dot = mul_from_obj(field, obj["mul_dot"], n, where + ".mul_dot")
    mul_bullet = mul_from_obj(field, obj["mul_bullet"], n, where + ".mul_bullet")
    s_dot = s_bullet = None
    if "antipode_dot" in obj:
        s_dot = mat_from_obj(field, obj["antipode_dot"], n, n, where + ".antipode_dot")
    if "antipode_bullet" in obj:
        s_bullet = mat_from_obj(field, obj["antipode_bullet"], n, n, where + ".antipode_bullet")
    flags = obj.get("flags", {})
    if not isinstance(flags, dict):
        raise ParseError("%s.flags: expected an object" % where)
    coalg = Coalgebra(field, names, comul, counit)
    if flags.get("all_grouplike"):
        for i in range(n):
            if coalg.comul[i] != ((i, i, field.one),):
                raise ParseError("%s: all_grouplike flag set but basis vector %d "
                                 "is not group-like" % (where, i))
    name = obj["name"]
    if not isinstance(name, str):
        raise ParseError("%s.name: expected a string" % where)
    # antipode or dimension problems surface as BraceError, which callers
    # report as verification failures rather than malformed files
    return name, HopfBrace(coalg, mul_dot, mul_bullet, unit, s_dot, s_bullet)


# ------------------------------------------------------------ skew braces


def skew_to_obj(s):
    return {
        "kind": "skew_brace",
        "name": s.name or "unnamed",
        "order": s.order,
        "identity": s.identity,
        "dot_table": [list(r) for r in s.dot_table],
        "bullet_table": [list(r) for r in s.bullet_table],
    }


def _table_from_obj(obj, n, where):
    if not isinstance(obj, list) or len(obj) != n:
        raise ParseError("%s: expected %d table rows" % (where, n))
    out = []
    for i, row in enumerate(obj):
        if not isinstance(row, list) or len(row) != n:
            raise ParseError("%s[%d]: expected a row of length %d" % (where, i, n))
        out.append([_index(x, n, "%s[%d][%d]" % (where, i, j)) for j, x in enumerate(row)])
    return out


def skew_from_obj(obj, where="<data>"):
    _check_kind(obj, "skew_brace", where)
    _require(obj, ("kind", "name", "order", "identity", "dot_table", "bullet_table"), where)
    n = _as_int(obj["order"], where + ".order")
    if n <= 0:
        raise ParseError("%s.order: must be positive" % where)
    identity = _index(obj["identity"], n, where + ".identity")
    dot = _table_from_obj(obj["dot_table"], n, where + ".dot_table")
    bullet = _table_from_obj(obj["bullet_table"], n, where + ".bullet_table")
    name = obj["name"]
    if not isinstance(name, str):
        raise ParseError("%s.name: expected a string" % where)
    return SkewBrace(n, dot, bullet, identity, name=name)


# -------------------------------------------------------------- morphisms


def morphism_to_obj(name, mor, dom_path, cod_path):
    return {
        "kind": "morphism",
        "name": name,
        "dom": {"path": dom_path, "dim": mor.dom.dim},
        "cod": {"path": cod_path, "dim": mor.cod.dim},
        "mat": mat_to_obj(mor.mat),
    }


def _endpoint_from_obj(obj, where):
    _require(obj, ("path", "dim"), where)
    if not isinstance(obj["path"], str):
        raise ParseError("%s.path: expected a string" % where)
    return obj["path"], _as_int(obj["dim"], where + ".dim")


def load_morphism(path, brace_loader=None):
    """Load a morphism file, resolving the endpoint brace files relative to it.

    The recorded dimension of each endpoint acts as a checksum: a mismatch
    with the loaded brace is reported as malformed input.  Returns
    (name, morphism, dom_name, cod_name).
    """
    obj = load_file(path)
    _check_kind(obj, "morphism", path)
    _require(obj, ("kind", "name", "dom", "cod", "mat"), path)
    dom_path, dom_dim = _endpoint_from_obj(obj["dom"], path + ".dom")
    cod_path, cod_dim = _endpoint_from_obj(obj["cod"], path + ".cod")
    base = os.path.dirname(os.path.abspath(path))
    loader = brace_loader or (lambda p: brace_from_obj(load_file(p), where=p))
    dom_name, dom = loader(os.path.join(base, dom_path))
    cod_name, cod = loader(os.path.join(base, cod_path))
    if dom.dim != dom_dim:
        raise ParseError("%s.dom.dim: checksum %d does not match %s (dimension %d)"
                         % (path, dom_dim, dom_path, dom.dim))
    if cod.dim != cod_dim:
        raise ParseError("%s.cod.dim: checksum %d does not match %s (dimension %d)"
                         % (path, cod_dim, cod_path, cod.dim))
    if dom.field != cod.field:
        raise ParseError("%s: endpoint braces live over different fields" % path)
    mat = mat_from_obj(dom.field, obj["mat"], cod.dim, dom.dim, path + ".mat")
    name = obj["name"]
    if not isinstance(name, str):
        raise ParseError("%s.name: expected a string" % path)
    return name, BraceMorphism(dom, cod, mat), dom_name, cod_name


# -------------------------------------------------------------- subspaces


def subspace_to_obj(space):
    return {
        "kind": "subspace",
        "field": field_to_obj(space.field),
        "ambient": space.ambient_dim,
        "basis": [vec_to_obj(v) for v in space.basis],
    }


def subspace_from_obj(obj, where="<data>"):
    _check_kind(obj, "subspace", where)
    _require(obj, ("kind", "field", "ambient", "basis"), where)
    field = field_from_obj(obj["field"], where)
    n = _as_int(obj["ambient"], where + ".ambient")
    if n <= 0:
        raise ParseError("%s.ambient: must be positive" % where)
    rows = obj["basis"]
    if not isinstance(rows, list):
        raise ParseError("%s.basis: expected a list of vectors" % where)
    vecs = [vec_from_obj(field, row, n, "%s.basis[%d]" % (where, i))
            for i, row in enumerate(rows)]
    return Subspace(field, n, vecs)


# ----------------------------------------------------------- matched pairs


def matched_to_obj(name, mp):
    coalg = mp.bullet.coalg
    return {
        "kind": "matched_pair",
        "name": name,
        "field": field_to_obj(coalg.field),
        "dim": coalg.dim,
        "basis": list(coalg.names),
        "counit": vec_to_obj(coalg.counit),
        "comul": comul_to_obj(coalg),
        "unit": vec_to_obj(mp.bullet.unit),
        "mul_bullet": mul_to_obj(mp.bullet.mul),
        "antipode_bullet": mat_to_obj(mp.bullet.antipode),
        "act_left": mul_to_obj(mp.act_left),
        "act_right": mul_to_obj(mp.act_right),
    }


def matched_from_obj(obj, where="<data>"):
    _check_kind(obj, "matched_pair", where)
    _require(obj, ("kind", "name", "field", "dim", "basis", "counit", "comul",
                   "unit", "mul_bullet", "act_left", "act_right"),
             where, optional=("antipode_bullet",))
    field = field_from_obj(obj["field"], where)
    n = _as_int(obj["dim"], where + ".dim")
    if n <= 0:
        raise ParseError("%s.dim: must be positive" % where)
    names = _names_from_obj(obj["basis"], n, where + ".basis")
    counit = vec_from_obj(field, obj["counit"], n, where + ".counit")
    comul = comul_from_obj(field, obj["comul"], n, where + ".comul")
    unit = vec_from_obj(field, obj["unit"], n, where + ".unit")
    mul_bullet = mul_from_obj(field, obj["mul_bullet"], n, where + ".mul_bullet")
    t_mat = None
    if "antipode_bullet" in obj:
        t_mat = mat_from_obj(field, obj["antipode_bullet"], n, n, where + ".antipode_bullet")
    act_left = mul_from_obj(field, obj["act_left"], n, where + ".act_left")
    act_right = mul_from_obj(field, obj["act_right"], n, where + ".act_right")
    coalg = Coalgebra(field, names, comul, counit)
    name = obj["name"]
    if not isinstance(name, str):
        raise ParseError("%s.name: expected a string" % where)
    bullet = HopfAlgebra(coalg, mul_bullet, unit, t_mat)
    return name, MatchedPair(bullet, act_left, act_right)


# ------------------------------------------------------------ kind sniffing


KINDS = ("hopf_brace", "skew_brace", "morphism", "subspace", "matched_pair")


def kind_of(obj, where="<data>"):
    if not isinstance(obj, dict) or "kind" not in obj:
        raise ParseError('%s: missing "kind" field' % where)
    kind = obj["kind"]
    if kind not in KINDS:
        raise ParseError("%s: unknown kind %r (expected one of %s)"
                         % (where, kind, ", ".join(KINDS)))
    return kind
