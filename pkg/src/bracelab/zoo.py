"""Named Hopf braces and morphisms shared by the test suite and the catalog command.

The list returned by :func:`zoo` is deterministic: the rational lifts of the
seven built-in skew braces, then the two characteristic-2 primitive examples.
:func:`morphism_suite` is the finite family of brace morphisms that the
kernel, factorization and separation properties are exercised against.
"""

from collections import namedtuple

from .brace import tensor_brace, trivial_brace
from .hopf import Coalgebra, HopfAlgebra
from .linalg import GF, QQ, Mat, basis_vec, zero_vec
from .skew import catalog, linearize
from .subobjects import BraceMorphism


def unit_brace(field):
    """One-dimensional trivial brace on the ground field."""
    one = field.one
    coalg = Coalgebra(field, ["1"], [[(0, 0, one)]], [one])
    return trivial_brace(HopfAlgebra(coalg, [[[(0, one)]]], [one]))


def f2x_brace():
    """Trivial brace on the dual numbers over GF(2), with x primitive."""
    field = GF(2)
    one, zero = field.one, field.zero
    coalg = Coalgebra(field, ["1", "x"],
                      [[(0, 0, one)], [(1, 0, one), (0, 1, one)]],
                      [one, zero])
    # x*x = 0
    mul = [[[(0, one)], [(1, one)]], [[(1, one)], []]]
    return trivial_brace(HopfAlgebra(coalg, mul, [one, zero]))


def f2x_square():
    """Tensor square of the dual-number brace: dimension 4, primitives of dimension 2."""
    prod, _, _ = tensor_brace(f2x_brace(), f2x_brace())
    return prod


def zoo():
    """Deterministic list of (name, brace) pairs covering every built-in example."""
    entries = [(s.name, linearize(s, QQ)) for s in catalog()]
    entries.append(("F2X", f2x_brace()))
    entries.append(("F2X_tensor_F2X", f2x_square()))
    return entries


def zoo_map():
    return dict(zoo())


def extended_zoo():
    """The zoo plus the endpoint braces that only appear as morphism codomains."""
    entries = zoo()
    entries.append(("unit_Q", unit_brace(QQ)))
    entries.append(("C2_trivial_F2", linearize(catalog()[0], GF(2))))
    return entries


def hom_from_images(dom, cod, images):
    """Morphism whose matrix columns are the given image vectors of the domain basis."""
    cols = [list(v) for v in images]
    return BraceMorphism(dom, cod, Mat.from_cols(cod.field, cols))


def hom_from_index_map(dom, cod, idx):
    """Morphism sending domain basis vector i to codomain basis vector idx[i]."""
    F = cod.field
    return hom_from_images(dom, cod, [basis_vec(F, cod.dim, idx[i]) for i in range(dom.dim)])


def counit_morphism(b):
    """The counit as a morphism onto the one-dimensional brace."""
    target = unit_brace(b.field)
    return hom_from_images(b, target, [[c] for c in b.coalg.counit])


def identity_brace_morphism(b):
    return BraceMorphism(b, b, Mat.identity(b.field, b.dim))


# permutation parity for the S3 tables: index i is even iff i in {0, 4, 5}
_S3_SIGN = [0, 1, 1, 1, 0, 0]

SuiteMorphism = namedtuple("SuiteMorphism", "name mor dom_name cod_name")


def morphism_suite():
    """Deterministic finite family of brace morphisms used as the test family.

    Entries record the names of their endpoint braces in :func:`extended_zoo`
    so the morphisms can be written next to the brace files they reference.
    """
    braces = dict(extended_zoo())
    b4 = braces["B4"]
    c2 = braces["C2_trivial"]

    def entry(name, mor, dom_name, cod_name):
        return SuiteMorphism(name, mor, dom_name, cod_name)

    suite = [
        entry("B4_identity", identity_brace_morphism(b4), "B4", "B4"),
        entry("B4_mod2", hom_from_index_map(b4, c2, [0, 1, 0, 1]), "B4", "C2_trivial"),
        entry("B4_counit", counit_morphism(b4), "B4", "unit_Q"),
        entry("C4_mod2", hom_from_index_map(braces["C4_trivial"], c2, [0, 1, 0, 1]),
              "C4_trivial", "C2_trivial"),
        entry("C2xC2_first", hom_from_index_map(braces["C2xC2_trivial"], c2, [0, 0, 1, 1]),
              "C2xC2_trivial", "C2_trivial"),
        entry("S3_sign", hom_from_index_map(braces["S3_trivial"], c2, _S3_SIGN),
              "S3_trivial", "C2_trivial"),
        entry("S3op_sign", hom_from_index_map(braces["S3_almost_trivial"], c2, _S3_SIGN),
              "S3_almost_trivial", "C2_trivial"),
    ]

    # characteristic-2 pair: the only morphism from the primitive example into a
    # group algebra collapses the primitive part
    f2c2 = braces["C2_trivial_F2"]
    fx = braces["F2X"]
    zero = zero_vec(f2c2.field, 2)
    one_img = basis_vec(f2c2.field, 2, 0)
    suite.append(entry("F2X_collapse", hom_from_images(fx, f2c2, [one_img, zero]),
                       "F2X", "C2_trivial_F2"))
    return suite
