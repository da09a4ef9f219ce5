"""Structural analysis: classification predicates, torsion decomposition,
post-Lie data on primitives, Huq commutators, abelianization and the
trivialization quotient."""

import pytest

from bracelab.brace import trivial_brace
from bracelab.errors import (CharPositive, NormalityFailure, NotPointed,
                             NotSurjective)
from bracelab.hopf import Coalgebra, HopfAlgebra, primitives
from bracelab.linalg import GF, QQ, Subspace, basis_vec, map_kernel
from bracelab.structure import (abelianization, grouplike_subbrace,
                                huq_commutator, huq_commute,
                                is_abelian_object, is_central_extension,
                                is_primitive_brace, is_skb_object,
                                is_trivial_brace, phbr_compat_check,
                                post_lie_data, skb_compat_check,
                                torsion_sequence, trivialization)
from bracelab.subobjects import SubBrace, hkernel
from bracelab.zoo import f2x_brace, f2x_square, morphism_suite, zoo, zoo_map


def span(n, idxs):
    return Subspace(QQ, n, [basis_vec(QQ, n, i) for i in idxs])


def dual_c3_brace():
    """Trivial brace on the function algebra of C3: cocommutative but not
    pointed over the rationals."""
    one, zero = QQ.one, QQ.zero
    comul = [[] for _ in range(3)]
    for k in range(3):
        for i in range(3):
            comul[k].append((i, (k - i) % 3, one))
    coalg = Coalgebra(QQ, ["d0", "d1", "d2"], comul, [one, zero, zero])
    mul = [[[(i, one)] if i == j else [] for j in range(3)] for i in range(3)]
    return trivial_brace(HopfAlgebra(coalg, mul, [one, one, one]))


def test_classification_predicates():
    zm = zoo_map()
    for name, b in zoo():
        if name.startswith("F2X"):
            assert not is_skb_object(b), name
            assert is_primitive_brace(b), name
        else:
            assert is_skb_object(b), name
            assert not is_primitive_brace(b), name
    assert is_trivial_brace(zm["C4_trivial"])
    assert not is_trivial_brace(zm["B4"])


def test_compat_specializations():
    zm = zoo_map()
    assert skb_compat_check(zm["B4"])
    assert skb_compat_check(zm["S3_almost_trivial"])
    assert phbr_compat_check(f2x_brace())
    assert phbr_compat_check(f2x_square())


def test_grouplike_subbrace():
    zm = zoo_map()
    assert grouplike_subbrace(zm["B4"]).dim == 4
    assert grouplike_subbrace(f2x_brace()).dim == 1


def test_torsion_sequence_b4():
    zm = zoo_map()
    dec = torsion_sequence(zm["B4"])
    assert dec.torsion.dim == 1 and dec.free.dim == 4 and dec.is_skb
    assert len(dec.components) == 4
    # the projection is a split epimorphism with the group-like section
    assert (dec.projection.mat * dec.section.mat).rank() == 4
    # torsion part is the kernel of the projection, computed independently
    assert dec.torsion.space == hkernel(dec.projection).space


def test_torsion_sequence_all_char_zero():
    for name, b in zoo():
        if b.field.p:
            continue
        dec = torsion_sequence(b)
        assert dec.is_skb, name
        assert dec.free.dim == b.dim, name


def test_torsion_char_positive_refused():
    with pytest.raises(CharPositive):
        torsion_sequence(f2x_brace())


def test_torsion_not_pointed():
    with pytest.raises(NotPointed):
        torsion_sequence(dual_c3_brace())


def test_post_lie_f2_examples():
    data = post_lie_data(f2x_brace())
    assert data.dim == 1
    # trivial brace: zero bracket and zero action on the primitive line
    assert data.bracket_dot[0][0] == [GF(2).zero]
    assert data.action[0][0] == [GF(2).zero]
    data4 = post_lie_data(f2x_square())
    assert data4.dim == 2


def test_post_lie_char_zero_lifts_have_no_primitives():
    for name, b in zoo():
        if b.field.p:
            continue
        assert primitives(b.dot).dim == 0, name
        assert post_lie_data(b).dim == 0, name


def test_huq_commute_frozen():
    zm = zoo_map()
    b4 = zm["B4"]
    center = SubBrace(b4, span(4, [0, 2]))
    full = SubBrace(b4, Subspace.full(QQ, 4))
    assert huq_commute(center, full)
    assert not huq_commute(full, full)
    s3 = zm["S3_trivial"]
    a3 = SubBrace(s3, span(6, [0, 4, 5]))
    s3full = SubBrace(s3, Subspace.full(QQ, 6))
    assert not huq_commute(a3, s3full)


def test_huq_commutator_b4():
    zm = zoo_map()
    b4 = zm["B4"]
    full = SubBrace(b4, Subspace.full(QQ, 4))
    res = huq_commutator(full, full)
    assert res.commutator.space == span(4, [0, 2])
    assert res.quotient.dim == 2


def test_huq_commutator_s3():
    zm = zoo_map()
    s3 = zm["S3_trivial"]
    full = SubBrace(s3, Subspace.full(QQ, 6))
    res = huq_commutator(full, full)
    assert res.commutator.space == span(6, [0, 4, 5])
    assert res.quotient.dim == 2


def test_huq_commutator_requires_normal():
    zm = zoo_map()
    s3 = zm["S3_trivial"]
    tsub = SubBrace(s3, span(6, [0, 1]))
    full = SubBrace(s3, Subspace.full(QQ, 6))
    with pytest.raises(NormalityFailure):
        huq_commutator(tsub, full)


def test_commutator_minimality_evidence():
    # each suite morphism whose image pair commutes must kill the commutator
    zm = zoo_map()
    b4 = zm["B4"]
    full = SubBrace(b4, Subspace.full(QQ, 4))
    res = huq_commutator(full, full)
    for e in morphism_suite():
        if e.mor.dom != b4:
            continue
        cod_full = SubBrace(e.mor.cod, Subspace.full(QQ, e.mor.cod.dim))
        if huq_commute(cod_full, cod_full):
            ker = hkernel(e.mor).space
            assert all(ker.contains(v) for v in res.commutator.space.basis), e.name


def test_is_central_extension():
    fs = {e.name: e.mor for e in morphism_suite()}
    assert is_central_extension(fs["B4_mod2"])
    assert not is_central_extension(fs["S3_sign"])
    with pytest.raises(NotSurjective):
        zm = zoo_map()
        from bracelab.zoo import hom_from_index_map
        incl = hom_from_index_map(zm["C2_trivial"], zm["B4"], [0, 2])
        is_central_extension(incl)


def test_abelianization():
    zm = zoo_map()
    q, proj, comm = abelianization(zm["B4"])
    assert q.dim == 2 and comm.dim == 2
    assert is_abelian_object(q)
    assert is_central_extension(proj)
    q2, _, comm2 = abelianization(zm["S3_trivial"])
    assert q2.dim == 2 and comm2.dim == 3
    q3, _, _ = abelianization(zm["C3_trivial"])
    assert q3.dim == 3  # already abelian


def test_is_abelian_object():
    zm = zoo_map()
    assert is_abelian_object(zm["C2_trivial"])
    assert is_abelian_object(zm["C2xC2_trivial"])
    assert not is_abelian_object(zm["B4"])
    assert not is_abelian_object(zm["S3_trivial"])


def test_trivialization():
    zm = zoo_map()
    q, proj, comm = trivialization(zm["B4"])
    assert is_trivial_brace(q)
    assert q.dim == 2 and comm.dim == 2
    # trivial braces are their own trivialization
    q2, _, comm2 = trivialization(zm["C4_trivial"])
    assert q2.dim == 4 and comm2.dim == 1


def test_trivialization_initial_among_trivial_quotients():
    # any suite morphism into a trivial brace factors through the quotient
    zm = zoo_map()
    b4 = zm["B4"]
    _, proj, comm = trivialization(b4)
    from bracelab.subobjects import ideal_from_normal
    ideal = ideal_from_normal(comm)
    for e in morphism_suite():
        if e.mor.dom != b4 or not is_trivial_brace(e.mor.cod):
            continue
        ker = map_kernel(e.mor.mat)
        assert all(ker.contains(v) for v in ideal.space.basis), e.name


def test_zero_morphism_separation():
    # primitive domain, group-like codomain: the image is the ground field
    from bracelab.subobjects import image_subbrace
    for e in morphism_suite():
        if is_primitive_brace(e.mor.dom) and is_skb_object(e.mor.cod):
            assert image_subbrace(e.mor).dim == 1, e.name
