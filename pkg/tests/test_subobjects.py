"""Sub-braces, normality, ideals, kernels, quotients, factorization,
pullbacks, points and the smash decomposition."""

import pytest

from bracelab.brace import verify_hopf_brace
from bracelab.errors import (CodomainMismatch, NormalityFailure, NotCommutative,
                             NotParallel, NotSplit, VerificationFailure)
from bracelab.linalg import QQ, Subspace, basis_vec, map_kernel
from bracelab.subobjects import (BraceIdeal, BraceMorphism, PointData, SubBrace,
                                 augmentation_part, cokernel_of_normal, compose,
                                 epi_mono_factorize, equalizer,
                                 generated_subbrace, hkernel, ideal_axioms,
                                 ideal_from_normal, image_subbrace,
                                 mediating_into_pullback,
                                 normal_closure, pullback, quotient_by_ideal,
                                 restrict_to_kernels, smash_decompose,
                                 split_short_five_check, sub_as_brace,
                                 verify_morphism)
from bracelab.zoo import (hom_from_images, hom_from_index_map,
                          identity_brace_morphism, morphism_suite, zoo_map)


def span(n, idxs):
    return Subspace(QQ, n, [basis_vec(QQ, n, i) for i in idxs])


def suite():
    return {e.name: e.mor for e in morphism_suite()}


def test_suite_morphisms_verify():
    for e in morphism_suite():
        assert verify_morphism(e.mor).ok, e.name


def test_non_morphism_reports_failures():
    zm = zoo_map()
    b = zm["B4"]
    shift = hom_from_index_map(b, b, [1, 2, 3, 0])
    rep = verify_morphism(shift)
    assert not rep.ok
    assert any(c.name == "preserves_unit" for c in rep.failures())


def test_hkernel_frozen_values():
    fs = suite()
    ker = hkernel(fs["B4_mod2"])
    assert ker.space == span(4, [0, 2])
    assert hkernel(fs["B4_identity"]).dim == 1
    assert hkernel(fs["B4_counit"]).space == Subspace.full(QQ, 4)
    sign_ker = hkernel(fs["S3_sign"])
    assert sign_ker.space == span(6, [0, 4, 5])


def test_hkernels_are_normal():
    for e in morphism_suite():
        assert hkernel(e.mor).is_normal(), e.name


def test_equalizer():
    zm = zoo_map()
    s3, c2 = zm["S3_trivial"], zm["C2_trivial"]
    sign = suite()["S3_sign"]
    collapse = hom_from_index_map(s3, c2, [0] * 6)
    eq = equalizer(sign, collapse)
    assert eq.space == span(6, [0, 4, 5])
    assert equalizer(sign, sign).space == Subspace.full(QQ, 6)
    with pytest.raises(NotParallel):
        equalizer(sign, suite()["B4_mod2"])


def test_sub_brace_closure_flags():
    zm = zoo_map()
    b4, s3 = zm["B4"], zm["S3_trivial"]
    assert SubBrace(b4, span(4, [0, 2])).is_sub_brace
    # unit missing
    assert not SubBrace(b4, span(4, [1])).is_sub_brace
    # identity plus one transposition: closed but not normal
    tsub = SubBrace(s3, span(6, [0, 1]))
    assert tsub.is_sub_brace
    assert not tsub.is_normal()
    asub = SubBrace(s3, span(6, [0, 4, 5]))
    assert asub.is_sub_brace and asub.is_normal()


def test_product_span_agreement_for_normal_subs():
    # for a normal sub-brace the dot and bullet spans of A x B+ coincide
    zm = zoo_map()
    b4 = zm["B4"]
    sub = SubBrace(b4, span(4, [0, 2]))
    aug = augmentation_part(sub)
    dots, bullets = [], []
    for i in range(4):
        e = basis_vec(QQ, 4, i)
        for v in aug.basis:
            dots.append(b4.dot.product(e, v))
            bullets.append(b4.bullet.product(e, v))
    assert Subspace(QQ, 4, dots) == Subspace(QQ, 4, bullets)


def test_ideal_axioms_frozen():
    zm = zoo_map()
    b4 = zm["B4"]
    good = Subspace(QQ, 4, [[QQ.one, QQ.zero, -QQ.one, QQ.zero],
                            [QQ.zero, QQ.one, QQ.zero, -QQ.one]])
    ok, reason = ideal_axioms(b4, good)
    assert ok, reason
    BraceIdeal(b4, good)  # must not raise
    bad, reason = ideal_axioms(b4, span(4, [0]))
    assert not bad
    with pytest.raises(VerificationFailure):
        BraceIdeal(b4, span(4, [0]))


def test_ideal_from_normal_frozen():
    zm = zoo_map()
    b4 = zm["B4"]
    assert ideal_from_normal(SubBrace(b4, span(4, [0]))).space.dim == 0
    full = ideal_from_normal(SubBrace(b4, Subspace.full(QQ, 4)))
    assert full.space.dim == 3  # the augmentation ideal
    mid = ideal_from_normal(SubBrace(b4, span(4, [0, 2])))
    assert mid.space == Subspace(QQ, 4, [[QQ.one, QQ.zero, -QQ.one, QQ.zero],
                                         [QQ.zero, QQ.one, QQ.zero, -QQ.one]])
    s3 = zm["S3_trivial"]
    with pytest.raises(NormalityFailure):
        ideal_from_normal(SubBrace(s3, span(6, [0, 1])))


def test_generated_subbrace():
    zm = zoo_map()
    b4 = zm["B4"]
    assert generated_subbrace(b4, span(4, [1])).space == Subspace.full(QQ, 4)
    assert generated_subbrace(b4, span(4, [2])).space == span(4, [0, 2])
    assert generated_subbrace(b4, Subspace(QQ, 4)).dim == 1


def test_normal_closure():
    zm = zoo_map()
    s3 = zm["S3_trivial"]
    # one transposition normally generates everything
    closure = normal_closure(s3, span(6, [1]))
    assert closure.space == Subspace.full(QQ, 6)
    a3 = normal_closure(s3, span(6, [0, 4, 5]))
    assert a3.space == span(6, [0, 4, 5])


def test_sub_as_brace_carrier():
    zm = zoo_map()
    b4 = zm["B4"]
    carrier, incl = sub_as_brace(SubBrace(b4, span(4, [0, 2])))
    assert carrier.dim == 2
    assert verify_hopf_brace(carrier).ok
    assert verify_morphism(incl).ok and incl.is_injective()
    # the carrier is the order-two group algebra
    assert carrier.dot.col(1, 1) == basis_vec(QQ, 2, 0)


def test_pullback_and_mediating():
    f = suite()["B4_mod2"]
    sub, carrier, incl, proj_a, proj_b = pullback(f, f)
    assert carrier.dim == 8
    assert verify_morphism(proj_a).ok and verify_morphism(proj_b).ok
    # cone (id, id) factors through the diagonal
    ident = identity_brace_morphism(f.dom)
    med = mediating_into_pullback(sub, carrier, incl, ident, ident)
    assert compose(proj_a, med).mat == ident.mat
    assert compose(proj_b, med).mat == ident.mat
    # a cone that does not equalize the two legs is rejected
    zm = zoo_map()
    collapse = hom_from_images(f.dom, f.dom,
                               [f.dom.unit_vec() if i else f.dom.unit_vec()
                                for i in range(4)])
    with pytest.raises(VerificationFailure):
        mediating_into_pullback(sub, carrier, incl, ident, collapse)
    with pytest.raises(CodomainMismatch):
        pullback(f, suite()["B4_counit"])


def test_quotient_by_ideal_frozen():
    zm = zoo_map()
    b4 = zm["B4"]
    ideal = ideal_from_normal(SubBrace(b4, span(4, [0, 2])))
    q, proj = quotient_by_ideal(b4, ideal)
    assert q.dim == 2
    assert verify_hopf_brace(q).ok and verify_morphism(proj).ok
    assert q.dot.col(1, 1) == basis_vec(QQ, 2, 0)
    assert q.bullet.col(1, 1) == basis_vec(QQ, 2, 0)
    q2, _ = cokernel_of_normal(SubBrace(zm["S3_trivial"], span(6, [0, 4, 5])))
    assert q2.dim == 2


def test_epi_mono_factorize_suite():
    for e in morphism_suite():
        p, i = epi_mono_factorize(e.mor)
        assert p.is_surjective() and i.is_injective(), e.name
        assert (i.mat * p.mat) == e.mor.mat, e.name
        # the kernel ideal is exactly the linear kernel
        ideal = ideal_from_normal(hkernel(e.mor))
        assert ideal.space == map_kernel(e.mor.mat), e.name


def test_image_subbrace():
    fs = suite()
    assert image_subbrace(fs["S3_sign"]).space == Subspace.full(QQ, 2)
    assert image_subbrace(fs["B4_counit"]).dim == 1
    zm = zoo_map()
    b4 = zm["B4"]
    img = image_subbrace(fs["B4_mod2"], SubBrace(b4, span(4, [0, 2])))
    assert img.dim == 1


def test_point_data_split_check():
    zm = zoo_map()
    s3, c2 = zm["S3_trivial"], zm["C2_trivial"]
    pi = suite()["S3_sign"]
    gamma = hom_from_index_map(c2, s3, [0, 1])
    point = PointData(pi, gamma)
    assert point.total.dim == 6 and point.base.dim == 2
    bad_gamma = hom_from_index_map(c2, s3, [0, 0])
    with pytest.raises(NotSplit):
        PointData(pi, bad_gamma)


def test_smash_decompose_sign_point():
    zm = zoo_map()
    s3, c2 = zm["S3_trivial"], zm["C2_trivial"]
    point = PointData(suite()["S3_sign"], hom_from_index_map(c2, s3, [0, 1]))
    smash_dot, smash_bullet, iso_dot, iso_bullet = smash_decompose(point)
    assert smash_dot.dim == 6 and smash_bullet.dim == 6
    for iso in (iso_dot, iso_bullet):
        assert verify_morphism(iso).ok and iso.is_iso()
    assert verify_hopf_brace(smash_dot).ok and verify_hopf_brace(smash_bullet).ok


def test_restrict_to_kernels_and_short_five():
    from bracelab.brace import tensor_brace
    from bracelab.linalg import Mat as M
    zm = zoo_map()
    c2, c3 = zm["C2_trivial"], zm["C3_trivial"]
    prod, pa, pb = tensor_brace(c2, c3)
    # section of pb: h maps to 1 (x) h
    cols = []
    for j in range(3):
        v = [QQ.zero] * 6
        v[j] = QQ.one  # index (0, j) flattens to j
        cols.append(v)
    gamma = BraceMorphism(c3, prod, M.from_cols(QQ, cols))
    point = PointData(pb, gamma)
    ident = identity_brace_morphism(prod)
    u, (c1, incl1), (c2c, incl2) = restrict_to_kernels(point, point, ident)
    assert u.mat == M.identity(QQ, c1.dim)
    holds, note = split_short_five_check(point, point, u, ident,
                                         identity_brace_morphism(c3),
                                         kernels=(incl1, incl2))
    assert holds and note is None
    # collapse everything: squares commute but the outer maps are not isos
    wc = hom_from_index_map(c3, c3, [0, 0, 0])
    vc = hom_from_index_map(prod, prod, [0] * 6)
    uc, _, _ = restrict_to_kernels(point, point, vc)
    holds, note = split_short_five_check(point, point, uc, vc, wc,
                                         kernels=(incl1, incl2))
    assert holds and note is not None
    # mismatched verticals are refused
    with pytest.raises(NotCommutative):
        split_short_five_check(point, point, u, vc,
                               identity_brace_morphism(c3),
                               kernels=(incl1, incl2))
