"""Wire formats: canonical emission, lossless round trips and parse
diagnostics for malformed files."""

import pytest

from bracelab import serialize as sz
from bracelab.brace import to_matched_pair
from bracelab.errors import NoAntipode, ParseError
from bracelab.linalg import QQ, Subspace, basis_vec
from bracelab.skew import catalog
from bracelab.zoo import morphism_suite, zoo


def test_brace_round_trip_all_zoo():
    for name, b in zoo():
        text = sz.dumps(sz.brace_to_obj(name, b))
        name2, b2 = sz.brace_from_obj(sz.loads(text))
        assert name2 == name and b2 == b
        # canonical: emitting the parsed object reproduces the bytes
        assert sz.dumps(sz.brace_to_obj(name2, b2)) == text


def test_skew_round_trip_catalog():
    for s in catalog():
        text = sz.dumps(sz.skew_to_obj(s))
        s2 = sz.skew_from_obj(sz.loads(text))
        assert s2.dot_table == s.dot_table
        assert s2.bullet_table == s.bullet_table
        assert s2.identity == s.identity and s2.name == s.name
        assert sz.dumps(sz.skew_to_obj(s2)) == text


def test_matched_pair_round_trip():
    for name, b in zoo():
        mp = to_matched_pair(b)
        text = sz.dumps(sz.matched_to_obj(name, mp))
        _, mp2 = sz.matched_from_obj(sz.loads(text))
        assert mp2.bullet == mp.bullet
        assert mp2.act_left == mp.act_left and mp2.act_right == mp.act_right


def test_subspace_round_trip():
    sp = Subspace(QQ, 4, [[QQ.of(1, 2), QQ.zero, QQ.one, QQ.zero],
                          [QQ.zero, QQ.of(-2), QQ.zero, QQ.one]])
    obj = sz.subspace_to_obj(sp)
    assert sz.subspace_from_obj(sz.loads(sz.dumps(obj))) == sp


def test_morphism_file_round_trip(tmp_path):
    braces = dict(zoo())
    e = next(x for x in morphism_suite() if x.name == "B4_mod2")
    sz.save(tmp_path / "B4.json", sz.brace_to_obj("B4", braces["B4"]))
    sz.save(tmp_path / "C2.json", sz.brace_to_obj("C2", braces["C2_trivial"]))
    sz.save(tmp_path / "f.json",
            sz.morphism_to_obj("mod2", e.mor, "B4.json", "C2.json"))
    name, mor, dom_name, cod_name = sz.load_morphism(str(tmp_path / "f.json"))
    assert name == "mod2" and (dom_name, cod_name) == ("B4", "C2")
    assert mor.mat == e.mor.mat


def test_morphism_checksum_mismatch(tmp_path):
    braces = dict(zoo())
    e = next(x for x in morphism_suite() if x.name == "B4_mod2")
    sz.save(tmp_path / "B4.json", sz.brace_to_obj("B4", braces["B4"]))
    sz.save(tmp_path / "C2.json", sz.brace_to_obj("C2", braces["C2_trivial"]))
    obj = sz.morphism_to_obj("mod2", e.mor, "B4.json", "C2.json")
    obj["cod"]["dim"] = 3
    sz.save(tmp_path / "f.json", obj)
    with pytest.raises(ParseError, match="checksum"):
        sz.load_morphism(str(tmp_path / "f.json"))


def test_all_grouplike_flag():
    obj = sz.brace_to_obj("B4", dict(zoo())["B4"])
    assert obj["flags"] == {"all_grouplike": True}
    fx = sz.brace_to_obj("F2X", dict(zoo())["F2X"])
    assert "flags" not in fx
    # a lying flag is rejected at parse time
    fx["flags"] = {"all_grouplike": True}
    with pytest.raises(ParseError, match="group-like"):
        sz.brace_from_obj(fx)


def test_malformed_inputs_rejected():
    good = sz.brace_to_obj("B4", dict(zoo())["B4"])

    def corrupted(mutate):
        obj = sz.brace_to_obj("B4", dict(zoo())["B4"])
        mutate(obj)
        return obj

    cases = [
        lambda o: o.update(field={"Fp": 4}),          # composite modulus
        lambda o: o.update(field={"Fp": -3}),         # negative modulus
        lambda o: o["counit"].__setitem__(0, [1, 0]),  # zero denominator
        lambda o: o["comul"].__setitem__("0", [[0, 0, 1]]),  # short term
        lambda o: o["comul"].pop("0"),                # missing row
        lambda o: o["mul_dot"].__setitem__("9,0", [[0, 1, 1]]),  # index range
        lambda o: o.pop("unit"),                      # missing field
        lambda o: o.update(kind="something"),         # wrong kind
        lambda o: o.update(dim=0),                    # empty carrier
        lambda o: o["counit"].__setitem__(0, [True, 1]),  # bool is not int
    ]
    for mutate in cases:
        with pytest.raises(ParseError):
            sz.brace_from_obj(corrupted(mutate))
    # the untouched object still parses
    sz.brace_from_obj(good)


def test_invalid_json_diagnostics():
    with pytest.raises(ParseError, match="line 1"):
        sz.loads("{oops", where="bad.json")
    with pytest.raises(ParseError, match="cannot read"):
        sz.load_file("/nonexistent/path.json")


def test_antipode_recomputed_when_absent():
    obj = sz.brace_to_obj("B4", dict(zoo())["B4"])
    del obj["antipode_dot"]
    del obj["antipode_bullet"]
    _, b = sz.brace_from_obj(obj)
    assert b.dot.antipode.col(1) == basis_vec(QQ, 4, 3)
    assert b.bullet.antipode.col(1) == basis_vec(QQ, 4, 1)


def test_missing_antipode_surfaces_as_brace_error():
    # idempotent bullet row kills invertibility: no antipode exists
    obj = sz.brace_to_obj("C2_trivial", dict(zoo())["C2_trivial"])
    obj["mul_bullet"] = {"0,0": [[0, 1, 1]], "0,1": [[1, 1, 1]],
                         "1,0": [[1, 1, 1]], "1,1": [[1, 1, 1]]}
    del obj["antipode_bullet"]
    with pytest.raises(NoAntipode):
        sz.brace_from_obj(obj)


def test_kind_sniffing():
    assert sz.kind_of({"kind": "skew_brace"}) == "skew_brace"
    with pytest.raises(ParseError):
        sz.kind_of({"kind": "mystery"})
    with pytest.raises(ParseError):
        sz.kind_of([1, 2, 3])
