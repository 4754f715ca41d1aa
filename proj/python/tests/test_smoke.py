import json
import pathlib

import pytest

import aralg

DATA = pathlib.Path(__file__).resolve().parents[2] / "data"


def test_load_and_round_trip():
    a = aralg.Algebra.load(str(DATA / "commutative_square.json"))
    assert a.dim == 9
    assert a.vertices == ["1", "2", "3", "4"]
    b = aralg.Algebra.from_json(a.to_json())
    assert json.loads(b.to_json()) == json.loads(a.to_json())


def test_sequence_over_dual_numbers():
    a = aralg.Algebra.example("T1")
    cert = aralg.ar_sequence(a.module("S"))
    assert cert["verified"]
    assert cert["sequence"]["M"]["dims"] == [2]
    assert aralg.is_isomorphic(aralg.ar_middle(a.module("S")), a.module("A"))


def test_triangle_gamma_is_x():
    a = aralg.Algebra.example("T1")
    t = aralg.ar_triangle(a.module("A"))
    assert t["gamma_nonzero"] and t["composites_null"]
    coeffs = t["gamma_multiplication"]
    assert coeffs[0] == "0" and coeffs[1] != "0"


def test_ar_formula_and_dtr():
    a = aralg.Algebra.example("T3")
    for _, m in a.curated():
        if m.is_projective():
            continue
        t = aralg.dtr(m)
        assert aralg.is_isomorphic(t, aralg.dtr_via_tensor(m))
        for _, n in a.curated():
            assert aralg.ext1_dim(m, n) == aralg.stable_hom_dim(n, t)


@pytest.mark.parametrize("suite", ["ArFormula", "dtr-routes", "SixTerm", "SerrePairing"])
def test_suites(suite):
    ok, rep = aralg.verify(suite, aralg.Algebra.example("T2"))
    assert ok and rep["suite"]


def test_quiver_dot_a2():
    dot = aralg.quiver_dot(aralg.Algebra.example("T2"), steps=3)
    assert dot.count("label=\"[") == 3


def test_errors():
    with pytest.raises(aralg.ProjectiveInput):
        aralg.ar_sequence(aralg.Algebra.example("T2").module("P:1"))
    with pytest.raises(aralg.UnsupportedCharacteristic):
        aralg.verify("ArFormula", aralg.Algebra.example("T1", "Fp:2"))
    with pytest.raises(aralg.ParseError):
        aralg.Algebra.example("T1").module("S:7")
    with pytest.raises(aralg.AralgError):
        aralg.Algebra.from_json('{"field": "Q"}')


def test_happel():
    a = aralg.Algebra.example("T1")
    assert aralg.happel_compare(a.module("S"))["passed"]
