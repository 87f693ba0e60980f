import json

import pytest

import homsuper


def test_fixture_listing():
    names = homsuper.fixture_names()
    assert "sl2" in names
    assert "heis3" in names
    with pytest.raises(KeyError):
        homsuper.fixture("nope")


def test_load_and_shape():
    a = homsuper.fixture("osp12")
    assert a.name == "osp12"
    assert (a.dim, a.even_dim, a.odd_dim) == (5, 3, 2)
    assert len(a.basis_names) == 5
    assert "Algebra" in repr(a)


def test_parse_serialize_roundtrip():
    a = homsuper.fixture("hsl2")
    b = homsuper.parse(a.serialize())
    assert b.serialize() == a.serialize()


def test_verify_and_killing():
    a = homsuper.fixture("sl2")
    report = homsuper.verify(a)
    assert report["is_hom_lie_superalgebra"] is True
    k = homsuper.killing(a)
    assert k["nondegenerate"] is True
    assert k["gram"][2][2] == "8"


def test_json_is_stable():
    a = homsuper.fixture("c11")
    assert a.analyze_json() == a.analyze_json()
    assert json.loads(a.analyze_json())["simple"] is True


def test_ideals_and_errors():
    h = homsuper.fixture("heis3")
    report = homsuper.ideals(h, seeds=["z"])
    assert report["closures"][0]["closure_dim"] == 1
    coords = homsuper.ideals(h, seeds=["1,0,0"], side="left")
    assert coords["closures"][0]["closure_dim"] == 2
    with pytest.raises(ValueError):
        homsuper.ideals(h, side="sideways")
    with pytest.raises(homsuper.HomsuperError):
        homsuper.ideals(h, seeds=["1,0"])


def test_decompose_and_criterion():
    a = homsuper.fixture("osp12")
    dec = homsuper.decompose(a)
    assert dec["summand_count"] == 1
    crit = homsuper.criterion(a)
    assert crit["applicable"] is True and crit["consistent"] is True
    with pytest.raises(homsuper.HomsuperError):
        homsuper.decompose(homsuper.fixture("heis3"))


def test_derivations():
    a = homsuper.fixture("hsl2")
    report = homsuper.derivations(a, k=1, parity="even")
    assert report["spaces"][0]["parity"] == "even"
    assert report["spaces"][0]["dimension"] == 1
    with pytest.raises(ValueError):
        homsuper.derivations(a, k=0, parity="sideways")
