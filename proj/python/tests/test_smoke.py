import json
from fractions import Fraction

import pytest

import leibcx


def test_catalog_and_validation():
    assert "sl2" in leibcx.catalog_names()
    ok, bad = leibcx.validate(leibcx.catalog("B1"))
    assert not ok and bad[0] == (1, 1, 1)
    assert leibcx.validate(leibcx.catalog("N3")) == (True, [])


def test_homology_tables():
    sl2 = leibcx.catalog("sl2")
    assert leibcx.homology(sl2, 4) == [3, 1, 0]
    assert leibcx.cohomology(sl2, 4) == [3, 1, 0]
    assert leibcx.omega0(sl2) == 1
    assert leibcx.free_lie_dims(2, 5) == [2, 3, 2, 3, 6]


def test_exact_rationals():
    a = leibcx.parse_algebra(
        '{"dim":2,"brackets":[{"left":1,"right":2,"value":[[1,"1/3"]]}]}')
    assert leibcx.structure(a)[0][1][0] == Fraction(1, 3)
    with pytest.raises(leibcx.InputError):
        leibcx.parse_algebra('{"dim":2,"brackets":[{"left":1,"right":2,"value":[[1,"0.5"]]}]}')


def test_double_matches_catalog():
    d = leibcx.double(leibcx.catalog("L2"))
    assert leibcx.bracket(d, 3, 0) == [0, 0, 2, 0]
    assert leibcx.structure(d) == leibcx.structure(leibcx.catalog("doubleL2"))


def test_suite_and_cli():
    checks = leibcx.check(leibcx.catalog("L2"), "all", 4)
    assert all(c["passed"] or c["informational"] for c in checks)
    code, out, _ = leibcx.run_cli(["homology", "catalog:L2", "--format", "json"])
    assert code == 0
    assert json.loads(out)["tables"]["HA"] == [1, 1, 0]
    assert leibcx.run_cli(["homology", "catalog:B1"])[0] == 2
