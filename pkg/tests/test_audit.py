import json

import pytest

from mixedstirling import audit
from mixedstirling.audit import (
    CONSTRUCTIVE_IDS,
    IDENTITY_IDS,
    REFUTED,
    REGISTRY,
    SKIPPED,
    SUSPECT_IDS,
    VERIFIED,
    Grid,
    check_identity,
    run_audit,
)
from mixedstirling.errors import InvalidArgument, SizeGuardExceeded, UnknownIdentity
from mixedstirling.oracle import SizeGuard

MANIFEST = (
    "eq-bino",
    "bell-binomial-rec",
    "note-stirling",
    "note-stirling-cumulative",
    "note-bell",
    "prop-2.3",
    "example-B0-222",
    "prop-BB",
    "prop-BBB",
    "prop-incl-excl-B",
    "prop-bioo",
    "thm-multinomial",
    "thm-signsum",
    "thm-ball-removal",
    "thm-multip1",
    "thm-multip2",
    "rstirling-r01",
    "rstirling-rec-ii",
    "rstirling-rec-iii",
    "eq-r-bino",
    "thm-rstirling-via-B",
    "thm-rstirling-as-B",
    "cor-rstirling-rec",
    "rbell-r0",
    "thm-rbell-sum",
    "thm-rmixed-stirling",
    "example-rmixed-stirling-15",
    "cor-rmixed-composition",
    "thm-rmixed-bell",
    "cor-rmixed-bell-sum",
    "prop-rmixed-bell-multinomial",
    "factor-thm-i",
    "factor-thm-ii",
)

REQUIRED_VERIFIED = (
    "prop-2.3", "prop-BB", "prop-BBB", "prop-bioo", "thm-multinomial", "thm-ball-removal",
    "thm-multip1", "thm-multip2", "eq-bino", "bell-binomial-rec", "factor-thm-i", "factor-thm-ii",
)


@pytest.fixture(scope="module")
def default_report():
    return run_audit(Grid())


def test_registry_matches_manifest():
    assert IDENTITY_IDS == MANIFEST
    assert len(set(IDENTITY_IDS)) == len(IDENTITY_IDS)
    assert set(CONSTRUCTIVE_IDS) | set(SUSPECT_IDS) == set(MANIFEST)
    assert not set(CONSTRUCTIVE_IDS) & set(SUSPECT_IDS)
    assert set(REQUIRED_VERIFIED) <= set(CONSTRUCTIVE_IDS)
    assert all(ident.claim for ident in REGISTRY)


def test_check_identity_examples():
    res = check_identity("prop-BB", {"n": 2, "k": 2, "r": 2})
    assert res.passed and res.formula == res.reference == 5
    res = check_identity("eq-bino", {"n": 3, "x": 2})
    assert res.passed and res.formula == res.reference == 8
    res = check_identity("thm-signsum", {"n": 4, "cells": (2, 1)})
    assert res.reference == 18
    assert isinstance(res.formula, int)


def test_check_identity_accepts_lists():
    assert check_identity("thm-multinomial", {"n": 3, "cells": [1, 1]}).passed


def test_check_identity_errors():
    with pytest.raises(UnknownIdentity):
        check_identity("no-such-identity", {"n": 1})
    with pytest.raises(SizeGuardExceeded):
        check_identity("thm-signsum", {"n": 6, "cells": (3, 3)}, SizeGuard(max_balls=3))


def test_unknown_identity_in_only():
    with pytest.raises(UnknownIdentity):
        run_audit(Grid(), only=["prop-BB", "bogus"])


def test_empty_grid_all_skipped():
    report = run_audit(Grid(n=(5, 4), k=(1, 3), c=(1, 3), r=(0, 3), m=(3, 2)))
    assert [v.identity for v in report.verdicts] == list(MANIFEST)
    for v in report.verdicts:
        assert v.grid_points_checked == 0, v.identity
        assert v.status == SKIPPED


def test_default_grid_constructive_verified(default_report):
    for ident in REQUIRED_VERIFIED:
        v = default_report.verdict(ident)
        assert v.status == VERIFIED, ident
        assert v.counterexamples == []
        assert v.grid_points_checked > 0


def test_default_grid_suspect_definite(default_report):
    for ident in SUSPECT_IDS:
        v = default_report.verdict(ident)
        assert v.status in (VERIFIED, REFUTED), ident
        if v.status == REFUTED:
            assert 1 <= len(v.counterexamples) <= audit.COUNTEREXAMPLE_CAP
            assert v.failing_points >= len(v.counterexamples)


def test_verdict_consistency(default_report):
    for v in default_report.verdicts:
        assert (v.status == REFUTED) == bool(v.counterexamples)
        assert (v.failing_points == 0) == (v.status != REFUTED)


def test_counterexamples_are_real(default_report):
    for v in default_report.verdicts:
        for point, formula, reference in v.counterexamples[:3]:
            if isinstance(formula, str):
                continue
            res = check_identity(v.identity, point)
            assert (res.formula, res.reference) == (formula, reference)
            assert formula != reference


def test_rmixed_fifteen_example_agrees(default_report):
    v = default_report.verdict("example-rmixed-stirling-15")
    assert v.status == VERIFIED


def test_report_byte_determinism(default_report):
    again = run_audit(Grid())
    assert again.to_text() == default_report.to_text()
    assert again.to_json() == default_report.to_json()


def test_report_serialization(default_report):
    data = json.loads(default_report.to_json())
    assert [v["identity"] for v in data["verdicts"]] == list(MANIFEST)
    assert data["guard"]["max_balls"] == 10
    text = default_report.to_text()
    assert text.startswith("mixedstirling audit report\n")
    assert "identity: prop-BB\n" in text


def test_only_restricts_but_keeps_registry_order():
    report = run_audit(Grid(n=(0, 3)), only=["factor-thm-i", "eq-bino"])
    assert [v.identity for v in report.verdicts] == ["eq-bino", "factor-thm-i"]


def test_guard_skips_are_counted():
    report = run_audit(Grid(n=(0, 6)), SizeGuard(max_balls=3), only=["thm-signsum"])
    v = report.verdict("thm-signsum")
    assert v.points_skipped > 0


def test_grid_parse():
    g = Grid.parse("n=0..5,k=1..3,r=1..3")
    assert g.n == (0, 5) and g.k == (1, 3) and g.r == (1, 3)
    assert g.m == Grid().m
    assert Grid.parse("n=5").n == (5, 5)
    for bad in ("q=1..2", "n=a..b", "n=0..2..3", "n0..2"):
        with pytest.raises(InvalidArgument):
            Grid.parse(bad)
