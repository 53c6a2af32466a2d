from __future__ import annotations

import json

import pytest

from cremona_lattice import cases
from cremona_lattice import tables as T


@pytest.mark.parametrize("name", list(cases.SUITES))
def test_suite_passes(name):
    (v,) = cases.run_suite(name)
    assert v.passed, [c.to_json() for c in v.failures()]
    assert v.claims


def test_unknown_suite():
    with pytest.raises(KeyError):
        cases.run_suite("nosuch")


def test_verdicts_are_reproducible():
    a = cases.dumps(cases.run_suite("dp1", seed=3))
    b = cases.dumps(cases.run_suite("dp1", seed=3))
    assert a == b
    data = json.loads(a)
    assert data[0]["case"] == "dp1" and data[0]["passed"] is True


def test_reduced_modes_are_flagged():
    (v,) = cases.run_suite("dp2")
    assert any(f.startswith("reduced") for f in v.flags)
    (v,) = cases.run_suite("appendix")
    assert any("not machine-verified" in f for f in v.flags)


def test_verdict_failure_bookkeeping():
    v = cases.Verdict("x")
    v.check("true", True, 1)
    v.check("false", False, {"k": (1, 2)})
    assert not v.passed and [c.description for c in v.failures()] == ["false"]
    assert v.to_json()["claims"][1]["witness"] == {"k": [1, 2]}


def test_dp3_scan_cardinality_recorded():
    (v,) = cases.run_suite("dp3")
    assert "51840" in json.dumps(cases._plain(v.details))


def test_table_facts():
    assert len([r for r in T.E7_TABLE if r.order == 6]) == 17
    assert [r.computed_trace for r in T.E7_NO_EIG1_ORDER6] == [-2, -4, -1, 2]
    assert [r.trace for r in T.E8_ORDER3_TABLE] == [5, 2, -1, -4]
    d6 = [r for r in T.E7_NO_EIG1_ORDER6 if r.label.startswith("D6(a2)")]
    assert len(d6) == 1 and d6[0].computed_trace == -1
    a1a5 = [r for r in T.E6_TABLE if r.label == "A1xA5"]
    assert a1a5[0].trace == -2
    e6a1 = [r for r in T.E6_TABLE if r.order == 9]
    assert len(e6a1) == 1 and e6a1[0].computed_trace == 0
    a22 = [r for r in T.E8_ORDER3_TABLE if r.label == "A2^2"]
    assert a22[0].trace == 2


def test_e6_has_no_trace_minus4_order6():
    assert all(r.computed_trace != -4 for r in T.E6_TABLE if r.order == 6)
