import inspect

import pytest

from hookline import harness, polynomials
from hookline.errors import DomainError, ParseError
from hookline.harness import (
    CLOSED_FORM_CHECKS, KNOWN, KNOWN_DISCREPANCIES, PASS, SUITES, distribution, map_chain, verify,
)
from hookline.partitions import Partition
from hookline.paths import LatticePath

INV_12 = "3 4 1 2 7 9 5 10 6 8 11 12"


def test_distribution_examples():
    t = distribution("i321", 4, "des")
    assert [r[:2] for r in t.rows] == [[0, 1], [1, 4], [2, 1]]
    assert t.closed_form_matches is True

    t = distribution("i321", 4, "maj")
    assert [r[1] for r in t.rows] == [1, 1, 2, 1, 1]
    assert t.closed_form_matches is True

    for stat in harness.STATISTICS:
        t = distribution("i321", 1, stat)
        assert sum(r[1] for r in t.rows) == 1


def test_distribution_flags_the_213_mismatch():
    t = distribution("i321-213", 3, "maj")
    assert t.closed_form_matches is False
    assert [r[:3] for r in t.rows] == [[0, 1, 1], [1, 0, 1], [2, 1, 1]]


def test_distribution_without_closed_form():
    t = distribution("all", 3, "des", closed_form=False)
    assert t.columns == ["des", "count"]
    assert t.closed_form_matches is None
    assert t.to_csv().splitlines() == ["des,count", "0,1", "1,4", "2,1"]


def test_distribution_descent_set_keys():
    t = distribution("s321", 3, "descent-set")
    assert [r[:2] for r in t.rows] == [["-", 1], ["1", 2], ["2", 2]]
    assert t.closed_form_matches is True


def test_distribution_bad_statistic():
    with pytest.raises(ParseError):
        distribution("i321", 3, "inv")


def test_map_chain_full_pipeline():
    trace = map_chain(INV_12, ["rho", "xi", "psi-inv"])
    assert [s.name for s in trace] == ["input", "rho", "xi", "psi-inv"]
    assert trace[1].value == LatticePath("NNEENNENEENN")
    assert trace[2].value == LatticePath("NNEENNENEEEN")
    assert trace[3].value == Partition((4, 4, 3, 3, 2))
    assert [s.statistic for s in trace] == ["Des", "Peak", "Peak", "hd"]
    assert {frozenset(s.stat_value) for s in trace} == {frozenset({2, 6, 8})}


def test_map_chain_identity():
    trace = map_chain("1 2 3 4 5", ["rho", "xi", "psi-inv"])
    assert trace[1].value == LatticePath("NNNNN")
    assert trace[2].value == LatticePath("EEENN")
    assert trace[3].value == Partition(())


def test_map_chain_s321():
    trace = map_chain("2 1 4 3", ["s321"])
    assert len(trace[1].value) == 8
    assert trace[1].stat_value == trace[0].stat_value == {1, 3}


def test_map_chain_transpose_tracks_ascents():
    trace = map_chain("8 6 12 11 5 2 10 1 9 7 4 3", ["transpose", "rho"])
    assert str(trace[1].value) == INV_12
    assert trace[1].stat_value == {2, 6, 8}


def test_map_chain_errors():
    with pytest.raises(DomainError):
        map_chain("1 2", ["xi"])
    with pytest.raises(DomainError):
        map_chain("1 2", ["rho", "rho"])
    with pytest.raises(ParseError):
        map_chain("1 2", ["zeta"])
    with pytest.raises(DomainError):
        map_chain("3 2 1", ["rho"])


def test_verify_examples():
    assert verify("main-theorem", 10).passed
    report = verify("double-213", 6)
    assert report.passed
    known = report.known()
    assert known and all(r.check == "double-213/maj-claim" for r in known)
    n3 = next(r for r in known if r.param == "n=3")
    assert (n3.expected, n3.actual) == ("1 + q + q^2", "1 + q^2")
    text = report.format_text()
    assert "known-discrepancy" in text and "n=3" in text
    for n in (0, 1):
        assert verify("all", n).passed


def test_known_status_only_for_registered_checks():
    report = verify("all", 6)
    assert {r.check for r in report.records if r.status == KNOWN} <= KNOWN_DISCREPANCIES
    assert all(r.status in (PASS, KNOWN) for r in report.records)


def test_verify_failure_is_data(monkeypatch):
    monkeypatch.setitem(SUITES, "maj", lambda n_max: [harness._record("maj/q-binomial", "n=0", 1, 2)])
    report = verify("maj")
    assert not report.passed
    assert report.failures()[0].status == "fail"
    assert "FAIL" in report.format_text()


def test_verify_unknown_suite():
    with pytest.raises(ParseError):
        verify("nope")


def _strip_time(report):
    data = report.to_json()
    data.pop("elapsed")
    return data


def test_verify_deterministic_and_jobs_independent():
    one = verify("all", 7)
    again = verify("all", 7)
    many = verify("all", 7, jobs=3)
    assert _strip_time(one) == _strip_time(again) == _strip_time(many)


def test_every_closed_form_has_one_registered_check():
    report = verify("all", 6)
    checks = {r.check for r in report.records}
    for op, check in CLOSED_FORM_CHECKS.items():
        assert callable(getattr(polynomials, op)), op
        assert check in checks, check
    assert len(set(CLOSED_FORM_CHECKS.values())) == len(CLOSED_FORM_CHECKS)


def test_suite_defaults_are_only_lowered():
    for name, fn in SUITES.items():
        assert "n_max" in inspect.signature(fn).parameters, name
    small = {r.param for r in verify("maj", 3).records}
    assert small == {f"n={n}" for n in range(4)}
    big = {r.param for r in verify("maj", 100).records}
    assert big == {f"n={n}" for n in range(15)}
