import pytest

from tsscpp.verify import CASE_IDS, SUITES, gating_failures, run_case, run_suite, suite_cases

KEYS = {"case", "kind", "params", "lhs", "rhs", "match", "method_lhs", "method_rhs"}


@pytest.mark.parametrize("suite", ["bijections", "statistics", "pfaffian-core", "genfun", "constterm"])
def test_theorem_suites_pass_at_small_size(suite):
    report = run_suite(suite, max_size=3)
    assert report
    assert all(set(r) == KEYS for r in report)
    assert gating_failures(report) == []


def test_case_ids_are_declared():
    for suite in SUITES:
        for name, args in suite_cases(suite, max_size=2):
            assert name in CASE_IDS
    for spec in [("c_moves", (1, 2)), ("c_neg1_avs", (3,)), ("c_conj_doubly", (3,))]:
        assert {r["case"] for r in run_case(spec)} <= set(CASE_IDS[spec[0]])


def test_parallel_run_keeps_order():
    a = run_suite("statistics", max_size=3, jobs=1)
    b = run_suite("statistics", max_size=3, jobs=2)
    assert a == b


def test_filter_by_case_id():
    report = run_suite("conjectures", case_filter="conj-refined")
    assert [r["params"]["n"] for r in report] == [1, 2, 3, 4, 5]
    assert all(r["match"] for r in report)


def test_corrected_statements_and_known_misprints():
    by = {}
    for spec in [("c_moves", (2, 1)), ("c_kxy_literal", (3, 1)), ("c_kxy_image", (3, 1)),
                 ("c_neg1_avs", (3,)), ("c_vr_poly", (6,)), ("c_signed_vc", (2,))]:
        for r in run_case(spec):
            by.setdefault(r["case"], []).append(r)
    assert by["moves-cube"][0]["match"] and not by["moves-profile"][0]["match"]
    assert by["kxy-image"][0]["match"] and not by["kxy-literal"][0]["match"]
    observed, conjectured = by["neg1-avs"]
    assert not observed["match"] and conjectured["match"]
    assert not by["vr-poly"][0]["match"]
    assert not by["signed-vc"][0]["match"]
    assert by["moves-profile"][0]["kind"] == "observation"


def test_gating_ignores_non_theorems():
    report = [{"kind": "observation", "match": False}, {"kind": "conjecture", "match": False},
              {"kind": "theorem", "match": True}]
    assert gating_failures(report) == []
    assert gating_failures(report + [{"kind": "theorem", "match": False}])


def test_unknown_suite():
    with pytest.raises(ValueError):
        suite_cases("nope")
