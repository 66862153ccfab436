"""The statement registry over the built-in catalog: the master gate."""

import pytest

import normgraph.builders as B
from normgraph import checks


@pytest.fixture(scope="module")
def catalog_results():
    return checks.run_suite(list(B.catalog()))


def test_master_suite_has_no_failures(catalog_results):
    bad = [r for r in catalog_results if r.verdict in (checks.FAIL, checks.ERROR)]
    assert bad == [], [r.line() for r in bad]


def test_every_check_fires_on_some_group(catalog_results):
    fired = {r.check_id for r in catalog_results if r.verdict == checks.PASS}
    conditional = {"V24-ingested-reference-groups"}  # needs user-supplied tables
    missing = {c.id for c in checks.REGISTRY} - fired - conditional
    assert missing == set()


def test_suite_is_deterministic(catalog_results):
    again = checks.run_suite(list(B.catalog()))
    assert again == catalog_results


def test_witness_present_on_failure():
    g = B.cyclic(6)
    check = next(c for c in checks.REGISTRY if c.id.startswith("V05"))
    assert checks.run_check(check, g).verdict == checks.PASS
    broken = checks.Check("broken", "always fails", lambda f, cfg: checks._fail(element="x"))
    result = checks.run_check(broken, g)
    assert result.verdict == checks.FAIL
    assert result.witness == {"element": "x"}
    assert "broken" in result.line() and "fail" in result.line()


def test_error_verdict_captures_exception():
    def boom(facts, cfg):
        raise RuntimeError("kaput")

    result = checks.run_check(checks.Check("boom", "raises", boom), B.cyclic(2))
    assert result.verdict == checks.ERROR
    assert "kaput" in result.witness["trace"]


def test_heavy_cap_marks_large_groups_na():
    cfg = checks.SuiteConfig(heavy_order_cap=8)
    heavy = [c for c in checks.REGISTRY if c.id.startswith(("V12", "V15", "V25", "V26"))]
    assert len(heavy) == 4
    for check in heavy:
        result = checks.run_check(check, B.symmetric(4), cfg)
        assert result.verdict == checks.NA
        result = checks.run_check(check, B.dihedral(8), cfg)
        assert result.verdict == checks.PASS


def test_summarize_counts(catalog_results):
    summ = checks.summarize(catalog_results)
    assert summ["total"] == len(checks.REGISTRY) * len(B.catalog())
    assert summ["counts"][checks.FAIL] == 0
    assert summ["counts"][checks.ERROR] == 0
    assert summ["counts"][checks.PASS] + summ["counts"][checks.NA] == summ["total"]
    assert summ["failures"] == []


def test_coverage_table_links_real_checks():
    ids = {c.id for c in checks.REGISTRY}
    rows = checks.coverage_rows()
    assert len(rows) >= 40
    linked = set()
    for row in rows:
        assert row["status"].startswith(("verified", "conditional", "out-of-scope"))
        for cid in row["checks"]:
            assert cid in ids
            linked.add(cid)
        if row["status"] == "verified":
            assert row["checks"]
    assert linked == ids  # every registered check backs at least one statement


def test_na_results_carry_reasons(catalog_results):
    for r in catalog_results:
        if r.verdict == checks.NA:
            assert r.witness and "reason" in r.witness
