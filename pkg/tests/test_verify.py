import pytest

from jacobi_ido.verify import SUITES, VerifyReport, run_suite


@pytest.mark.parametrize("suite", SUITES)
def test_suite_passes(suite):
    (rep,) = run_suite(suite)
    failures = [(c.id, c.witness) for c in rep.checks if not c.ok]
    assert rep.ok, failures
    assert rep.checks


def test_report_fails_if_any_check_fails():
    rep = VerifyReport("demo")
    rep.add("a", "first", True)
    rep.add("b", "second", False, "witness")
    assert not rep.ok
    assert rep.to_json()["checks"][1]["witness"] == "witness"
    assert "FAIL" in rep.text()


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_suite("nope")
