import math

import pytest

from coxeter_elliptic.verify import CHECKS, run_suite, suite_passed

HARD_FAILURES = {"B_pi2_over_8"}


@pytest.fixture(scope="module")
def reports():
    return run_suite()


def test_sorted_and_complete(reports):
    ids = [r.identity_id for r in reports]
    assert ids == sorted(ids) == sorted(CHECKS)


def test_expected_ids_present(reports):
    by_id = {r.identity_id: r for r in reports}
    assert by_id["A_minus_B_pi2_over_12"].rhs_exact == pytest.approx(math.pi ** 2 / 12, abs=0)
    assert "discriminant_16" in by_id
    assert by_id["C_11pi2_over_72"].conditional


def test_outcomes(reports):
    failed = {r.identity_id for r in reports if not r.passed and not r.conditional}
    assert failed == HARD_FAILURES
    assert not suite_passed(reports)


def test_c_discrepancy_is_documented(reports):
    c = next(r for r in reports if r.identity_id == "C_11pi2_over_72")
    assert c.status == "documented-discrepancy"
    assert f"{c.lhs:.12g}" in c.note
    assert "arccos(1/3)" in c.details["convention"]


def test_seed_changes_samples_not_verdicts():
    a = run_suite(seed=1, only=["discriminant_16", "weierstrass_equivalence"])
    b = run_suite(seed=2, only=["discriminant_16", "weierstrass_equivalence"])
    assert [r.passed for r in a] == [r.passed for r in b] == [True, True]
    assert a[0].details["worst_lambda"] != b[0].details["worst_lambda"]


def test_only_filter_and_unknown():
    assert [r.identity_id for r in run_suite(only=["I2_equals_A"])] == ["I2_equals_A"]
    with pytest.raises(KeyError):
        run_suite(only=["nope"])


def test_suite_passed_ignores_conditional(reports):
    assert suite_passed([r for r in reports if r.identity_id not in HARD_FAILURES])
