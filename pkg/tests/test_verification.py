"""
Tests for the report model and the acceptance suites at reduced bounds.
"""

import pytest
from unittest.mock import patch

from config.settings import apply_overrides
from verification import SUITES, Check, Report, run_suite
from groups.jp import jp_compose, jp_enumerate
from groups.partition import compositions
from verification.suite import _bound, verify_jp_laws


class TestReport:
    """Report and Check models."""

    def test_empty_report_passes(self):
        assert Report(command="group order").passed is True

    def test_add_compares_expected_and_actual(self):
        report = Report(command="x")
        check = report.add("order", 24, 24)
        assert check.passed is True
        report.add("other", 1, 2)
        assert report.passed is False

    def test_explicit_pass_flag(self):
        report = Report(command="x")
        report.add("residual", "<= 1e-9", 1e-12, passed=True)
        assert report.passed is True

    def test_json_key_order(self):
        report = Report(command="lattice prop1", params={"partition": "2,1"}, result={"order": 8})
        report.add("order", 8, 8)
        data = report.to_json_dict()
        assert list(data) == ["command", "params", "result", "checks", "pass", "elapsed_seconds"]
        assert data["checks"] == [{"name": "order", "expected": 8, "actual": 8, "pass": True}]

    def test_check_alias(self):
        assert Check(name="a", passed=False).model_dump(by_alias=True)["pass"] is False


class TestSuites:
    """Every suite passes on small degrees."""

    @pytest.fixture(autouse=True)
    def fewer_random_cases(self):
        apply_overrides(random_checks=50)

    def test_bound(self):
        assert _bound(5, None) == 5
        assert _bound(5, 3) == 3
        assert _bound(5, 9) == 5

    def test_registry(self):
        assert list(SUITES) == [
            "parity", "kernels", "listings", "generation", "quotients", "charts",
            "prop1", "determinant", "lie", "monomial", "prop2",
        ]

    @pytest.mark.parametrize("name", ["parity", "kernels", "listings", "quotients", "charts", "determinant", "monomial"])
    def test_small_suites_pass(self, name):
        checks = run_suite(name, max_n=3, seed=7)
        assert checks
        assert all(c.passed for c in checks), [c.name for c in checks if not c.passed]

    def test_generation(self):
        checks = run_suite("generation", max_n=3)
        assert all(c.passed for c in checks)

    def test_prop1(self):
        checks = run_suite("prop1", max_n=2, seed=1)
        assert all(c.passed for c in checks), [c.name for c in checks if not c.passed]
        assert any(c.name == "L^1/2Z rotation group trivial" for c in checks)

    def test_lie(self):
        checks = run_suite("lie", max_n=3, seed=2)
        assert all(c.passed for c in checks), [c.name for c in checks if not c.passed]

    def test_prop2(self):
        checks = run_suite("prop2", max_n=4, seed=3)
        assert all(c.passed for c in checks), [(c.name, c.actual) for c in checks if not c.passed]

    def test_charts_reproducible(self):
        first = [c.actual for c in run_suite("charts", max_n=3, seed=11)]
        second = [c.actual for c in run_suite("charts", max_n=3, seed=11)]
        assert first == second

    def test_all_runs_registry_in_order(self):
        calls = []

        def fake(label):
            def suite(max_n, seed):
                calls.append((label, max_n, seed))
                return [Check(name=label, passed=True)]
            return suite

        fakes = {name: fake(name) for name in SUITES}
        with patch.dict("verification.suite.SUITES", fakes, clear=True):
            checks = run_suite("all", max_n=2, seed=4)
        assert [c.name for c in checks] == list(fakes)
        assert calls[0] == ("parity", 2, 4)

    def test_unknown_suite(self):
        with pytest.raises(KeyError):
            run_suite("nonsense")


class TestSuiteCost:
    """Group laws go through one Cayley table per partition."""

    @pytest.fixture(autouse=True)
    def fewer_random_cases(self):
        apply_overrides(random_checks=50)

    def test_jp_laws_compose_once_per_pair(self):
        sizes = [len(jp_enumerate(p)) for n in (1, 2, 3) for p in compositions(n)]
        with patch("groups.jp.jp_compose", wraps=jp_compose) as spy:
            checks = verify_jp_laws(max_n=3, seed=1)
        assert all(c.passed for c in checks)
        assert len(checks) == len(sizes)
        assert spy.call_count == sum(size * size for size in sizes)

    def test_jp_laws_sampled_above_cap(self):
        apply_overrides(homomorphism_pair_cap=100)
        checks = verify_jp_laws(max_n=3, seed=2)
        assert all(c.passed for c in checks)

    def test_b_lattice_classes_up_to_bound(self):
        names = [c.name for c in run_suite("quotients", max_n=6, seed=5)]
        assert [f"|Z^{n}/BZ^{n}|" for n in range(1, 7)] == [name for name in names if "/BZ^" in name]
