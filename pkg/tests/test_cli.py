"""
Command-line tests: exit codes, table and JSON reports, usage errors and
cap overrides, driven through cli.main.run.
"""

import json

import numpy as np
import pytest

from cli import run
from cli.parser import SETTINGS_FLAGS, build_parser
from config.settings import settings
from groups.errors import VerificationFailure


def _json(capsys) -> dict:
    return json.loads(capsys.readouterr().out)


class TestExitCodes:
    """0 pass, 1 failed check, 2 usage error."""

    def test_group_order_json(self, capsys):
        assert run(["group", "order", "--kind", "CP", "--n", "3", "--format", "json"]) == 0
        data = _json(capsys)
        assert data["result"] == {"kind": "CP", "n": 3, "order": 24}
        assert data["pass"] is True
        assert list(data) == ["command", "params", "result", "checks", "pass", "elapsed_seconds"]

    def test_help_exits_cleanly(self, capsys):
        assert run(["--help"]) == 0

    def test_unknown_verb(self, capsys):
        assert run(["frobnicate"]) == 2

    def test_missing_subverb(self, capsys):
        assert run(["group"]) == 2

    def test_bad_partition(self, capsys):
        assert run(["lattice", "prop1", "--partition", "0,2"]) == 2
        err = capsys.readouterr().err
        assert "Block sizes must be positive" in err
        assert "example: --partition 2,1" in err

    def test_bad_kind(self, capsys):
        assert run(["group", "order", "--kind", "XP", "--n", "3"]) == 2

    def test_vector_length(self, capsys):
        assert run(["quotient", "project", "--partition", "2,1", "--vector", "1,2"]) == 2
        assert "--vector" in capsys.readouterr().err

    def test_invalid_cap_value(self, capsys):
        assert run(["group", "order", "--kind", "P", "--n", "2", "--closure-cap", "0"]) == 2

    def test_closure_cap_exceeded(self, capsys):
        assert run(["group", "generate", "--kind", "CP2", "--n", "4", "--closure-cap", "5"]) == 2
        assert "exceeds cap 5" in capsys.readouterr().err

    def test_jp_cap_exceeded(self, capsys):
        assert run(["group", "jp", "--partition", "2,2", "--jp-cap", "10"]) == 2

    def test_failing_check(self, capsys, mocker):
        mocker.patch("cli.commands._expected_order", return_value=0)
        assert run(["group", "order", "--kind", "BP", "--n", "2", "--format", "json"]) == 1
        data = _json(capsys)
        assert data["pass"] is False
        assert data["checks"][0]["pass"] is False

    def test_verification_failure(self, capsys, mocker):
        mocker.patch("cli.commands.verify_prop1", side_effect=VerificationFailure("action broken", (1, 2)))
        assert run(["lattice", "prop1", "--partition", "2,1"]) == 1
        assert "action broken" in capsys.readouterr().err


class TestTableFormat:
    def test_table_lists_checks(self, capsys):
        assert run(["quotient", "order", "--partition", "1,1"]) == 0
        out = capsys.readouterr().out
        assert out.startswith("command: quotient order")
        assert "PASS  |Z^n/JZ^n| = 2^m" in out
        assert "overall: PASS" in out

    def test_failed_check_shows_values(self, capsys, mocker):
        mocker.patch("cli.commands._expected_order", return_value=7)
        run(["group", "order", "--kind", "P", "--n", "2"])
        out = capsys.readouterr().out
        assert "FAIL" in out
        assert "expected 7, got 8" in out
        assert "overall: FAIL" in out


class TestGroupCommands:
    def test_elements(self, capsys):
        assert run(["group", "elements", "--kind", "CP", "--n", "2", "--format", "json"]) == 0
        data = _json(capsys)
        assert len(data["result"]["elements"]) == 4
        assert "π:[2,1];ε:[+1,-1]" in data["result"]["elements"]

    def test_parity(self, capsys):
        assert run(["group", "parity", "--element", "π:[2,1];ε:[+1,+1]", "--format", "json"]) == 0
        data = _json(capsys)
        assert data["result"]["parity"] == {"Type1": -1, "Type2": 1, "Type3": -1}

    def test_single_parity(self, capsys):
        assert run(["group", "parity", "--element", "pi:[1,2];eps:[-1,+1]", "--parity", "2", "--format", "json"]) == 0
        assert _json(capsys)["result"]["parity"] == {"Type2": -1}

    def test_generate(self, capsys):
        assert run(["group", "generate", "--kind", "BP2", "--n", "3", "--format", "json"]) == 0
        assert _json(capsys)["result"]["order"] == 24

    def test_structure(self, capsys):
        assert run(["group", "structure", "--kind", "AP", "--n", "3"]) == 0

    def test_jp(self, capsys):
        assert run(["group", "jp", "--partition", "2,2", "--format", "json"]) == 0
        result = _json(capsys)["result"]
        assert result["order"] == 64
        assert result["block_permutations"] == [[1, 2], [2, 1]]

    def test_iso(self, capsys):
        assert run(["group", "iso", "--kind", "BP", "--n", "2", "--other-kind", "CP", "--format", "json"]) == 0
        result = _json(capsys)["result"]
        assert result["isomorphic"] is False
        assert result["orders"] == [4, 4]


class TestQuotientAndChartCommands:
    def test_project(self, capsys):
        assert run(["quotient", "project", "--partition", "2,1", "--vector", "1,1,2", "--format", "json"]) == 0
        result = _json(capsys)["result"]
        assert result["class"] == "00"
        assert result["in_lattice"] is True

    def test_project_rejects_fraction(self, capsys):
        assert run(["quotient", "project", "--partition", "1", "--vector", "1/2"]) == 2

    def test_chart_eval(self, capsys):
        assert run(["chart", "eval", "--partition", "2", "--vector", "1/2,1/2", "--format", "json"]) == 0
        assert _json(capsys)["result"]["chart"] == [{"theta": ["1/2"], "phi": "1"}]

    def test_chart_spherical(self, capsys):
        assert run(["chart", "spherical", "--partition", "2", "--vector", "1/2,1/2", "--format", "json"]) == 0
        assert _json(capsys)["result"]["text"] == ["φ=π; θ=[(1/2)π]"]

    @pytest.mark.parametrize("other,expected", [("7/4,5/4", True), ("7/4,1/4", False)])
    def test_chart_equiv(self, capsys, other, expected):
        args = ["chart", "equiv", "--partition", "2", "--vector", "3/4,1/4", "--other", other, "--format", "json"]
        assert run(args) == 0
        assert _json(capsys)["result"]["equivalent"] is expected


class TestLatticeCommands:
    def test_complex(self, capsys):
        assert run(["lattice", "complex", "--partition", "2,1", "--format", "json"]) == 0
        result = _json(capsys)["result"]
        assert len(result["nodes"]) == 4
        assert len(result["circles"]) == 6

    def test_rotations(self, capsys):
        assert run(["lattice", "rotations", "--partition", "2,2", "--format", "json"]) == 0
        result = _json(capsys)["result"]
        assert result["order"] == 32
        assert result["candidates"] == 128

    def test_prop1(self, capsys):
        assert run(["lattice", "prop1", "--partition", "2,1", "--format", "json"]) == 0
        result = _json(capsys)["result"]
        assert (result["jp_order"], result["kernel_order"], result["rotation_order"]) == (8, 1, 8)

    def test_full(self, capsys):
        assert run(["lattice", "full", "--n", "2", "--format", "json"]) == 0
        assert _json(capsys)["result"]["order"] == 8


class TestLieAndUnitaryCommands:
    def test_closure(self, capsys):
        assert run(["lie", "closure", "--partition", "2,1", "--format", "json"]) == 0
        assert _json(capsys)["result"]["dimension"] == 3

    def test_closure_of_single_axis(self, capsys):
        assert run(["lie", "closure", "--partition", "1", "--format", "json"]) == 0
        assert _json(capsys)["result"]["dimension"] == 0

    def test_generators(self, capsys):
        assert run(["lie", "generators", "--partition", "2,2", "--format", "json"]) == 0
        result = _json(capsys)["result"]
        assert result["count"] == result["p"] == 3

    def test_p(self, capsys):
        assert run(["lie", "p", "--partition", "1,1,1"]) == 0

    def test_exp(self, capsys):
        assert run(["lie", "exp", "--n", "3", "--pair", "1,3", "--t", "0.5", "--hyperbolic", "--format", "json"]) == 0
        assert _json(capsys)["result"]["det"] == pytest.approx(1.0)

    def test_exp_bad_pair(self, capsys):
        assert run(["lie", "exp", "--n", "2", "--pair", "2,1", "--t", "1"]) == 2

    def test_unitary_random(self, capsys):
        assert run(["unitary", "random", "--n", "3", "--seed", "4", "--format", "json"]) == 0
        result = _json(capsys)["result"]
        assert len(result["matrix"]) == 3
        assert result["seed"] == 4

    def test_unitary_decompose(self, capsys):
        assert run(["unitary", "decompose", "--n", "4", "--seed", "9", "--format", "json"]) == 0
        result = _json(capsys)["result"]
        assert len(result["thetas"]) == 4
        assert result["reconstruction_error"] < 1e-9

    def test_unitary_size_limit(self, capsys):
        assert run(["unitary", "random", "--n", "100"]) == 2


class TestVerifyCommand:
    def test_listings(self, capsys):
        assert run(["verify", "listings", "--format", "json"]) == 0
        data = _json(capsys)
        assert data["result"]["suite"] == "listings"
        assert data["result"]["checks"] == 2

    def test_max_n_validated(self, capsys):
        assert run(["verify", "parity", "--max-n", "0"]) == 2

    def test_seed_echoed(self, capsys):
        assert run(["verify", "determinant", "--max-n", "2", "--seed", "5", "--format", "json"]) == 0
        data = _json(capsys)
        assert data["params"] == {"max_n": 2, "seed": 5}
        assert data["result"]["seed"] == 5


class TestSettingsFlags:
    """Every cap and tolerance can be overridden from the command line."""

    def test_every_setting_has_a_flag(self):
        parser = build_parser()
        args = parser.parse_args(["group", "order", "--kind", "P", "--n", "2"])
        for name in SETTINGS_FLAGS:
            assert getattr(args, name) is None

    def test_candidate_cap(self, capsys):
        assert run(["lattice", "rotations", "--partition", "2,1", "--candidate-cap", "10"]) == 2
        assert "exceeds cap 10" in capsys.readouterr().err

    def test_iso_cap_alias(self, capsys):
        args = ["group", "iso", "--kind", "BP", "--n", "3", "--other-kind", "CP", "--iso-cap", "10"]
        assert run(args) == 2
        assert "exceeds cap 10" in capsys.readouterr().err

    def test_lie_max_n(self, capsys):
        assert run(["lie", "closure", "--partition", "3,3", "--lie-max-n", "4"]) == 2

    def test_random_checks_reaches_suites(self, capsys, mocker):
        seen = []

        def fake_suite(name, max_n, seed):
            seen.append(settings.random_checks)
            return []

        mocker.patch("cli.commands.run_suite", side_effect=fake_suite)
        assert run(["verify", "charts", "--random-checks", "10", "--format", "json"]) == 0
        assert seen == [10]
        assert _json(capsys)["params"]["random_checks"] == 10

    def test_tolerance_flags(self, capsys):
        args = ["unitary", "decompose", "--n", "3", "--seed", "2",
                "--orthogonality-tol", "1e-6", "--format", "json"]
        assert run(args) == 0
        assert _json(capsys)["checks"][1]["expected"] == "<= 1e-06"

    @pytest.mark.parametrize("flag", ["--unitarity-tol", "--eigen-cluster-gap", "--random-checks"])
    def test_non_positive_rejected(self, capsys, flag):
        assert run(["unitary", "random", "--n", "2", flag, "0"]) == 2
        assert flag in capsys.readouterr().err

    def test_malformed_value(self, capsys):
        assert run(["verify", "parity", "--candidate-cap", "many"]) == 2


class TestDecompositionExitCodes:
    """Residue failures are failed checks, bad input is a usage error."""

    def test_residue_failure_exits_one(self, capsys):
        assert run(["unitary", "decompose", "--n", "4", "--seed", "9", "--tol", "1e-300"]) == 1
        assert "verification failed" in capsys.readouterr().err

    def test_non_unitary_input_exits_two(self, capsys, mocker):
        mocker.patch("cli.commands.random_unitary", return_value=np.ones((2, 2), dtype=complex))
        assert run(["unitary", "decompose", "--n", "2"]) == 2
        assert "not unitary" in capsys.readouterr().err
