"""CLI surface: output shapes, serialization round-trips, exit codes."""

import json

import pytest

from eulersums.cli import main, to_json


def run_cli(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestTables:
    def test_genocchi_csv(self, capsys):
        code, out, _ = run_cli(capsys, "tables", "genocchi", "--max-n", "8",
                               "--format", "csv")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "n,value"
        assert lines[-1] == "8,17"

    def test_bernoulli_json(self, capsys):
        code, out, _ = run_cli(capsys, "tables", "bernoulli", "--max-n", "2")
        assert code == 0
        doc = json.loads(out)
        assert doc["rows"][-1]["payload"] == {"index": 2, "value": "1/6"}
        assert doc["rows"][1]["payload"]["value"] == "-1/2"

    def test_c_coeff_json(self, capsys):
        code, out, _ = run_cli(capsys, "tables", "c_coeff", "--max-n", "2")
        assert code == 0
        doc = json.loads(out)
        values = [row["payload"]["value"] for row in doc["rows"]]
        assert values == ["1/4", "7/48"]
        assert [row["payload"]["index"] for row in doc["rows"]] == [1, 2]

    def test_bad_max_n(self, capsys):
        code, _, _ = run_cli(capsys, "tables", "bernoulli", "--max-n", "0")
        assert code == 2

    def test_large_n_warns_on_stderr(self, capsys, monkeypatch):
        # stub the table function: the warning is about cost, so the test
        # must not actually pay it
        import eulersums.cli as cli_mod

        monkeypatch.setitem(cli_mod._TABLE_FUNCS, "euler_zero", lambda n: "0")
        code, _, err = run_cli(capsys, "tables", "euler_zero", "--max-n", "10001")
        assert code == 0
        assert "O(n^2)" in err


class TestValues:
    def test_u_values_match_spec(self, capsys):
        code, out, _ = run_cli(capsys, "values", "u", "--m-max", "2")
        assert code == 0
        doc = json.loads(out)
        payloads = [row["payload"] for row in doc["rows"]]
        assert payloads[0]["value"] == {"rational_part": "0", "log2_coeff": "1/2"}
        assert payloads[1]["value"] == {"rational_part": "1/4", "log2_coeff": "-1/4"}
        assert payloads[2]["value"] == {"rational_part": "-1/8", "log2_coeff": "0"}

    def test_v_poles(self, capsys):
        code, out, _ = run_cli(capsys, "values", "v", "--m-max", "1")
        assert code == 0
        doc = json.loads(out)
        poles = [row["payload"]["pole"] for row in doc["rows"]]
        assert poles[0] == {"location": 0, "residue": "1/2", "order": 1}
        assert poles[1] == {"location": -1, "residue": "-1/4", "order": 1}

    def test_v_mixes_values_and_poles(self, capsys):
        code, out, _ = run_cli(capsys, "values", "v", "--m-max", "4")
        assert code == 0
        doc = json.loads(out)
        p = {row["payload"]["s"]: row["payload"] for row in doc["rows"]}
        assert "pole" in p[0] and "pole" in p[-1] and "pole" in p[-3]
        assert p[-2]["value"]["rational_part"] == "5/24"
        assert p[-4]["value"]["rational_part"] == "-59/240"

    def test_w_value_at_zero(self, capsys):
        code, out, _ = run_cli(capsys, "values", "w", "--m-max", "0")
        assert code == 0
        doc = json.loads(out)
        assert doc["rows"][0]["payload"]["value"] == {
            "rational_part": "-1/2", "log2_coeff": "1/2",
        }

    def test_round_trip_is_byte_identical(self, capsys):
        code, out, _ = run_cli(capsys, "values", "u", "--m-max", "6")
        assert code == 0
        assert to_json(json.loads(out)) + "\n" == out

    def test_csv_shape(self, capsys):
        code, out, _ = run_cli(capsys, "values", "v", "--m-max", "2",
                               "--format", "csv")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "s,type,rational_part,log2_coeff,residue,order"
        assert lines[1].startswith("0,pole")
        assert lines[3].startswith("-2,value,5/24")


class TestEval:
    def test_u_at_two(self, capsys):
        code, out, _ = run_cli(capsys, "eval", "u", "2", "--tol", "1e-10")
        assert code == 0
        doc = json.loads(out)
        payload = doc["rows"][0]["payload"]
        assert abs(payload["value"]["re"] - 0.7512855644748) < 1e-9
        assert payload["error_bound"] <= 1e-10
        assert payload["config"]["tol"] == 1e-10

    def test_pole_exits_three(self, capsys):
        for args in (("eval", "v", "0"), ("eval", "w", "1"), ("eval", "zeta", "1")):
            code, out, _ = run_cli(capsys, *args)
            assert code == 3
            assert json.loads(out)["error"]["reason"] == "pole"

    def test_complex_argument(self, capsys):
        code, out, _ = run_cli(capsys, "eval", "eta", "2,1")
        assert code == 0
        doc = json.loads(out)
        assert doc["rows"][0]["payload"]["s"] == {"re": 2.0, "im": 1.0}

    def test_g_real_axis_only(self, capsys):
        code, out, _ = run_cli(capsys, "eval", "G", "0.5")
        assert code == 0
        code, out, _ = run_cli(capsys, "eval", "G", "1,1")
        assert code == 3
        assert json.loads(out)["error"]["reason"] == "unsupported_region"

    def test_unparseable_s(self, capsys):
        code, _, _ = run_cli(capsys, "eval", "u", "abc")
        assert code == 2

    def test_seed_rejected(self, capsys):
        code, _, err = run_cli(capsys, "--seed", "5", "eval", "u", "2")
        assert code == 2
        assert "deterministic" in err

    def test_bad_tol(self, capsys):
        code, _, _ = run_cli(capsys, "eval", "u", "2", "--tol", "-1")
        assert code == 2


class TestVerify:
    def test_exact_identities_pass(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "exact_identities",
                               "--max-n", "20")
        assert code == 0
        doc = json.loads(out)
        assert doc["passed"] is True
        checks = {row["payload"]["check"] for row in doc["rows"]}
        assert {"corollary1", "bridge", "eta_zeta_relation",
                "euler_even_zero", "euler_reflection",
                "genocchi_integral"} <= checks

    def test_continuation_passes(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "continuation", "--max-n", "4",
                               "--tol", "1e-8")
        assert code == 0
        assert json.loads(out)["passed"] is True

    def test_continuation_default_range(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "continuation")
        assert code == 0
        doc = json.loads(out)
        labels = [row["payload"]["label"] for row in doc["rows"]
                  if row["payload"]["check"] == "u_continuation"]
        assert labels == [str(-m) for m in range(0, 7)]

    def test_theorem4_passes(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "theorem4", "--tol", "1e-8")
        assert code == 0
        doc = json.loads(out)
        labels = [row["payload"]["label"] for row in doc["rows"]]
        assert labels == ["0.5", "1.5", "2.5"]

    def test_impossible_tolerance_fails_with_one(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "continuation", "--max-n", "2",
                               "--tol", "1e-30")
        assert code == 1
        assert json.loads(out)["passed"] is False


class TestBench:
    def test_quick_comparison(self, capsys):
        code, out, _ = run_cli(capsys, "bench", "u", "2", "--digits", "4")
        assert code == 0
        doc = json.loads(out)
        methods = [row["payload"]["method"] for row in doc["rows"]]
        assert methods == ["naive", "boole"]
        for row in doc["rows"]:
            assert row["payload"]["achieved_error"] <= 0.5e-4

    def test_outside_convergence_region(self, capsys):
        code, _, _ = run_cli(capsys, "bench", "u", "0")
        assert code == 2
        code, _, _ = run_cli(capsys, "bench", "w", "1.0")
        assert code == 2

    def test_csv_header_plot_ready(self, capsys):
        code, out, _ = run_cli(capsys, "bench", "v", "2", "--digits", "3",
                               "--methods", "boole", "--format", "csv")
        assert code == 0
        assert out.splitlines()[0] == (
            "method,function,s,terms,quad_evals,achieved_error,seconds,"
            "slow_converging"
        )


class TestUsage:
    def test_unknown_command(self, capsys):
        code, _, _ = run_cli(capsys, "frobnicate")
        assert code == 2

    def test_missing_subcommand_args(self, capsys):
        code, _, _ = run_cli(capsys, "tables", "bernoulli")
        assert code == 2
