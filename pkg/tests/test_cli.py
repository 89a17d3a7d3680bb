import json

import pytest

from ramlab.cli import EXIT_OK, EXIT_USAGE, main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCommandC:
    def test_all_routes_match(self, capsys):
        code, out, _ = run(capsys, "c", "2", "4", "--system", "U", "--route", "all")
        assert code == EXIT_OK
        assert "-1" in out and "true" in out

    def test_default(self, capsys):
        code, out, _ = run(capsys, "c", "1", "1")
        assert code == EXIT_OK
        assert out.splitlines()[-1].split()[-1] == "1"

    def test_diagonal_is_phi(self, capsys):
        code, out, _ = run(capsys, "c", "4", "4", "--system", "D")
        assert code == EXIT_OK
        assert out.splitlines()[-1].split()[-1] == "2"

    def test_oracle_route(self, capsys):
        code, out, _ = run(capsys, "c", "2", "4", "--system", "U", "--route", "oracle",
                           "--format", "json")
        assert code == EXIT_OK
        obj = json.loads(out)
        assert float(obj["re"]) == pytest.approx(-1, abs=1e-9)

    def test_json_round_trip(self, capsys):
        code, out, _ = run(capsys, "c", "2", "4", "--system", "U", "--route", "all",
                           "--format", "json")
        obj = json.loads(out)
        assert obj["divisor"] == obj["core"] == -1
        assert obj["match"] == "true"


class TestCommandTable:
    def test_phi_unitary(self, capsys):
        code, out, _ = run(capsys, "table", "--what", "phiA", "--system", "U",
                           "--rmax", "6", "--format", "csv")
        assert code == EXIT_OK
        values = [line.split(",")[1] for line in out.splitlines()[1:]]
        assert values == ["1", "1", "2", "3", "4", "2"]

    def test_mu_dirichlet(self, capsys):
        code, out, _ = run(capsys, "table", "--what", "muA", "--rmax", "4",
                           "--format", "csv")
        values = [line.split(",")[1] for line in out.splitlines()[1:]]
        assert values == ["1", "-1", "-1", "0"]

    def test_psi_unitary(self, capsys):
        code, out, _ = run(capsys, "table", "--what", "psiA", "--system", "U",
                           "--rmax", "4", "--format", "csv")
        values = [line.split(",")[1] for line in out.splitlines()[1:]]
        assert values == ["1", "3", "4", "5"]

    def test_cA_matrix_json(self, capsys):
        code, out, _ = run(capsys, "table", "--what", "cA", "--system", "U",
                           "--rmax", "4", "--nmax", "4", "--format", "json")
        rows = [json.loads(line) for line in out.splitlines()]
        assert len(rows) == 16
        lookup = {(r["n"], r["r"]): r["value"] for r in rows}
        assert lookup[(2, 4)] == -1 and lookup[(4, 4)] == 3


class TestCommandVerify:
    def test_prop2_passes(self, capsys):
        code, out, _ = run(capsys, "verify", "prop2", "--system", "U",
                           "--rmax", "50", "--xmax", "1000", "--format", "csv")
        assert code == EXIT_OK
        assert "false" not in out

    def test_prop3_dirichlet(self, capsys):
        code, out, _ = run(capsys, "verify", "prop3", "--system", "D", "--rmax", "30")
        assert code == EXIT_OK
        assert "none-found" in out

    def test_prop3_unitary_finds_violation(self, capsys):
        code, out, _ = run(capsys, "verify", "prop3", "--system", "U", "--rmax", "20",
                           "--format", "json")
        assert code == EXIT_OK
        rows = [json.loads(line) for line in out.splitlines()]
        assert any(r["verdict"] == "violating" and (r["r"], r["s"]) == (2, 4) for r in rows)

    def test_prop4_unitary(self, capsys):
        code, out, _ = run(capsys, "verify", "prop4", "--system", "U", "--format", "json")
        assert code == EXIT_OK
        obj = json.loads(out)
        assert (obj["p"], obj["t"]) == (2, 2)

    def test_prop4_dirichlet_not_applicable(self, capsys):
        code, out, _ = run(capsys, "verify", "prop4", "--system", "D")
        assert code == EXIT_OK
        assert "not-applicable" in out

    def test_prop1_with_literal(self, capsys):
        code, out, _ = run(capsys, "verify", "prop1", "--rmax", "10", "--xmax", "200",
                           "--even", "r=6; 1:1, 2:-1, 3:1/2, 6:3", "--format", "csv")
        assert code == EXIT_OK
        assert "false" not in out

    def test_all_small(self, capsys):
        code, out, _ = run(capsys, "verify", "all", "--system", "U",
                           "--rmax", "10", "--xmax", "100")
        assert code == EXIT_OK


class TestErrorsAndPlumbing:
    def test_usage_error_exit_1(self, capsys):
        assert run(capsys, "nope")[0] == EXIT_USAGE
        assert run(capsys)[0] == EXIT_USAGE
        assert run(capsys, "c", "1")[0] == EXIT_USAGE

    def test_invalid_spec_file(self, capsys, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text(json.dumps({"kind": "custom", "types": [{"p": 2, "a": 4, "t": 3}]}))
        code, _, err = run(capsys, "c", "1", "2", "--system", str(bad))
        assert code == EXIT_USAGE
        assert "does not divide" in err

    def test_custom_spec_file_works(self, capsys, tmp_path):
        spec = tmp_path / "mix2.json"
        spec.write_text(json.dumps({
            "kind": "custom",
            "default": "dirichlet-default",
            "a_max": 16,
            "types": [{"p": 2, "a": a, "t": a} for a in range(1, 17)],
        }))
        code, out, _ = run(capsys, "c", "2", "4", "--system", str(spec),
                           "--route", "all", "--format", "csv")
        assert code == EXIT_OK
        assert out.splitlines()[1].split(",")[2] == "-1"

    def test_env_format_override(self, capsys, monkeypatch):
        monkeypatch.setenv("RAMLAB_FORMAT", "json")
        code, out, _ = run(capsys, "c", "1", "1")
        assert code == EXIT_OK
        assert json.loads(out)["value"] == 1

    def test_output_file(self, capsys, tmp_path):
        dest = tmp_path / "out.csv"
        code, out, _ = run(capsys, "table", "--what", "phiA", "--rmax", "3",
                           "--format", "csv", "-o", str(dest))
        assert code == EXIT_OK
        assert out == ""
        assert dest.read_text().splitlines()[0] == "r,value"

    def test_expansion(self, capsys):
        code, out, _ = run(capsys, "expansion", "6", "--terms", "100000",
                           "--format", "json")
        assert code == EXIT_OK
        obj = json.loads(out)
        assert float(obj["target"]) == 2.0
        assert float(obj["abs_error"]) < 2e-3

    def test_expansion_single_term(self, capsys):
        code, out, _ = run(capsys, "expansion", "1", "--terms", "1", "--format", "json")
        obj = json.loads(out)
        assert float(obj["truncated"]) == pytest.approx(1.6449340668, abs=1e-6)

    def test_determinism(self, capsys):
        out1 = run(capsys, "verify", "prop1", "--rmax", "8", "--xmax", "100",
                   "--format", "json")[1]
        out2 = run(capsys, "verify", "prop1", "--rmax", "8", "--xmax", "100",
                   "--format", "json")[1]
        assert out1 == out2
