import json

import pytest
from openpyxl import load_workbook

import constants.constants as constants
from cli import run_cli
from tests.test_verifier import small_config


def read_json(path):
    with open(path, encoding="utf-8") as f:
        return json.load(f)


class TestDerive:
    def test_named_json(self, tmp_path):
        out = tmp_path / "elasticity.json"
        code = run_cli(["derive", "--named", "elasticity3d", "--degree", "4", "--format", "json", "--out", str(out)])
        assert code == constants.EXIT_OK
        doc = read_json(out)
        assert doc["dims"] == [6, 0, 0, 0]
        assert doc["degree"] == 4
        assert [s["label"] for s in doc["spaces"]] == ["P4⊗V", "P3⊗S", "P1⊗S", "P0⊗V"]
        assert [op["order"] for op in doc["operators"]] == [1, 2, 1]

    def test_family(self, tmp_path):
        out = tmp_path / "family.json"
        assert run_cli(["derive", "--family", "altij", "--dim", "3", "--J", "1", "--degree", "4",
                        "--out", str(out)]) == 0
        assert read_json(out)["dims"] == [6, 0, 0, 0]

    def test_deterministic_bytes(self, tmp_path):
        paths = [tmp_path / "a.json", tmp_path / "b.json"]
        for path in paths:
            run_cli(["derive", "--named", "hessian2d", "--degree", "3", "--out", str(path)])
        assert paths[0].read_bytes() == paths[1].read_bytes()

    def test_rejected_diagram(self, capsys):
        assert run_cli(["derive", "--named", "conformal2d_fail", "--degree", "4"]) == constants.EXIT_USAGE
        assert capsys.readouterr().err.startswith("NoValidJ: ")

    def test_pretty_to_stdout(self, capsys):
        assert run_cli(["derive", "--family", "derham", "--dim", "2", "--degree", "2", "--format", "pretty"]) == 0
        out = capsys.readouterr().out
        assert "dim_h" in out.splitlines()[0]

    def test_csv(self, tmp_path):
        out = tmp_path / "h.csv"
        assert run_cli(["derive", "--named", "gradrot2d", "--degree", "3", "--format", "csv", "--out", str(out)]) == 0
        lines = out.read_text(encoding="utf-8").splitlines()
        assert lines[0] == "index,space,fiber_dim,dim,dim_ker,rank_prev,dim_h"
        assert len(lines) == 5
        assert lines[2].endswith(",1")

    def test_xlsx(self, tmp_path):
        out = tmp_path / "h.xlsx"
        assert run_cli(["derive", "--named", "hessian2d", "--degree", "3", "--format", "xlsx", "--out", str(out)]) == 0
        ws = load_workbook(out)["cohomology"]
        assert ws.cell(row=1, column=1).value == "index"
        assert ws.cell(row=1, column=1).fill.start_color.rgb.endswith("4472C4")


class TestUsageErrors:
    @pytest.mark.parametrize("argv", [
        ["derive"],
        ["derive", "--named", "hessian3d", "--family", "altij", "--dim", "3"],
        ["derive", "--named", "momentum3d"],
        ["derive", "--named", "hessian3d", "--dim", "2"],
        ["derive", "--family", "derham", "--dim", "4"],
        ["derive", "--family", "altij", "--dim", "7"],
        ["derive", "--family", "altij", "--dim", "3", "--J", "3"],
        ["derive", "--named", "hessian3d", "--degree", "-1"],
        ["derive", "--named", "hessian3d", "--format", "xlsx"],
        ["verify", "--jobs", "0"],
        ["frobnicate"],
    ])
    def test_exit_two(self, argv, capsys):
        assert run_cli(argv) == constants.EXIT_USAGE

    def test_validation_message(self, capsys):
        run_cli(["derive", "--named", "momentum3d"])
        assert capsys.readouterr().err.startswith("ValidationError: ")


class TestMatrix:
    def test_grad_on_linears(self, capsys):
        assert run_cli(["matrix", "--family", "derham", "--dim", "3", "--degree", "1", "--operator", "0"]) == 0
        rows = json.loads(capsys.readouterr().out)
        assert len(rows) == 3
        assert all(len(row) == 4 for row in rows)
        assert sum(v != "0" for row in rows for v in row) == 3

    @pytest.mark.slow
    def test_inc_csv(self, tmp_path):
        out = tmp_path / "inc.csv"
        code = run_cli(["matrix", "--named", "elasticity3d", "--degree", "5", "--operator", "1",
                        "--format", "csv", "--out", str(out)])
        assert code == 0
        lines = out.read_text(encoding="utf-8").splitlines()
        assert len(lines) == 60
        assert all(len(line.split(",")) == 210 for line in lines)
        assert '"' not in lines[0]

    def test_operator_out_of_range(self, capsys):
        assert run_cli(["matrix", "--named", "elasticity3d", "--degree", "4", "--operator", "7"]) == 2
        assert "no operator 7" in capsys.readouterr().err

    def test_needs_operator(self):
        assert run_cli(["matrix", "--named", "elasticity3d"]) == constants.EXIT_USAGE


class TestVerify:
    def test_suite_report(self, tmp_path):
        out = tmp_path / "report.json"
        code = run_cli(["verify", "--suite", "appendix1", "--max-dim", "3",
                        "--config", small_config(tmp_path), "--out", str(out)])
        assert code == constants.EXIT_OK
        report = read_json(out)
        assert report["summary"]["errors"] == 0
        assert report["summary"]["by_suite"] == {"appendix1": report["summary"]["total"]}
        assert {r["case"] for r in report["records"]} == {"n=1", "n=2", "n=3"}

    def test_projection_for_one_name(self, tmp_path):
        out = tmp_path / "report.json"
        code = run_cli(["verify", "--suite", "projection", "--named", "elasticity2d", "--degree", "4",
                        "--config", small_config(tmp_path), "--out", str(out)])
        assert code == 0
        assert {r["case"] for r in read_json(out)["records"]} == {"elasticity2d"}

    def test_failure_exits_one(self, tmp_path):
        golden = tmp_path / "golden.json"
        golden.write_text(json.dumps({"family": {}, "named": {
            "hessian2d": {"J": 0, "cohomology": [1, 0, 0], "fiber_dims": [1, 3, 2]}}, "rejected": {}}),
            encoding="utf-8")
        config = small_config(tmp_path, dimension={"golden_path": str(golden), "family_dims": [],
                                                   "certificate": False})
        code = run_cli(["verify", "--suite", "dimension", "--named", "hessian2d", "--degree", "3",
                        "--config", config, "--format", "pretty"])
        assert code == constants.EXIT_CHECK_FAILED

    def test_xlsx_report(self, tmp_path):
        out = tmp_path / "report.xlsx"
        code = run_cli(["verify", "--suite", "exactness", "--config", small_config(tmp_path),
                        "--format", "xlsx", "--out", str(out)])
        assert code == 0
        book = load_workbook(out)
        assert book.sheetnames == ["summary", "records"]
        assert book["summary"].cell(row=2, column=1).value == "exactness"
        ws = book["records"]
        header = [c.value for c in ws[1]]
        status = header.index("STATUS") + 1
        assert ws.cell(row=2, column=status).value == "PASS"
        assert ws.cell(row=2, column=status).fill.start_color.rgb.endswith("C6EFCE")
