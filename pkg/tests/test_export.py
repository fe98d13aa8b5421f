import json

from openpyxl import load_workbook

from models import CheckRecord
from service import export_services
from utils.bgg import cohomology
from utils.exactla import LinearMap
from utils.proxies import proxy_row


def halves():
    return LinearMap.from_rows([[1, "1/2"], [0, "-3/4"]])


class TestMatrices:
    def test_json_rationals(self):
        assert json.loads(export_services.matrix_to_json(halves())) == [["1", "1/2"], ["0", "-3/4"]]

    def test_csv_has_no_header_or_quotes(self):
        assert export_services.matrix_to_csv(halves()) == "1,1/2\n0,-3/4\n"

    def test_empty_csv(self):
        assert export_services.matrix_to_csv(LinearMap.zeros(0, 3)) == ""

    def test_sparse_entries(self):
        assert export_services.sparse_entries(halves()) == [[0, 0, "1"], [0, 1, "1/2"], [1, 1, "-3/4"]]


class TestComplexes:
    def test_describe(self):
        c = proxy_row(2, 0, 1).validate()
        doc = export_services.describe_complex(c, cohomology(c), degree=1)
        assert [s["dim"] for s in doc["spaces"]] == [3, 2, 0]
        assert doc["operators"][0]["shape"] == [2, 3]
        assert doc["dims"] == [1, 0, 0]
        assert doc["degree"] == 1
        assert "representatives" not in doc["cohomology"]

    def test_dumps_is_sorted(self):
        assert export_services.dumps({"b": 1, "a": [1, 2]}) == '{\n  "a": [\n    1,\n    2\n  ],\n  "b": 1\n}\n'


class TestReports:
    def test_records_frame(self):
        records = [CheckRecord(suite="lemma8", check="id1", case="hessian2d", passed=True),
                   CheckRecord(suite="lemma8", check="id2", case="hessian2d", passed=False, severity="warning")]
        frame = export_services.records_frame(records)
        assert list(frame[export_services.STATUS_COLUMN]) == ["PASS", "FAIL"]
        assert list(frame["SEVERITY"]) == ["error", "warning"]

    def test_summary_frame(self):
        records = [CheckRecord(suite="lemma8", check="id1", case="a", passed=True),
                   CheckRecord(suite="lemma8", check="id2", case="a", passed=False),
                   CheckRecord(suite="exactness", check="e", case="a", passed=False, severity="warning")]
        frame = export_services.summary_frame(records).set_index("SUITE")
        assert frame.loc["lemma8", "CHECKS"] == 2
        assert frame.loc["lemma8", "ERRORS"] == 1
        assert frame.loc["lemma8", export_services.STATUS_COLUMN] == "FAIL"
        assert frame.loc["exactness", "WARNINGS"] == 1
        assert frame.loc["exactness", export_services.STATUS_COLUMN] == "PASS"

    def test_workbook_styles(self, tmp_path):
        records = [CheckRecord(suite="s", check="c", case="x", passed=True),
                   CheckRecord(suite="s", check="c", case="y", passed=False)]
        path = export_services.write_workbook(str(tmp_path / "out" / "r.xlsx"),
                                              {"summary": export_services.summary_frame(records),
                                               "records": export_services.records_frame(records)})
        book = load_workbook(path)
        assert book.sheetnames == ["summary", "records"]
        assert book["summary"].freeze_panes == "A2"
        ws = book["records"]
        status = [c.value for c in ws[1]].index(export_services.STATUS_COLUMN) + 1
        assert ws.cell(row=1, column=1).font.bold
        assert ws.cell(row=2, column=status).fill.start_color.rgb.endswith("C6EFCE")
        assert ws.cell(row=3, column=status).fill.start_color.rgb.endswith("FFC7CE")

    def test_write_text_creates_folders(self, tmp_path):
        path = export_services.write_text(str(tmp_path / "a" / "b.txt"), "x\n")
        assert open(path, encoding="utf-8").read() == "x\n"
