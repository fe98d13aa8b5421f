import csv
import json
import logging
import os

import pandas as pd
from openpyxl.styles import Alignment, Font, PatternFill

from utils.exactla import LinearMap, format_fraction

STATUS_COLUMN = "STATUS"


def matrix_rows(m: LinearMap) -> list:
    return [[format_fraction(v) for v in row] for row in m.to_dense()]


def matrix_to_json(m: LinearMap) -> str:
    return json.dumps(matrix_rows(m)) + "\n"


def matrix_to_csv(m: LinearMap) -> str:
    """Comma-separated "p/q" cells, no header, no quoting."""
    if not m.rows or not m.cols:
        return ""
    return pd.DataFrame(matrix_rows(m)).to_csv(index=False, header=False, quoting=csv.QUOTE_NONE,
                                              lineterminator="\n")


def sparse_entries(m: LinearMap) -> list:
    return [[i, j, format_fraction(v)] for i, j, v in m.nonzero()]


def describe_complex(c, report, **extra) -> dict:
    """JSON-ready description: spaces, operators in canonical coordinates and the cohomology table."""
    spaces = []
    for i, space in enumerate(c.spaces):
        spaces.append({"index": i, "label": space.label, "dim": space.dim, "fiber_dim": space.fiber_dim,
                       "cap": space.cap, "ambient_dim": space.ambient_dim})
    operators = []
    for i in range(len(c.spaces) - 1):
        m = c.coordinate_matrix(i)
        operators.append({"index": i, "order": c.orders[i], "shape": [m.rows, m.cols],
                          "entries": sparse_entries(m)})
    out = {"name": c.name, "spaces": spaces, "operators": operators,
           "cohomology": report.model_dump(), "dims": report.dims}
    out.update(extra)
    return out


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def cohomology_frame(report) -> pd.DataFrame:
    return pd.DataFrame([e.model_dump() for e in report.entries],
                        columns=["index", "space", "fiber_dim", "dim", "dim_ker", "rank_prev", "dim_h"])


def records_frame(records) -> pd.DataFrame:
    rows = []
    for r in records:
        rows.append({"SUITE": r.suite, "CHECK": r.check, "CASE": r.case, "INDEX": r.index,
                     "SEVERITY": r.severity, "MESSAGE": r.message,
                     STATUS_COLUMN: "PASS" if r.passed else "FAIL"})
    return pd.DataFrame(rows, columns=["SUITE", "CHECK", "CASE", "INDEX", "SEVERITY", "MESSAGE", STATUS_COLUMN])


def pretty(frame: pd.DataFrame) -> str:
    return frame.to_string(index=False) + "\n"


def write_text(path: str, text: str) -> str:
    folder = os.path.dirname(path)
    if folder:
        os.makedirs(folder, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="") as f:
        f.write(text)
    logging.info(f"wrote {path}")
    return path


# ── workbooks ─────────────────────────────────────────────────
HEADER_FILL = PatternFill(start_color='4472C4', end_color='4472C4', fill_type='solid')
HEADER_FONT = Font(bold=True, color='FFFFFF')
STATUS_STYLES = {
    "PASS": (PatternFill(start_color='C6EFCE', end_color='C6EFCE', fill_type='solid'),
             Font(bold=True, color='006100')),
    "FAIL": (PatternFill(start_color='FFC7CE', end_color='FFC7CE', fill_type='solid'),
             Font(bold=True, color='9C0006')),
}


def summary_frame(records) -> pd.DataFrame:
    """One row per suite: check counts and a suite-level STATUS (FAIL if any error-severity check failed)."""
    rows = {}
    for r in records:
        row = rows.setdefault(r.suite, {"SUITE": r.suite, "CHECKS": 0, "PASSED": 0, "ERRORS": 0, "WARNINGS": 0})
        row["CHECKS"] += 1
        if r.passed:
            row["PASSED"] += 1
        elif r.severity == "error":
            row["ERRORS"] += 1
        else:
            row["WARNINGS"] += 1
    for row in rows.values():
        row[STATUS_COLUMN] = "FAIL" if row["ERRORS"] else "PASS"
    return pd.DataFrame(list(rows.values()),
                        columns=["SUITE", "CHECKS", "PASSED", "ERRORS", "WARNINGS", STATUS_COLUMN])


def write_workbook(path: str, sheets: dict) -> str:
    """Write each frame to its own sheet, styled by `_style_sheet`."""
    folder = os.path.dirname(path)
    if folder:
        os.makedirs(folder, exist_ok=True)
    with pd.ExcelWriter(path, engine='openpyxl') as writer:
        for sheet_name, df in sheets.items():
            df.to_excel(writer, sheet_name=sheet_name[:31], index=False)
            _style_sheet(writer.book[sheet_name[:31]])
    logging.info(f"wrote {path} ({', '.join(sheets)})")
    return path


def _style_sheet(ws):
    for cell in ws[1]:
        cell.fill = HEADER_FILL
        cell.font = HEADER_FONT
        cell.alignment = Alignment(horizontal='center')
    ws.freeze_panes = "A2"

    for column in ws.columns:
        width = max(len(str(cell.value)) if cell.value is not None else 0 for cell in column)
        ws.column_dimensions[column[0].column_letter].width = min(width + 2, 60)

    status = [cell.column for cell in ws[1] if cell.value == STATUS_COLUMN]
    if not status:
        return
    for (cell,) in ws.iter_rows(min_row=2, min_col=status[0], max_col=status[0]):
        if cell.value in STATUS_STYLES:
            cell.fill, cell.font = STATUS_STYLES[cell.value]
