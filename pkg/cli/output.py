"""
Report emitters: a human table or a schema-stable JSON document.
"""

import json
from typing import Any, List

from verification.report import Report

# table cells longer than this are shortened
CELL_WIDTH = 72


def _cell(value: Any) -> str:
    text = value if isinstance(value, str) else json.dumps(value, ensure_ascii=False)
    if len(text) > CELL_WIDTH:
        text = text[:CELL_WIDTH - 3] + "..."
    return text


def _result_lines(result: Any) -> List[str]:
    if result is None:
        return []
    if not isinstance(result, dict):
        return [f"  {_cell(result)}"]
    width = max((len(str(k)) for k in result), default=0)
    return [f"  {str(key).ljust(width)}  {_cell(value)}" for key, value in result.items()]


def format_table(report: Report) -> str:
    lines = [f"command: {report.command}"]
    if report.params:
        lines.append("params:  " + " ".join(f"{k}={_cell(v)}" for k, v in report.params.items()))
    result_lines = _result_lines(report.result)
    if result_lines:
        lines.append("result:")
        lines.extend(result_lines)
    if report.checks:
        lines.append("checks:")
        for check in report.checks:
            status = "PASS" if check.passed else "FAIL"
            lines.append(f"  {status}  {check.name}")
            if not check.passed:
                lines.append(f"        expected {_cell(check.expected)}, got {_cell(check.actual)}")
        failed = sum(1 for c in report.checks if not c.passed)
        lines.append(f"  {len(report.checks) - failed}/{len(report.checks)} checks passed")
    lines.append(f"overall: {'PASS' if report.passed else 'FAIL'} ({report.elapsed_seconds:.2f}s)")
    return "\n".join(lines)


def format_json(report: Report) -> str:
    return json.dumps(report.to_json_dict(), indent=2, ensure_ascii=False)


def emit(report: Report, fmt: str = "table") -> str:
    """Render a report; ``fmt`` is "table" or "json"."""
    if fmt == "json":
        return format_json(report)
    return format_table(report)
