"""Deterministic CSV tables and pass/fail check reports."""

from __future__ import annotations

from pathlib import Path
from typing import NamedTuple

import numpy as np


def format_value(value, digits: int = 12) -> str:
    """Render one CSV cell: ints plainly, floats in scientific notation.

    The same value and digits always produce the same bytes; strings pass
    through untouched but must not contain the separators themselves.
    """
    if isinstance(value, str):
        if "," in value or "\n" in value:
            raise ValueError(f"cell text may not contain ',' or newlines: {value!r}")
        return value
    if isinstance(value, (bool, np.bool_)):
        raise TypeError("boolean cells are ambiguous; format them explicitly")
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return f"{float(value):.{digits}e}"


def write_csv(path, header, rows, digits: int = 12) -> Path:
    """Write a UTF-8, LF-terminated CSV with a mandatory header line.

    Floats are rendered in scientific notation with the given digit count,
    so identical tables produce byte-identical files on every run. An empty
    row list still writes the header.
    """
    header = list(header)
    if not header:
        raise ValueError("a CSV needs at least one header column")
    lines = [",".join(str(name) for name in header)]
    for row in rows:
        cells = [format_value(cell, digits) for cell in row]
        if len(cells) != len(header):
            raise ValueError(f"row width {len(cells)} does not match header width {len(header)}")
        lines.append(",".join(cells))
    path = Path(path)
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        handle.write("\n".join(lines) + "\n")
    return path


class CheckResult(NamedTuple):
    """Outcome of one named consistency check."""

    name: str
    passed: bool
    residual: float

    def line(self, digits: int = 12) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        return f"CHECK {self.name}: {verdict} (residual={self.residual:.{digits}e})"


def check(name: str, residual: float, limit: float) -> CheckResult:
    """A CheckResult that passes when |residual| <= limit."""
    return CheckResult(name=name, passed=abs(residual) <= limit, residual=float(residual))


def render_report(title: str, checks, digits: int = 12) -> str:
    """Multi-line report: a title, one line per check, and a verdict."""
    lines = [title]
    lines += [c.line(digits) for c in checks]
    failed = [c.name for c in checks if not c.passed]
    lines.append(
        "all checks passed" if not failed else f"failed checks: {', '.join(failed)}"
    )
    return "\n".join(lines)


def all_passed(checks) -> bool:
    return all(c.passed for c in checks)
