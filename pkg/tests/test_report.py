import numpy as np
import pytest

from boxmode import CheckResult, render_report, write_csv
from boxmode.report import all_passed, check, format_value


def test_format_int_stays_plain():
    assert format_value(42) == "42"
    assert format_value(np.int64(-3)) == "-3"


def test_format_float_uses_scientific():
    assert format_value(1.0, digits=3) == "1.000e+00"
    assert format_value(np.pi, digits=12) == "3.141592653590e+00"
    assert format_value(-1.5e-11, digits=2) == "-1.50e-11"


def test_format_string_passthrough():
    assert format_value("flux_ratio") == "flux_ratio"
    with pytest.raises(ValueError):
        format_value("a,b")
    with pytest.raises(ValueError):
        format_value("two\nlines")


def test_format_rejects_bool():
    with pytest.raises(TypeError):
        format_value(True)


def test_write_csv_layout(tmp_path):
    path = write_csv(
        tmp_path / "t.csv", ("n", "value"), [(1, 0.5), (2, 0.25)], digits=3
    )
    text = path.read_text(encoding="utf-8")
    assert text == "n,value\n1,5.000e-01\n2,2.500e-01\n"


def test_write_csv_empty_table_keeps_header(tmp_path):
    path = write_csv(tmp_path / "empty.csv", ("a", "b"), [])
    assert path.read_text(encoding="utf-8") == "a,b\n"


def test_write_csv_rejects_ragged_rows(tmp_path):
    with pytest.raises(ValueError):
        write_csv(tmp_path / "bad.csv", ("a", "b"), [(1, 2, 3)])


def test_write_csv_is_deterministic(tmp_path):
    rows = [(k, np.sqrt(k)) for k in range(1, 40)]
    first = write_csv(tmp_path / "one.csv", ("k", "root"), rows).read_bytes()
    second = write_csv(tmp_path / "two.csv", ("k", "root"), rows).read_bytes()
    assert first == second


def test_check_lines():
    good = check("unitarity", residual=1e-14, limit=1e-9)
    bad = check("unitarity", residual=1e-3, limit=1e-9)
    assert good.passed and not bad.passed
    assert good.line(digits=3) == "CHECK unitarity: PASS (residual=1.000e-14)"
    assert bad.line(digits=3).startswith("CHECK unitarity: FAIL")


def test_render_report_and_all_passed():
    checks = [
        CheckResult(name="one", passed=True, residual=0.0),
        CheckResult(name="two", passed=False, residual=2.0),
    ]
    text = render_report("demo", checks, digits=2)
    assert text.splitlines()[0] == "demo"
    assert "CHECK two: FAIL" in text
    assert not all_passed(checks)
    assert all_passed(checks[:1])
