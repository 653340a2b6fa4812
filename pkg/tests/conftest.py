import numpy as np
import pytest

from polylandau.radii import F1, F2, F3

_ACCEPTANCE_LINES: list[str] = []


def random_params(kind, count=50, seed=2024):
    """Seeded valid parameter sets with orders 1..5."""
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        m = int(rng.integers(1, 6))
        tail = tuple(float(v) for v in rng.uniform(0, 3, m - 1))
        if kind == "f1":
            out.append(F1(float(rng.uniform(1.05, 10)), tail))
        elif kind == "f2":
            out.append(F2(float(rng.uniform(1.05, 5)), tail))
        else:
            out.append(F3(float(rng.uniform(1.05, 10)), tail))
    return out


@pytest.fixture
def criterion():
    """Record one PASS/FAIL line per acceptance criterion, then assert it."""

    def record(label, ok, detail=""):
        _ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'}  {label}  {detail}".rstrip())
        assert ok, f"{label}: {detail}"

    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
