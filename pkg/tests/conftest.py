import mpmath
import pytest

mpmath.mp.dps = 30


@pytest.fixture(scope="session")
def mp():
    """mpmath at 30 digits; the independent high-precision oracle."""
    return mpmath


def rel(x, y):
    return abs(x - y) / max(1.0, abs(y))


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def acceptance():
    """Record one pass/fail line per acceptance criterion."""

    def record(label: str, passed: bool, detail: str) -> None:
        line = f"{'PASS' if passed else 'FAIL'}  {label}: {detail}"
        ACCEPTANCE_LINES.append(line)
        print(line)
        assert passed, line

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
