import sys
from importlib import resources
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from pathsheaf import DistancePathSheaf, PathSheaf  # noqa: E402
from pathsheaf.formats import parse_graph, parse_section  # noqa: E402

FIXTURES = resources.files("pathsheaf") / "fixtures"


def fixture_text(name: str) -> str:
    return (FIXTURES / name).read_text()


@pytest.fixture
def ladder():
    return parse_graph(fixture_text("ladder.graph"))


@pytest.fixture
def heavy_ladder():
    return parse_graph(fixture_text("ladder_heavy.graph"))


@pytest.fixture
def disconnected():
    return parse_graph(fixture_text("disconnected.graph"))


@pytest.fixture
def ps(ladder):
    return PathSheaf(ladder)


@pytest.fixture
def dps(ladder):
    return DistancePathSheaf(ladder)


@pytest.fixture
def s1(ps):
    return parse_section(fixture_text("ladder_s1.section"), ps)


@pytest.fixture
def s2(ps):
    return parse_section(fixture_text("ladder_s2.section"), ps)


# -- acceptance report ----------------------------------------------------------

_REPORT: list[str] = []


@pytest.fixture
def report():
    def record(number: int, passed: bool, detail: str) -> None:
        _REPORT.append(f"[{'PASS' if passed else 'FAIL'}] criterion {number:2d}: {detail}")
        print(_REPORT[-1])

    return record


def pytest_terminal_summary(terminalreporter):
    if _REPORT:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_REPORT, key=lambda s: int(s.split("criterion")[1].split(":")[0])):
            terminalreporter.write_line(line)
