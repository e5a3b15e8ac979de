import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from goldenico import ExceptionalType, build_topology, exceptional_types  # noqa: E402


@pytest.fixture(scope="session")
def topo():
    return build_topology()


@pytest.fixture(scope="session")
def types():
    return exceptional_types()


@pytest.fixture(scope="session", params=list(ExceptionalType), ids=lambda t: f"T{t.value}")
def each_type(request, types):
    return request.param, types[request.param]


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(RESULTS, key=lambda s: s.split("criterion")[1]):
            terminalreporter.write_line(line)
