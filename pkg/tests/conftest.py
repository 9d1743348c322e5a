from __future__ import annotations

import pytest

from packcrit.enumeration import representatives
from packcrit.graphs import is_connected


@pytest.fixture
def acceptance_report(request):
    """Reporter that writes pass/fail lines to the live terminal, visible
    even under pytest's output capture."""
    reporter = request.config.pluginmanager.getplugin("terminalreporter")

    def _report(line: str) -> None:
        if reporter is not None:
            reporter.ensure_newline()
            reporter.write_line(line)
        else:
            print(line)

    return _report


@pytest.fixture(scope="session")
def connected_upto_7():
    out = []
    for n in range(1, 8):
        out.extend(g for g in representatives("all", n) if is_connected(g))
    return out


@pytest.fixture(scope="session")
def all_graphs_upto_6():
    out = []
    for n in range(1, 7):
        out.extend(representatives("all", n))
    return out


@pytest.fixture(scope="session")
def cacti_upto_10():
    out = []
    for n in range(1, 11):
        out.extend(representatives("cactus", n))
    return out
