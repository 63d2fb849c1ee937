import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from sgsr.catalog import build_catalog  # noqa: E402

ROOT = Path(__file__).resolve().parents[1]
CENSUS = ROOT / "census"


@pytest.fixture(scope="session")
def catalog():
    return {e.name: e for e in build_catalog()}


@pytest.fixture(scope="session")
def census_dir() -> Path:
    return CENSUS


@pytest.fixture(scope="session")
def regular_12_5():
    """All connected 5-regular graphs on 12 vertices, generated once per session.

    Returns ``(graphs, seconds)`` so callers can account for the generation time.
    """
    from sgsr.generate import gen_regular

    t0 = time.monotonic()
    graphs = list(gen_regular(12, 5))
    return graphs, time.monotonic() - t0


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def criterion(request):
    """Record one pass/fail line per acceptance criterion, printed in the summary."""
    state = {"label": request.node.name, "detail": ""}
    yield state
    failed = getattr(request.node, "rep_call", None)
    ok = failed is not None and failed.passed
    ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'}  {state['label']}  {state['detail']}".rstrip())


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
