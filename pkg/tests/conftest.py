import itertools

import pytest

from queendom.board import BoardSpec


def brute_attacks(p, q):
    """Plain re-statement of the queen move used as a test oracle."""
    steps = {abs(a - b) for a, b in zip(p, q)} - {0}
    return len(steps) == 1


def brute_neighbourhood(n, c, dim=3):
    return {v for v in itertools.product(range(n), repeat=dim) if v == c or brute_attacks(c, v)}


@pytest.fixture(params=[4, 5, 6])
def spec3(request):
    return BoardSpec(3, request.param)


_acceptance_lines: list[str] = []


@pytest.fixture
def report(request):
    """Record one PASS/FAIL line for an acceptance criterion.

    The line is printed immediately and repeated in the terminal summary so it
    survives output capture.
    """
    state = {}

    def record(number, detail=""):
        state["number"], state["detail"] = number, detail

    yield record
    rep = getattr(request.node, "rep_call", None)
    ok = rep is not None and rep.passed
    line = f"criterion {state.get('number', '?')}: {'PASS' if ok else 'FAIL'} {state.get('detail', '')}".rstrip()
    print(line)
    _acceptance_lines.append(line)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_acceptance_lines, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
