import pytest

from bettycone.diagram import BettiDiagram

# Known generator bidegrees of the two resolutions of type (2, 3).
EQUIVARIANT_23 = [
    [(2, 0), (1, 1), (0, 2)],
    [(4, 0), (3, 1), (2, 2), (1, 3), (0, 4)],
    [(4, 3), (3, 4)],
]
MONOMIAL_QUOTIENT_23 = [
    [(4, 0), (2, 2), (0, 4)],
    [(6, 0), (4, 2), (3, 3), (2, 4), (0, 6)],
    [(6, 3), (3, 6)],
]
# Tridegrees of the equivariant resolution of type (1, 2, 1).
EQUIVARIANT_121 = [
    [(1, 0, 0), (0, 1, 0), (0, 0, 1)],
    [(2, 0, 0), (0, 2, 0), (0, 0, 2), (1, 1, 0), (1, 0, 1), (0, 1, 1)],
    [(2, 1, 1), (1, 2, 1), (1, 1, 2), (2, 2, 0), (2, 0, 2), (0, 2, 2)],
    [(2, 2, 1), (2, 1, 2), (1, 2, 2)],
]


@pytest.fixture
def e23():
    return BettiDiagram.from_generators(EQUIVARIANT_23)


@pytest.fixture
def bs23():
    return BettiDiagram.from_generators(MONOMIAL_QUOTIENT_23)


@pytest.fixture
def e121():
    return BettiDiagram.from_generators(EQUIVARIANT_121)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, name): acceptance criterion")
    config._criteria = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is not None and (report.when == "call" or report.failed):
        item.config._criteria.append((marker.args[0], marker.args[1], report.outcome))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not config._criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number, name, outcome in sorted(config._criteria):
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"[{verdict}] criterion {number}: {name}")
