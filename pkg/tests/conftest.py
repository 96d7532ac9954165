import pytest

from activity_forge import Multigraph

_criteria = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, text): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is not None and report.when == "call":
        number, text = marker.args
        detail = getattr(item, "criterion_detail", "")
        _criteria.append((number, report.outcome, text, detail))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number, outcome, text, detail in sorted(_criteria, key=lambda c: str(c[0])):
        status = "PASS" if outcome == "passed" else "FAIL"
        line = f"[{status}] criterion {number}: {text}"
        if detail:
            line += f" ({detail})"
        terminalreporter.write_line(line)


@pytest.fixture
def detail(request):
    """Attach a short measurement to the acceptance summary line."""
    def set_detail(text):
        request.node.criterion_detail = text
    return set_detail


@pytest.fixture
def k3():
    # a = {0,1}, b = {1,2}, c = {0,2}
    return Multigraph.from_edges(3, [(0, 1), (1, 2), (0, 2)])


@pytest.fixture
def k2():
    return Multigraph.from_edges(2, [(0, 1)])


@pytest.fixture
def p3():
    return Multigraph.from_edges(3, [(0, 1), (1, 2)])


@pytest.fixture
def loop1():
    return Multigraph.from_edges(1, [(0, 0)])


@pytest.fixture
def two_k2():
    return Multigraph.from_edges(4, [(0, 1), (2, 3)])


@pytest.fixture
def star3():
    return Multigraph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
