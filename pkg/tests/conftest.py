import hypothesis
import pytest

hypothesis.settings.register_profile("fast", max_examples=20)
hypothesis.settings.register_profile("default", max_examples=200, deadline=None)
hypothesis.settings.load_profile("default")

_acceptance = []


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(label): exit criterion, summarised at the end of the run")


def pytest_runtest_logreport(report):
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        label = report.user_properties and dict(report.user_properties).get("acceptance")
        if label:
            if report.nodeid.endswith("]"):
                label += " [" + report.nodeid.rsplit("[", 1)[1]
            _acceptance.append((label, report.outcome))


@pytest.fixture(autouse=True)
def _tag_acceptance(request, record_property):
    marker = request.node.get_closest_marker("acceptance")
    if marker:
        record_property("acceptance", marker.args[0])


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for label, outcome in _acceptance:
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {label}")
