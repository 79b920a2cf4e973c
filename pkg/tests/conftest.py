import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

# criterion number -> (title, list of (test name, outcome, note))
_CRITERIA = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion covered by the test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or not (rep.when == "call" or rep.outcome == "failed" or hasattr(rep, "wasxfail")):
        return
    if rep.when == "setup" and rep.outcome == "passed":
        return
    number, title = marker.args
    if hasattr(rep, "wasxfail"):
        state, note = "xfail", rep.wasxfail
    else:
        state, note = rep.outcome, ""
    _CRITERIA.setdefault(number, (title, []))[1].append((item.name, state, note))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        title, results = _CRITERIA[number]
        bad = [r for r in results if r[1] != "passed"]
        status = "PASS" if not bad else "FAIL"
        line = f"{status}  criterion {number:>2}: {title}"
        if bad:
            line += "  [" + "; ".join(f"{name}: {state}{' - ' + note if note else ''}"
                                      for name, state, note in bad) + "]"
        terminalreporter.write_line(line)
