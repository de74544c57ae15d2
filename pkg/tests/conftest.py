import pytest

from bifree.errors import NotDivisible

# criterion number -> (description, [outcomes])
CRITERIA = {}
_unexpected = []
_current = {"allowed": False, "nodeid": None}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, text): acceptance criterion n")
    config.addinivalue_line(
        "markers", "provokes_not_divisible: test raises NotDivisible on purpose")

    original = NotDivisible.__init__

    def counting_init(self, *args, **kwargs):
        if not _current["allowed"]:
            _unexpected.append(_current["nodeid"])
        original(self, *args, **kwargs)

    NotDivisible.__init__ = counting_init


def unexpected_not_divisible():
    """NodeIds of tests in which ``NotDivisible`` was raised unexpectedly."""
    return list(_unexpected)


@pytest.hookimpl(wrapper=True)
def pytest_runtest_call(item):
    _current["allowed"] = item.get_closest_marker("provokes_not_divisible") is not None
    _current["nodeid"] = item.nodeid
    try:
        return (yield)
    finally:
        _current["allowed"] = False


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    for key, value in report.user_properties:
        if key == "criterion":
            n, text = value
            CRITERIA.setdefault(n, (text, []))[1].append(report.passed)


def pytest_runtest_setup(item):
    mark = item.get_closest_marker("criterion")
    if mark is not None:
        item.user_properties.append(("criterion", tuple(mark.args)))


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(CRITERIA):
        text, outcomes = CRITERIA[n]
        ok = outcomes and all(outcomes)
        if n == 5 and _unexpected:
            # divisibility must hold in every suite, not only this one
            ok = False
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"criterion {n}: {status}  {text}")
    if _unexpected:
        terminalreporter.write_line(
            f"NotDivisible raised unexpectedly in: {sorted(set(map(str, _unexpected)))}")
