"""Collects the per-criterion verdicts of test_acceptance.py into one summary block."""

_VERDICTS = {}


def pytest_runtest_logreport(report):
    if report.when != "call":
        return
    for name, value in report.user_properties:
        if name == "criterion":
            number, detail = value
            _VERDICTS[number] = ("PASS" if report.passed else "FAIL", detail)


def pytest_terminal_summary(terminalreporter):
    if not _VERDICTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_VERDICTS):
        status, detail = _VERDICTS[number]
        terminalreporter.write_line(f"criterion {number:2d}: {status}  {detail}")
