import re

_CRITERION = re.compile(r"test_acceptance\.py::test_criterion_(\d+)_(\w+)")


def pytest_terminal_summary(terminalreporter):
    rows = []
    for outcome in ("passed", "failed", "error"):
        for report in terminalreporter.stats.get(outcome, []):
            if getattr(report, "when", "call") != "call" and outcome == "passed":
                continue
            m = _CRITERION.search(getattr(report, "nodeid", ""))
            if m:
                rows.append((int(m.group(1)), m.group(2), "PASS" if outcome == "passed" else "FAIL"))
    if not rows:
        return
    terminalreporter.section("acceptance criteria")
    for number, name, verdict in sorted(set(rows)):
        terminalreporter.write_line(f"criterion {number}: {verdict}  {name.replace('_', ' ')}")
