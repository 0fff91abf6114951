"""Prints one pass/fail line per acceptance criterion after the run."""

ACCEPTANCE_FILE = "test_acceptance.py"


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    rows = []
    for outcome in ("passed", "failed", "error"):
        for report in terminalreporter.stats.get(outcome, []):
            nodeid = getattr(report, "nodeid", "")
            if ACCEPTANCE_FILE not in nodeid or getattr(report, "when", "call") != "call":
                continue
            name = nodeid.split("::")[-1]
            rows.append((name, outcome))
    if not rows:
        return
    rows.sort()
    terminalreporter.write_sep("=", "acceptance criteria")
    for name, outcome in rows:
        label = name.replace("test_", "").replace("_", " ")
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{label:<58s} {status}")
