"""Prints one PASS/FAIL line per acceptance test at the end of the run."""


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    rows = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            if getattr(rep, "when", "call") != "call":
                continue
            if "test_acceptance.py" in rep.nodeid:
                rows.append(rep)
    if not rows:
        return
    terminalreporter.section("acceptance criteria")
    for rep in sorted(rows, key=lambda r: r.nodeid):
        name = rep.nodeid.split("::")[-1]
        word = "PASS" if rep.passed else "FAIL"
        terminalreporter.write_line(f"{name}: {word} ({rep.duration:.2f}s)")
