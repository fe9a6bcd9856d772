"""Shared pytest configuration.

Each test in test_acceptance.py covers one numbered release criterion.
The terminal-summary hook prints a single PASS/FAIL line per criterion
so the outcome is readable at the end of a plain pytest run.
"""

_LABELS = {
    "passed": "PASS",
    "failed": "FAIL",
    "error": "ERROR",
    "xfailed": "XFAIL (documented reference-value defect)",
    "xpassed": "XPASS (unexpected)",
}


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = {}
    for status, label in _LABELS.items():
        for rep in terminalreporter.stats.get(status, []):
            nodeid = getattr(rep, "nodeid", "")
            if "test_acceptance.py" not in nodeid:
                continue
            lines[nodeid.split("::")[-1]] = label
    if not lines:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for name in sorted(lines):
        terminalreporter.write_line(f"{name}: {lines[name]}")
