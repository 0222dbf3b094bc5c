from __future__ import annotations


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            nodeid = getattr(rep, "nodeid", "")
            if "test_acceptance.py::test_criterion_" in nodeid and rep.when == "call":
                name = nodeid.split("::")[-1][len("test_criterion_"):]
                number = int(name.split("_")[0])
                lines.append((number, f"criterion {name}: {'PASS' if outcome == 'passed' else 'FAIL'}"))
    if lines:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(lines):
            terminalreporter.write_line(line)
