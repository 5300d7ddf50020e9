from __future__ import annotations

from mcgjohnson import mcg


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """Global post-condition: b(J_n) = 0 for every J_n computed anywhere in the run."""
    bad = [entry for entry in mcg.B_AUDIT if not entry[2]]
    status = "PASS" if not bad else "FAIL"
    terminalreporter.write_line(
        f"criterion 10 (session audit): {status} - b(J_n) = 0 on all {len(mcg.B_AUDIT)} J_n values computed")
    if bad:
        terminalreporter.write_line(f"failing values: {bad[:5]}")


def pytest_sessionfinish(session, exitstatus):
    if any(not ok for _, _, ok in mcg.B_AUDIT):
        session.exitstatus = 1
