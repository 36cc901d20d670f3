from collections import defaultdict

import pytest

ACCEPTANCE = defaultdict(list)


@pytest.fixture
def criterion():
    """Record an acceptance outcome: criterion(label, case, ok, detail)."""

    def record(label, case, ok, detail=""):
        ACCEPTANCE[label].append((case, ok, detail))
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(ACCEPTANCE):
        cases = ACCEPTANCE[label]
        bad = [(c, d) for c, ok, d in cases if not ok]
        status = "PASS" if not bad else "FAIL"
        line = f"{status}  {label}  ({len(cases) - len(bad)}/{len(cases)} cases)"
        for case, detail in bad:
            line += f"\n        failed {case}: {detail}"
        terminalreporter.write_line(line)
