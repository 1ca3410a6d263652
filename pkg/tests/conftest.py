import pytest

_ACCEPTANCE_LINES = []


@pytest.fixture
def criterion(request):
    """Record one PASS/FAIL line per acceptance criterion for the summary."""

    def record(label, checked, failures, elapsed=None, limit=None):
        ok = not failures and (limit is None or elapsed < limit)
        timing = f" in {elapsed:.1f}s" if elapsed is not None else ""
        if limit is not None:
            timing += f" (limit {limit}s)"
        line = (f"{'PASS' if ok else 'FAIL'}  {label}: checked={checked} "
                f"failures={len(failures)}{timing}")
        if failures:
            line += f"  first={failures[:3]}"
        _ACCEPTANCE_LINES.append(line)
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
