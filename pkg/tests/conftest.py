import pytest

# criterion number -> list of (case label, passed)
_ACCEPTANCE: dict[int, list[tuple[str, bool]]] = {}


@pytest.fixture
def record():
    def _record(criterion: int, label: str, passed: bool) -> None:
        _ACCEPTANCE.setdefault(criterion, []).append((label, passed))
        print(f"criterion {criterion} [{label}]: {'PASS' if passed else 'FAIL'}")
    return _record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for crit in sorted(_ACCEPTANCE):
        cases = _ACCEPTANCE[crit]
        failed = [label for label, ok in cases if not ok]
        status = "PASS" if not failed else "FAIL"
        detail = f"{len(cases) - len(failed)}/{len(cases)} cases"
        if failed:
            detail += "; failing: " + ", ".join(failed)
        terminalreporter.write_line(f"criterion {crit}: {status} ({detail})")
