import pytest

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def criterion():
    """Record one acceptance line, then assert."""

    def record(number: int, title: str, ok: bool, detail: str = "") -> None:
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {number:2d}: {title}"
        if detail:
            line += f" ({detail})"
        ACCEPTANCE_LINES.append(line)
        assert ok, line

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split("criterion")[1].split(":")[0])):
            terminalreporter.write_line(line)
