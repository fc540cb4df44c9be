import pytest

_CRITERIA: list[tuple[int, str, bool, str]] = []


class CriterionRecorder:
    def __init__(self, number: int, title: str) -> None:
        self.number = number
        self.title = title
        self.detail = ""

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc, tb):
        ok = exc_type is None
        line = f"criterion {self.number:>2} {'PASS' if ok else 'FAIL'}  {self.title}"
        if self.detail:
            line += f"  ({self.detail})"
        print(line)
        _CRITERIA.append((self.number, self.title, ok, self.detail))
        return False


@pytest.fixture
def criterion():
    return CriterionRecorder


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, ok, detail in sorted(_CRITERIA):
        status = "PASS" if ok else "FAIL"
        extra = f"  ({detail})" if detail else ""
        terminalreporter.write_line(f"criterion {number:>2} {status}  {title}{extra}")
