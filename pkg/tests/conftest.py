import pytest

_ACCEPTANCE: dict[int, tuple[str, bool, str]] = {}


class Recorder:
    """Collects one verdict per acceptance criterion for the terminal summary."""

    def __call__(self, index: int, label: str, passed: bool, detail: str = "") -> None:
        _ACCEPTANCE[index] = (label, bool(passed), detail)
        line = _format(index, label, bool(passed), detail)
        print(line)
        assert passed, line


def _format(index, label, passed, detail):
    return f"acceptance {index:02d} {label}: {'PASS' if passed else 'FAIL'}  {detail}".rstrip()


@pytest.fixture(scope="session")
def record():
    return Recorder()


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for index in sorted(_ACCEPTANCE):
        terminalreporter.write_line(_format(index, *_ACCEPTANCE[index]))
