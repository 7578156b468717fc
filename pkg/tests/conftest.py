import pytest

from paritysolve.families import gen_solitaire, gen_weak, gen_whitegame

_criteria: dict[int, tuple[bool, str]] = {}


@pytest.fixture
def criterion():
    """Record one pass/fail line per acceptance criterion for the summary."""

    def record(number: int, passed: bool, detail: str):
        _criteria[number] = (passed, detail)
        print(f"CRITERION {number}: {'PASS' if passed else 'FAIL'} - {detail}")

    return record


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        passed, detail = _criteria[number]
        terminalreporter.write_line(
            f"CRITERION {number}: {'PASS' if passed else 'FAIL'} - {detail}"
        )


@pytest.fixture
def s3():
    return gen_solitaire(3)


@pytest.fixture
def w4():
    return gen_weak(4)


@pytest.fixture
def h4():
    return gen_whitegame(4)
