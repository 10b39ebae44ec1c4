import itertools

import pytest


def brute_force_derangements(spec):
    """Independent oracle: dedupe all permutations of labelled letters."""
    letters = [i for i, n in enumerate(spec) for _ in range(n)]
    return sum(
        1
        for arrangement in set(itertools.permutations(letters))
        if all(a != b for a, b in zip(arrangement, letters))
    )


@pytest.fixture
def brute():
    return brute_force_derangements


_ACCEPTANCE = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if report.when == "call" and item.module.__name__.endswith("test_acceptance"):
        title = (item.function.__doc__ or item.name).strip().splitlines()[0]
        _ACCEPTANCE.append((report.passed, title, report.duration))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for passed, title, duration in _ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {title}  ({duration:.2f}s)")
