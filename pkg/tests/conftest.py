import pytest
from hypothesis import strategies as st

from multidom import PartitionSpec


def specs(max_k=5, max_size=6, min_k=2, min_size=1):
    """Strategy for small partition specs in arbitrary (unsorted) order."""
    return st.lists(
        st.integers(min_value=min_size, max_value=max_size), min_size=min_k, max_size=max_k
    ).map(lambda sizes: PartitionSpec(tuple(sizes)))


ACCEPTANCE_RESULTS: list[tuple[str, bool, str]] = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep
