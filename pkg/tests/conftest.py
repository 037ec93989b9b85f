from pathlib import Path

import pytest

from roughluk.approximation import ObjectSet
from roughluk.info_table import Partition

DATA = Path(__file__).parent / "data"

ACCEPTANCE_RESULTS: dict[str, str] = {}


@pytest.fixture
def fixture_partition() -> Partition:
    return Partition.from_blocks(list("12345"), [["1", "2"], ["3"], ["4", "5"]])


@pytest.fixture
def S(fixture_partition):
    def make(*members):
        return ObjectSet.of(fixture_partition.universe, members)
    return make


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS, key=lambda k: int(k.split()[0])):
        terminalreporter.write_line(f"criterion {key}: {ACCEPTANCE_RESULTS[key]}")
