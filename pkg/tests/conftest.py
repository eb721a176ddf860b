from pathlib import Path

import pytest

from longcycle.graph6 import parse_graph6, read_graph6

FIXTURES = Path(__file__).parent / "fixtures"


def load_fixture(n: int):
    with open(FIXTURES / f"two_connected_n{n}.g6") as fh:
        return [parse_graph6(text) for _, text in read_graph6(fh)]


@pytest.fixture(scope="session")
def fixture_graphs():
    return {n: load_fixture(n) for n in (8, 9)}
