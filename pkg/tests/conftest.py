import itertools

import numpy as np
import pytest

from sugeno_factor import Chain, ProductDomain, UtilityTable, hotel_maps, hotel_table


@pytest.fixture(scope="session")
def hotel():
    return hotel_table()


@pytest.fixture(scope="session")
def hotel_phis():
    return hotel_maps()


def table(shape, codomain_size, rows):
    """Build a table on numeric chains from a nested list indexed ``[x1][x2]...``."""
    domain = ProductDomain(tuple(Chain.numeric(s, name=f"x{i + 1}") for i, s in enumerate(shape)))
    return UtilityTable(domain, Chain.numeric(codomain_size), np.array(rows))


def all_tables(shape, codomain_size):
    domain = ProductDomain(tuple(Chain.numeric(s, name=f"x{i + 1}") for i, s in enumerate(shape)))
    codomain = Chain.numeric(codomain_size)
    size = int(np.prod(shape))
    for vals in itertools.product(range(codomain_size), repeat=size):
        yield UtilityTable(domain, codomain, np.array(vals).reshape(shape))


# two windows for x1 = 1 expose 1 and 2
TWO_WINDOW_ROWS = [[0, 0], [1, 2], [3, 3]]


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(RESULTS):
        terminalreporter.write_line(RESULTS[n])
