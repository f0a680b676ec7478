"""Shared fixtures: session-scoped exact values reused across test modules."""

import pytest

from trace_turan import turan_oracle, turan_search


@pytest.fixture(scope="session")
def oracle_table():
    """Exact values from the enumeration oracle for n <= 6, t in {2, 3}."""
    return {
        (n, t): turan_oracle(n, t)
        for t in (2, 3)
        for n in range(4, 7)
    }


@pytest.fixture(scope="session")
def search_table():
    """Exact values from the orderly search for n <= 6, t in {2, 3}."""
    return {
        (n, t): turan_search(n, t)
        for t in (2, 3)
        for n in range(4, 7)
    }
