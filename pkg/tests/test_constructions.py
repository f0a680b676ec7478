"""Construction tests: polarity graphs, lifts, greedy packings."""

import pytest

from trace_turan import (
    FormatError,
    Graph,
    contains_c4,
    contains_trace,
    dumps_graph,
    greedy_lower_bound,
    lift_to_trace_free,
    loads_graph,
    polarity_graph,
)

from helpers import four_subset_has_c4


@pytest.mark.parametrize("q", [2, 3, 5])
def test_polarity_counts_and_c4_freeness(q):
    g = polarity_graph(q)
    assert g.n == q * q + q + 1
    assert g.edge_count == q * (q + 1) ** 2 // 2
    assert not four_subset_has_c4(g)
    assert not contains_c4(g)


@pytest.mark.parametrize("q", [4, 6, 1, 9])
def test_polarity_rejects_non_primes(q):
    with pytest.raises(ValueError):
        polarity_graph(q)


def test_lift_single_edge():
    h = lift_to_trace_free(Graph(2, [(0, 1)]))
    assert h.edges == ((0, 1, 2),)
    assert contains_trace(h, 2) is None


@pytest.mark.parametrize("q", [2, 3])
def test_lift_of_polarity_is_trace_free(q):
    g = polarity_graph(q)
    h = lift_to_trace_free(g)
    assert h.n == g.n + 1 and h.edge_count == g.edge_count
    assert contains_trace(h, 2) is None


def test_lift_of_4_cycle_contains_trace():
    c4 = Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    h = lift_to_trace_free(c4)
    assert contains_trace(h, 2) is not None


def test_greedy_reaches_known_maxima():
    assert greedy_lower_bound(4, 2, seed=0, restarts=8).edge_count == 4
    assert greedy_lower_bound(5, 3, seed=0, restarts=8).edge_count == 10


def test_greedy_is_maximal_and_trace_free():
    import itertools

    h = greedy_lower_bound(6, 2, seed=3, restarts=4)
    assert contains_trace(h, 2) is None
    from trace_turan import incremental_trace_check

    for e in itertools.combinations(range(6), 3):
        if e not in h:
            assert incremental_trace_check(h, e, 2) is not None


def test_greedy_never_exceeds_search_value(search_table):
    for (n, t), result in search_table.items():
        g = greedy_lower_bound(n, t, seed=1, restarts=8)
        assert g.edge_count <= result.value


def test_greedy_deterministic_per_seed():
    a = greedy_lower_bound(6, 2, seed=5, restarts=3)
    b = greedy_lower_bound(6, 2, seed=5, restarts=3)
    assert a.edges == b.edges


def test_graph_text_round_trip():
    g = Graph(4, [(3, 1), (0, 2)])
    text = dumps_graph(g)
    assert text == "4 2\n0 2\n1 3\n"
    assert dumps_graph(loads_graph(text)) == text


def test_graph_loads_rejects_malformed():
    with pytest.raises(FormatError):
        loads_graph("3 1\n0 0\n")
    with pytest.raises(FormatError):
        loads_graph("3 2\n0 1\n")
