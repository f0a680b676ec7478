"""Canonical form tests, cross-validated against all-permutation minimization."""

import itertools
import random

from trace_turan import Hypergraph3, canonical_form, canonical_index_sequence, is_canonical_labeling
from trace_turan.indexing import edge_indices

from helpers import brute_force_min_index_sequence, random_hypergraph


def test_relabelled_single_edges_agree():
    a = Hypergraph3(4, [(0, 1, 2)])
    b = Hypergraph3(4, [(1, 2, 3)])
    assert canonical_form(a) == canonical_form(b)


def test_shared_pair_shapes_agree():
    a = Hypergraph3(4, [(0, 1, 2), (0, 1, 3)])
    b = Hypergraph3(4, [(0, 1, 2), (0, 2, 3)])
    assert canonical_form(a) == canonical_form(b)


def test_intersection_size_distinguishes():
    shared_pair = Hypergraph3(5, [(0, 1, 2), (0, 1, 3)])
    shared_vertex = Hypergraph3(5, [(0, 1, 2), (0, 3, 4)])
    assert canonical_form(shared_pair) != canonical_form(shared_vertex)


def test_empty_and_complete_are_cheap_fixed_points():
    empty = Hypergraph3(9)
    assert canonical_index_sequence(empty) == ()
    assert is_canonical_labeling(empty)
    comp = Hypergraph3(7, itertools.combinations(range(7), 3))
    assert is_canonical_labeling(comp)
    assert canonical_index_sequence(comp) == edge_indices(comp.edges)


def test_matches_brute_force_on_random_instances():
    rng = random.Random(99)
    for _ in range(120):
        n = rng.randint(3, 6)
        h = random_hypergraph(n, rng.choice([0.15, 0.3, 0.5]), rng)
        assert canonical_index_sequence(h) == brute_force_min_index_sequence(h)


def test_matches_brute_force_n7():
    rng = random.Random(4)
    for _ in range(6):
        h = random_hypergraph(7, 0.25, rng)
        assert canonical_index_sequence(h) == brute_force_min_index_sequence(h)


def test_matches_brute_force_n8():
    rng = random.Random(42)
    for density in (0.1, 0.2, 0.35):
        h = random_hypergraph(8, density, rng)
        assert canonical_index_sequence(h) == brute_force_min_index_sequence(h)


def test_isomorphic_relabelings_share_form():
    rng = random.Random(17)
    for _ in range(60):
        n = rng.randint(4, 7)
        h = random_hypergraph(n, 0.3, rng)
        perm = list(range(n))
        rng.shuffle(perm)
        relabeled = Hypergraph3(n, [tuple(sorted(perm[v] for v in e)) for e in h.edges])
        assert canonical_form(h) == canonical_form(relabeled)


def test_is_canonical_labeling_consistent_with_sequence():
    rng = random.Random(23)
    for _ in range(80):
        h = random_hypergraph(6, 0.3, rng)
        own = edge_indices(h.edges)
        assert is_canonical_labeling(h) == (own == canonical_index_sequence(h))


def test_canonical_parent_property():
    # dropping the largest edge of a canonical sequence stays canonical;
    # this is what makes the orderly search complete
    from trace_turan.indexing import all_triples, triple_index

    rng = random.Random(31)
    by_index = {triple_index(*e): e for e in all_triples(6)}
    for _ in range(60):
        h = random_hypergraph(6, 0.35, rng)
        if not h.edge_count:
            continue
        seq = canonical_index_sequence(h)
        canon = Hypergraph3(6, [by_index[i] for i in seq])
        assert is_canonical_labeling(canon)
        parent = Hypergraph3(6, [by_index[i] for i in seq[:-1]])
        assert is_canonical_labeling(parent)
