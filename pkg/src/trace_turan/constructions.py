"""Lower-bound generators.

A projective-plane polarity pairs points with lines; joining each point to
the points of its polar line gives a C4-free graph on q^2 + q + 1 vertices
with q(q+1)^2 / 2 edges (absolute points lose only their self-loop).
Lifting any graph through one extra apex vertex turns it into a 3-uniform
hypergraph with the same edge count; when the graph is C4-free the lift
carries no 4-cycle trace, which the exact detector confirms instance by
instance rather than by assumption.
"""

from __future__ import annotations

import itertools
import random
from typing import Iterable

from .hypergraph import FormatError, Hypergraph3
from .indexing import all_triples
from .search import incremental_trace_check


class Graph:
    """A simple undirected graph on vertices 0..n-1."""

    __slots__ = ("n", "_edges", "_adj")

    def __init__(self, n: int, edges: Iterable[Iterable[int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        self.n = n
        self._edges: set[tuple[int, int]] = set()
        self._adj: dict[int, set[int]] = {v: set() for v in range(n)}
        for e in edges:
            self.add_edge(*tuple(e))

    def add_edge(self, u: int, v: int) -> None:
        if u == v:
            raise ValueError("simple graphs carry no loops")
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise ValueError(f"edge ({u}, {v}) out of range")
        self._edges.add((min(u, v), max(u, v)))
        self._adj[u].add(v)
        self._adj[v].add(u)

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self._edges))

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self._edges

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    f = 2
    while f * f <= q:
        if q % f == 0:
            return False
        f += 1
    return True


def polarity_graph(q: int) -> Graph:
    """C4-free graph from the standard polarity of the plane over GF(q).

    Vertices are projective points (first nonzero coordinate scaled to 1),
    u ~ v iff their dot product vanishes mod q; self-orthogonal points keep
    their other edges.  Prime q only.
    """
    if not _is_prime(q):
        raise ValueError(f"q must be prime, got {q}")
    points: list[tuple[int, int, int]] = [(0, 0, 1)]
    points.extend((0, 1, c) for c in range(q))
    points.extend((1, b, c) for b in range(q) for c in range(q))
    g = Graph(len(points))
    for i, p in enumerate(points):
        for j in range(i + 1, len(points)):
            r = points[j]
            if (p[0] * r[0] + p[1] * r[1] + p[2] * r[2]) % q == 0:
                g.add_edge(i, j)
    return g


def contains_c4(g: Graph) -> bool:
    """Subgraph 4-cycle test via common neighborhoods."""
    for u, v in itertools.combinations(range(g.n), 2):
        if len(g.neighbors(u) & g.neighbors(v)) >= 2:
            return True
    return False


def lift_to_trace_free(g: Graph) -> Hypergraph3:
    """One-extra-vertex lift: hyperedge {u, v, apex} per graph edge uv.

    Preserves the edge count; a C4-free input yields a hypergraph free of
    4-cycle traces (any trace set either misses the apex, forcing a C4 in
    the graph, or contains it, which no exact pattern intersection allows).
    """
    apex = g.n
    h = Hypergraph3(g.n + 1)
    for u, v in g.edges:
        h.add_edge((u, v, apex))
    return h


def greedy_lower_bound(n: int, t: int, seed: int = 0, restarts: int = 32) -> Hypergraph3:
    """Best maximal trace-free hypergraph over seeded random greedy runs.

    Each run inserts the triples in a random order, keeping an edge exactly
    when the incremental detector finds no trace through it.
    """
    if restarts < 1:
        raise ValueError("restarts must be positive")
    best: Hypergraph3 | None = None
    for r in range(restarts):
        rng = random.Random(seed * 1000003 + r)
        order = list(all_triples(n))
        rng.shuffle(order)
        h = Hypergraph3(n)
        for e in order:
            if incremental_trace_check(h, e, t) is None:
                h.add_edge(e)
        if best is None or h.edge_count > best.edge_count:
            best = h
    assert best is not None
    return best


# -- graph text format (same shape as the hypergraph one) -------------------


def dumps_graph(g: Graph) -> str:
    lines = [f"{g.n} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def loads_graph(text: str) -> Graph:
    lines = text.splitlines()
    if not lines or not lines[0].strip():
        raise FormatError("missing header", 1)
    head = lines[0].split()
    if len(head) != 2:
        raise FormatError(f"header must be 'n m', got {lines[0]!r}", 1)
    n, m = int(head[0]), int(head[1])
    g = Graph(n)
    seen = 0
    for i, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"edge line must have 2 vertices, got {line!r}", i)
        try:
            g.add_edge(int(parts[0]), int(parts[1]))
        except ValueError as exc:
            raise FormatError(str(exc), i) from None
        seen += 1
    if seen != m:
        raise FormatError(f"header promised {m} edges, found {seen}")
    return g


def write_graph(g: Graph, path: str) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(dumps_graph(g))
