"""Core data structures: 3-uniform hypergraphs, graphs with loops, and the
small/medium/large co-degree edge partition.

Vertices are dense integers 0..n-1.  Edges are stored as sorted triples and
indexed by vertex pair, so co-degree queries are O(1) and the index survives
incremental edge insertion/removal (the extremal search mutates a hypergraph
in place as the single owner).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable

Triple = tuple[int, int, int]
Pair = tuple[int, int]


class FormatError(ValueError):
    """Malformed hypergraph/graph text input; carries a 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)


def _as_triple(edge: Iterable[int]) -> Triple:
    t = tuple(sorted(edge))
    if len(t) != 3 or len(set(t)) != 3:
        raise ValueError(f"edge must have 3 distinct vertices, got {t}")
    return t  # type: ignore[return-value]


class Hypergraph3:
    """A 3-uniform hypergraph on vertices 0..n-1 with a pair co-degree index.

    The index maps each unordered pair to the set of "third" vertices that
    complete it to an edge, so both co-degree counts and the edges through a
    pair are O(1) away.
    """

    __slots__ = ("n", "_thirds", "_edges")

    def __init__(self, n: int, edges: Iterable[Iterable[int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        self.n = n
        self._thirds: dict[Pair, set[int]] = {}
        self._edges: set[Triple] = set()
        for e in edges:
            self.add_edge(e)

    # -- mutation ---------------------------------------------------------

    def add_edge(self, edge: Iterable[int]) -> Triple:
        a, b, c = t = _as_triple(edge)
        if not (0 <= a and c < self.n):
            raise ValueError(f"edge {t} out of range for n={self.n}")
        if t in self._edges:
            raise ValueError(f"duplicate edge {t}")
        self._edges.add(t)
        self._thirds.setdefault((a, b), set()).add(c)
        self._thirds.setdefault((a, c), set()).add(b)
        self._thirds.setdefault((b, c), set()).add(a)
        return t

    def remove_edge(self, edge: Iterable[int]) -> None:
        a, b, c = t = _as_triple(edge)
        if t not in self._edges:
            raise ValueError(f"no such edge {t}")
        self._edges.discard(t)
        for pair, w in (((a, b), c), ((a, c), b), ((b, c), a)):
            s = self._thirds[pair]
            s.discard(w)
            if not s:
                del self._thirds[pair]

    # -- queries ----------------------------------------------------------

    @property
    def edges(self) -> tuple[Triple, ...]:
        return tuple(sorted(self._edges))

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    def __len__(self) -> int:
        return len(self._edges)

    def __contains__(self, edge: Iterable[int]) -> bool:
        try:
            return _as_triple(edge) in self._edges
        except ValueError:
            return False

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Hypergraph3):
            return NotImplemented
        return self.n == other.n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self._edges)))

    def __repr__(self) -> str:
        return f"Hypergraph3(n={self.n}, m={len(self._edges)})"

    def copy(self) -> "Hypergraph3":
        return Hypergraph3(self.n, self._edges)

    def _check_pair(self, x: int, y: int) -> None:
        if x == y:
            raise ValueError(f"pair vertices must be distinct, got ({x}, {y})")
        if not (0 <= x < self.n and 0 <= y < self.n):
            raise ValueError(f"pair ({x}, {y}) out of range for n={self.n}")

    def codegree(self, x: int, y: int) -> int:
        """Number of edges containing both x and y."""
        self._check_pair(x, y)
        pair = (x, y) if x < y else (y, x)
        return len(self._thirds.get(pair, ()))

    def codegree_thirds(self, x: int, y: int) -> frozenset[int]:
        """The vertices w with {x, y, w} an edge."""
        self._check_pair(x, y)
        pair = (x, y) if x < y else (y, x)
        return frozenset(self._thirds.get(pair, ()))

    def degree(self, v: int) -> int:
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range")
        return sum(1 for e in self._edges if v in e)

    def edges_at(self, v: int) -> list[Triple]:
        return sorted(e for e in self._edges if v in e)

    def max_codegree(self) -> int:
        return max((len(s) for s in self._thirds.values()), default=0)

    def codegree_pairs(self) -> list[tuple[int, int, int]]:
        """All (x, y, codegree) with positive codegree, x < y, sorted."""
        return sorted((a, b, len(s)) for (a, b), s in self._thirds.items())

    def support(self) -> list[int]:
        """Vertices incident to at least one edge."""
        return sorted({v for e in self._edges for v in e})


class LoopGraph:
    """A graph with simple edges plus loops counted with multiplicity.

    degree(v) = number of simple edges at v + loop multiplicity at v.
    """

    __slots__ = ("_vertices", "_adj", "_loops")

    def __init__(
        self,
        vertices: Iterable[int],
        edges: Iterable[Iterable[int]] = (),
        loops: dict[int, int] | Iterable[int] | None = None,
    ):
        self._vertices = frozenset(vertices)
        self._adj: dict[int, set[int]] = {v: set() for v in self._vertices}
        self._loops: dict[int, int] = {}
        for e in edges:
            u, v = tuple(e)
            self.add_edge(u, v)
        if loops is not None:
            items = loops.items() if isinstance(loops, dict) else ((v, 1) for v in loops)
            for v, mult in items:
                self.add_loop(v, mult)

    @property
    def vertices(self) -> frozenset[int]:
        return self._vertices

    def add_edge(self, u: int, v: int) -> None:
        if u == v:
            raise ValueError("use add_loop for loops")
        if u not in self._vertices or v not in self._vertices:
            raise ValueError(f"edge ({u}, {v}) leaves the vertex set")
        self._adj[u].add(v)
        self._adj[v].add(u)

    def add_loop(self, v: int, mult: int = 1) -> None:
        if v not in self._vertices:
            raise ValueError(f"loop vertex {v} not in vertex set")
        if mult < 0:
            raise ValueError("loop multiplicity must be nonnegative")
        if mult:
            self._loops[v] = self._loops.get(v, 0) + mult

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj.get(u, ())

    def loops_at(self, v: int) -> int:
        return self._loops.get(v, 0)

    def degree(self, v: int) -> int:
        return len(self._adj[v]) + self._loops.get(v, 0)

    def min_degree(self) -> int:
        return min((self.degree(v) for v in self._vertices), default=0)

    def simple_edges(self) -> set[frozenset[int]]:
        return {frozenset((u, v)) for u in self._adj for v in self._adj[u] if u < v}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LoopGraph):
            return NotImplemented
        return (
            self._vertices == other._vertices
            and self._adj == other._adj
            and self._loops == other._loops
        )

    def __repr__(self) -> str:
        return (
            f"LoopGraph(|V|={len(self._vertices)}, "
            f"|E|={len(self.simple_edges())}, loops={sum(self._loops.values())})"
        )


@dataclass(frozen=True)
class EdgePartition:
    """Edges split by co-degree profile for a threshold delta >= 2.

    A:  edges with some pair of co-degree exactly 1,
    B:  edges whose pairs all have co-degree >= 2 and some pair <= delta,
    C:  edges whose pairs all have co-degree > delta.

    With residual=True the B/C split measures co-degrees in H minus A
    instead of the full H (needed by one of the counting arguments); A is
    always determined by co-degrees in the full H.
    """

    delta: float
    A: frozenset[Triple]
    B: frozenset[Triple]
    C: frozenset[Triple]
    residual: bool = False

    def validate(self, h: Hypergraph3) -> None:
        assert self.A | self.B | self.C == set(h.edges)
        assert not (self.A & self.B) and not (self.A & self.C) and not (self.B & self.C)
        residual_edges = self.B | self.C
        for e in h.edges:
            cods = [h.codegree(x, y) for x, y in itertools.combinations(e, 2)]
            if self.residual:
                rcods = [
                    sum(1 for w in h.codegree_thirds(x, y) if tuple(sorted((x, y, w))) in residual_edges)
                    for x, y in itertools.combinations(e, 2)
                ]
            else:
                rcods = cods
            if min(cods) == 1:
                assert e in self.A
            elif min(rcods) <= self.delta:
                assert e in self.B
            else:
                assert e in self.C


def partition_edges(h: Hypergraph3, delta: float, residual: bool = False) -> EdgePartition:
    """Partition the edges of h into the (A, B, C) co-degree classes."""
    if delta < 2:
        raise ValueError(f"delta must be >= 2, got {delta}")
    a: set[Triple] = set()
    rest: list[Triple] = []
    for e in h.edges:
        cods = [h.codegree(x, y) for x, y in itertools.combinations(e, 2)]
        if min(cods) == 1:
            a.add(e)
        else:
            rest.append(e)
    b: set[Triple] = set()
    c: set[Triple] = set()
    residual_set = set(rest)
    for e in rest:
        if residual:
            cods = [
                sum(1 for w in h.codegree_thirds(x, y) if tuple(sorted((x, y, w))) in residual_set)
                for x, y in itertools.combinations(e, 2)
            ]
        else:
            cods = [h.codegree(x, y) for x, y in itertools.combinations(e, 2)]
        (b if min(cods) <= delta else c).add(e)
    return EdgePartition(delta, frozenset(a), frozenset(b), frozenset(c), residual)


def link_graph(h: Hypergraph3, x: int, s: Iterable[int], y: int) -> LoopGraph:
    """The loop graph on S recording edges of h through x.

    For an edge {x, u, v}: a simple edge uv when both u, v are in S, and a
    loop at u (multiplicity-counted) when v is outside S and v != y.  Edges
    {x, u, y} contribute nothing.
    """
    if x == y:
        raise ValueError("x and y must be distinct")
    h._check_pair(x, y)
    s_set = frozenset(s)
    if x in s_set or y in s_set:
        raise ValueError("S must avoid x and y")
    g = LoopGraph(s_set)
    for u in s_set:
        for v in h.codegree_thirds(x, u):
            if v in s_set:
                if u < v:
                    g.add_edge(u, v)
            elif v != y:
                g.add_loop(u)
    return g


@dataclass
class DegreeInequalityReport:
    """Outcome of checking d_L(u) >= d_H(x, u) - 1 over a link graph."""

    passed: bool
    failures: list[tuple[int, int, int]] = field(default_factory=list)  # (u, d_L, d_H)


def verify_degree_inequality(h: Hypergraph3, x: int, s: Iterable[int], y: int) -> DegreeInequalityReport:
    """Check that every u in S has link-graph degree >= codegree(x, u) - 1.

    A failure here signals a bug in link_graph, never interesting input.
    """
    s_set = frozenset(s)
    g = link_graph(h, x, s_set, y)
    failures = []
    for u in sorted(s_set):
        d_l = g.degree(u)
        d_h = h.codegree(x, u)
        if d_l < d_h - 1:
            failures.append((u, d_l, d_h))
    return DegreeInequalityReport(not failures, failures)


def neighborhoods(
    h: Hypergraph3, v: int, restrict: Iterable[Triple] | None = None
) -> tuple[set[int], set[int]]:
    """Distance-1 and distance-2 vertex sets of v within an edge subset."""
    if not 0 <= v < h.n:
        raise ValueError(f"vertex {v} out of range")
    if restrict is None:
        edges = list(h.edges)
    else:
        edges = [_as_triple(e) for e in restrict]
        for e in edges:
            if e not in h._edges:
                raise ValueError(f"restricted edge {e} not in hypergraph")
    n1: set[int] = set()
    for e in edges:
        if v in e:
            n1.update(e)
    n1.discard(v)
    n2: set[int] = set()
    for e in edges:
        if any(u in n1 for u in e):
            n2.update(e)
    n2 -= n1
    n2.discard(v)
    return n1, n2


def eu_vu(
    h: Hypergraph3, v: int, u: int, restrict: Iterable[Triple] | None = None
) -> tuple[set[Triple], set[int]]:
    """Edges meeting N1(v) exactly in {u}, and the distance-2 vertices they cover."""
    edges = list(h.edges) if restrict is None else [_as_triple(e) for e in restrict]
    n1, n2 = neighborhoods(h, v, edges)
    if u not in n1:
        raise ValueError(f"{u} is not a distance-1 neighbor of {v}")
    eu = {e for e in edges if sum(1 for w in e if w in n1) == 1 and u in e}
    vu = {w for e in eu for w in e if w in n2}
    return eu, vu


# -- text format ----------------------------------------------------------
#
#   n m
#   a b c     (m lines, 0-based vertices; writer emits sorted order)


def dumps_hypergraph(h: Hypergraph3) -> str:
    lines = [f"{h.n} {h.edge_count}"]
    lines.extend(f"{a} {b} {c}" for a, b, c in h.edges)
    return "\n".join(lines) + "\n"


def loads_hypergraph(text: str) -> Hypergraph3:
    lines = text.splitlines()
    if not lines or not lines[0].strip():
        raise FormatError("missing header", 1)
    head = lines[0].split()
    if len(head) != 2:
        raise FormatError(f"header must be 'n m', got {lines[0]!r}", 1)
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise FormatError(f"non-integer header {lines[0]!r}", 1) from None
    h = Hypergraph3(n)
    seen = 0
    for i, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        parts = line.split()
        if len(parts) != 3:
            raise FormatError(f"edge line must have 3 vertices, got {line!r}", i)
        try:
            edge = tuple(int(p) for p in parts)
        except ValueError:
            raise FormatError(f"non-integer vertex in {line!r}", i) from None
        try:
            h.add_edge(edge)
        except ValueError as exc:
            raise FormatError(str(exc), i) from None
        seen += 1
    if seen != m:
        raise FormatError(f"header promised {m} edges, found {seen}")
    return h


def write_hypergraph(h: Hypergraph3, path: str) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(dumps_hypergraph(h))


def read_hypergraph(path: str) -> Hypergraph3:
    with open(path, encoding="ascii") as fh:
        return loads_hypergraph(fh.read())
