"""Deciding and certifying K_{2,t} traces in 3-uniform hypergraphs.

A K_{2,t} trace on vertices {x, y} union D assigns to each pattern edge
{x, u} (and {y, u}) a hyperedge whose intersection with {x, y} union D is
exactly that pair.  Distinct pattern edges force distinct hyperedges on
their own (two hyperedges with different exact intersections can never
coincide), so the exact detector needs no matching step; the Berge variant,
where hyperedges only need to *contain* their pair, does.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass

from .hypergraph import Hypergraph3
from .indexing import Triple

PatternEdge = tuple[str, int]  # ("x" | "y", leaf vertex)


class SearchTimeout(Exception):
    """Raised when a detector exceeds its time budget; distinct from absent."""


@dataclass(frozen=True)
class TracePattern:
    """The complete bipartite pattern K_{2,t}; t = 2 is the 4-cycle."""

    t: int

    def __post_init__(self):
        if self.t < 2:
            raise ValueError(f"pattern requires t >= 2, got {self.t}")


def _t_of(pattern: TracePattern | int) -> int:
    t = pattern.t if isinstance(pattern, TracePattern) else int(pattern)
    if t < 2:
        raise ValueError(f"pattern requires t >= 2, got {t}")
    return t


@dataclass
class TraceCertificate:
    """Explicit witness: vertices x, y, leaf set D, and the edge assignment."""

    x: int
    y: int
    D: tuple[int, ...]
    assignment: dict[PatternEdge, Triple]

    def pattern_edges(self) -> list[PatternEdge]:
        return [(side, u) for side in ("x", "y") for u in self.D]

    def to_text(self) -> str:
        lines = [f"{self.x} {self.y} | {' '.join(map(str, self.D))} |"]
        for side, u in self.pattern_edges():
            a, b, c = self.assignment[(side, u)]
            lines.append(f"{side} {u} -> {a} {b} {c}")
        return "\n".join(lines) + "\n"


def certificate_from_text(text: str) -> TraceCertificate:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    head, bar, tail = lines[0].partition("|")
    if not bar:
        raise ValueError(f"bad certificate header {lines[0]!r}")
    x, y = map(int, head.split())
    d = tuple(int(v) for v in tail.replace("|", "").split())
    assignment: dict[PatternEdge, Triple] = {}
    for line in lines[1:]:
        lhs, arrow, rhs = line.partition("->")
        if not arrow:
            raise ValueError(f"bad certificate line {line!r}")
        side, u = lhs.split()
        a, b, c = sorted(int(v) for v in rhs.split())
        assignment[(side, int(u))] = (a, b, c)
    return TraceCertificate(x, y, d, assignment)


def verify_certificate(h: Hypergraph3, cert: TraceCertificate) -> bool:
    """Check every certificate invariant against h; never raises."""
    d = tuple(cert.D)
    core = {cert.x, cert.y, *d}
    if len(core) != len(d) + 2 or len(d) < 2:
        return False
    if not all(0 <= v < h.n for v in core):
        return False
    wanted = {(side, u) for side in ("x", "y") for u in d}
    if set(cert.assignment) != wanted:
        return False
    seen: set[Triple] = set()
    for (side, u), edge in cert.assignment.items():
        if edge not in h:
            return False
        pair_vertex = cert.x if side == "x" else cert.y
        if set(edge) & core != {pair_vertex, u}:
            return False
        if edge in seen:
            return False
        seen.add(edge)
    return True


class _DetectorBudget:
    """Coarse wall-clock budget shared across one detector invocation."""

    __slots__ = ("deadline", "ticks")

    def __init__(self, seconds: float | None):
        self.deadline = None if seconds is None else time.monotonic() + seconds
        self.ticks = 0

    def tick(self) -> None:
        if self.deadline is None:
            return
        self.ticks += 1
        if self.ticks & 31 == 1 and time.monotonic() > self.deadline:
            raise SearchTimeout("trace search exceeded its time budget")


def _build_certificate(
    x: int, y: int, d: tuple[int, ...], wx: dict[int, frozenset[int]], wy: dict[int, frozenset[int]]
) -> TraceCertificate:
    d_set = set(d)
    assignment: dict[PatternEdge, Triple] = {}
    for u in d:
        axw = min(wx[u] - d_set)
        ayw = min(wy[u] - d_set)
        assignment[("x", u)] = tuple(sorted((x, u, axw)))  # type: ignore[assignment]
        assignment[("y", u)] = tuple(sorted((y, u, ayw)))  # type: ignore[assignment]
    return TraceCertificate(x, y, d, assignment)


def _search_pair(
    h: Hypergraph3,
    x: int,
    y: int,
    t: int,
    budget: _DetectorBudget,
    forced: int | None = None,
) -> TraceCertificate | None:
    """Find a trace with pair vertices (x, y); optionally force one leaf."""
    wx: dict[int, frozenset[int]] = {}
    wy: dict[int, frozenset[int]] = {}
    pool = []
    for u in range(h.n):
        if u == x or u == y:
            continue
        cx = h.codegree_thirds(x, u) - {y}
        cy = h.codegree_thirds(y, u) - {x}
        if cx and cy:
            wx[u] = cx
            wy[u] = cy
            pool.append(u)
    if len(pool) < t or (forced is not None and forced not in wx):
        return None
    pool.sort(key=lambda u: (-min(len(wx[u]), len(wy[u])), u))
    if forced is not None:
        pool.remove(forced)
    chosen: list[int] = [forced] if forced is not None else []

    def feasible(d_set: set[int]) -> bool:
        return all(wx[u] - d_set and wy[u] - d_set for u in chosen)

    def extend(start: int) -> tuple[int, ...] | None:
        budget.tick()
        if len(chosen) == t:
            return tuple(sorted(chosen))
        if t - len(chosen) > len(pool) - start:
            return None
        for i in range(start, len(pool)):
            u = pool[i]
            chosen.append(u)
            if feasible(set(chosen)):
                hit = extend(i + 1)
                if hit is not None:
                    return hit
            chosen.pop()
        return None

    d = extend(0)
    if d is None:
        return None
    return _build_certificate(x, y, d, wx, wy)


def contains_trace(
    h: Hypergraph3, pattern: TracePattern | int, time_budget: float | None = None
) -> TraceCertificate | None:
    """Exact K_{2,t}-trace detection with a certificate, or None if absent.

    Deterministic: pairs (x, y) are scanned in ascending order and leaf
    candidates in descending co-degree order.  Raises SearchTimeout when the
    optional wall-clock budget runs out, so a timeout is never mistaken for
    trace-freeness.
    """
    t = _t_of(pattern)
    if h.n < t + 2:
        return None
    budget = _DetectorBudget(time_budget)
    for x in range(h.n):
        for y in range(x + 1, h.n):
            cert = _search_pair(h, x, y, t, budget)
            if cert is not None:
                return cert
    return None


def contains_trace_naive(h: Hypergraph3, pattern: TracePattern | int) -> TraceCertificate | None:
    """Independent oracle: exhaust (x, y, D) choices and edge assignments.

    Cost grows fast; intended for n <= 10 with t <= 3.
    """
    t = _t_of(pattern)
    if h.n < t + 2:
        return None
    edges = list(h.edges)
    for x in range(h.n):
        for y in range(x + 1, h.n):
            others = [u for u in range(h.n) if u != x and u != y]
            for d in itertools.combinations(others, t):
                core = {x, y, *d}
                pat = [("x", u) for u in d] + [("y", u) for u in d]
                cands = []
                for side, u in pat:
                    pv = x if side == "x" else y
                    cands.append([e for e in edges if set(e) & core == {pv, u}])
                assignment: dict[PatternEdge, Triple] = {}
                used: set[Triple] = set()

                def assign(i: int) -> bool:
                    if i == len(pat):
                        return True
                    for e in cands[i]:
                        if e in used:
                            continue
                        used.add(e)
                        assignment[pat[i]] = e
                        if assign(i + 1):
                            return True
                        used.discard(e)
                        del assignment[pat[i]]
                    return False

                if assign(0):
                    return TraceCertificate(x, y, d, dict(assignment))
    return None


def trace_from_dominated(
    h: Hypergraph3,
    x: int,
    y: int,
    s,
    dx_witness: dict[int, "Witness"],
    dy_witness: dict[int, "Witness"],
) -> TraceCertificate:
    """Assemble a trace certificate from a set dominated in both link graphs.

    For each u in D, a loop witness yields an edge {x, u, w} with w outside
    S (and w != y); a neighbor witness u' in S minus D yields {x, u, u'}.
    The y side is symmetric.  Invalid witnesses raise ValueError.
    """
    s_set = frozenset(s)
    d = tuple(sorted(dx_witness))
    if tuple(sorted(dy_witness)) != d:
        raise ValueError("witness maps must cover the same dominated set")
    if not set(d) <= s_set or x in s_set or y in s_set or x == y:
        raise ValueError("dominated set must lie in S, which must avoid x and y")
    d_set = set(d)
    assignment: dict[PatternEdge, Triple] = {}
    for side, pv, witnesses in (("x", x, dx_witness), ("y", y, dy_witness)):
        other = y if side == "x" else x
        for u in d:
            w = witnesses[u]
            if w.kind == "neighbor":
                partner = w.neighbor
                if partner is None or partner not in s_set or partner in d_set:
                    raise ValueError(f"neighbor witness for {u} must lie in S minus D")
                if tuple(sorted((pv, u, partner))) not in h:
                    raise ValueError(f"witness edge {{{pv}, {u}, {partner}}} missing from H")
            else:
                outside = sorted(
                    v
                    for v in h.codegree_thirds(pv, u)
                    if v not in s_set and v != other
                )
                if not outside:
                    raise ValueError(f"loop witness for {u} has no supporting edge at {pv}")
                partner = outside[0]
            assignment[(side, u)] = tuple(sorted((pv, u, partner)))  # type: ignore[assignment]
    cert = TraceCertificate(x, y, d, assignment)
    if not verify_certificate(h, cert):
        raise ValueError("witnesses do not assemble into a valid certificate")
    return cert


def _berge_pair(h: Hypergraph3, x: int, y: int, t: int, budget: _DetectorBudget) -> bool:
    ex: dict[int, list[Triple]] = {}
    ey: dict[int, list[Triple]] = {}
    pool = []
    for u in range(h.n):
        if u == x or u == y:
            continue
        lx = [tuple(sorted((x, u, w))) for w in h.codegree_thirds(x, u)]
        ly = [tuple(sorted((y, u, w))) for w in h.codegree_thirds(y, u)]
        if lx and ly:
            ex[u] = sorted(lx)  # type: ignore[assignment]
            ey[u] = sorted(ly)  # type: ignore[assignment]
            pool.append(u)
    if len(pool) < t:
        return False
    pool.sort(key=lambda u: (-min(len(ex[u]), len(ey[u])), u))

    matched: dict[PatternEdge, Triple] = {}
    owner: dict[Triple, PatternEdge] = {}

    def augment(pe: PatternEdge, cands: list[Triple], seen: set[Triple]) -> bool:
        for e in cands:
            if e in seen:
                continue
            seen.add(e)
            holder = owner.get(e)
            if holder is None or augment(
                holder, ex[holder[1]] if holder[0] == "x" else ey[holder[1]], seen
            ):
                owner[e] = pe
                matched[pe] = e
                return True
        return False

    def extend(start: int, size: int) -> bool:
        budget.tick()
        if size == t:
            return True
        if t - size > len(pool) - start:
            return False
        for i in range(start, len(pool)):
            u = pool[i]
            saved_matched = dict(matched)
            saved_owner = dict(owner)
            if augment(("x", u), ex[u], set()) and augment(("y", u), ey[u], set()):
                if extend(i + 1, size + 1):
                    return True
            matched.clear()
            matched.update(saved_matched)
            owner.clear()
            owner.update(saved_owner)
        return False

    return extend(0, 0)


def contains_berge(
    h: Hypergraph3, pattern: TracePattern | int, time_budget: float | None = None
) -> bool:
    """True iff h contains a Berge K_{2,t}: distinct hyperedges each
    containing its pattern pair (supersets allowed, unlike traces).

    Injectivity is enforced with an augmenting-path matching between the 2t
    pattern edges and candidate hyperedges.
    """
    t = _t_of(pattern)
    if h.n < t + 2 or h.edge_count < 2 * t:
        return False
    budget = _DetectorBudget(time_budget)
    for x in range(h.n):
        for y in range(x + 1, h.n):
            if _berge_pair(h, x, y, t, budget):
                return True
    return False
