"""Exact values of the trace Turán function at desk scale.

Two independent routes to the same number:

* ``turan_oracle`` -- subset enumeration over all triples in colex order
  against a precomputed table of minimal trace configurations (bitmask
  inclusion tests), capped at n <= 6;
* ``turan_search`` -- orderly generation: grow canonically-labeled
  trace-free hypergraphs one colex-larger edge at a time, rejecting
  non-canonical children and pruning with an incremental trace check that
  only looks for traces through the new edge (sound because the parent is
  trace-free).

``export_cnf`` emits a DIMACS formula satisfiable iff a trace-free
hypergraph with the requested edge count exists, for external cross-checks
of both routes.
"""

from __future__ import annotations

import itertools
import os
import pickle
import time
from dataclasses import dataclass

from .canon import canonical_form, is_canonical_labeling
from .hypergraph import Hypergraph3
from .indexing import Triple, all_triples, triple_index
from .traces import TraceCertificate, TracePattern, _DetectorBudget, _search_pair, _t_of

CACHE_ENV = "TRACE_TURAN_CACHE"


class CapExceeded(ValueError):
    """Requested size is beyond the configured exact-computation cap."""


@dataclass
class SearchResult:
    n: int
    t: int
    value: int
    witnesses: list[Hypergraph3]
    nodes_explored: int
    elapsed: float

    def csv_row(self) -> str:
        return f"{self.n},{self.t},{self.value},{len(self.witnesses)},{self.nodes_explored},{self.elapsed:.3f}"


@dataclass
class SearchConfig:
    max_n: int = 12
    witness_cap: int = 100
    initial_lower_bound: Hypergraph3 | int | None = None
    cache_dir: str | None = None  # falls back to the TRACE_TURAN_CACHE env var
    threads: int = 0  # accepted for interface parity; execution is sequential


def trace_templates(n: int, t: int) -> list[frozenset[int]]:
    """Every minimal trace configuration on n vertices as an edge-index set.

    A configuration fixes the pair {x, y}, the t leaves, and one third
    vertex outside the core per pattern edge; the 2t resulting triples are
    automatically distinct because their core intersections differ.
    """
    templates: set[frozenset[int]] = set()
    verts = range(n)
    for x, y in itertools.combinations(verts, 2):
        others = [u for u in verts if u != x and u != y]
        for d in itertools.combinations(others, t):
            core = {x, y, *d}
            outside = [w for w in verts if w not in core]
            if not outside:
                break
            choices = []
            for pv in (x, y):
                for u in d:
                    choices.append([triple_index(pv, u, w) for w in outside])
            for combo in itertools.product(*choices):
                templates.add(frozenset(combo))
    return sorted(templates, key=sorted)


def _templates_by_edge(n: int, t: int) -> tuple[int, list[list[int]]]:
    """Per-edge list of residual masks: template minus that edge, as bits."""
    total = len(all_triples(n))
    by_edge: list[list[int]] = [[] for _ in range(total)]
    for tmpl in trace_templates(n, t):
        mask = 0
        for idx in tmpl:
            mask |= 1 << idx
        for idx in tmpl:
            by_edge[idx].append(mask & ~(1 << idx))
    return total, by_edge


ORACLE_CAP = 6


def turan_oracle(n: int, t: int) -> SearchResult:
    """Ground-truth maximum edge count by pruned subset enumeration.

    Refuses n > 6 outright rather than degrading into an open-ended run.
    """
    t = _t_of(t)
    if n > ORACLE_CAP:
        raise CapExceeded(f"oracle handles n <= {ORACLE_CAP}, got n={n}")
    if n < 0:
        raise ValueError("n must be nonnegative")
    start = time.perf_counter()
    total, by_edge = _templates_by_edge(n, t)
    nodes = 0
    best = -1
    witness_forms: dict[bytes, int] = {}
    cap = 100
    triples = all_triples(n)

    def record(mask: int, m: int) -> None:
        nonlocal best, witness_forms
        if m > best:
            best = m
            witness_forms = {}
        if m == best and len(witness_forms) < cap:
            h = Hypergraph3(n, [triples[i] for i in range(total) if mask >> i & 1])
            witness_forms.setdefault(canonical_form(h), mask)

    def rec(idx: int, mask: int, m: int) -> None:
        nonlocal nodes
        nodes += 1
        if m + (total - idx) < best or (
            m + (total - idx) == best and len(witness_forms) >= cap
        ):
            return
        if idx == total:
            record(mask, m)
            return
        new_mask = mask | (1 << idx)
        if not any(res & ~mask == 0 for res in by_edge[idx]):
            rec(idx + 1, new_mask, m + 1)
        rec(idx + 1, mask, m)

    rec(0, 0, 0)
    witnesses = [
        Hypergraph3(n, [triples[i] for i in range(total) if mask >> i & 1])
        for mask in witness_forms.values()
    ]
    return SearchResult(n, t, best, witnesses, nodes, time.perf_counter() - start)


def incremental_trace_check(
    h: Hypergraph3, new_edge: Triple, t: int | TracePattern
) -> TraceCertificate | None:
    """Trace detection in h + new_edge for trace-free h.

    Any trace of the extended hypergraph must route a pattern edge through
    new_edge, so only pairs meeting new_edge and leaves inside it need to be
    scanned.  h is restored before returning.
    """
    t = _t_of(t)
    e = tuple(sorted(new_edge))
    h.add_edge(e)
    try:
        return _trace_through_edge(h, e, t)
    finally:
        h.remove_edge(e)


def _trace_through_edge(h: Hypergraph3, e: Triple, t: int) -> TraceCertificate | None:
    """Search for a trace certificate assuming every trace must involve e."""
    if h.n < t + 2:
        return None
    budget = _DetectorBudget(None)
    seen_pairs = set()
    for p in e:
        for q in range(h.n):
            if q in e:
                continue
            x, y = (p, q) if p < q else (q, p)
            if (x, y) in seen_pairs:
                continue
            seen_pairs.add((x, y))
            for u in e:
                if u == p:
                    continue
                cert = _search_pair(h, x, y, t, budget, forced=u)
                if cert is not None:
                    return cert
    return None


def _load_cache(path: str | None) -> dict[bytes, bool]:
    if not path:
        return {}
    fname = os.path.join(path, "canonical_cache.pickle")
    try:
        with open(fname, "rb") as fh:
            return pickle.load(fh)
    except (OSError, pickle.PickleError, EOFError):
        return {}


def _save_cache(path: str | None, cache: dict[bytes, bool]) -> None:
    if not path or not cache:
        return
    try:
        os.makedirs(path, exist_ok=True)
        with open(os.path.join(path, "canonical_cache.pickle"), "wb") as fh:
            pickle.dump(cache, fh)
    except OSError:
        pass


def turan_search(n: int, t: int, config: SearchConfig | None = None) -> SearchResult:
    """Exact maximum by isomorph-free orderly generation.

    Every canonically-labeled trace-free hypergraph is reachable from the
    empty one by adding its colex-largest edge last, so extending canonical
    states by strictly larger edges and keeping only canonical children
    visits each isomorphism class exactly once.
    """
    t = _t_of(t)
    cfg = config or SearchConfig()
    if n > cfg.max_n:
        raise CapExceeded(f"search capped at n <= {cfg.max_n}, got n={n}")
    if n < 0:
        raise ValueError("n must be nonnegative")
    start = time.perf_counter()
    triples = all_triples(n)
    total = len(triples)
    cache_dir = cfg.cache_dir or os.environ.get(CACHE_ENV)
    cache = _load_cache(cache_dir)

    best = -1
    witnesses: list[Hypergraph3] = []
    if cfg.initial_lower_bound is not None:
        lb = cfg.initial_lower_bound
        if isinstance(lb, Hypergraph3):
            if lb.n != n:
                raise ValueError("initial lower bound must live on the same vertex count")
            lb = lb.edge_count
        # one below the known-achievable value, so every extremal class is
        # still enumerated while smaller states prune away
        best = lb - 1
    nodes = 0
    h = Hypergraph3(n)

    def cached_is_canonical(H: Hypergraph3) -> bool:
        key = b"%d:" % H.n + b",".join(b"%d" % triple_index(*e) for e in H.edges)
        hit = cache.get(key)
        if hit is None:
            hit = is_canonical_labeling(H)
            cache[key] = hit
        return hit

    def rec(last_idx: int) -> None:
        nonlocal best, nodes, witnesses
        nodes += 1
        m = h.edge_count
        if m > best:
            best = m
            witnesses = [h.copy()]
        elif m == best and len(witnesses) < cfg.witness_cap:
            witnesses.append(h.copy())
        for idx in range(last_idx + 1, total):
            if m + (total - idx) < best or (
                m + (total - idx) == best and len(witnesses) >= cfg.witness_cap
            ):
                break
            e = triples[idx]
            h.add_edge(e)
            if _trace_through_edge(h, e, t) is None and cached_is_canonical(h):
                rec(idx)
            h.remove_edge(e)

    rec(-1)
    _save_cache(cache_dir, cache)
    return SearchResult(n, t, best, witnesses, nodes, time.perf_counter() - start)


# -- DIMACS export ----------------------------------------------------------

CNF_CAP = 7


def export_cnf(n: int, m: int, t: int, path: str) -> tuple[int, int]:
    """Write a DIMACS CNF satisfiable iff some n-vertex trace-free
    hypergraph has at least m edges.

    One variable per triple; a sequential-counter cardinality constraint
    keeps at least m of them true; every minimal trace configuration
    contributes a blocking clause.  Returns (variables, clauses).
    """
    t = _t_of(t)
    if n > CNF_CAP:
        raise CapExceeded(f"CNF export handles n <= {CNF_CAP}, got n={n}")
    total = len(all_triples(n))
    clauses: list[list[int]] = []
    num_vars = max(total, 1)

    if m > total:
        clauses.append([1])
        clauses.append([-1])
    elif m > 0:
        k = total - m  # allowed number of excluded triples
        if k == 0:
            for v in range(1, total + 1):
                clauses.append([v])
        else:
            # sequential counter bounding the excluded literals y_i = -x_i,
            # so -y_i below denotes the positive edge variable i
            def y(i: int) -> int:  # 1-based
                return -i

            s = {}
            for i in range(1, total):
                for j in range(1, k + 1):
                    num_vars += 1
                    s[i, j] = num_vars
            clauses.append([-y(1), s[1, 1]])
            for j in range(2, k + 1):
                clauses.append([-s[1, j]])
            for i in range(2, total):
                clauses.append([-y(i), s[i, 1]])
                clauses.append([-s[i - 1, 1], s[i, 1]])
                for j in range(2, k + 1):
                    clauses.append([-y(i), -s[i - 1, j - 1], s[i, j]])
                    clauses.append([-s[i - 1, j], s[i, j]])
                clauses.append([-y(i), -s[i - 1, k]])
            clauses.append([-y(total), -s[total - 1, k]])

    for tmpl in trace_templates(n, t):
        clauses.append([-(idx + 1) for idx in sorted(tmpl)])

    with open(path, "w", encoding="ascii") as fh:
        fh.write(f"c trace-free existence: n={n} m={m} t={t}\n")
        fh.write(f"p cnf {num_vars} {len(clauses)}\n")
        for cl in clauses:
            fh.write(" ".join(map(str, cl)) + " 0\n")
    return num_vars, len(clauses)
