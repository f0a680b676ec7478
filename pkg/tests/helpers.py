"""Independent reference implementations used only as test oracles.

Nothing here shares code with the library paths it checks: canonical forms
are minimized over all n! permutations, 4-cycles are found by scanning
4-subsets, dominated sets by scanning all subsets, and the DIMACS formulas
are decided by a tiny DPLL with unit propagation.
"""

from __future__ import annotations

import itertools
import random

from trace_turan import Graph, Hypergraph3, LoopGraph


def random_hypergraph(n: int, p: float, rng: random.Random) -> Hypergraph3:
    h = Hypergraph3(n)
    for e in itertools.combinations(range(n), 3):
        if rng.random() < p:
            h.add_edge(e)
    return h


def random_loop_graph(
    n: int, p: float, rng: random.Random, min_degree: int = 1
) -> LoopGraph:
    """Random simple graph with loops added until min_degree is reached."""
    g = LoopGraph(range(n))
    for u, v in itertools.combinations(range(n), 2):
        if rng.random() < p:
            g.add_edge(u, v)
    for v in range(n):
        deficit = min_degree - g.degree(v)
        if deficit > 0:
            g.add_loop(v, deficit)
    return g


def brute_force_min_index_sequence(h: Hypergraph3) -> tuple[int, ...]:
    """Canonical sequence by trying every vertex permutation."""
    from trace_turan.indexing import triple_index

    best = None
    for perm in itertools.permutations(range(h.n)):
        seq = tuple(sorted(triple_index(perm[a], perm[b], perm[c]) for a, b, c in h.edges))
        if best is None or seq < best:
            best = seq
    return best if best is not None else ()


def four_subset_has_c4(g: Graph) -> bool:
    """4-cycle detection by enumerating vertex 4-subsets and pairings."""
    for quad in itertools.combinations(range(g.n), 4):
        a, b, c, d = quad
        for p, q, r, s in ((a, b, c, d), (a, c, b, d), (a, b, d, c)):
            if (
                g.has_edge(p, q)
                and g.has_edge(q, r)
                and g.has_edge(r, s)
                and g.has_edge(s, p)
            ):
                return True
    return False


def max_dominated_subset(g: LoopGraph) -> int:
    """Largest dominated set size by scanning all subsets (|V| <= ~16)."""
    verts = sorted(g.vertices)
    best = 0
    for mask in range(1 << len(verts)):
        d = [verts[i] for i in range(len(verts)) if mask >> i & 1]
        if len(d) <= best:
            continue
        d_set = set(d)
        if all(
            g.loops_at(v) >= 1 or any(u not in d_set for u in g.neighbors(v))
            for v in d
        ):
            best = len(d)
    return best


def parse_dimacs(path: str) -> tuple[int, list[list[int]]]:
    clauses = []
    num_vars = 0
    with open(path, encoding="ascii") as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("c"):
                continue
            if line.startswith("p"):
                num_vars = int(line.split()[2])
                continue
            lits = [int(x) for x in line.split()]
            assert lits[-1] == 0
            clauses.append(lits[:-1])
    return num_vars, clauses


def dpll_satisfiable(num_vars: int, clauses: list[list[int]]) -> bool:
    """Plain DPLL with unit propagation; adequate for tens of variables."""

    def propagate(assign: dict[int, bool]) -> dict[int, bool] | None:
        assign = dict(assign)
        changed = True
        while changed:
            changed = False
            for cl in clauses:
                unassigned = []
                satisfied = False
                for lit in cl:
                    val = assign.get(abs(lit))
                    if val is None:
                        unassigned.append(lit)
                    elif (lit > 0) == val:
                        satisfied = True
                        break
                if satisfied:
                    continue
                if not unassigned:
                    return None
                if len(unassigned) == 1:
                    lit = unassigned[0]
                    assign[abs(lit)] = lit > 0
                    changed = True
        return assign

    def solve(assign: dict[int, bool]) -> bool:
        assign = propagate(assign)
        if assign is None:
            return False
        for v in range(1, num_vars + 1):
            if v not in assign:
                return solve({**assign, v: True}) or solve({**assign, v: False})
        return True

    return solve({})
