"""Canonical forms for 3-uniform hypergraphs.

The canonical form of H is the lexicographically least sorted sequence of
colex edge indices over all vertex relabelings.  Two hypergraphs on the same
vertex count get equal forms iff they are isomorphic, and a labeled
hypergraph whose own index sequence equals its canonical sequence is the
unique canonical representative of its class -- the property the orderly
search leans on (removing the colex-largest edge of a canonical sequence
leaves a canonical sequence).

The minimization is a branch and bound over partial label assignments.
Edges completed at label depth k have indices in [C(k,3), C(k+1,3)), so the
final sorted sequence grows in per-depth blocks and prefix pruning against
the incumbent is exact.  Interchangeable vertices (swapping them is an
automorphism) are tried once per depth, which collapses the blowup on highly
symmetric inputs such as complete or empty hypergraphs.
"""

from __future__ import annotations

from math import comb

from .hypergraph import Hypergraph3
from .indexing import Triple, edge_indices

_BIG = 1 << 60


def _twin(v: int, w: int, incident: dict[int, list[frozenset[int]]], edge_set: set[frozenset[int]]) -> bool:
    """True if transposing v and w maps the edge set to itself."""
    for e in incident[v] + incident[w]:
        swapped = frozenset(w if u == v else v if u == w else u for u in e)
        if swapped not in edge_set:
            return False
    return True


def _min_index_sequence(
    n: int,
    edges: list[Triple],
    best: list[int],
    decide_only: bool,
) -> bool:
    """Minimize the index sequence over relabelings, in place on ``best``.

    With decide_only=True, ``best`` is left untouched and the return value
    says whether some relabeling beats it strictly.  Otherwise ``best`` ends
    up holding the canonical sequence and the return value is meaningless.
    """
    edge_fs = [frozenset(e) for e in edges]
    edge_set = set(edge_fs)
    incident: dict[int, list[frozenset[int]]] = {v: [] for v in range(n)}
    for e in edge_fs:
        for v in e:
            incident[v].append(e)

    pos: dict[int, int] = {}
    found_smaller = False

    def block_for(v: int, depth: int) -> list[int]:
        blk = []
        for e in incident[v]:
            others = [u for u in e if u != v]
            if others[0] in pos and others[1] in pos:
                i, j = sorted((pos[others[0]], pos[others[1]]))
                blk.append(comb(depth, 3) + comb(j, 2) + i)
        blk.sort()
        return blk

    def rec(depth: int, emitted: int) -> None:
        nonlocal found_smaller
        if found_smaller and decide_only:
            return
        if depth == n:
            return
        unassigned = [v for v in range(n) if v not in pos]
        scored = []
        for v in unassigned:
            blk = block_for(v, depth)
            scored.append((tuple(blk) + (_BIG,), v, blk))
        scored.sort()
        tried: list[int] = []
        for _, v, blk in scored:
            if any(_twin(v, w, incident, edge_set) for w in tried):
                continue
            tried.append(v)
            # compare blk against the incumbent at offset ``emitted``
            verdict = 0  # 0 equal, -1 smaller, +1 larger
            for i, idx in enumerate(blk):
                incumbent = best[emitted + i] if emitted + i < len(best) else _BIG
                if idx != incumbent:
                    verdict = -1 if idx < incumbent else 1
                    break
            if verdict > 0:
                continue
            if verdict < 0:
                if decide_only:
                    found_smaller = True
                    return
                del best[emitted:]
                best.extend(blk)
            pos[v] = depth
            rec(depth + 1, emitted + len(blk))
            del pos[v]
            if found_smaller and decide_only:
                return

    rec(0, 0)
    return found_smaller


def canonical_index_sequence(h: Hypergraph3) -> tuple[int, ...]:
    """Lexicographically least colex index sequence over all relabelings."""
    best = list(edge_indices(h.edges))
    _min_index_sequence(h.n, list(h.edges), best, decide_only=False)
    return tuple(best)


def canonical_form(h: Hypergraph3) -> bytes:
    """A byte string equal for two hypergraphs iff they are isomorphic."""
    seq = canonical_index_sequence(h)
    return f"{h.n};{len(seq)};{','.join(map(str, seq))}".encode("ascii")


def is_canonical_labeling(h: Hypergraph3) -> bool:
    """True iff h's own index sequence is already the canonical one."""
    best = list(edge_indices(h.edges))
    return not _min_index_sequence(h.n, list(h.edges), best, decide_only=True)
