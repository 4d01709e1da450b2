"""Shared test data and independent oracles.

The oracles deliberately avoid the implementation's search shortcuts:
they explore full move sequences with no memoization and recompute
structures from their defining conditions, so agreement with the library
is meaningful.
"""

from __future__ import annotations

import itertools

from grogweb.engine import (
    PredationBatch,
    Web,
    apply_batch,
    legal_predations,
    new_state,
)

# The twelve distinct webs of the 3-vertex path, as (item, arc set,
# grog number).  Every item has exactly 2 greedy strategies.
EXAMPLE1_WEBS = [
    (1, {(1, 2), (2, 3)}, 2),
    (2, {(1, 2), (3, 2)}, 2),
    (3, {(2, 1), (2, 3)}, 2),
    (4, {(1, 3), (3, 2)}, 2),
    (5, {(1, 3), (2, 3)}, 2),
    (6, {(3, 1), (3, 2)}, 2),
    (7, {(2, 1), (1, 3)}, 4),
    (8, {(2, 1), (3, 1)}, 4),
    (9, {(1, 2), (1, 3)}, 4),
    (10, {(2, 3), (3, 1)}, 2),
    (11, {(3, 1), (1, 2)}, 4),
    (12, {(3, 2), (2, 1)}, 2),
]


def oracle_grog(web: Web) -> int:
    """Minimum residual by plain DFS over ALL legal single-predation
    sequences; exponential and memo-free on purpose."""
    total = web.total_population
    best = [total]

    def rec(remaining: frozenset, pops: tuple) -> None:
        legal = [(t, h) for t, h in remaining if pops[t - 1] >= 1 and pops[h - 1] >= 1]
        if not legal:
            best[0] = min(best[0], sum(pops))
            return
        for t, h in legal:
            np = list(pops)
            np[t - 1] -= 1
            np[h - 1] -= 1
            rec(remaining - {(t, h)}, tuple(np))

    rec(frozenset(web.digraph.arcs), web.populations)
    return best[0]


def oracle_greedy(web: Web) -> tuple[int, int]:
    """(count, min residual) over greedy strategies by literally walking
    every ordered predator-arc string, one arc at a time."""
    count = 0
    best = None

    def rec(state) -> None:
        nonlocal count, best
        legal = sorted(legal_predations(state))
        if not legal:
            count += 1
            residual = sum(state.pop)
            best = residual if best is None else min(best, residual)
            return
        for t in sorted({tail for tail, _ in legal}):
            mine = [h for tail, h in legal if tail == t]
            ell = min(state.population(t), len(mine))
            for ordered in itertools.permutations(mine, ell):
                nxt = state
                for h in ordered:
                    nxt = apply_batch(nxt, PredationBatch(t, (h,)))
                rec(nxt)

    rec(new_state(web))
    return count, best


def oracle_competition_edges(d) -> set[tuple[int, int]]:
    """Competition edges by the literal triple scan over (u, w, z)."""
    edges = set()
    arcs = set(d.arcs)
    for u in range(1, d.n + 1):
        for w in range(u + 1, d.n + 1):
            for z in range(1, d.n + 1):
                if (u, z) in arcs and (w, z) in arcs:
                    edges.add((u, w))
                    break
    return edges


def jaco_fixed_point_holds(digraph) -> bool:
    """Check the defining arc condition against in-degrees recomputed
    from the finished arc set: (i, j) present iff 2i - d^-(v_i) >= j."""
    arcs = set(digraph.arcs)
    dminus = [0] * (digraph.n + 1)
    for _, h in arcs:
        dminus[h] += 1
    for i in range(1, digraph.n + 1):
        for j in range(i + 1, digraph.n + 1):
            if ((i, j) in arcs) != (2 * i - dminus[i] >= j):
                return False
    return True
