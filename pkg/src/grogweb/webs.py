"""Web enumeration over indexings x orientations, and graph-level grog numbers.

A base graph on n vertices with eps edges yields n! * 2^eps labelled
webs.  Webs whose arc sets coincide are the same web; they arise from
base-graph automorphisms acting simultaneously on labels and directions,
and deduplication keeps the first occurrence in stream order, which is
the lexicographically least (label sequence, arc set) representative.
For bases with exactly 2 automorphisms the deduplicated count equals the
half-formula n! * 2^eps / 2; for other automorphism group sizes the two
numbers differ and both are reported by the verification harness rather
than reconciled.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .engine import SOLVER_ARC_CAP, Strategy, Web, solve_exact
from .graphs import (
    CapExceeded,
    Digraph,
    GraphError,
    UGraph,
    indexings,
    is_connected,
    make_ugraph,
)

WEB_N_CAP = 8
WEB_EDGE_CAP = 12
INT64_MAX = 2**63 - 1


def path_graph(n: int) -> UGraph:
    """Path on vertices 1..n (n >= 2)."""
    if type(n) is not int or n < 2:
        raise GraphError(f"a path needs n >= 2, got {n!r}")
    return make_ugraph(n, [(i, i + 1) for i in range(1, n)])


def cycle_graph(n: int) -> UGraph:
    """Cycle on vertices 1..n (n >= 3)."""
    if type(n) is not int or n < 3:
        raise GraphError(f"a cycle needs n >= 3, got {n!r}")
    return make_ugraph(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])


def star_graph(n: int) -> UGraph:
    """Star with center 1 and leaves 2..n (n >= 2)."""
    if type(n) is not int or n < 2:
        raise GraphError(f"a star needs n >= 2, got {n!r}")
    return make_ugraph(n, [(1, k) for k in range(2, n + 1)])


def complete_graph(n: int) -> UGraph:
    """Complete graph on 1..n (n >= 2)."""
    if type(n) is not int or n < 2:
        raise GraphError(f"a complete graph needs n >= 2, got {n!r}")
    return make_ugraph(n, list(itertools.combinations(range(1, n + 1), 2)))


def web_count_formula(n: int, eps: int) -> int:
    """The half-formula count n! * 2^eps / 2.

    Errors out past the signed 64-bit range so downstream consumers can
    rely on machine-width counts.
    """
    value = math.factorial(n) * 2**eps // 2
    if value > INT64_MAX:
        raise OverflowError(f"web count {value} exceeds the 64-bit range")
    return value


def enumerate_webs(
    g: UGraph,
    dedup: bool = False,
    *,
    n_cap: int = WEB_N_CAP,
    edge_cap: int = WEB_EDGE_CAP,
) -> Iterator[Web]:
    """Stream the webs of a connected base graph.

    Outer loop: indexings in lexicographic order.  Inner loop: direction
    bits in binary counting order applied to the sorted base edges.
    With dedup, each arc set is emitted once, at first occurrence.
    """
    if not is_connected(g):
        raise GraphError("base graph must be connected")
    if g.n > n_cap:
        raise CapExceeded(f"n={g.n} exceeds the web enumeration cap {n_cap}")
    eps = len(g.edges)
    if eps > edge_cap:
        raise CapExceeded(f"{eps} edges exceed the web enumeration cap {edge_cap}")

    def gen() -> Iterator[Web]:
        seen: set[tuple[tuple[int, int], ...]] = set()
        for labels in indexings(g.n, cap=n_cap):
            for mask in range(1 << eps):
                arcs = []
                for k, (p, q) in enumerate(g.edges):
                    a, b = labels[p - 1], labels[q - 1]
                    arcs.append((a, b) if not mask >> k & 1 else (b, a))
                key = tuple(sorted(arcs))
                if dedup:
                    if key in seen:
                        continue
                    seen.add(key)
                yield Web(Digraph(g.n, key))

    return gen()


def automorphism_count(g: UGraph, cap: int = WEB_N_CAP) -> int:
    """|Aut(g)| by brute-force permutation check."""
    if g.n > cap:
        raise CapExceeded(f"n={g.n} exceeds the automorphism cap {cap}")
    edges = set(g.edges)
    count = 0
    for perm in itertools.permutations(range(1, g.n + 1)):
        mapped = {
            (min(perm[u - 1], perm[v - 1]), max(perm[u - 1], perm[v - 1]))
            for u, v in edges
        }
        if mapped == edges:
            count += 1
    return count


@lru_cache(maxsize=None)
def _web_grog_values(g: UGraph, arc_cap: int, n_cap: int, edge_cap: int) -> tuple[int, ...]:
    """Exact grog number of every deduplicated web, in stream order."""
    return tuple(
        solve_exact(w, cap=arc_cap).grog
        for w in enumerate_webs(g, dedup=True, n_cap=n_cap, edge_cap=edge_cap)
    )


@dataclass(frozen=True)
class GraphGrogResult:
    """Graph-level grog number with its witness web and strategy."""

    grog: int
    web: Web
    strategy: Strategy


def grog_number(
    g: UGraph,
    *,
    arc_cap: int = SOLVER_ARC_CAP,
    n_cap: int = WEB_N_CAP,
    edge_cap: int = WEB_EDGE_CAP,
) -> GraphGrogResult:
    """Minimum grog number over every indexing and orientation of g.

    The witness is the first optimal web in stream order; since dedup
    preserves first occurrences, the same witness results with or
    without deduplication.
    """
    values = _web_grog_values(g, arc_cap, n_cap, edge_cap)
    best = min(values)
    idx = values.index(best)
    web = next(
        itertools.islice(
            enumerate_webs(g, dedup=True, n_cap=n_cap, edge_cap=edge_cap), idx, None
        )
    )
    return GraphGrogResult(best, web, solve_exact(web, cap=arc_cap).witness)


def residual_distribution(
    g: UGraph,
    *,
    arc_cap: int = SOLVER_ARC_CAP,
    n_cap: int = WEB_N_CAP,
    edge_cap: int = WEB_EDGE_CAP,
) -> dict[int, int]:
    """Histogram grog number -> web count over the deduplicated webs."""
    values = _web_grog_values(g, arc_cap, n_cap, edge_cap)
    return dict(sorted(Counter(values).items()))
