"""Competition graphs and the Jaco-graph closed form.

Two vertices compete when they share at least one common out-neighbor
(common prey).  For Jaco graphs of order at least 5 the competition
graph also has a closed form: take the undirected subgraph induced by
v_3 .. v_{n-1}, remove the edge from each v_i (3 <= i <= n-2) to its
furthest out-neighbor v_{i + d+(v_i)} whenever that endpoint still lies
inside the induced range, and re-attach v_1, v_2, v_n as isolated
vertices.  check_theorem_1_1 compares the two routes edge for edge.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations

from .graphs import Digraph, GraphError, UGraph, ugraph_to_dot, ugraph_to_json
from .jaco import build_jaco


@dataclass(frozen=True)
class CompetitionGraph:
    """Undirected competition graph plus its isolated vertices.

    The vertex set of the source digraph is kept in full; `isolated`
    lists the vertices with no incident competition edge.
    """

    ugraph: UGraph
    isolated: tuple[int, ...]


def _with_isolated(n: int, edges: set[tuple[int, int]]) -> CompetitionGraph:
    touched = {v for e in edges for v in e}
    isolated = tuple(v for v in range(1, n + 1) if v not in touched)
    return CompetitionGraph(UGraph(n, tuple(sorted(edges))), isolated)


def competition_graph(d: Digraph) -> CompetitionGraph:
    """Competition graph by direct definition.

    For every vertex z, all pairs of in-neighbors of z become edges.
    """
    by_head: dict[int, list[int]] = defaultdict(list)
    for t, h in d.arcs:
        by_head[h].append(t)
    edges: set[tuple[int, int]] = set()
    for preds in by_head.values():
        for u, w in combinations(sorted(preds), 2):
            edges.add((u, w))
    return _with_isolated(d.n, edges)


def jaco_competition_closed_form(n: int) -> CompetitionGraph:
    """Closed-form competition graph of J_n(1), valid for n >= 5.

    Deletions whose far endpoint v_{i + d+(v_i)} falls outside
    v_3 .. v_{n-1} are silent no-ops; smaller orders have competition
    graphs of isolated vertices only and are served by the direct route.
    """
    if type(n) is not int or n < 5:
        raise GraphError(f"closed form needs n >= 5, got {n!r}")
    jg = build_jaco(n)
    lo, hi = 3, n - 1
    edges = {
        (min(t, h), max(t, h))
        for t, h in jg.digraph.arcs
        if lo <= t <= hi and lo <= h <= hi
    }
    for i in range(3, n - 1):
        m = i + jg.out_deg[i - 1]
        if m <= hi:
            edges.discard((i, m))
    return _with_isolated(n, edges)


@dataclass(frozen=True)
class TheoremCheck:
    """Per-order comparison of the closed form against the definition."""

    n_min: int
    n_max: int
    results: tuple[dict, ...]

    @property
    def all_equal(self) -> bool:
        return all(r["equal"] for r in self.results)


def check_theorem_1_1(n_max: int) -> TheoremCheck:
    """Compare closed form and direct computation for 5 <= n <= n_max.

    Disagreements are data, not errors: each failing order carries the
    missing and extra edge sets.
    """
    if type(n_max) is not int or n_max < 5:
        raise GraphError(f"theorem domain starts at n = 5, got n_max {n_max!r}")
    results = []
    for n in range(5, n_max + 1):
        closed = jaco_competition_closed_form(n)
        direct = competition_graph(build_jaco(n).digraph)
        entry: dict = {"n": n, "equal": closed == direct}
        if not entry["equal"]:
            ce, de = set(closed.ugraph.edges), set(direct.ugraph.edges)
            entry["missing"] = sorted(de - ce)
            entry["extra"] = sorted(ce - de)
            entry["isolated_closed"] = list(closed.isolated)
            entry["isolated_direct"] = list(direct.isolated)
        results.append(entry)
    return TheoremCheck(5, n_max, tuple(results))


def competition_to_json(c: CompetitionGraph) -> dict:
    obj = ugraph_to_json(c.ugraph)
    obj["isolated"] = list(c.isolated)
    return obj


def competition_to_dot(c: CompetitionGraph) -> str:
    return ugraph_to_dot(c.ugraph)
