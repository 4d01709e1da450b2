"""Labelled directed and undirected graphs with strict validation.

Vertices are the integers 1..n and double as labels: in a predation web
the vertex labelled i starts with population i.  Arcs are ordered pairs
and edges unordered pairs, both stored sorted so that every stream,
witness and tie-break in the package is reproducible run to run.

Anti-parallel arc pairs ((u, v) together with (v, u)) are rejected
globally: every digraph here is an orientation of a simple graph, so
2-cycles never arise and the game-state encoding can identify an arc
with the undirected edge it orients.
"""

from __future__ import annotations

import itertools
from collections import defaultdict, deque
from dataclasses import dataclass
from typing import Iterable, Iterator


class GraphError(ValueError):
    """Invalid graph data: bad index, self-loop, duplicate, parse error."""


class CapExceeded(GraphError):
    """A size cap was exceeded.

    Caps are hard errors rather than truncations, so no result is ever
    silently partial.
    """


ORIENTATION_EDGE_CAP = 20
INDEXING_CAP = 8


@dataclass(frozen=True)
class Digraph:
    """Simple directed graph on vertices 1..n, arcs sorted by (tail, head)."""

    n: int
    arcs: tuple[tuple[int, int], ...]

    def out_neighbors(self, v: int) -> list[int]:
        return [h for t, h in self.arcs if t == v]

    def in_neighbors(self, v: int) -> list[int]:
        return [t for t, h in self.arcs if h == v]

    def out_degree(self, v: int) -> int:
        return sum(1 for t, _ in self.arcs if t == v)

    def in_degree(self, v: int) -> int:
        return sum(1 for _, h in self.arcs if h == v)


@dataclass(frozen=True)
class UGraph:
    """Simple undirected graph on vertices 1..n, edges sorted with u < v."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def neighbors(self, v: int) -> list[int]:
        out = []
        for u, w in self.edges:
            if u == v:
                out.append(w)
            elif w == v:
                out.append(u)
        return out

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))


# An indexing assigns labels 1..n to the n structural positions of a base
# graph; position p carries label indexing[p - 1].
Indexing = tuple[int, ...]


def _check_vertex(v, n: int) -> int:
    if type(v) is not int:
        raise GraphError(f"vertex index must be an integer, got {v!r}")
    if not 1 <= v <= n:
        raise GraphError(f"vertex index {v} out of range 1..{n}")
    return v


def make_digraph(n: int, arcs: Iterable[tuple[int, int]]) -> Digraph:
    """Build a validated digraph.

    Raises GraphError on a self-loop, a duplicate arc, an anti-parallel
    pair, or a vertex index outside 1..n.  Duplicates are an error, not
    silently merged.
    """
    if type(n) is not int or n < 0:
        raise GraphError(f"vertex count must be a non-negative integer, got {n!r}")
    seen: set[tuple[int, int]] = set()
    for arc in arcs:
        try:
            t, h = arc
        except (TypeError, ValueError):
            raise GraphError(f"arc must be a (tail, head) pair, got {arc!r}") from None
        _check_vertex(t, n)
        _check_vertex(h, n)
        if t == h:
            raise GraphError(f"self-loop ({t}, {h}) not allowed")
        if (t, h) in seen:
            raise GraphError(f"duplicate arc ({t}, {h})")
        if (h, t) in seen:
            raise GraphError(f"anti-parallel pair ({h}, {t}) and ({t}, {h})")
        seen.add((t, h))
    return Digraph(n, tuple(sorted(seen)))


def make_ugraph(n: int, edges: Iterable[tuple[int, int]]) -> UGraph:
    """Build a validated undirected graph (no self-loops or duplicates)."""
    if type(n) is not int or n < 0:
        raise GraphError(f"vertex count must be a non-negative integer, got {n!r}")
    seen: set[tuple[int, int]] = set()
    for edge in edges:
        try:
            u, v = edge
        except (TypeError, ValueError):
            raise GraphError(f"edge must be a (u, v) pair, got {edge!r}") from None
        _check_vertex(u, n)
        _check_vertex(v, n)
        if u == v:
            raise GraphError(f"self-loop {{{u}, {v}}} not allowed")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphError(f"duplicate edge {{{key[0]}, {key[1]}}}")
        seen.add(key)
    return UGraph(n, tuple(sorted(seen)))


def underlying(d: Digraph) -> UGraph:
    """Forget arc directions.  Edge count always equals arc count because
    anti-parallel pairs are rejected at construction."""
    return UGraph(d.n, tuple(sorted((min(t, h), max(t, h)) for t, h in d.arcs)))


def orientations(g: UGraph, cap: int = ORIENTATION_EDGE_CAP) -> Iterator[Digraph]:
    """Stream all 2^eps orientations of g.

    Deterministic order: edges sorted, direction bits in binary counting
    order (bit k of the counter flips edge k; bit 0 keeps the u < v
    direction).  Refuses graphs with more than `cap` edges.
    """
    eps = len(g.edges)
    if eps > cap:
        raise CapExceeded(f"{eps} edges exceed the orientation cap {cap}")

    def gen() -> Iterator[Digraph]:
        for mask in range(1 << eps):
            arcs = tuple(sorted(
                (u, v) if not mask >> k & 1 else (v, u)
                for k, (u, v) in enumerate(g.edges)
            ))
            yield Digraph(g.n, arcs)

    return gen()


def indexings(n: int, cap: int = INDEXING_CAP) -> Iterator[Indexing]:
    """Stream all n! label assignments in lexicographic order."""
    if type(n) is not int or n < 1:
        raise GraphError(f"need n >= 1, got {n!r}")
    if n > cap:
        raise CapExceeded(f"n={n} exceeds the indexing cap {cap}")
    return iter(itertools.permutations(range(1, n + 1)))


def is_connected(g: UGraph) -> bool:
    """True iff g has a single connected component (n >= 1 required)."""
    if g.n < 1:
        raise GraphError("connectivity needs at least one vertex")
    adj = defaultdict(list)
    for u, v in g.edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = {1}
    queue = deque([1])
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == g.n


# ---------------------------------------------------------------------------
# serialization: JSON dictionaries and DOT text
# ---------------------------------------------------------------------------

def digraph_to_json(d: Digraph) -> dict:
    return {"n": d.n, "arcs": [list(a) for a in d.arcs]}


def digraph_from_json(obj) -> Digraph:
    if not isinstance(obj, dict) or "n" not in obj or "arcs" not in obj:
        raise GraphError('digraph JSON must be {"n": <int>, "arcs": [[tail, head], ...]}')
    arcs = obj["arcs"]
    if not isinstance(arcs, list):
        raise GraphError('"arcs" must be a list of [tail, head] pairs')
    return make_digraph(obj["n"], [tuple(a) if isinstance(a, list) else a for a in arcs])


def ugraph_to_json(g: UGraph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edges]}


def ugraph_from_json(obj) -> UGraph:
    if not isinstance(obj, dict) or "n" not in obj or "edges" not in obj:
        raise GraphError('graph JSON must be {"n": <int>, "edges": [[u, v], ...]}')
    edges = obj["edges"]
    if not isinstance(edges, list):
        raise GraphError('"edges" must be a list of [u, v] pairs')
    return make_ugraph(obj["n"], [tuple(e) if isinstance(e, list) else e for e in edges])


def digraph_to_dot(d: Digraph) -> str:
    lines = ["digraph {"]
    lines += [f"  {v};" for v in range(1, d.n + 1)]
    lines += [f"  {t} -> {h};" for t, h in d.arcs]
    lines.append("}")
    return "\n".join(lines) + "\n"


def ugraph_to_dot(g: UGraph) -> str:
    lines = ["graph {"]
    lines += [f"  {v};" for v in range(1, g.n + 1)]
    lines += [f"  {u} -- {v};" for u, v in g.edges]
    lines.append("}")
    return "\n".join(lines) + "\n"
