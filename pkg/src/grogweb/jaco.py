"""Finite Jaco graphs J_n(1) and their Jaconian vertex.

The infinite construction puts an arc (v_i, v_j), i < j, exactly when
2i - d^-(v_i) >= j, where d^-(v_i) is the in-degree v_i has accumulated.
Processing heads j in increasing order makes this well defined: all arcs
into v_i have head i, so d^-(v_i) is final before v_i is ever consulted
as a tail.  The order-n graph is obtained by lobbing off every vertex
above n together with the arcs into it, which is the same as stopping
the iteration at j = n.  Consequently the order-n graph is a prefix of
the order-(n + 1) graph.

Out-neighbors of a tail are a consecutive run i+1 .. 2i - d^-(v_i), a
fact the competition closed form relies on.

The Jaconian vertex v_i of J_n(1) is recovered from the extension step:
going to order n + 1 adds exactly the arcs (v_{i+1}, v_{n+1}) through
(v_n, v_{n+1}), so i = n - d^-(v_{n+1}) where the in-degree is taken in
J_{n+1}(1).  Construction sanity is asserted on every query:
i + d^+(v_i) must be n or n - 1, and 2i - n must be non-negative.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import CapExceeded, Digraph, GraphError, digraph_to_json

JACO_ORDER_CAP = 10_000


@dataclass(frozen=True)
class JacoGraph:
    """J_n(1) plus its degree tables and Jaconian vertex.

    in_deg / out_deg are 1-indexed via position i - 1.  jaconian is None
    for n = 1, where the extension rule has nothing to say.
    """

    n: int
    digraph: Digraph
    in_deg: tuple[int, ...]
    out_deg: tuple[int, ...]
    jaconian: int | None


def build_jaco(n: int, cap: int = JACO_ORDER_CAP) -> JacoGraph:
    """Construct J_n(1) iteratively.

    Linear in the arc count: each tail i emits the consecutive arcs
    (i, i+1) .. (i, min(n, 2i - d^-(v_i))), and in-degrees are complete
    before they are read because arcs only point upward.
    """
    if type(n) is not int or n < 1:
        raise GraphError(f"Jaco graph order must be a positive integer, got {n!r}")
    if n > cap:
        raise CapExceeded(f"Jaco order {n} exceeds the cap {cap}")

    dminus = [0] * (n + 2)
    dplus = [0] * (n + 1)
    arcs: list[tuple[int, int]] = []
    for i in range(1, n + 1):
        hi = 2 * i - dminus[i]
        for j in range(i + 1, min(n, hi) + 1):
            arcs.append((i, j))
            dminus[j] += 1
            dplus[i] += 1

    if n >= 2:
        # in-degree v_{n+1} would have, without materializing it
        into_next = sum(1 for i in range(1, n + 1) if 2 * i - dminus[i] >= n + 1)
        jaconian = n - into_next
    else:
        jaconian = None

    return JacoGraph(
        n=n,
        digraph=Digraph(n, tuple(arcs)),
        in_deg=tuple(dminus[1:n + 1]),
        out_deg=tuple(dplus[1:]),
        jaconian=jaconian,
    )


def jaconian_vertex(n: int, cap: int = JACO_ORDER_CAP) -> int:
    """Index i of the Jaconian vertex of J_n(1), n >= 2.

    Raises RuntimeError if the construction invariants fail, which would
    signal a bug in build_jaco rather than bad input.
    """
    if type(n) is not int or n < 2:
        raise GraphError(f"Jaconian vertex needs n >= 2, got {n!r}")
    jg = build_jaco(n, cap=cap)
    i = jg.jaconian
    assert i is not None
    reach = i + jg.out_deg[i - 1]
    if reach not in (n - 1, n):
        raise RuntimeError(
            f"Jaconian invariant broken at n={n}: i + d+(v_i) = {reach}, expected {n - 1} or {n}"
        )
    if 2 * i - n < 0:
        raise RuntimeError(f"Jaconian invariant broken at n={n}: 2i - n = {2 * i - n} < 0")
    return i


def max_degree_vertices(jg: JacoGraph) -> tuple[int, ...]:
    """Vertices of maximum total degree, ascending.

    Kept alongside jaconian for cross-checking: the two notions agree on
    the smallest max-degree index for every order checked so far, and
    the verification report records any order where they differ.
    """
    deg = [jg.in_deg[k] + jg.out_deg[k] for k in range(jg.n)]
    top = max(deg)
    return tuple(i + 1 for i, d in enumerate(deg) if d == top)


def jaco_to_json(jg: JacoGraph) -> dict:
    obj = digraph_to_json(jg.digraph)
    obj["jaconian"] = jg.jaconian
    return obj
