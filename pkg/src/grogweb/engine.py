"""The Grog predation game: validated state machine, exact and greedy solvers.

A web is an orientation of a simple connected graph in which the vertex
labelled i starts with population i.  One move picks a predator vertex
and a batch of its remaining out-arcs:

  * the batch size may not exceed the predator's current population,
  * every preyed-upon vertex needs current population at least 1,
  * each arc is consumed by use,
  * predator and prey each lose one population unit per arc.

Play halts when no remaining arc joins two positive populations.  The
residual is the total population left at that point, and the grog number
of a web is the smallest residual any strategy can reach.

Two structural facts drive the implementation.  First, each consumed arc
lowers the total population by exactly 2, and a vertex's population is
its label minus the number of consumed arcs incident to it; hence the
final state depends only on WHICH arcs were consumed, never on the
order, and residual = n(n+1)/2 - 2 * (arcs consumed).  Second, a legal
batch of size L from one predator can always be replayed as L legal
single predations (the prey are distinct heads), so searching over
single-arc moves loses nothing.  The exact solver therefore memoizes the
maximum number of further predations per remaining-arc bitmask instead
of exploring move sequences.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import factorial

from .graphs import CapExceeded, Digraph, GraphError

SOLVER_ARC_CAP = 24


class StrategyError(ValueError):
    """A strategy could not be applied; `step` is the failing batch index."""

    def __init__(self, message: str, step: int | None = None):
        super().__init__(message)
        self.step = step


class IllegalBatchError(StrategyError):
    """A predation batch violated a precondition."""


class NonTerminalError(StrategyError):
    """A strategy run with require_exit stopped before the game ended."""


@dataclass(frozen=True)
class Web:
    """A predation web: populations are fixed by the labels, pop(v_i) = i."""

    digraph: Digraph

    @property
    def n(self) -> int:
        return self.digraph.n

    @property
    def populations(self) -> tuple[int, ...]:
        return tuple(range(1, self.n + 1))

    @property
    def total_population(self) -> int:
        return self.n * (self.n + 1) // 2


@dataclass(frozen=True)
class PredationBatch:
    """One move: `predator` consumes the out-arcs to each vertex in `prey`."""

    predator: int
    prey: frozenset[int]

    def __init__(self, predator: int, prey):
        object.__setattr__(self, "predator", predator)
        object.__setattr__(self, "prey", frozenset(prey))
        if not self.prey:
            raise GraphError("a predation batch needs at least one prey vertex")


Strategy = tuple[PredationBatch, ...]


@dataclass(frozen=True)
class GrogState:
    """Remaining arcs plus current populations during a run.

    Invariant: pop(v_i) = i - (consumed arcs incident to v_i), all
    populations non-negative.
    """

    web: Web
    remaining: frozenset[tuple[int, int]]
    pop: tuple[int, ...]

    def population(self, v: int) -> int:
        return self.pop[v - 1]

    def is_terminal(self) -> bool:
        return not legal_predations(self)


@dataclass(frozen=True)
class RunResult:
    final_state: GrogState
    residual: int
    predation_count: int
    used_arcs: frozenset[tuple[int, int]]


@dataclass(frozen=True)
class SolveResult:
    grog: int
    witness: Strategy
    max_predations: int
    states_explored: int


@dataclass(frozen=True)
class GreedyResult:
    count: int
    min_residual: int


def new_state(web: Web) -> GrogState:
    """Initial state: every arc remaining, pop(v_i) = i."""
    return GrogState(web, frozenset(web.digraph.arcs), web.populations)


def legal_predations(state: GrogState) -> set[tuple[int, int]]:
    """Remaining arcs whose both endpoints still have population >= 1.

    Empty exactly when the state is terminal.
    """
    pop = state.pop
    return {(t, h) for t, h in state.remaining if pop[t - 1] >= 1 and pop[h - 1] >= 1}


def apply_batch(state: GrogState, batch: PredationBatch) -> GrogState:
    """Apply one batch, returning the amended state.

    Raises IllegalBatchError naming the violated precondition: an arc
    that is not remaining, a predator short of population, or exhausted
    prey.
    """
    pred = batch.predator
    ell = len(batch.prey)
    for p in sorted(batch.prey):
        if (pred, p) not in state.remaining:
            raise IllegalBatchError(f"arc ({pred}, {p}) is not a remaining arc")
    if state.population(pred) < ell:
        raise IllegalBatchError(
            f"predator v_{pred} has population {state.population(pred)}, "
            f"cannot predate along {ell} arcs"
        )
    for p in sorted(batch.prey):
        if state.population(p) < 1:
            raise IllegalBatchError(f"prey v_{p} has population 0")
    pop = list(state.pop)
    pop[pred - 1] -= ell
    for p in batch.prey:
        pop[p - 1] -= 1
    remaining = state.remaining - {(pred, p) for p in batch.prey}
    return GrogState(state.web, remaining, tuple(pop))


def run_strategy(web: Web, strategy: Strategy, require_exit: bool = False) -> RunResult:
    """Apply batches in order; pure and deterministic.

    The final state is not required to be terminal unless require_exit
    is set, in which case a premature stop raises NonTerminalError.
    """
    state = new_state(web)
    for step, batch in enumerate(strategy):
        try:
            state = apply_batch(state, batch)
        except IllegalBatchError as exc:
            raise IllegalBatchError(f"step {step}: {exc}", step=step) from None
    if require_exit:
        leftover = legal_predations(state)
        if leftover:
            raise NonTerminalError(
                f"strategy stops early: {len(leftover)} legal predation(s) remain",
                step=len(strategy),
            )
    used = frozenset(web.digraph.arcs) - state.remaining
    return RunResult(
        final_state=state,
        residual=sum(state.pop),
        predation_count=len(used),
        used_arcs=used,
    )


def _arc_tables(web: Web, cap: int):
    arcs = web.digraph.arcs
    if len(arcs) > cap:
        raise CapExceeded(f"{len(arcs)} arcs exceed the solver cap {cap}")
    inc = [0] * (web.n + 1)
    for k, (t, h) in enumerate(arcs):
        inc[t] |= 1 << k
        inc[h] |= 1 << k
    return arcs, inc


def solve_exact(web: Web, cap: int = SOLVER_ARC_CAP) -> SolveResult:
    """Exact grog number by memoized search over remaining-arc subsets.

    The value of a state is the maximum number of further single
    predations; grog = total population - 2 * value(initial).  The
    witness strategy is rebuilt with a deterministic tie-break: at every
    step the lexicographically smallest optimal (predator, prey) arc.
    Arcs are already sorted, so ascending arc index is that order.
    """
    arcs, inc = _arc_tables(web, cap)
    eps = len(arcs)
    full = (1 << eps) - 1
    tails = [a[0] for a in arcs]
    heads = [a[1] for a in arcs]
    memo: dict[int, int] = {}

    def best(mask: int) -> int:
        cached = memo.get(mask)
        if cached is not None:
            return cached
        used = full ^ mask
        top = 0
        rest = mask
        while rest:
            low = rest & -rest
            rest ^= low
            k = low.bit_length() - 1
            t = tails[k]
            h = heads[k]
            if (
                t - (used & inc[t]).bit_count() >= 1
                and h - (used & inc[h]).bit_count() >= 1
            ):
                value = 1 + best(mask ^ low)
                if value > top:
                    top = value
        memo[mask] = top
        return top

    max_pred = best(full)

    witness: list[PredationBatch] = []
    mask = full
    while best(mask) > 0:
        target = best(mask) - 1
        used = full ^ mask
        for k in range(eps):
            low = 1 << k
            if not mask & low:
                continue
            t = tails[k]
            h = heads[k]
            if t - (used & inc[t]).bit_count() < 1:
                continue
            if h - (used & inc[h]).bit_count() < 1:
                continue
            if best(mask ^ low) == target:
                witness.append(PredationBatch(t, (h,)))
                mask ^= low
                break
        else:
            raise RuntimeError("witness reconstruction lost the optimal line")

    return SolveResult(
        grog=web.total_population - 2 * max_pred,
        witness=tuple(witness),
        max_predations=max_pred,
        states_explored=len(memo),
    )


def enumerate_greedy(web: Web, cap: int = SOLVER_ARC_CAP) -> GreedyResult:
    """Count greedy strategies and return their minimum residual.

    A greedy strategy repeatedly picks a vertex with at least one legal
    out-arc and predates consecutively along the maximal legal number of
    them, L = min(population, legal out-arcs).  Strategies are counted
    as distinct ordered strings of single predator arcs, so a block
    contributes a factor of L! for its internal orders and one branch
    per choice of WHICH L arcs when the population is the binding limit.
    A predator's population never recovers, so blocks have pairwise
    distinct predators and the string determines the block structure.
    """
    arcs, inc = _arc_tables(web, cap)
    eps = len(arcs)
    n = web.n
    full = (1 << eps) - 1
    total = web.total_population
    tails = [a[0] for a in arcs]
    memo: dict[int, tuple[int, int]] = {}

    def walk(mask: int) -> tuple[int, int]:
        cached = memo.get(mask)
        if cached is not None:
            return cached
        used = full ^ mask
        pops = [0] * (n + 1)
        for v in range(1, n + 1):
            pops[v] = v - (used & inc[v]).bit_count()
        by_tail: dict[int, list[int]] = {}
        rest = mask
        while rest:
            low = rest & -rest
            rest ^= low
            k = low.bit_length() - 1
            t = tails[k]
            if pops[t] >= 1 and pops[arcs[k][1]] >= 1:
                by_tail.setdefault(t, []).append(k)
        if not by_tail:
            result = (1, total - 2 * used.bit_count())
        else:
            count = 0
            best_res = None
            for t in sorted(by_tail):
                legal = by_tail[t]
                ell = min(pops[t], len(legal))
                mult = factorial(ell)
                for chosen in combinations(legal, ell):
                    bits = 0
                    for k in chosen:
                        bits |= 1 << k
                    sub_count, sub_res = walk(mask ^ bits)
                    count += sub_count * mult
                    if best_res is None or sub_res < best_res:
                        best_res = sub_res
            result = (count, best_res)
        memo[mask] = result
        return result

    count, min_residual = walk(full)
    return GreedyResult(count=count, min_residual=min_residual)


# ---------------------------------------------------------------------------
# JSON forms
# ---------------------------------------------------------------------------

def strategy_to_json(strategy: Strategy) -> list:
    return [
        {"predator": b.predator, "prey": sorted(b.prey)}
        for b in strategy
    ]


def strategy_from_json(obj) -> Strategy:
    if not isinstance(obj, list):
        raise GraphError('strategy JSON must be [{"predator": <int>, "prey": [...]}, ...]')
    batches = []
    for item in obj:
        if not isinstance(item, dict) or "predator" not in item or "prey" not in item:
            raise GraphError(f"bad strategy entry: {item!r}")
        batches.append(PredationBatch(item["predator"], item["prey"]))
    return tuple(batches)


def run_result_to_json(r: RunResult) -> dict:
    return {
        "residual": r.residual,
        "predation_count": r.predation_count,
        "used_arcs": [list(a) for a in sorted(r.used_arcs)],
        "population": list(r.final_state.pop),
    }


def solve_result_to_json(r: SolveResult, include_witness: bool = True) -> dict:
    obj = {
        "grog": r.grog,
        "max_predations": r.max_predations,
        "states_explored": r.states_explored,
    }
    if include_witness:
        obj["witness"] = strategy_to_json(r.witness)
    return obj
