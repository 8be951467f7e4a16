"""Bounded exploration of the arc graph on the positive integers."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from intarcs.arcs import (
    ArcVerdict,
    FunctionId,
    PreconditionError,
    decide_arc,
    decide_sb_exact,
    eval_function,
    k_bounded_scan,
    progression_search,
)
from intarcs.arcs.oracle import first_hits
from intarcs.arcs.types import SUM_DIGITS
from intarcs.budget import DEFAULT_BUDGET, ExplorationBudget

FRIENDS = "friends"
NOT_FRIENDS = "not-friends"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class ArcEdge:
    source: int
    target: int
    verdict: ArcVerdict


@dataclass(frozen=True)
class Polygon:
    vertices: tuple[int, ...]
    edges: tuple[ArcEdge, ...]


@dataclass(frozen=True)
class Friendship:
    forward: ArcVerdict
    backward: ArcVerdict
    overall: str


@dataclass(frozen=True)
class Chain:
    vertices: tuple[int, ...]
    witnesses: tuple[int, ...]  # witnesses[i] certifies vertices[i] -> vertices[i+1]


def friends(f: FunctionId, n: int, u: int,
            budget: ExplorationBudget = DEFAULT_BUDGET) -> Friendship:
    fwd = decide_arc(f, n, u, budget)
    bwd = decide_arc(f, u, n, budget)
    if fwd.is_proven and bwd.is_proven:
        overall = FRIENDS
    elif fwd.is_refuted or bwd.is_refuted:
        overall = NOT_FRIENDS
    else:
        overall = UNKNOWN
    return Friendship(fwd, bwd, overall)


def congruence_arc(f: FunctionId, n: int, r: int, u: int,
                   budget: ExplorationBudget = DEFAULT_BUDGET) -> ArcVerdict:
    """Is there N = r (mod n) with g(N) = u?

    Exact for digit sums; other functions scan the first oracle_k_max terms
    of the progression and answer Unknown when nothing turns up.
    """
    if n < 1 or u < 1:
        raise PreconditionError("need n >= 1, u >= 1")
    if not 0 <= r < n:
        raise PreconditionError(f"residue {r} not in [0, {n})")
    if r == 0:
        return decide_arc(f, n, u, budget)
    if f.name == SUM_DIGITS:
        return decide_sb_exact(f.b, n, u, r, budget)
    N = progression_search(f, r, n, u, budget.oracle_k_max)
    if N is None:
        return ArcVerdict.unknown(f"scanned {budget.oracle_k_max} terms of {r} mod {n}")
    return ArcVerdict.proven(N)


def k_bounded_arc(f: FunctionId, n: int, u: int, k: int) -> ArcVerdict:
    """Refuted means no witness up to k*n; an unbounded arc may still exist."""
    return k_bounded_scan(f, n, u, k)


def k_bounded_chain(f: FunctionId, n: int, k: int, steps: int) -> Chain:
    """Longest strictly increasing chain from n of at most ``steps`` arcs,
    each witnessed by a multiple at most k times its source.

    Ties go to the chain whose vertices are lexicographically smallest.
    """
    if n < 1 or k < 1 or steps < 0:
        raise PreconditionError("need n >= 1, k >= 1, steps >= 0")

    @lru_cache(maxsize=None)
    def successors(a: int) -> tuple[tuple[int, int], ...]:
        hits = first_hits(f, a, a, k)
        return tuple(sorted((v, a * (j + 1)) for v, j in hits.items() if v > a))

    @lru_cache(maxsize=None)
    def longest(a: int, left: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
        best: tuple[tuple[int, ...], tuple[int, ...]] = ((a,), ())
        if left == 0:
            return best
        for v, N in successors(a):
            verts, wits = longest(v, left - 1)
            if len(verts) + 1 > len(best[0]):
                best = ((a,) + verts, (N,) + wits)
        return best

    verts, wits = longest(n, steps)
    for a, b, N in zip(verts, verts[1:], wits):
        if N % a or N > k * a or eval_function(f, N) != b:
            raise AssertionError(f"chain edge {a} -> {b} failed to verify")
    return Chain(verts, wits)


def _edge_table(f: FunctionId, vertex_bound: int, budget: ExplorationBudget) -> dict[tuple[int, int], ArcVerdict]:
    # decide_arc runs its certificate shortcuts (residue class, below-minimum) before any table
    return {
        (x, y): decide_arc(f, x, y, budget)
        for x in range(1, vertex_bound + 1)
        for y in range(1, vertex_bound + 1)
        if x != y
    }


def subgraph_export(f: FunctionId, vertex_bound: int,
                    budget: ExplorationBudget = DEFAULT_BUDGET) -> list[ArcEdge]:
    """Verdicts for every ordered pair of distinct vertices, row-major."""
    table = _edge_table(f, vertex_bound, budget)
    return [ArcEdge(x, y, v) for (x, y), v in table.items()]


def find_polygons(f: FunctionId, vertex_bound: int, length: int,
                  budget: ExplorationBudget = DEFAULT_BUDGET,
                  max_results: int = 1000) -> list[Polygon]:
    """Directed cycles through ``length`` distinct vertices <= vertex_bound.

    Each cycle is reported once, rotated so its smallest vertex comes first,
    in lexicographic order.
    """
    if length < 3:
        raise PreconditionError(f"polygon length must be at least 3, got {length}")
    table = _edge_table(f, vertex_bound, budget)
    out: list[Polygon] = []

    def walk(path: list[int]) -> bool:
        if len(path) == length:
            if table[(path[-1], path[0])].is_proven:
                cyc = path + [path[0]]
                edges = tuple(ArcEdge(a, b, table[(a, b)]) for a, b in zip(cyc, cyc[1:]))
                out.append(Polygon(tuple(path), edges))
            return len(out) >= max_results
        for y in range(path[0] + 1, vertex_bound + 1):
            if y not in path and table[(path[-1], y)].is_proven:
                if walk(path + [y]):
                    return True
        return False

    for start in range(1, vertex_bound + 1):
        if walk([start]):
            break
    return out
