"""Exhaustive reference solvers.

Slow but obviously correct: used to pin down expected values in tests
and as the last-resort backend on tiny instances. Results are
deterministic; ties resolve toward the first assignment in search
order (uncolored before class 1 before class 2, vertex by vertex).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BudgetExceededError
from .graphs import Graph, Instance


@dataclass(frozen=True)
class OracleResult:
    optimum: int
    witness: tuple
    profiles: frozenset


def _search_size(n: int, k: int) -> int:
    return (k + 1) ** n


def brute_force(instance: Instance, budget: int = 10**8) -> OracleResult:
    """Enumerate every partial coloring of the conflict graph.

    Returns the max-min value, one optimal coloring (k sorted vertex
    tuples), and the set of all achievable profiles. Raises
    BudgetExceededError when (k+1)^n exceeds `budget` nodes.
    """
    n, k = instance.n, instance.k
    if _search_size(n, k) > budget:
        raise BudgetExceededError(
            f"(k+1)^n = {_search_size(n, k)} exceeds budget {budget}"
        )
    masks = instance.graph.masks
    profits = instance.profits
    assign = [0] * n
    class_mask = [0] * (k + 1)
    cur = [0] * (k + 1)
    best_val = -1
    best_assign = None
    profiles = set()

    def rec(v: int) -> None:
        nonlocal best_val, best_assign
        if v == n:
            prof = tuple(cur[1:])
            profiles.add(prof)
            val = min(prof)
            if val > best_val:
                best_val = val
                best_assign = assign.copy()
            return
        assign[v] = 0
        rec(v + 1)
        bit = 1 << v
        for c in range(1, k + 1):
            if class_mask[c] & masks[v]:
                continue
            assign[v] = c
            class_mask[c] |= bit
            cur[c] += profits[c - 1][v]
            rec(v + 1)
            class_mask[c] &= ~bit
            cur[c] -= profits[c - 1][v]
        assign[v] = 0

    rec(0)
    witness = tuple(
        tuple(v for v in range(n) if best_assign[v] == c) for c in range(1, k + 1)
    )
    return OracleResult(best_val, witness, frozenset(profiles))


def max_weight_independent_set(graph: Graph, weights, budget: int = 10**8):
    """(best weight, vertex tuple) over all independent sets.

    Subset dynamic program: a mask is independent iff dropping its lowest
    vertex leaves an independent mask with no edge back to that vertex.
    Deliberately a different algorithm from brute_force so the two can
    cross-check each other at k=1.
    """
    n = graph.n
    weights = list(weights)
    if len(weights) != n:
        raise ValueError(f"expected {n} weights, got {len(weights)}")
    if n > 0 and (1 << n) > budget:
        raise BudgetExceededError(f"2^{n} masks exceed budget {budget}")
    size = 1 << n
    indep = bytearray(size)
    indep[0] = 1
    value = [0] * size
    masks = graph.masks
    best_val, best_mask = 0, 0
    for mask in range(1, size):
        low = mask & -mask
        v = low.bit_length() - 1
        rest = mask ^ low
        if indep[rest] and not (masks[v] & rest):
            indep[mask] = 1
            val = value[rest] + weights[v]
            value[mask] = val
            if val > best_val:
                best_val = val
                best_mask = mask
    chosen = tuple(v for v in range(n) if best_mask >> v & 1)
    return best_val, chosen


def decide_satisfaction_at_least(
    instance: Instance, q: int, budget: int = 10**8
) -> bool:
    """Exact decision: can every class reach profit at least q?

    Depth-first search with an admissible bound: a branch dies as soon
    as some class cannot reach q even by taking every remaining vertex,
    and succeeds as soon as all classes already have q. Much faster than
    brute_force on instances engineered around a sharp threshold, so the
    budget is charged per visited node rather than precomputed.
    """
    n, k = instance.n, instance.k
    if q <= 0:
        return True
    visited = 0
    profits = instance.profits
    masks = instance.graph.masks
    suffix = [[0] * (n + 1) for _ in range(k)]
    for j in range(k):
        row = profits[j]
        for v in range(n - 1, -1, -1):
            suffix[j][v] = suffix[j][v + 1] + row[v]
    class_mask = [0] * k
    cur = [0] * k

    def rec(v: int) -> bool:
        nonlocal visited
        visited += 1
        if visited > budget:
            raise BudgetExceededError(f"search visited more than {budget} nodes")
        pending = [j for j in range(k) if cur[j] < q]
        if not pending:
            return True
        if v == n:
            return False
        if any(cur[j] + suffix[j][v] < q for j in pending):
            return False
        bit = 1 << v
        for j in pending:
            if class_mask[j] & masks[v] or profits[j][v] == 0:
                continue
            class_mask[j] |= bit
            cur[j] += profits[j][v]
            if rec(v + 1):
                class_mask[j] &= ~bit
                cur[j] -= profits[j][v]
                return True
            class_mask[j] &= ~bit
            cur[j] -= profits[j][v]
        return rec(v + 1)

    return rec(0)
