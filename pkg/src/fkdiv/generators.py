"""Seeded instance generators for the supported graph families.

Every family takes (n, k, max_profit, seed) and yields a ParsedInstance
with profits drawn uniformly from 0..max_profit; the biconvex and
edgeless families also emit side orderings. All randomness flows
through one random.Random(seed), so equal parameters give equal bytes
after serialization.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from .decomposition import chordal_peo
from .errors import ParameterOutOfRangeError, UnknownFamilyError
from .graphs import Graph, Instance, canonical_edge
from .instance_io import ParsedInstance

FAMILIES = (
    "edgeless",
    "interval",
    "chordal",
    "biconvex",
    "random",
    "permutation",
    "clique-reduction",
)


def _profits(rng: random.Random, n: int, k: int, max_profit: int):
    return [[rng.randint(0, max_profit) for _ in range(n)] for _ in range(k)]


def _check_common(n: int, k: int, max_profit: int) -> None:
    if n < 1:
        raise ParameterOutOfRangeError("n must be at least 1")
    if k < 1:
        raise ParameterOutOfRangeError("k must be at least 1")
    if max_profit < 0:
        raise ParameterOutOfRangeError("max-profit must be nonnegative")


def _edgeless(rng, n, k, max_profit):
    half = (n + 1) // 2
    return ParsedInstance(
        instance=Instance(Graph(n, []), _profits(rng, n, k, max_profit)),
        declared_class="edgeless",
        order_a=tuple(range(half)),
        order_b=tuple(range(half, n)),
    )


def _interval(rng, n, k, max_profit):
    span = 2 * n
    intervals = []
    for _ in range(n):
        lo = rng.randint(1, span)
        hi = rng.randint(lo, span)
        intervals.append((lo, hi))
    edges = [
        (u, v)
        for u, v in combinations(range(n), 2)
        if intervals[u][0] <= intervals[v][1] and intervals[v][0] <= intervals[u][1]
    ]
    return ParsedInstance(
        instance=Instance(Graph(n, edges), _profits(rng, n, k, max_profit)),
        declared_class="interval",
    )


def _chordal(rng, n, k, max_profit):
    # Clique-attachment growth; optionally grow larger then induce back
    # down, which keeps chordality but varies the shape.
    total = n if n < 3 or rng.random() < 0.5 else n + rng.randint(1, n // 2)
    w = rng.randint(1, min(3, max(1, total - 1)))
    cliques = [tuple(range(min(w + 1, total)))]
    edges = set(combinations(cliques[0], 2))
    for v in range(len(cliques[0]), total):
        base = rng.choice(cliques)
        size = min(w, len(base))
        anchor = tuple(sorted(rng.sample(base, size)))
        for u in anchor:
            edges.add(canonical_edge(u, v))
        cliques.append(anchor + (v,))
    if total > n:
        keep = sorted(rng.sample(range(total), n))
        graph, _ = Graph(total, sorted(edges)).induced(keep)
    else:
        graph = Graph(total, sorted(edges))
    assert chordal_peo(graph)
    return ParsedInstance(
        instance=Instance(graph, _profits(rng, n, k, max_profit)),
        declared_class="chordal",
    )


def _monotone(rng, count, lo, hi):
    return sorted(rng.randint(lo, hi) for _ in range(count))


def _biconvex(rng, n, k, max_profit):
    if n == 1:
        return ParsedInstance(
            instance=Instance(Graph(1, []), _profits(rng, 1, k, max_profit)),
            declared_class="biconvex",
            order_a=(0,),
            order_b=(),
        )
    t = rng.randint(1, max(1, n // 2))
    a_total = n - t
    tail_l = rng.randint(0, a_total - 1)
    tail_r = rng.randint(0, a_total - 1 - tail_l)
    mid = a_total - tail_l - tail_r

    lo = _monotone(rng, mid, 1, t)
    lo[0] = 1
    hi = _monotone(rng, mid, 1, t)
    hi[-1] = t
    hi = [max(a, b) for a, b in zip(lo, hi)]
    left_reach = _monotone(rng, tail_l, 1, hi[0])
    right_reach = _monotone(rng, tail_r, lo[-1], t)

    ids = list(range(n))
    rng.shuffle(ids)
    order_a_roles = []
    for h in left_reach:
        order_a_roles.append((1, h))
    for pair in zip(lo, hi):
        order_a_roles.append(pair)
    for l in right_reach:
        order_a_roles.append((l, t))
    order_a = tuple(ids[i] for i in range(a_total))
    order_b = tuple(ids[a_total + j] for j in range(t))
    edges = []
    for i, (l, h) in enumerate(order_a_roles):
        for spot in range(l, h + 1):
            edges.append(canonical_edge(order_a[i], order_b[spot - 1]))
    graph = Graph(n, sorted(set(edges)))
    return ParsedInstance(
        instance=Instance(graph, _profits(rng, n, k, max_profit)),
        declared_class="biconvex",
        order_a=order_a,
        order_b=order_b,
    )


def _random_graph(rng, n, k, max_profit):
    density = rng.uniform(0.1, 0.9)
    edges = [e for e in combinations(range(n), 2) if rng.random() < density]
    return ParsedInstance(
        instance=Instance(Graph(n, edges), _profits(rng, n, k, max_profit)),
        declared_class="random",
    )


def _permutation(rng, n, k, max_profit):
    perm = list(range(n))
    rng.shuffle(perm)
    edges = [
        (u, v) for u, v in combinations(range(n), 2) if perm[u] > perm[v]
    ]
    return ParsedInstance(
        instance=Instance(Graph(n, edges), _profits(rng, n, k, max_profit)),
        declared_class="permutation",
    )


@dataclass(frozen=True)
class CliqueReductionParams:
    """Bookkeeping for the clique-search instance built from a graph."""

    source_n: int
    source_m: int
    ell: int
    k: int
    threshold: int  # every class can reach this iff the source has an
    # ell-clique
    anchor_profit: int  # the conflict-free anchor item
    blocker_profit: int  # the item conflicting with every source vertex
    vertex_items: tuple
    edge_items: tuple
    anchor_item: int
    blocker_items: tuple


def build_clique_reduction(source: Graph, ell: int, k: int):
    """Instance whose max-min value reaches the threshold exactly when
    the source graph contains a clique on ell vertices.

    Items are the source's vertices and edges plus k special items; one
    special item conflicts with nothing, the others conflict with every
    source vertex. Profits are identical across classes and scaled so a
    class holding the conflict-free item must route exactly a clique's
    worth of edges away from the class holding a blocker.
    """
    n, m = source.n, source.m
    if k < 2:
        raise ParameterOutOfRangeError("the reduction needs k >= 2")
    if not (2 <= ell <= n):
        raise ParameterOutOfRangeError(f"ell must be in 2..{n}")
    pairs = ell * (ell - 1) // 2
    if m < pairs:
        raise ParameterOutOfRangeError(
            f"source has only {m} edges, an ell-clique needs {pairs}"
        )
    n1 = n**4
    q = n1 + pairs * n + (n - ell)
    n2 = q - (m - pairs) * n

    vertex_items = tuple(range(n))
    edge_items = tuple(range(n, n + m))
    anchor = n + m
    blockers = tuple(range(n + m + 1, n + m + k))
    total = n + m + k

    edges = []
    source_edges = sorted(source.edges)
    for idx, (u, v) in enumerate(source_edges):
        edges.append((u, n + idx))
        edges.append((v, n + idx))
    for b in blockers:
        for v in vertex_items:
            edges.append((v, b))
    graph = Graph(total, edges)

    profit = [0] * total
    for v in vertex_items:
        profit[v] = 1
    for e in edge_items:
        profit[e] = n
    profit[anchor] = n1
    if blockers:
        profit[blockers[0]] = n2
        for b in blockers[1:]:
            profit[b] = q
    rows = [list(profit) for _ in range(k)]
    instance = Instance(graph, rows)
    params = CliqueReductionParams(
        source_n=n,
        source_m=m,
        ell=ell,
        k=k,
        threshold=q,
        anchor_profit=n1,
        blocker_profit=n2,
        vertex_items=vertex_items,
        edge_items=edge_items,
        anchor_item=anchor,
        blocker_items=blockers,
    )
    return instance, params


def _clique_reduction(rng, n, k, max_profit, ell):
    if ell is None:
        raise ParameterOutOfRangeError("family clique-reduction needs --ell")
    if not (2 <= ell <= n):
        raise ParameterOutOfRangeError(f"ell must be in 2..{n}")
    while True:
        edges = [e for e in combinations(range(n), 2) if rng.random() < 0.5]
        if len(edges) >= ell * (ell - 1) // 2:
            break
    source = Graph(n, edges)
    instance, _params = build_clique_reduction(source, ell, k)
    return ParsedInstance(instance=instance, declared_class="clique-reduction")


def build_family(
    family: str,
    n: int,
    k: int,
    max_profit: int,
    seed: int,
    ell: int | None = None,
) -> ParsedInstance:
    """One seeded instance of the named family."""
    _check_common(n, k, max_profit)
    rng = random.Random(seed)
    if family == "edgeless":
        return _edgeless(rng, n, k, max_profit)
    if family == "interval":
        return _interval(rng, n, k, max_profit)
    if family == "chordal":
        return _chordal(rng, n, k, max_profit)
    if family == "biconvex":
        return _biconvex(rng, n, k, max_profit)
    if family == "random":
        return _random_graph(rng, n, k, max_profit)
    if family == "permutation":
        return _permutation(rng, n, k, max_profit)
    if family == "clique-reduction":
        return _clique_reduction(rng, n, k, max_profit, ell)
    raise UnknownFamilyError(f"unknown family {family!r}, choose from {FAMILIES}")
