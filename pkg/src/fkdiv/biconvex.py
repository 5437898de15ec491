"""Solver for biconvex conflict graphs with supplied orderings.

Per connected component, only the two tails of the side-A order resist
the ordered solver, and inside a tail the neighborhoods are nested. So
for every class we guess its innermost member in each tail (possibly
none). The guessed vertices' neighbors are struck from that class for
the middle solve by zeroing their profit and stripping them from the
witnesses afterwards, the guessed vertices themselves are added on top,
and the remaining tail vertices, whose neighborhoods the guesses cover,
are swept in one by one. Components merge by summing profiles.
"""

from __future__ import annotations

from itertools import product

from .bipartite import BiconvexStructure, biconvex_structure, require_biconvex_ordering
from .graphs import Instance
from .orientation import complement_orientation, topological_sort
from .profiles import ProfileSpace, merge_components
from .cocomp import solve_cocomparability


def enumerate_guesses(tail_left, tail_right, k: int):
    """All per-class picks of innermost tail members, None meaning the
    class avoids that tail; real picks never repeat a vertex."""
    for upper in product((None, *tail_left), repeat=k):
        ups = [v for v in upper if v is not None]
        if len(set(ups)) != len(ups):
            continue
        for lower in product((None, *tail_right), repeat=k):
            lows = [v for v in lower if v is not None]
            if len(set(lows)) != len(lows):
                continue
            yield upper, lower


def _augment(cur, vertices, bounds, side_ok, instance, real, space):
    """Sweep tail vertices into any class whose guessed bound covers them.

    Each vertex extends the snapshot taken before it, so one vertex
    never lands in two classes of the same witness.
    """
    k = instance.k
    for a in vertices:
        if a in real:
            continue
        additions = []
        for j in range(k):
            bound = bounds[j]
            if bound is None or not side_ok(a, bound):
                continue
            additions.append(cur.extended(j, instance.profit(j, a), a))
        if additions:
            merged = space.empty()
            merged.union_update(cur)
            for add in additions:
                merged.union_update(add)
            cur = merged
    return cur


def solve_biconvex_connected(instance: Instance, order_a, order_b, space):
    """Profile set of one connected component, in the component's ids."""
    graph = instance.graph
    k = instance.k
    st = biconvex_structure(graph, order_a, order_b)
    mid_instance, mid_ids = instance.sub_instance(st.middle)
    orientation = complement_orientation(mid_instance.graph)
    order = topological_sort(mid_instance.graph.n, orientation.arcs)
    to_mid = {g: i for i, g in enumerate(mid_ids)}
    pos = {v: i for i, v in enumerate(st.order_a)}

    result = space.empty()
    for upper, lower in enumerate_guesses(st.tail_left, st.tail_right, k):
        forbidden = []
        for j in range(k):
            banned = set()
            if upper[j] is not None:
                banned.update(graph.neighbors(upper[j]))
            if lower[j] is not None:
                banned.update(graph.neighbors(lower[j]))
            forbidden.append(frozenset(banned))
        rows = []
        for j in range(k):
            row = list(mid_instance.profits[j])
            for g in forbidden[j]:
                row[to_mid[g]] = 0
            rows.append(row)
        zeroed = mid_instance.with_profits(rows)
        cur = solve_cocomparability(
            zeroed, orientation=orientation, order=order, space=space
        )
        cur = cur.remapped(mid_ids)
        if space.track_witnesses:
            forb = forbidden

            def strip(w, forb=forb):
                return tuple(
                    tuple(x for x in cls if x not in forb[j])
                    for j, cls in enumerate(w)
                )

            cur = cur.map_witnesses(strip)
        for j in range(k):
            for boundary in (upper[j], lower[j]):
                if boundary is not None:
                    cur = cur.extended(j, instance.profit(j, boundary), boundary)
        real = {v for v in (*upper, *lower) if v is not None}
        cur = _augment(
            cur,
            st.tail_left,
            upper,
            lambda a, b: pos[a] < pos[b],
            instance,
            real,
            space,
        )
        cur = _augment(
            cur,
            tuple(reversed(st.tail_right)),
            lower,
            lambda a, b: pos[a] > pos[b],
            instance,
            real,
            space,
        )
        result.union_update(cur)
    return space.finalize(result)


def solve_biconvex(
    instance: Instance,
    order_a,
    order_b,
    *,
    space=None,
    witnesses: bool = False,
    prune: bool = False,
):
    """Profile set over all valid partial colorings of `instance`.

    order_a and order_b must be a biconvex ordering of the whole graph;
    components are carved out, solved against their restricted orders,
    and merged by profile sums.
    """
    graph = instance.graph
    if space is None:
        space = ProfileSpace.for_instance(
            instance, track_witnesses=witnesses, prune=prune
        )
    require_biconvex_ordering(graph, order_a, order_b)
    component_sets = []
    for comp in graph.components():
        if len(comp) == 1:
            v = comp[0]
            s = space.zero()
            base = space.zero()
            for j in range(instance.k):
                s.union_update(base.extended(j, instance.profit(j, v), v))
            component_sets.append(space.finalize(s))
            continue
        members = set(comp)
        sub, ids = instance.sub_instance(comp)
        to_local = {g: i for i, g in enumerate(ids)}
        local_a = tuple(to_local[v] for v in order_a if v in members)
        local_b = tuple(to_local[v] for v in order_b if v in members)
        local = solve_biconvex_connected(sub, local_a, local_b, space)
        component_sets.append(local.remapped(ids))
    return space.finalize(merge_components(component_sets))
