"""Ordered dynamic program over a transitively oriented complement.

With the complement's arcs forming a strict partial order, independent
sets of the conflict graph are exactly chains of that order, so a class
is grown by remembering only its latest vertex. States are k-tuples of
positions in a fixed topological order (0 meaning the class is still
empty); each state holds the profiles realizable with those latest
vertices.
"""

from __future__ import annotations

from .graphs import Instance
from .orientation import Orientation, complement_orientation, topological_sort
from .profiles import ProfileSpace


def initial_table(space) -> dict:
    return {(0,) * space.k: space.zero()}


def layer_step(table: dict, j: int, vertex: int, pred_positions, vertex_profits, space) -> None:
    """Extend `table` with all states whose latest position is `j`.

    pred_positions: positions allowed as the previous latest vertex of
    the class receiving `vertex` (0 plus the positions of in-neighbors
    of `vertex`). vertex_profits: per-class profit of `vertex`. Mutates
    `table` in place; existing states stand for colorings that skip the
    vertex and stay as they are. Sources feeding one target are unioned
    first and extended once.
    """
    k = space.k
    accum = [dict() for _ in range(k)]
    for key, cell in table.items():
        for s in range(k):
            if key[s] in pred_positions:
                target = key[:s] + (j,) + key[s + 1 :]
                acc = accum[s].get(target)
                if acc is None:
                    acc = space.empty()
                    accum[s][target] = acc
                acc.union_update(cell)
    for s in range(k):
        for target, acc in accum[s].items():
            table[target] = space.finalize(acc.extended(s, vertex_profits[s], vertex))


def iter_layer_tables(instance: Instance, order, orientation: Orientation, space):
    """Yield (position, vertex, table) after each layer, starting at 0.

    The table object is mutated between yields; consumers wanting a
    snapshot must copy what they need before advancing.
    """
    pos = {v: i + 1 for i, v in enumerate(order)}
    table = initial_table(space)
    yield 0, None, table
    for j, v in enumerate(order, start=1):
        preds = {0}
        preds.update(pos[u] for u in orientation.in_neighbors(v))
        profits = [instance.profit(s, v) for s in range(instance.k)]
        layer_step(table, j, v, preds, profits, space)
        yield j, v, table


def solve_cocomparability(
    instance: Instance,
    *,
    orientation: Orientation | None = None,
    order=None,
    space=None,
    witnesses: bool = False,
    prune: bool = False,
):
    """Profile set over all valid partial colorings of `instance`.

    Requires the conflict graph's complement to admit a transitive
    orientation; raises NotCocomparabilityError otherwise. Pass a
    precomputed `orientation` (and optionally a topological `order` of
    it) to skip recomputation across repeated solves on the same graph.
    """
    if orientation is None:
        orientation = complement_orientation(instance.graph)
    if order is None:
        order = topological_sort(instance.graph.n, orientation.arcs)
    if space is None:
        space = ProfileSpace.for_instance(
            instance, track_witnesses=witnesses, prune=prune
        )
    table = initial_table(space)
    for _j, _v, table in iter_layer_tables(instance, order, orientation, space):
        pass
    result = space.empty()
    for cell in table.values():
        result.union_update(cell)
    return space.finalize(result)
