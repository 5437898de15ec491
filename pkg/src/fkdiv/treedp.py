"""Dynamic programs over nice tree decompositions.

One engine serves two entry points: chordal graphs get clique-tree bags
(where any class holds at most one bag vertex), and bounded-treewidth
inputs get whatever decomposition is supplied or the min-fill heuristic
finds. Table keys are bag colorings, class 0 meaning uncolored, stored
as tuples aligned with the sorted bag.
"""

from __future__ import annotations

from .decomposition import (
    NiceTreeDecomposition,
    TreeDecomposition,
    chordal_peo,
    clique_tree,
    make_nice,
    minfill_decomposition,
    verify_decomposition,
)
from .graphs import Instance
from .profiles import ProfileSpace


def bag_profile(instance: Instance, bag, coloring) -> tuple:
    """Per-class profit contributed by bag vertices under `coloring`."""
    out = [0] * instance.k
    for v, c in zip(bag, coloring):
        if c > 0:
            out[c - 1] += instance.profit(c - 1, v)
    return tuple(out)


def _run(instance: Instance, nice: NiceTreeDecomposition, space):
    graph = instance.graph
    k = instance.k
    tables: dict = {}
    for node_id in nice.postorder():
        node = nice.nodes[node_id]
        if node.kind == "leaf":
            tables[node_id] = {(): space.zero()}
        elif node.kind == "introduce":
            (child_id,) = node.children
            child_bag = nice.nodes[child_id].bag
            child_table = tables.pop(child_id)
            v = node.vertex
            pos = node.bag.index(v)
            table = {}
            for key, cell in child_table.items():
                base = key[:pos] + (0,) + key[pos:]
                table[base] = cell
                for c in range(1, k + 1):
                    if any(
                        key[i] == c and graph.has_edge(child_bag[i], v)
                        for i in range(len(key))
                    ):
                        continue
                    target = key[:pos] + (c,) + key[pos:]
                    table[target] = space.finalize(
                        cell.extended(c - 1, instance.profit(c - 1, v), v)
                    )
            tables[node_id] = table
        elif node.kind == "forget":
            (child_id,) = node.children
            child_bag = nice.nodes[child_id].bag
            child_table = tables.pop(child_id)
            pos = child_bag.index(node.vertex)
            table = {}
            for key, cell in child_table.items():
                target = key[:pos] + key[pos + 1 :]
                acc = table.get(target)
                if acc is None:
                    acc = space.empty()
                    table[target] = acc
                acc.union_update(cell)
            tables[node_id] = {
                key: space.finalize(cell) for key, cell in table.items()
            }
        elif node.kind == "join":
            left_id, right_id = node.children
            left = tables.pop(left_id)
            right = tables.pop(right_id)
            table = {}
            for key, lcell in left.items():
                rcell = right.get(key)
                if rcell is None:
                    continue
                shared = bag_profile(instance, node.bag, key)
                table[key] = space.finalize(lcell.combine(rcell, minus=shared))
            tables[node_id] = table
        else:
            raise ValueError(f"unknown node kind {node.kind!r}")
    root_table = tables[nice.root]
    result = space.empty()
    for cell in root_table.values():
        result.union_update(cell)
    return space.finalize(result)


def solve_on_decomposition(
    instance: Instance,
    td: TreeDecomposition,
    *,
    space=None,
    witnesses: bool = False,
    prune: bool = False,
    verify: bool = True,
):
    """Profile set of `instance` computed over the given decomposition."""
    if verify:
        verify_decomposition(instance.graph, td)
    if space is None:
        space = ProfileSpace.for_instance(
            instance, track_witnesses=witnesses, prune=prune
        )
    nice = make_nice(td)
    return _run(instance, nice, space)


def solve_chordal(
    instance: Instance,
    *,
    space=None,
    witnesses: bool = False,
    prune: bool = False,
):
    """Profile set via a clique tree; NotChordalError if inapplicable."""
    peo = chordal_peo(instance.graph)
    td = clique_tree(instance.graph, peo)
    return solve_on_decomposition(
        instance, td, space=space, witnesses=witnesses, prune=prune, verify=False
    )


def solve_treewidth(
    instance: Instance,
    *,
    td: TreeDecomposition | None = None,
    space=None,
    witnesses: bool = False,
    prune: bool = False,
):
    """Profile set over a supplied or heuristically built decomposition."""
    if td is None:
        td = minfill_decomposition(instance.graph)
        verify = False
    else:
        verify = True
    return solve_on_decomposition(
        instance, td, space=space, witnesses=witnesses, prune=prune, verify=verify
    )
