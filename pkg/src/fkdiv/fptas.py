"""Approximation wrapper around the exact solvers.

Running any space-aware solver on a rounded space caps each class at
O(log UB / eps) coexisting states while keeping true profiles alongside,
so the reported value is always realizable and, for the ordered solver,
at least the optimum divided by 1+eps. The accuracy parameter must
arrive as an exact decimal string or Fraction; binary floats would
silently change the grid.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cocomp import iter_layer_tables, solve_cocomparability
from .graphs import Instance
from .orientation import complement_orientation, topological_sort
from .profiles import ProfileSpace
from .rounding import ZERO, RoundedProfileSpace, RoundedStateSet, RoundingGrid


def parse_epsilon(value) -> Fraction:
    """Exact accuracy parameter from a decimal string or rational."""
    if isinstance(value, float):
        raise TypeError(
            "pass the accuracy as a string like '0.1'; floats are inexact"
        )
    if isinstance(value, Fraction):
        eps = value
    elif isinstance(value, int):
        eps = Fraction(value)
    elif isinstance(value, str):
        try:
            eps = Fraction(value)
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"cannot read accuracy parameter {value!r}") from None
    else:
        raise TypeError(f"unsupported accuracy type {type(value).__name__}")
    if eps <= 0:
        raise ValueError("accuracy parameter must be positive")
    return eps


@dataclass(frozen=True)
class FptasResult:
    value: int
    profile: tuple
    witness: tuple
    epsilon: Fraction
    grid: RoundingGrid
    states: RoundedStateSet


def solve_approx(
    instance: Instance, epsilon, solver=solve_cocomparability, **solver_kwargs
) -> FptasResult:
    """Run `solver` on the rounded space and select the best true value.

    The witness is a valid partial coloring and `value` is its exact
    minimum profit, so the result never overshoots the optimum.
    """
    eps = parse_epsilon(epsilon)
    grid = RoundingGrid.for_instance(instance, eps)
    space = RoundedProfileSpace(instance.k, grid)
    states = solver(instance, space=space, **solver_kwargs)
    value, true, witness = states.best_true()
    return FptasResult(
        value=value,
        profile=true,
        witness=witness,
        epsilon=eps,
        grid=grid,
        states=states,
    )


def paired_rounding_check(instance: Instance, epsilon) -> dict:
    """Run the ordered solver exactly and rounded in lockstep and verify
    the rounding invariants layer by layer.

    Checks, per layer: both runs materialize exactly the same state
    keys (the rounding never changes which states exist, only what each
    one holds); every rounded entry keeps a grid value at most its true
    profit; the true profit stays within one grid factor per item added
    to that class; and the sentinel index appears exactly for classes
    with true profit zero. Returns counters of everything checked.
    """
    eps = parse_epsilon(epsilon)
    grid = RoundingGrid.for_instance(instance, eps)
    orientation = complement_orientation(instance.graph)
    order = topological_sort(instance.graph.n, orientation.arcs)
    exact_space = ProfileSpace.for_instance(instance, track_witnesses=True)
    rounded_space = RoundedProfileSpace(instance.k, grid)

    exact_run = iter_layer_tables(instance, order, orientation, exact_space)
    rounded_run = iter_layer_tables(instance, order, orientation, rounded_space)
    layers = cells = entries = 0
    for (j1, _v1, exact_table), (j2, _v2, rounded_table) in zip(
        exact_run, rounded_run, strict=True
    ):
        assert j1 == j2
        if exact_table.keys() != rounded_table.keys():
            raise AssertionError(
                f"layer {j1}: exact and rounded state keys differ"
            )
        layers += 1
        for key, states in rounded_table.items():
            cells += 1
            for idx_key, true, witness in states.items():
                entries += 1
                for cls in range(instance.k):
                    t = idx_key[cls]
                    q = true[cls]
                    additions = len(witness[cls])
                    if t == ZERO:
                        if q != 0:
                            raise AssertionError(
                                f"layer {j1} cell {key}: sentinel with profit {q}"
                            )
                        continue
                    if q == 0:
                        raise AssertionError(
                            f"layer {j1} cell {key}: zero profit at index {t}"
                        )
                    if not grid.endpoint_le_value(t, q):
                        raise AssertionError(
                            f"layer {j1} cell {key}: grid value exceeds truth"
                        )
                    if not grid.value_le_endpoint(q, additions + t):
                        raise AssertionError(
                            f"layer {j1} cell {key}: truth drifted beyond "
                            f"{additions} grid factors"
                        )
    return {"layers": layers, "cells": cells, "entries": entries}
