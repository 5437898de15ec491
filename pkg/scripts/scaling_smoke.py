"""Timing sweep for the ordered-layer solver on interval instances.

Measures wall time at a few sizes and compares growth against the
n^(k+2) * (Q+1)^k operation-count trend, where Q is the largest
per-class profit total. Run directly for a small table:

    python3 scripts/scaling_smoke.py
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass
from time import perf_counter

from fkdiv.cocomp import solve_cocomparability
from fkdiv.generators import build_family

# Below this, timer noise dominates; treat faster baselines as this slow.
BASELINE_FLOOR_SECONDS = 0.05


@dataclass(frozen=True)
class ScalingRow:
    n: int
    qbound: int
    seconds: float
    value: int


def measure_interval(n: int, k: int = 2, seed: int = 0, q_cap: int = 200) -> ScalingRow:
    """Time one pruned solve on a seeded interval instance with Q <= q_cap."""
    parsed = build_family("interval", n, k, max(1, q_cap // n), seed)
    inst = parsed.instance
    if inst.qbound > q_cap:
        raise ValueError(f"instance exceeds profit cap: {inst.qbound} > {q_cap}")
    started = perf_counter()
    table = solve_cocomparability(inst, witnesses=True, prune=True)
    elapsed = perf_counter() - started
    value, _profile, _witness = table.best()
    return ScalingRow(n=n, qbound=inst.qbound, seconds=elapsed, value=value)


def run_sweep(sizes=(10, 20, 40), k: int = 2, seed: int = 0) -> list[ScalingRow]:
    return [measure_interval(n, k=k, seed=seed) for n in sizes]


def predicted_seconds(base: ScalingRow, row: ScalingRow, k: int) -> float:
    anchor = max(base.seconds, BASELINE_FLOOR_SECONDS)
    growth = (row.n / base.n) ** (k + 2) * ((row.qbound + 1) / (base.qbound + 1)) ** k
    return anchor * growth


def worst_trend_factor(rows: list[ScalingRow], k: int = 2) -> float:
    """Largest measured/predicted ratio across the sweep (1.0 if all under)."""
    base = rows[0]
    worst = 1.0
    for row in rows[1:]:
        worst = max(worst, row.seconds / predicted_seconds(base, row, k))
    return worst


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", type=int, nargs="+", default=[10, 20, 40])
    ap.add_argument("--k", type=int, default=2)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rows = run_sweep(tuple(args.sizes), k=args.k, seed=args.seed)
    print(f"{'n':>4} {'Q':>5} {'seconds':>9} {'value':>6}")
    for row in rows:
        print(f"{row.n:>4} {row.qbound:>5} {row.seconds:>9.4f} {row.value:>6}")
    factor = worst_trend_factor(rows, k=args.k)
    print(f"worst measured/predicted factor: {factor:.3f}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
