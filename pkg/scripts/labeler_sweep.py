#!/usr/bin/env python3
"""Compare the quadratic and two-step labelers across label-range divisors.

For seeded random instances with n = m, runs the quadratic labeler
(range m^2) and the two-step labeler at several divisors C (range
ceil(m^2/C)), reporting retry counts and the census of colliding pair
types seen along the way.  Smaller ranges make step two retry more, so
this sweep shows the price of shrinking the label space.

Usage: python scripts/labeler_sweep.py [--size N] [--instances K]
"""

import argparse
from random import Random

from sumlabel import BudgetExhausted, Hypergraph, TwoStepConfig, quadratic_random_labeling, two_step_labeling


def random_instance(seed: int, n: int) -> Hypergraph:
    rng = Random(seed)
    edges: set[frozenset[int]] = set()
    while len(edges) < n:
        k = rng.randint(1, min(10, n))
        edges.add(frozenset(rng.sample(range(n), k)))
    return Hypergraph(n, sorted(edges, key=lambda e: (len(e), sorted(e))))


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--size", type=int, default=40, help="vertices = edges per instance")
    parser.add_argument("--instances", type=int, default=10)
    args = parser.parse_args()

    print(f"instances: n = m = {args.size}")
    print(f"{'seed':>4} {'quad tries':>10} {'quad max':>9}", end="")
    divisors = (3.0, 6.0, 10.0)
    for c in divisors:
        print(f" | C={c:<4} {'cap':>5} {'s1':>3} {'s2':>4} {'max':>5}", end="")
    print()

    for seed in range(args.instances):
        h = random_instance(10_000 + seed, args.size)
        quad = quadratic_random_labeling(h, seed=seed)
        print(f"{seed:>4} {quad.attempts:>10} {quad.labeling.max_label:>9}", end="")
        for c in divisors:
            cfg = TwoStepConfig(label_divisor=c, seed=seed)
            try:
                res = two_step_labeling(h, cfg)
                print(f" | {'':>6} {res.label_cap:>5} {res.step1_attempts:>3} "
                      f"{res.step2_attempts:>4} {res.labeling.max_label:>5}", end="")
            except BudgetExhausted as exc:
                census = exc.detail.get("collision_census", {})
                print(f" | {'':>6} {'-':>5} {'-':>3} {'-':>4} census={census}", end="")
        print()


if __name__ == "__main__":
    main()
