#!/usr/bin/env python3
"""Compare forbidden-minor planarity with the rotation-system oracle."""

import argparse
import random
import time

from minorkit import all_graphs, is_planar, kuratowski_witness, planarity_oracle, random_graph, verify_subdivision


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-max", type=int, default=6, help="exhaustive up to this many vertices (<= 6 is quick)")
    parser.add_argument("--samples", type=int, default=500)
    parser.add_argument("--seed", type=int, required=True)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    graphs = [g for n in range(1, args.n_max + 1) for g in all_graphs(n)]
    while len(graphs) < sum(1 << (n * (n - 1) // 2) for n in range(1, args.n_max + 1)) + args.samples:
        g = random_graph(rng.choice((7, 8)), rng.uniform(0.2, 0.6), rng)
        if g.m <= 16:
            graphs.append(g)

    start = time.perf_counter()
    disagree = bad = nonplanar = 0
    for g in graphs:
        planar = is_planar(g)
        disagree += planar != planarity_oracle(g)
        if not planar:
            nonplanar += 1
            w = kuratowski_witness(g)
            bad += w is None or not verify_subdivision(w.embedding)
    print(f"graphs={len(graphs)} nonplanar={nonplanar} disagreements={disagree} "
          f"bad_witnesses={bad} time={time.perf_counter() - start:.1f}s")


if __name__ == "__main__":
    main()
