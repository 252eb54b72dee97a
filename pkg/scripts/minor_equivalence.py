#!/usr/bin/env python3
"""Minor vs subdivision agreement for max-degree-3 patterns on random hosts."""

import argparse
import random
import time

from minorkit import find_minor_model, find_subdivision, minor_to_subdivision, verify_subdivision
from minorkit.graph import max_degree, nonisomorphic_graphs, random_graph


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--hosts", type=int, default=500)
    parser.add_argument("--max-n", type=int, default=9)
    parser.add_argument("--seed", type=int, required=True)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    patterns = [h for n in range(1, 6) for h in nonisomorphic_graphs(n) if max_degree(h) <= 3]
    start = time.perf_counter()
    mismatches = bad = positives = 0
    for _ in range(args.hosts):
        g = random_graph(rng.randint(3, args.max_n), rng.uniform(0.15, 0.6), rng)
        for h in patterns:
            minor = find_minor_model(g, h) is not None
            mismatches += minor != (find_subdivision(g, h) is not None)
            if minor:
                positives += 1
                e = minor_to_subdivision(g, h)
                bad += e is None or not verify_subdivision(e)
    print(f"patterns={len(patterns)} hosts={args.hosts} positives={positives} "
          f"mismatches={mismatches} bad_certificates={bad} time={time.perf_counter() - start:.1f}s")


if __name__ == "__main__":
    main()
