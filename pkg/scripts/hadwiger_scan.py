#!/usr/bin/env python3
"""Exhaustive or sampled check that chromatic number k forces a K_k minor."""

import argparse
import time

from minorkit import hadwiger_scan
from minorkit.formats import format_graph


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-max", type=int, default=6)
    parser.add_argument("--k-max", type=int, default=6)
    parser.add_argument("--samples", type=int, default=0, help="sample this many graphs on n-max vertices instead")
    parser.add_argument("--density", type=float, default=0.5)
    parser.add_argument("--seed", type=int)
    args = parser.parse_args()
    if args.samples and args.seed is None:
        parser.error("sampling needs --seed")

    start = time.perf_counter()
    report = hadwiger_scan(
        args.n_max, args.k_max, exhaustive=not args.samples,
        samples=args.samples, seed=args.seed, density=args.density,
    )
    print(report.summary())
    for g, k in report.counterexamples:
        print(f"counterexample for k={k}:")
        print(format_graph(g), end="")
    print(f"time: {time.perf_counter() - start:.1f}s")


if __name__ == "__main__":
    main()
