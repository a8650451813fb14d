"""Check the maximum-degree theorem on batches of generated graphs.

    python scripts/theorem_suite.py --count 1000 --max-n 14 --seed 1

Prints a tally per graph class and exits non-zero on any violated verdict.
"""
import argparse
import sys
import time
from collections import Counter

from gallailab.generators import GenSpec, GraphClass, derive_seed, generate
from gallailab.theorem import Verdict, verify_max_degree_theorem

DENSITIES = (0.15, 0.3, 0.5, 0.7, 0.85)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=1000)
    ap.add_argument("--min-n", type=int, default=2)
    ap.add_argument("--max-n", type=int, default=14)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--classes", nargs="+", default=["split", "cochordal", "2k2free"],
                    choices=[c.value for c in GraphClass])
    args = ap.parse_args(argv)

    classes = [GraphClass(c) for c in args.classes]
    span = args.max_n - args.min_n + 1
    tally = {c: Counter() for c in classes}
    start = time.perf_counter()
    for i in range(args.count):
        kind = classes[i % len(classes)]
        n = args.min_n + (i * 7) % span
        g = generate(GenSpec(n, DENSITIES[i % len(DENSITIES)], derive_seed(args.seed, i), kind))
        rep = verify_max_degree_theorem(g)
        tally[kind][rep.verdict.value] += 1
        if rep.verdict is Verdict.VIOLATED:
            print(f"VIOLATED class={kind.value} index={i} edges={g.edges} witness={rep.witness_path}")
    for kind, c in tally.items():
        print(f"{kind.value:>12}: " + " ".join(f"{k}={v}" for k, v in sorted(c.items())))
    print(f"{args.count} graphs in {time.perf_counter() - start:.1f}s")
    return 1 if any(c[Verdict.VIOLATED.value] for c in tally.values()) else 0


if __name__ == "__main__":
    sys.exit(main())
