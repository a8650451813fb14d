"""Cross-check all longest-path engines on every connected labelled graph
with 7 vertices (about an hour on one core).

The acceptance suite covers n = 7 through one graph per isomorphism class;
this script is the full labelled run. ``--limit`` stops early for a smoke run.
"""
import argparse
import sys
import time

from gallailab.exhaustive import is_connected_masks, labeled_masks
from gallailab.graph import Graph
from gallailab.longest import Method, intersection_of_longest_paths, longest_order_bnb, longest_order_dp


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=7)
    ap.add_argument("--limit", type=int, default=None)
    args = ap.parse_args(argv)

    start = time.perf_counter()
    checked = bad = 0
    for masks in labeled_masks(args.n):
        if not is_connected_masks(masks):
            continue
        g = Graph.from_masks(masks)
        reps = [intersection_of_longest_paths(g, m) for m in Method]
        orders = {r.longest_order for r in reps} | {longest_order_dp(g), longest_order_bnb(g)}
        if len(orders) != 1 or len({r.intersection for r in reps}) != 1:
            bad += 1
            print(f"MISMATCH {g.edges}")
        checked += 1
        if checked % 100000 == 0:
            print(f"{checked} checked, {bad} mismatches, {time.perf_counter() - start:.0f}s", file=sys.stderr)
        if args.limit and checked >= args.limit:
            break
    print(f"checked={checked} mismatches={bad} time={time.perf_counter() - start:.1f}s")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
