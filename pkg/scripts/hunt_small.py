"""Search for connected graphs whose longest paths have no common vertex.

Exhaustive over labelled graphs (default n <= 7, a few minutes), over
isomorphism classes (``--iso``, n <= 7), or over a graph6 stream such as the
output of nauty's ``geng -c 8`` (``--stream FILE``, ``-`` for stdin) for the
long-running n = 8..11 range.
"""
import argparse
import sys
import time

from gallailab.graph6 import write_graph6
from gallailab.theorem import hunt_counterexamples, hunt_exhaustive


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=7)
    ap.add_argument("--iso", action="store_true", help="one graph per isomorphism class")
    ap.add_argument("--stream", metavar="FILE", help="graph6 file to scan instead")
    args = ap.parse_args(argv)

    start = time.perf_counter()
    if args.stream:
        fh = sys.stdin if args.stream == "-" else open(args.stream)
        with fh:
            res = hunt_counterexamples(fh, errors=sys.stderr)
    else:
        if args.iso and args.max_n > 7:
            ap.error("--iso covers n <= 7 only")
        res = hunt_exhaustive(args.max_n, labeled=not args.iso, progress=sys.stderr)
    for g in res.found:
        print(write_graph6(g))
    print(f"{res.summary()} time={time.perf_counter() - start:.1f}s")
    return 3 if res.found else (2 if res.malformed else 0)


if __name__ == "__main__":
    sys.exit(main())
