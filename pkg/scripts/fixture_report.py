"""Reproduce the 12-vertex graph whose longest paths share no vertex.

Prints the graph, its longest order, the number of longest paths, and for
every vertex a longest path avoiding it. ``--dot FILE`` also writes a
Graphviz drawing with one avoiding path highlighted.
"""
import argparse
import sys

from gallailab.fixtures import fixture, fixture_names
from gallailab.graph import is_connected
from gallailab.graph6 import write_graph6
from gallailab.longest import Method, enumerate_longest_paths, intersection_of_longest_paths


def to_dot(g, highlight):
    on = set(zip(highlight.vertices, highlight.vertices[1:]))
    on |= {(b, a) for a, b in on}
    lines = ["graph G {", "  node [shape=circle];"]
    for u, v in g.edges:
        style = ' [penwidth=3, color="red"]' if (u, v) in on else ""
        lines.append(f"  {u} -- {v}{style};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--name", default=fixture_names()[0], choices=fixture_names())
    ap.add_argument("--dot", metavar="FILE")
    args = ap.parse_args(argv)

    g = fixture(args.name)
    paths = enumerate_longest_paths(g)
    print(f"graph6: {write_graph6(g)}")
    print(f"n={g.n} m={g.m} connected={is_connected(g)} degrees={list(g.degrees())}")
    print(f"longest order={paths[0].order} longest paths={len(paths)}")
    for m in Method:
        rep = intersection_of_longest_paths(g, m)
        print(f"intersection ({m.value}): {sorted(rep.intersection) or 'empty'}")
    for v in g.vertices:
        avoid = next((p for p in paths if v not in p.vertex_set), None)
        print(f"  avoids {v:>2}: {avoid}")
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(to_dot(g, paths[0]))
    return 0


if __name__ == "__main__":
    sys.exit(main())
