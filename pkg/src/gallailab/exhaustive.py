"""Exhaustive graph streams for small orders.

``labeled_masks`` walks all ``2**C(n,2)`` labelled graphs in Gray-code order,
flipping one edge per step, and yields adjacency bitmasks without building
:class:`Graph` objects. ``nonisomorphic_graphs`` reads the graph atlas
(one representative per isomorphism class, n <= 7).
"""
from __future__ import annotations

from typing import Iterator

from .graph import Graph, component_masks

ATLAS_MAX_N = 7


def labeled_masks(n: int) -> Iterator[tuple[int, ...]]:
    pairs = [(u, v) for v in range(1, n) for u in range(v)]
    masks = [0] * n
    yield tuple(masks)
    for i in range(1, 1 << len(pairs)):
        u, v = pairs[(i & -i).bit_length() - 1]
        masks[u] ^= 1 << v
        masks[v] ^= 1 << u
        yield tuple(masks)


def is_connected_masks(masks: tuple[int, ...]) -> bool:
    n = len(masks)
    if n == 0:
        return False
    seen = frontier = 1
    while frontier:
        nxt = 0
        rest = frontier
        while rest:
            low = rest & -rest
            rest ^= low
            nxt |= masks[low.bit_length() - 1]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << n) - 1


def labeled_graphs(n: int, *, connected: bool = False) -> Iterator[Graph]:
    for masks in labeled_masks(n):
        if connected and not is_connected_masks(masks):
            continue
        yield Graph.from_masks(masks)


def nonisomorphic_graphs(n: int, *, connected: bool = False) -> Iterator[Graph]:
    """One graph per isomorphism class on exactly ``n`` vertices (n <= 7)."""
    if n > ATLAS_MAX_N:
        raise ValueError(f"the atlas stops at {ATLAS_MAX_N} vertices")
    import networkx as nx

    for h in nx.graph_atlas_g():
        if h.number_of_nodes() != n:
            continue
        g = Graph(n, h.edges())
        if connected and len(component_masks(g.masks)) != 1:
            continue
        yield g
