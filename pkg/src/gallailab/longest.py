"""Exact longest paths: order, enumeration, and the common intersection.

Two independent engines compute the longest-path order:

* a subset dynamic programme over (vertex set, endpoint) states, used up to
  ``dp_threshold`` vertices, and
* a depth-first branch-and-bound that prunes on the number of vertices still
  reachable from the path's free end.

Path enumeration is a separate DFS that never touches the DP table, so the
``enumeration`` and ``deletion`` intersection methods share no code beyond
the graph type.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .graph import Graph, GraphError, Path, bits, component_masks, delete_vertex

DEFAULT_DP_THRESHOLD = 20
_PURE_DP_MAX = 9


class Method(str, Enum):
    ENUMERATION = "enumeration"
    DELETION = "deletion"
    VERTEX_SETS = "vertex-sets"


class EnumerationCapExceeded(RuntimeError):
    def __init__(self, cap: int):
        super().__init__(f"more than {cap} longest paths")
        self.cap = cap


@dataclass(frozen=True)
class IntersectionReport:
    longest_order: int
    intersection: frozenset[int]
    method: Method
    path_count: int | None = None


def _require_vertices(g: Graph) -> None:
    if g.n == 0:
        raise GraphError("graph has no vertices")


# -- subset DP ---------------------------------------------------------


@functools.lru_cache(maxsize=32)
def _layers(n: int) -> tuple[np.ndarray, ...]:
    """Masks of ``[0, 2**n)`` grouped by popcount."""
    masks = np.arange(1 << n, dtype=np.int64)
    pop = np.zeros(1 << n, dtype=np.int8)
    for b in range(n):
        pop += ((masks >> b) & 1).astype(np.int8)
    order = np.argsort(pop, kind="stable")
    counts = np.bincount(pop, minlength=n + 1)
    return tuple(np.split(masks[order], np.cumsum(counts)[:-1]))


def _reach_pure(masks: tuple[int, ...]) -> list[int]:
    n = len(masks)
    reach = [0] * (1 << n)
    for v in range(n):
        reach[1 << v] = 1 << v
    for s in range(3, 1 << n):
        if not s & (s - 1):
            continue
        r = 0
        rest = s
        while rest:
            low = rest & -rest
            rest ^= low
            if reach[s ^ low] & masks[low.bit_length() - 1]:
                r |= low
        reach[s] = r
    return reach


def _reach_numpy(masks: tuple[int, ...]) -> np.ndarray:
    n = len(masks)
    layers = _layers(n)
    reach = np.zeros(1 << n, dtype=np.int64)
    reach[layers[1]] = layers[1]
    for k in range(2, n + 1):
        layer = layers[k]
        acc = np.zeros(layer.shape[0], dtype=np.int64)
        for u in range(n):
            bit = 1 << u
            sel = (layer & bit) != 0
            prev = reach[layer[sel] ^ bit]
            acc[sel] |= np.where((prev & masks[u]) != 0, bit, 0)
        if not acc.any():
            break
        reach[layer] = acc
    return reach


def reach_table(g: Graph):
    """``table[S]`` is the bitmask of vertices ``v`` such that some path with
    vertex set ``S`` ends at ``v``."""
    if g.n <= _PURE_DP_MAX:
        return _reach_pure(g.masks)
    return _reach_numpy(g.masks)


def _longest_sets_from_table(n: int, table) -> tuple[int, list[int]]:
    if isinstance(table, np.ndarray):
        layers = _layers(n)
        for k in range(n, 0, -1):
            hit = layers[k][table[layers[k]] != 0]
            if hit.size:
                return k, [int(s) for s in hit]
    else:
        best, found = 0, []
        for s, r in enumerate(table):
            if r:
                c = bin(s).count("1")
                if c > best:
                    best, found = c, [s]
                elif c == best:
                    found.append(s)
        return best, found
    return 0, []


def longest_order_dp(g: Graph) -> int:
    _require_vertices(g)
    return _longest_sets_from_table(g.n, reach_table(g))[0]


# -- branch and bound --------------------------------------------------


def _reachable(masks: tuple[int, ...], start: int, allowed: int) -> int:
    seen = frontier = masks[start] & allowed
    while frontier:
        nxt = 0
        rest = frontier
        while rest:
            low = rest & -rest
            rest ^= low
            nxt |= masks[low.bit_length() - 1]
        frontier = nxt & allowed & ~seen
        seen |= frontier
    return seen


def longest_order_bnb(g: Graph, *, stop_at: int | None = None) -> int:
    """Longest path order by DFS with reachability pruning.

    The search stops early once a path of order ``stop_at`` is found (the
    largest component size is always a valid stopping point).
    """
    _require_vertices(g)
    masks = g.masks
    n = g.n
    comps = component_masks(masks)
    ceiling = max(bin(c).count("1") for c in comps)
    target = ceiling if stop_at is None else min(stop_at, ceiling)
    best = 1
    full = (1 << n) - 1

    class _Done(Exception):
        pass

    def dfs(v: int, used: int, order: int) -> None:
        nonlocal best
        if order > best:
            best = order
            if best >= target:
                raise _Done
        free = full & ~used
        if order + bin(_reachable(masks, v, free)).count("1") <= best:
            return
        rest = masks[v] & free
        while rest:
            low = rest & -rest
            rest ^= low
            dfs(low.bit_length() - 1, used | low, order + 1)

    try:
        for comp in sorted(comps, key=lambda c: -bin(c).count("1")):
            if bin(comp).count("1") <= best:
                break
            for v in bits(comp):
                dfs(v, 1 << v, 1)
    except _Done:
        pass
    return best


def longest_path_order(g: Graph, *, dp_threshold: int = DEFAULT_DP_THRESHOLD) -> int:
    """Maximum number of vertices on a path of ``g`` (over all components)."""
    _require_vertices(g)
    if g.n <= dp_threshold:
        return longest_order_dp(g)
    return longest_order_bnb(g)


# -- enumeration -------------------------------------------------------


def enumerate_longest_paths(g: Graph, *, cap: int | None = None) -> list[Path]:
    """All longest paths in canonical orientation, sorted.

    The order is taken from the branch-and-bound engine and paths are
    collected by an exhaustive DFS; raises :class:`EnumerationCapExceeded`
    once more than ``cap`` paths are found.
    """
    _require_vertices(g)
    target = longest_order_bnb(g)
    if target == 1:
        return [Path((v,)) for v in range(g.n)]
    masks = g.masks
    full = (1 << g.n) - 1
    found: list[tuple[int, ...]] = []
    stack: list[int] = []

    def dfs(v: int, used: int, order: int) -> None:
        if order == target:
            if stack[0] < stack[-1]:
                found.append(tuple(stack))
                if cap is not None and len(found) > cap:
                    raise EnumerationCapExceeded(cap)
            return
        free = full & ~used
        if order + bin(_reachable(masks, v, free)).count("1") < target:
            return
        rest = masks[v] & free
        while rest:
            low = rest & -rest
            rest ^= low
            u = low.bit_length() - 1
            stack.append(u)
            dfs(u, used | low, order + 1)
            stack.pop()

    for v in range(g.n):
        stack.append(v)
        dfs(v, 1 << v, 1)
        stack.pop()
    found.sort()
    return [Path(p) for p in found]


def longest_path_vertex_sets(g: Graph) -> tuple[int, list[frozenset[int]]]:
    """Longest order and every distinct vertex set carrying a longest path.

    Properties that depend only on ``V(P)`` (domination, the intersection)
    can be checked on these sets even when the paths themselves are too
    many to list.
    """
    _require_vertices(g)
    order, sets = _longest_sets_from_table(g.n, reach_table(g))
    return order, [frozenset(bits(s)) for s in sets]


def path_on_vertex_set(g: Graph, vertex_set) -> Path | None:
    """Some path visiting exactly ``vertex_set``, or None if there is none."""
    s = 0
    for v in vertex_set:
        s |= 1 << v
    sub_masks = tuple(m & s for m in g.masks)

    @functools.lru_cache(maxsize=None)
    def ends(t: int) -> int:
        if not t & (t - 1):
            return t
        r = 0
        rest = t
        while rest:
            low = rest & -rest
            rest ^= low
            if ends(t ^ low) & sub_masks[low.bit_length() - 1]:
                r |= low
        return r

    if not s or not ends(s):
        return None
    seq = []
    t = s
    v = (ends(t) & -ends(t)).bit_length() - 1
    while True:
        seq.append(v)
        t ^= 1 << v
        if not t:
            break
        cand = ends(t) & sub_masks[v]
        v = (cand & -cand).bit_length() - 1
    return Path(tuple(seq)).canonical()


# -- intersection ------------------------------------------------------


def _deletion_intersection(g: Graph, order: int, dp_threshold: int) -> frozenset[int]:
    if g.n == 1:
        return frozenset({0})
    keep = []
    for v in range(g.n):
        h, _ = delete_vertex(g, v)
        if longest_path_order(h, dp_threshold=dp_threshold) < order:
            keep.append(v)
    return frozenset(keep)


def intersection_of_longest_paths(
    g: Graph,
    method: Method | str = Method.DELETION,
    *,
    cap: int | None = None,
    dp_threshold: int = DEFAULT_DP_THRESHOLD,
) -> IntersectionReport:
    """Vertices common to all longest paths.

    ``enumeration`` intersects the enumerated paths (falling back to
    ``deletion`` if ``cap`` trips); ``deletion`` keeps ``v`` iff removing it
    shortens the longest path; ``vertex-sets`` intersects the longest-path
    vertex sets read off the subset DP.
    """
    _require_vertices(g)
    method = Method(method)
    if method is Method.ENUMERATION:
        try:
            paths = enumerate_longest_paths(g, cap=cap)
        except EnumerationCapExceeded:
            method = Method.DELETION
        else:
            common = frozenset(range(g.n))
            for p in paths:
                common &= p.vertex_set
            return IntersectionReport(paths[0].order, common, method, len(paths))
    if method is Method.VERTEX_SETS:
        order, sets = longest_path_vertex_sets(g)
        common = frozenset(range(g.n))
        for s in sets:
            common &= s
        return IntersectionReport(order, common, method)
    order = longest_path_order(g, dp_threshold=dp_threshold)
    return IntersectionReport(order, _deletion_intersection(g, order, dp_threshold), Method.DELETION)


def is_longest_path(g: Graph, p: Path, *, dp_threshold: int = DEFAULT_DP_THRESHOLD) -> bool:
    p.validate(g)
    return p.order == longest_path_order(g, dp_threshold=dp_threshold)


def common_vertex_mask(masks: tuple[int, ...]) -> int:
    """Bitmask of the vertices on every longest path, straight from adjacency
    bitmasks. This is the inner loop of the exhaustive hunt."""
    table = _reach_pure(masks) if len(masks) <= _PURE_DP_MAX else _reach_numpy(masks)
    _, sets = _longest_sets_from_table(len(masks), table)
    common = (1 << len(masks)) - 1
    for s in sets:
        common &= s
    return common
