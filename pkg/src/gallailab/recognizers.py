"""Certificate-producing recognition of 2K2-free, split, chordal and cochordal graphs.

Every positive or negative verdict comes with an object that can be checked
against the graph directly (see the ``validate`` methods).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graph import Graph, GraphError, complement, to_mask


class CertificateError(GraphError):
    """A certificate does not certify what it claims for the given graph."""


@dataclass(frozen=True)
class TwoK2Witness:
    """Edges ``ab`` and ``cd`` with no edge between them: an induced 2K2."""

    a: int
    b: int
    c: int
    d: int

    @classmethod
    def from_edges(cls, e1: Iterable[int], e2: Iterable[int]) -> "TwoK2Witness":
        """Normalise two edges into the lexicographic witness form."""
        x, y = sorted([tuple(sorted(e1)), tuple(sorted(e2))])
        return cls(x[0], x[1], y[0], y[1])

    @property
    def edges(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return (self.a, self.b), (self.c, self.d)

    def as_tuple(self) -> tuple[int, int, int, int]:
        return self.a, self.b, self.c, self.d

    def validate(self, g: Graph) -> None:
        a, b, c, d = self.as_tuple()
        if len({a, b, c, d}) != 4:
            raise CertificateError(f"witness {self.as_tuple()} repeats a vertex")
        if not (g.has_edge(a, b) and g.has_edge(c, d)):
            raise CertificateError(f"witness {self.as_tuple()}: ab or cd is not an edge")
        for u, v in ((a, c), (a, d), (b, c), (b, d)):
            if g.has_edge(u, v):
                raise CertificateError(f"witness {self.as_tuple()}: cross edge {u}-{v}")


@dataclass(frozen=True)
class SplitPartition:
    clique: frozenset[int]
    independent: frozenset[int]

    def validate(self, g: Graph) -> None:
        if self.clique & self.independent:
            raise CertificateError("clique and independent set overlap")
        if self.clique | self.independent != frozenset(g.vertices):
            raise CertificateError("partition does not cover V(G)")
        k = to_mask(self.clique)
        for v in self.clique:
            if (g.masks[v] | 1 << v) & k != k:
                raise CertificateError(f"clique vertex {v} misses another clique vertex")
        i = to_mask(self.independent)
        for v in self.independent:
            if g.masks[v] & i:
                raise CertificateError(f"independent vertex {v} has a neighbour in I")


@dataclass(frozen=True)
class EliminationOrder:
    """A perfect elimination ordering: each vertex's later neighbours are a clique."""

    order: tuple[int, ...]

    def validate(self, g: Graph) -> None:
        if sorted(self.order) != list(g.vertices):
            raise CertificateError("order is not a permutation of V(G)")
        later = (1 << g.n) - 1
        for v in self.order:
            later &= ~(1 << v)
            nb = g.masks[v] & later
            rest = nb
            while rest:
                low = rest & -rest
                u = low.bit_length() - 1
                rest ^= low
                if (g.masks[u] | low) & nb != nb:
                    raise CertificateError(f"later neighbours of {v} are not a clique")


def find_induced_2k2(g: Graph) -> TwoK2Witness | None:
    """First induced 2K2 over pairs of edges in lexicographic order, or None."""
    masks = g.masks
    edges = g.edges
    for i, (a, b) in enumerate(edges):
        near = masks[a] | masks[b] | (1 << a) | (1 << b)
        for c, d in edges[i + 1:]:
            if not (near >> c & 1 or near >> d & 1):
                return TwoK2Witness(a, b, c, d)
    return None


def is_2k2_free(g: Graph) -> bool:
    return find_induced_2k2(g) is None


def split_partition(g: Graph) -> SplitPartition | None:
    """Clique/independent-set partition via the degree-sequence test.

    Vertices are ranked by degree (descending, lowest id first on ties); with
    ``m = max{i : d_i >= i - 1}`` the graph is split iff
    ``sum_{i<=m} d_i == m(m-1) + sum_{i>m} d_i``, and then the top ``m``
    vertices form the clique. The partition is re-checked by definition.
    """
    n = g.n
    if n == 0:
        return SplitPartition(frozenset(), frozenset())
    deg = g.degrees()
    ranked = sorted(range(n), key=lambda v: (-deg[v], v))
    d = [deg[v] for v in ranked]
    m = max(i for i in range(1, n + 1) if d[i - 1] >= i - 1)
    if sum(d[:m]) != m * (m - 1) + sum(d[m:]):
        return None
    part = SplitPartition(frozenset(ranked[:m]), frozenset(ranked[m:]))
    try:
        part.validate(g)
    except CertificateError as exc:  # pragma: no cover - would be a bug in the test above
        raise RuntimeError(f"degree-sequence test accepted but partition invalid: {exc}") from exc
    return part


def lex_bfs(g: Graph) -> list[int]:
    """Lexicographic breadth-first search order (ties to the lowest id)."""
    n = g.n
    labels: list[list[int]] = [[] for _ in range(n)]
    unvisited = set(range(n))
    order = []
    for step in range(n):
        v = max(sorted(unvisited), key=lambda u: labels[u])
        unvisited.discard(v)
        order.append(v)
        for u in g.neighbors(v):
            if u in unvisited:
                labels[u].append(n - step)
    return order


def is_chordal(g: Graph) -> EliminationOrder | None:
    """A perfect elimination ordering if ``g`` is chordal, else None."""
    peo = EliminationOrder(tuple(reversed(lex_bfs(g))))
    try:
        peo.validate(g)
    except CertificateError:
        return None
    return peo


def is_cochordal(g: Graph) -> bool:
    return is_chordal(complement(g)) is not None
