"""Immutable simple undirected graphs and paths on vertices ``0..n-1``.

Adjacency is kept both as per-vertex neighbour sets and as integer bitmasks;
the search kernels in the rest of the package work on the bitmasks.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

Edge = tuple[int, int]


class GraphError(ValueError):
    """Raised for invalid graph or path data."""


def _iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits(mask: int) -> list[int]:
    """Vertices whose bit is set in ``mask``, ascending."""
    return list(_iter_bits(mask))


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def _init(g: "Graph", n: int, masks: tuple[int, ...]) -> None:
    object.__setattr__(g, "_n", n)
    object.__setattr__(g, "_masks", masks)
    object.__setattr__(g, "_edges", None)
    object.__setattr__(g, "_nbrs", None)


class Graph:
    """A simple undirected graph on ``0..n-1``.

    Instances are immutable and hashable; equality compares vertex count and
    edge set.
    """

    __slots__ = ("_n", "_masks", "_edges", "_nbrs")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = (), *, strict: bool = True):
        if not isinstance(n, int) or n < 0:
            raise GraphError(f"vertex count must be a non-negative integer, got {n!r}")
        masks = [0] * n
        for e in edges:
            if len(e) != 2:
                raise GraphError(f"edge must be a pair, got {e!r}")
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
            if masks[u] >> v & 1:
                if strict:
                    raise GraphError(f"duplicate edge ({min(u, v)}, {max(u, v)})")
                continue
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        _init(self, n, tuple(masks))

    @classmethod
    def from_masks(cls, masks: Sequence[int]) -> "Graph":
        """Build from symmetric adjacency bitmasks (validated)."""
        n = len(masks)
        full = (1 << n) - 1
        for v, m in enumerate(masks):
            if m & ~full or m >> v & 1:
                raise GraphError(f"bad adjacency mask for vertex {v}")
            for u in _iter_bits(m):
                if not masks[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")
        g = cls.__new__(cls)
        _init(g, n, tuple(masks))
        return g

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __reduce__(self):
        return (Graph.from_masks, (self._masks,))

    # -- basic queries -------------------------------------------------

    @property
    def n(self) -> int:
        return self._n

    @property
    def masks(self) -> tuple[int, ...]:
        """Adjacency bitmasks: bit ``u`` of ``masks[v]`` is set iff ``u ~ v``."""
        return self._masks

    @property
    def edges(self) -> tuple[Edge, ...]:
        """Edges as ``(u, v)`` with ``u < v``, in lexicographic order."""
        if self._edges is None:
            edges = tuple((u, v) for u in range(self._n) for v in _iter_bits(self._masks[u] >> (u + 1) << (u + 1)))
            object.__setattr__(self, "_edges", edges)
        return self._edges

    @property
    def m(self) -> int:
        return sum(bin(x).count("1") for x in self._masks) // 2

    @property
    def vertices(self) -> range:
        return range(self._n)

    def neighbors(self, v: int) -> frozenset[int]:
        if self._nbrs is None:
            object.__setattr__(self, "_nbrs", tuple(frozenset(_iter_bits(m)) for m in self._masks))
        return self._nbrs[v]

    def degree(self, v: int) -> int:
        return bin(self._masks[v]).count("1")

    def degrees(self) -> list[int]:
        return [bin(x).count("1") for x in self._masks]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._masks[u] >> v & 1)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._masks == other._masks

    def __hash__(self) -> int:
        return hash(self._masks)

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, edges={list(self.edges)})"


def make_graph(n: int, edges: Iterable[Sequence[int]], *, strict: bool = True) -> Graph:
    """Validated constructor. With ``strict=False`` duplicate edges collapse."""
    return Graph(n, edges, strict=strict)


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph.from_masks([full & ~m & ~(1 << v) for v, m in enumerate(g.masks)])


def delete_vertex(g: Graph, v: int) -> tuple[Graph, dict[int, int]]:
    """Remove ``v`` and relabel the rest order-preservingly.

    Returns the new graph and the map from old labels to new labels.
    """
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range for n={g.n}")
    low = (1 << v) - 1

    def squeeze(m: int) -> int:
        return (m & low) | (m >> (v + 1) << v)

    masks = [squeeze(m) for u, m in enumerate(g.masks) if u != v]
    relabel = {u: (u if u < v else u - 1) for u in range(g.n) if u != v}
    return Graph.from_masks(masks), relabel


def induced_subgraph(g: Graph, keep: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    keep = sorted(set(keep))
    relabel = {u: i for i, u in enumerate(keep)}
    edges = [(relabel[u], relabel[v]) for u, v in g.edges if u in relabel and v in relabel]
    return Graph(len(keep), edges), relabel


def max_degree_vertices(g: Graph) -> frozenset[int]:
    """All vertices attaining the maximum degree."""
    if g.n == 0:
        raise GraphError("maximum degree of a graph with no vertices is undefined")
    deg = g.degrees()
    top = max(deg)
    return frozenset(v for v, d in enumerate(deg) if d == top)


def component_masks(masks: Sequence[int]) -> list[int]:
    n = len(masks)
    left = (1 << n) - 1
    out = []
    while left:
        seen = frontier = left & -left
        while frontier:
            nxt = 0
            for u in _iter_bits(frontier):
                nxt |= masks[u]
            frontier = nxt & ~seen
            seen |= frontier
        out.append(seen)
        left &= ~seen
    return out


def components(g: Graph) -> list[frozenset[int]]:
    """Connected components, ordered by smallest vertex."""
    return [frozenset(_iter_bits(c)) for c in component_masks(g.masks)]


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(component_masks(g.masks)) == 1


def edge_pairs_between(g: Graph, s: Iterable[int], t: Iterable[int]) -> list[Edge]:
    """E(S, T) as ``(s, t)`` pairs with ``s`` in S, ordered lexicographically."""
    tmask = to_mask(t)
    return [(u, w) for u in sorted(s) for w in _iter_bits(g.masks[u] & tmask)]


# -- paths -------------------------------------------------------------


@dataclass(frozen=True)
class Path:
    """An ordered path ``v0 v1 ... vl``.

    The orientation is kept as given because the proof constructions index
    positions along the path; :meth:`canonical` gives the reversal-free form.
    """

    vertices: tuple[int, ...]

    @classmethod
    def of(cls, g: Graph, vertices: Iterable[int]) -> "Path":
        p = cls(tuple(int(v) for v in vertices))
        p.validate(g)
        return p

    def validate(self, g: Graph) -> None:
        vs = self.vertices
        if not vs:
            raise GraphError("a path needs at least one vertex")
        if len(set(vs)) != len(vs):
            raise GraphError(f"path {vs} repeats a vertex")
        for v in vs:
            if not 0 <= v < g.n:
                raise GraphError(f"path vertex {v} out of range for n={g.n}")
        for a, b in zip(vs, vs[1:]):
            if not g.has_edge(a, b):
                raise GraphError(f"path step {a}-{b} is not an edge")

    @property
    def order(self) -> int:
        return len(self.vertices)

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)

    @property
    def mask(self) -> int:
        return to_mask(self.vertices)

    def canonical(self) -> "Path":
        rev = self.vertices[::-1]
        return self if self.vertices <= rev else Path(rev)

    def reversed(self) -> "Path":
        return Path(self.vertices[::-1])

    def __iter__(self):
        return iter(self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)

    def __getitem__(self, i):
        return self.vertices[i]

    def __str__(self) -> str:
        return "-".join(map(str, self.vertices))


# -- plain edge-list text format ---------------------------------------


def write_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def _records(text: str) -> Iterator[tuple[int, list[str]]]:
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def parse_edge_lists(text: str) -> list[Graph]:
    """Parse one or more concatenated ``n m`` / ``u v`` records.

    Blank lines and ``#`` comments are ignored.
    """
    graphs = []
    it = _records(text)
    for lineno, head in it:
        if len(head) != 2:
            raise GraphError(f"line {lineno}: expected header 'n m', got {' '.join(head)!r}")
        try:
            n, m = int(head[0]), int(head[1])
        except ValueError:
            raise GraphError(f"line {lineno}: non-integer header") from None
        edges = []
        for _ in range(m):
            try:
                ln, tok = next(it)
            except StopIteration:
                raise GraphError(f"line {lineno}: header promises {m} edges, found {len(edges)}") from None
            if len(tok) != 2:
                raise GraphError(f"line {ln}: expected 'u v'")
            try:
                edges.append((int(tok[0]), int(tok[1])))
            except ValueError:
                raise GraphError(f"line {ln}: non-integer vertex") from None
        graphs.append(Graph(n, edges))
    return graphs


def parse_edge_list(text: str) -> Graph:
    graphs = parse_edge_lists(text)
    if len(graphs) != 1:
        raise GraphError(f"expected exactly one graph, found {len(graphs)}")
    return graphs[0]
