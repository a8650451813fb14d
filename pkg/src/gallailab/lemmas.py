"""Constructive forms of the lemmas behind the maximum-degree theorem.

* Dominating paths and the one-step extension of a non-dominating path.
* The four local rules that a vertex ``x`` off a longest path must obey; a
  broken rule is turned into a strictly longer path.
* Selection of a vertex whose neighbourhood meets every ``S``-``T`` edge,
  with an induced-2K2 certificate when no such vertex exists.
* The ``k`` / ``k+1`` pairwise-disjoint edge families between the split sets
  ``S`` and ``T`` of a longest path.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .graph import Edge, Graph, GraphError, Path, bits, to_mask
from .longest import is_longest_path
from .recognizers import TwoK2Witness, find_induced_2k2


class Not2K2FreeError(GraphError):
    """Raised when a step that needs 2K2-freeness meets an induced 2K2."""

    def __init__(self, message: str, witness: TwoK2Witness):
        super().__init__(message)
        self.witness = witness


# -- dominating paths --------------------------------------------------


def is_dominating(g: Graph, p: Path) -> bool:
    """True iff ``G - V(P)`` has no edge."""
    p.validate(g)
    rest = ((1 << g.n) - 1) & ~p.mask
    return all(not g.masks[v] & rest for v in bits(rest))


def extend_non_dominating(g: Graph, p: Path, uv: Edge) -> Path:
    """Lengthen ``p`` using an edge ``uv`` that avoids it.

    Connecting edges are tried in the order ``v v0``, ``v v1``, ``u v0``,
    ``u v1``. Joining at ``v0`` prepends ``u v``; joining at ``v1`` replaces
    ``v0`` by ``u v``.
    """
    p.validate(g)
    u, v = uv
    if not g.has_edge(u, v):
        raise GraphError(f"{u}-{v} is not an edge")
    if u in p.vertex_set or v in p.vertex_set:
        raise GraphError(f"edge {u}-{v} touches the path")
    if p.order < 2:
        raise GraphError("path needs at least one edge")
    v0, v1 = p[0], p[1]
    tail = list(p.vertices)
    for a, b in ((u, v), (v, u)):
        if g.has_edge(b, v0):
            return Path.of(g, [a, b] + tail)
        if g.has_edge(b, v1):
            return Path.of(g, [a, b] + tail[1:])
    raise Not2K2FreeError(
        f"no edge joins {u}-{v} to {v0}-{v1}",
        TwoK2Witness.from_edges((v0, v1), (u, v)),
    )


def _first_missed_edge(g: Graph, p: Path) -> Edge | None:
    rest = ((1 << g.n) - 1) & ~p.mask
    for a in bits(rest):
        nb = g.masks[a] & rest & ~((1 << (a + 1)) - 1)
        if nb:
            return a, (nb & -nb).bit_length() - 1
    return None


def find_dominating_path(g: Graph) -> Path:
    """A dominating path grown from the first edge (not necessarily longest).

    Once no edge avoids the path, both ends are extended greedily.

    Raises :class:`Not2K2FreeError` carrying an induced 2K2 when ``g`` is not
    2K2-free, and :class:`GraphError` when ``g`` has no edge.
    """
    if not g.edges:
        raise GraphError("graph has no edge")
    w = find_induced_2k2(g)
    if w is not None:
        raise Not2K2FreeError(f"induced 2K2 on edges {w.edges[0]} and {w.edges[1]}", w)
    p = Path.of(g, g.edges[0])
    for _ in range(g.n):
        missed = _first_missed_edge(g, p)
        if missed is None:
            return _stretch_ends(g, p)
        p = extend_non_dominating(g, p, missed)
    raise AssertionError("extension did not terminate")  # pragma: no cover


def _stretch_ends(g: Graph, p: Path) -> Path:
    # Hang free neighbours on either end; a superset of V(P) stays dominating.
    seq = list(p.vertices)
    used = p.mask
    for _ in range(2):
        while free := g.masks[seq[-1]] & ~used:
            v = (free & -free).bit_length() - 1
            seq.append(v)
            used |= 1 << v
        seq.reverse()
    return Path.of(g, seq).canonical()


# -- local rules for a vertex off a path -------------------------------


class ViolationKind(str, Enum):
    ADJACENT_TO_ENDPOINT = "adjacent-to-endpoint"
    CONSECUTIVE_NEIGHBORS = "consecutive-neighbors"
    ENDPOINT_CHORD = "endpoint-chord"
    SUCCESSOR_CHORD = "successor-chord"


@dataclass(frozen=True)
class LemmaViolation:
    """A broken rule for ``x`` relative to a path.

    ``indices`` are path positions: the endpoint position for
    ``adjacent-to-endpoint``; ``i`` with ``x ~ v_i, v_{i+1}`` for
    ``consecutive-neighbors``; ``a`` with ``x ~ v_a`` and ``v_0 ~ v_{a+1}``
    for ``endpoint-chord``; ``(a, b)``, ``a < b``, with ``x ~ v_a, v_b`` and
    ``v_{a+1} ~ v_{b+1}`` for ``successor-chord``.
    """

    kind: ViolationKind
    x: int
    indices: tuple[int, ...]


def check_path_rules(g: Graph, p: Path, x: int) -> list[LemmaViolation]:
    """Every broken rule for ``(p, x)``; an empty list on any longest path.

    Chords that are path edges themselves (``a = 0`` for the endpoint chord,
    ``b = a + 1`` for the successor chord) are already covered by the first
    two rules and are not reported again.
    """
    p.validate(g)
    if x in p.vertex_set:
        raise GraphError(f"vertex {x} lies on the path")
    vs = p.vertices
    last = len(vs) - 1
    nx_ = g.masks[x]
    on = [i for i, v in enumerate(vs) if nx_ >> v & 1]
    out: list[LemmaViolation] = []
    for i in sorted({0, last}):
        if nx_ >> vs[i] & 1:
            out.append(LemmaViolation(ViolationKind.ADJACENT_TO_ENDPOINT, x, (i,)))
    onset = set(on)
    for i in on:
        if i + 1 in onset:
            out.append(LemmaViolation(ViolationKind.CONSECUTIVE_NEIGHBORS, x, (i,)))
    for a in on:
        if 1 <= a < last and g.has_edge(vs[0], vs[a + 1]):
            out.append(LemmaViolation(ViolationKind.ENDPOINT_CHORD, x, (a,)))
    for ia, a in enumerate(on):
        for b in on[ia + 1:]:
            if b >= a + 2 and b < last and g.has_edge(vs[a + 1], vs[b + 1]):
                out.append(LemmaViolation(ViolationKind.SUCCESSOR_CHORD, x, (a, b)))
    return out


def lengthen_path(g: Graph, p: Path, x: int, viol: LemmaViolation) -> Path:
    """Turn a broken rule into a path through ``x`` longer than ``p``."""
    p.validate(g)
    vs = list(p.vertices)
    if viol.x != x:
        raise GraphError("violation refers to another vertex")
    kind = ViolationKind(viol.kind)
    if any(not 0 <= i < len(vs) for i in viol.indices):
        raise GraphError(f"violation {viol} indexes outside the path")
    if kind is ViolationKind.ADJACENT_TO_ENDPOINT:
        (i,) = viol.indices
        seq = [x] + vs if i == 0 else vs + [x]
    elif kind is ViolationKind.CONSECUTIVE_NEIGHBORS:
        (i,) = viol.indices
        seq = vs[: i + 1] + [x] + vs[i + 1:]
    elif kind is ViolationKind.ENDPOINT_CHORD:
        (a,) = viol.indices
        seq = [x] + vs[a::-1] + vs[a + 1:]
    else:
        a, b = viol.indices
        seq = vs[: a + 1] + [x] + vs[b:a:-1] + vs[b + 1:]
    try:
        return Path.of(g, seq)
    except GraphError as exc:
        raise GraphError(f"violation {viol} is inconsistent with the graph: {exc}") from exc


# -- meeting vertex ----------------------------------------------------


@dataclass(frozen=True)
class MeetingFailure:
    edge: Edge
    witness: TwoK2Witness


@dataclass(frozen=True)
class MeetingSelection:
    y: int
    bipartite_degree: int
    s_prime: frozenset[int]
    t_prime: frozenset[int]
    failure: MeetingFailure | None = None


def select_meeting_vertex(g: Graph, s, t) -> MeetingSelection:
    """Pick ``y`` in ``T`` of maximum degree into ``S`` (lowest id on ties).

    If some edge ``uv`` of E(S, T) avoids N(y), the maximality of ``y``
    guarantees an ``s`` in N(y) ∩ S with ``v`` not adjacent to ``s``; then
    ``uv`` and ``sy`` are an induced 2K2, returned as the failure witness.
    """
    s, t = frozenset(s), frozenset(t)
    if not t:
        raise GraphError("T is empty")
    if s & t:
        raise GraphError("S and T overlap")
    smask, tmask = to_mask(s), to_mask(t)
    for v in s:
        if g.masks[v] & smask:
            raise GraphError("S is not independent")
    y = max(sorted(t), key=lambda w: bin(g.masks[w] & smask).count("1"))
    ny = g.masks[y]
    s_prime = ny & smask
    sel = dict(
        y=y,
        bipartite_degree=bin(s_prime).count("1"),
        s_prime=frozenset(bits(s_prime)),
        t_prime=frozenset(bits(ny & tmask)),
    )
    for u in sorted(s):
        if ny >> u & 1:
            continue
        for v in bits(g.masks[u] & tmask & ~ny):
            # uv misses N(y): take the first s in S' not adjacent to v.
            cands = s_prime & ~g.masks[v]
            if not cands:
                raise AssertionError("y was not of maximum bipartite degree")  # pragma: no cover
            sv = (cands & -cands).bit_length() - 1
            witness = TwoK2Witness.from_edges((u, v), (sv, y))
            return MeetingSelection(**sel, failure=MeetingFailure((u, v), witness))
    return MeetingSelection(**sel)


# -- disjoint edges between S and T ------------------------------------


@dataclass(frozen=True)
class IndependentEdgeFamily:
    """Pairwise disjoint S-T edges along a longest path.

    ``case`` records which family was built: ``base`` (k edges only),
    ``head`` / ``tail`` (gap at the ``v0`` / ``vl`` end) or ``interior``.
    """

    k: int
    s: frozenset[int]
    t: frozenset[int]
    edges: tuple[Edge, ...]
    case: str
    neighbor_positions: tuple[int, ...] = field(default=())


def build_independent_edges(g: Graph, p: Path, x: int, *, check_longest: bool = True) -> IndependentEdgeFamily:
    """Build ``k = |N(x)|`` (or ``k + 1`` when ``p.order >= 2k + 2``) disjoint
    edges of E(S, T) with ``S = {v0} ∪ {v_{a+1} : v_a ∈ N(x)}`` and
    ``T = V(P) - S``.

    With a long enough path the ``k`` neighbours of ``x`` cut it into ``k + 1``
    stretches of non-neighbours, one of which has two vertices; the first
    such stretch in path order decides the family.
    """
    p.validate(g)
    if x in p.vertex_set:
        raise GraphError(f"vertex {x} lies on the path")
    if g.masks[x] & ~p.mask:
        raise GraphError(f"vertex {x} has a neighbour off the path")
    if check_longest and not is_longest_path(g, p):
        raise GraphError("path is not a longest path")
    viol = check_path_rules(g, p, x)
    if viol:
        raise GraphError(f"path rules broken: {viol[0]}")

    vs = p.vertices
    last = len(vs) - 1
    pos = tuple(i for i, v in enumerate(vs) if g.masks[x] >> v & 1)
    k = len(pos)
    s = frozenset([vs[0]] + [vs[a + 1] for a in pos])
    t = p.vertex_set - s

    def e(i: int) -> Edge:
        return tuple(sorted((vs[i], vs[i + 1])))

    if p.order < 2 * k + 2:
        edges, case = [e(a) for a in pos], "base"
    else:
        cuts = [-1, *pos, last + 1]
        gap = next(j for j in range(k + 1) if cuts[j + 1] - cuts[j] - 1 >= 2)
        if gap == 0:
            edges, case = [e(0)] + [e(a) for a in pos], "head"
        elif gap == k:
            edges, case = [e(0)] + [e(a + 1) for a in pos], "tail"
        else:
            alpha, beta = cuts[gap], cuts[gap + 1]
            edges = [e(0)] + [e(a + 1) for a in pos if a <= alpha] + [e(b) for b in pos if b >= beta]
            case = "interior"
    return IndependentEdgeFamily(k, s, t, tuple(edges), case, pos)


def check_edge_family(g: Graph, fam: IndependentEdgeFamily) -> None:
    """Raise unless the family is a matching inside E(S, T)."""
    seen: set[int] = set()
    for a, b in fam.edges:
        if not g.has_edge(a, b):
            raise GraphError(f"{a}-{b} is not an edge")
        if not ((a in fam.s and b in fam.t) or (a in fam.t and b in fam.s)):
            raise GraphError(f"{a}-{b} is not an S-T edge")
        if a in seen or b in seen:
            raise GraphError(f"{a}-{b} shares an endpoint with another edge")
        seen.update((a, b))
