"""Checking the maximum-degree theorem on concrete graphs, and hunting for
graphs whose longest paths have no common vertex."""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, TextIO

from .exhaustive import is_connected_masks, labeled_masks, nonisomorphic_graphs
from .graph import Graph, GraphError, Path, max_degree_vertices
from .graph6 import parse_graph6
from .longest import (
    DEFAULT_DP_THRESHOLD,
    Method,
    common_vertex_mask,
    enumerate_longest_paths,
    intersection_of_longest_paths,
)
from .recognizers import TwoK2Witness, find_induced_2k2


class Verdict(str, Enum):
    HOLDS = "holds"
    NOT_APPLICABLE = "not-applicable"
    VIOLATED = "violated"


@dataclass(frozen=True)
class TheoremReport:
    verdict: Verdict
    delta_vertices: frozenset[int]
    intersection: frozenset[int] | None
    longest_order: int | None = None
    witness_path: Path | None = None
    witness_2k2: TwoK2Witness | None = None
    reason: str = ""


def verify_max_degree_theorem(
    g: Graph,
    method: Method | str = Method.DELETION,
    *,
    cap: int | None = None,
    dp_threshold: int = DEFAULT_DP_THRESHOLD,
) -> TheoremReport:
    """Check that every maximum-degree vertex lies on all longest paths.

    Graphs without edges or with an induced 2K2 are outside the theorem and
    come back ``not-applicable``. A ``violated`` report carries a longest
    path that misses a maximum-degree vertex; it should never occur.
    """
    delta = max_degree_vertices(g)
    if not g.edges:
        return TheoremReport(Verdict.NOT_APPLICABLE, delta, None, reason="no edges")
    w = find_induced_2k2(g)
    if w is not None:
        return TheoremReport(Verdict.NOT_APPLICABLE, delta, None, witness_2k2=w, reason="induced 2K2")
    rep = intersection_of_longest_paths(g, method, cap=cap, dp_threshold=dp_threshold)
    if delta <= rep.intersection:
        return TheoremReport(Verdict.HOLDS, delta, rep.intersection, rep.longest_order)
    missing = min(delta - rep.intersection)
    witness = next((p for p in enumerate_longest_paths(g) if missing not in p.vertex_set), None)
    return TheoremReport(Verdict.VIOLATED, delta, rep.intersection, rep.longest_order, witness_path=witness)


@dataclass
class HuntResult:
    found: list[Graph] = field(default_factory=list)
    scanned: int = 0
    skipped: int = 0
    malformed: list[tuple[int, str]] = field(default_factory=list)

    def summary(self) -> str:
        return f"scanned={self.scanned} skipped={self.skipped} found={len(self.found)}"


def _has_empty_intersection(g: Graph) -> bool:
    return common_vertex_mask(g.masks) == 0


def hunt_counterexamples(
    source: Iterable[Graph | str],
    *,
    errors: TextIO | None = None,
) -> HuntResult:
    """Scan a stream for connected graphs whose longest paths share no vertex.

    Records may be :class:`Graph` objects or graph6 lines; malformed lines are
    reported with their line number and skipped, disconnected graphs are
    counted as skipped.
    """
    res = HuntResult()
    for lineno, rec in enumerate(source, 1):
        if isinstance(rec, str):
            if not rec.strip():
                continue
            try:
                rec = parse_graph6(rec)
            except GraphError as exc:
                res.malformed.append((lineno, str(exc)))
                if errors is not None:
                    print(f"line {lineno}: {exc}", file=errors)
                continue
        if rec.n == 0 or not is_connected_masks(rec.masks):
            res.skipped += 1
            continue
        res.scanned += 1
        if _has_empty_intersection(rec):
            res.found.append(rec)
    return res


def hunt_exhaustive(max_n: int, *, labeled: bool = True, min_n: int = 1, progress: TextIO | None = None) -> HuntResult:
    """Hunt over every graph with ``min_n..max_n`` vertices.

    ``labeled=True`` walks all labelled graphs (raw adjacency enumeration);
    otherwise one graph per isomorphism class is used (n <= 7).
    """
    res = HuntResult()
    for n in range(min_n, max_n + 1):
        if labeled:
            for masks in labeled_masks(n):
                if not is_connected_masks(masks):
                    res.skipped += 1
                    continue
                res.scanned += 1
                if common_vertex_mask(masks) == 0:
                    res.found.append(Graph.from_masks(masks))
        else:
            part = hunt_counterexamples(nonisomorphic_graphs(n))
            res.scanned += part.scanned
            res.skipped += part.skipped
            res.found.extend(part.found)
        if progress is not None:
            print(f"n={n} {res.summary()}", file=progress)
    return res

