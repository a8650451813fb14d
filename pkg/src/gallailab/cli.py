"""Command-line entry point.

Exit codes: 0 success, 1 usage error, 2 input parse error, 3 a ``verify``
run found a violated verdict or a ``hunt`` found a counterexample.
"""
from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence, TextIO

from . import __version__
from .exhaustive import labeled_graphs, nonisomorphic_graphs
from .fixtures import fixture, fixture_names
from .generators import GraphClass, generate_batch
from .graph import Graph, GraphError, parse_edge_lists
from .graph6 import parse_graph6, write_graph6
from .lemmas import Not2K2FreeError, find_dominating_path
from .longest import (
    DEFAULT_DP_THRESHOLD,
    EnumerationCapExceeded,
    Method,
    enumerate_longest_paths,
    intersection_of_longest_paths,
    longest_path_order,
)
from .recognizers import find_induced_2k2, is_chordal, is_cochordal, split_partition
from .theorem import Verdict, hunt_counterexamples, verify_max_degree_theorem

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_FOUND = 0, 1, 2, 3
DEFAULT_CAP = 100_000


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


@dataclass
class RunConfig:
    subcommand: str
    inputs: list[str] = field(default_factory=list)
    fixture: str | None = None
    gen_class: str | None = None
    n: int = 8
    density: float = 0.5
    count: int = 1
    seed: int = 0
    fmt: str = "machine"
    input_format: str = "auto"
    method: str = Method.DELETION.value
    cap: int = DEFAULT_CAP
    dp_threshold: int = DEFAULT_DP_THRESHOLD
    workers: int = 1
    paths: bool = False
    exhaustive: int | None = None
    iso: bool = False

    def validate(self) -> None:
        for name in ("cap", "dp_threshold", "workers", "count"):
            if getattr(self, name) <= 0:
                raise UsageError(f"--{name.replace('_', '-')} must be positive")
        sources = bool(self.inputs) + (self.fixture is not None) + (self.gen_class is not None) + (
            self.exhaustive is not None
        )
        if sources > 1:
            raise UsageError("give exactly one input source")
        if self.fixture is not None and self.fixture not in fixture_names():
            raise UsageError(f"unknown fixture {self.fixture!r}; known: {', '.join(fixture_names())}")
        if self.exhaustive is not None and self.subcommand != "hunt":
            raise UsageError("--exhaustive is only for hunt")


# -- formatting ----------------------------------------------------------


def _vs(vertices: Iterable[int] | None) -> str:
    if vertices is None:
        return "-"
    vs = sorted(vertices)
    return ",".join(map(str, vs)) if vs else "-"


def _record(fields: list[tuple[str, object]], fmt: str) -> str:
    if fmt == "machine":
        return " ".join(f"{k}={v}" for k, v in fields)
    return "\n".join(f"{k:>14}: {v}" for k, v in fields)


# -- per-graph work (top-level so worker processes can pickle it) ---------


def _recognize(g: Graph, cfg: RunConfig) -> tuple[list[str], bool]:
    w = find_induced_2k2(g)
    sp = split_partition(g)
    peo = is_chordal(g)
    fields = [
        ("n", g.n),
        ("m", g.m),
        ("2k2free", "no" if w else "yes"),
        ("witness", ",".join(map(str, w.as_tuple())) if w else "-"),
        ("split", "yes" if sp else "no"),
        ("clique", _vs(sp.clique) if sp else "-"),
        ("independent", _vs(sp.independent) if sp else "-"),
        ("chordal", "yes" if peo else "no"),
        ("peo", ",".join(map(str, peo.order)) if peo and peo.order else "-"),
        ("cochordal", "yes" if is_cochordal(g) else "no"),
    ]
    return [_record(fields, cfg.fmt)], False


def _longest(g: Graph, cfg: RunConfig) -> tuple[list[str], bool]:
    order = longest_path_order(g, dp_threshold=cfg.dp_threshold)
    try:
        paths = enumerate_longest_paths(g, cap=cfg.cap)
    except EnumerationCapExceeded:
        print(f"longest: more than {cfg.cap} longest paths; raise --cap to list them", file=sys.stderr)
        return [_record([("order", order), ("count", 0), ("capped", "yes")], cfg.fmt)], False
    lines = [_record([("order", order), ("count", len(paths))], cfg.fmt)]
    if cfg.paths:
        lines.extend(str(p) for p in paths)
    return lines, False


def _intersect(g: Graph, cfg: RunConfig) -> tuple[list[str], bool]:
    rep = intersection_of_longest_paths(g, cfg.method, cap=cfg.cap, dp_threshold=cfg.dp_threshold)
    head = [
        ("order", rep.longest_order),
        ("count", len(rep.intersection)),
        ("method", rep.method.value),
        ("paths", rep.path_count if rep.path_count is not None else "-"),
    ]
    return [_record(head, cfg.fmt)] + [str(v) for v in sorted(rep.intersection)], False


def _verify(g: Graph, cfg: RunConfig) -> tuple[list[str], bool]:
    rep = verify_max_degree_theorem(g, cfg.method, cap=cfg.cap, dp_threshold=cfg.dp_threshold)
    fields = [
        ("verdict", rep.verdict.value),
        ("delta", _vs(rep.delta_vertices)),
        ("intersection", _vs(rep.intersection)),
        ("order", rep.longest_order if rep.longest_order is not None else "-"),
        ("witness", str(rep.witness_path) if rep.witness_path else (
            ",".join(map(str, rep.witness_2k2.as_tuple())) if rep.witness_2k2 else "-")),
    ]
    return [_record(fields, cfg.fmt)], rep.verdict is Verdict.VIOLATED


def _dominate(g: Graph, cfg: RunConfig) -> tuple[list[str], bool]:
    try:
        p = find_dominating_path(g)
    except Not2K2FreeError as exc:
        fields = [("path", "-"), ("order", "-"), ("error", "not-2k2-free"),
                  ("witness", ",".join(map(str, exc.witness.as_tuple())))]
    except GraphError:
        fields = [("path", "-"), ("order", "-"), ("error", "no-edges"), ("witness", "-")]
    else:
        fields = [("path", str(p)), ("order", p.order), ("error", "-"), ("witness", "-")]
    return [_record(fields, cfg.fmt)], False


_HANDLERS: dict[str, Callable[[Graph, RunConfig], tuple[list[str], bool]]] = {
    "recognize": _recognize,
    "longest": _longest,
    "intersect": _intersect,
    "verify": _verify,
    "dominate": _dominate,
}


def _run_one(args):
    name, g, cfg = args
    return _HANDLERS[name](g, cfg)


# -- inputs --------------------------------------------------------------


def _sniff(text: str) -> str:
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip() if not line.startswith(">>graph6<<") else line.strip()
        if line:
            return "graph6" if len(line.split()) == 1 else "edgelist"
    return "graph6"


def _read_source(name: str, stdin: TextIO) -> str:
    if name == "-":
        return stdin.read()
    with open(name) as fh:
        return fh.read()


def _graphs_from_text(text: str, label: str, fmt: str, err: TextIO) -> tuple[list[Graph], int]:
    """Parse a whole input; returns graphs and the number of bad records."""
    if fmt == "auto":
        fmt = _sniff(text)
    if fmt == "edgelist":
        try:
            return parse_edge_lists(text), 0
        except GraphError as exc:
            print(f"{label}: {exc}", file=err)
            return [], 1
    graphs, bad = [], 0
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        try:
            graphs.append(parse_graph6(line))
        except GraphError as exc:
            print(f"{label}:{lineno}: {exc}", file=err)
            bad += 1
    return graphs, bad


def _collect(cfg: RunConfig, stdin: TextIO, err: TextIO) -> tuple[list[Graph], int]:
    if cfg.fixture is not None:
        return [fixture(cfg.fixture)], 0
    if cfg.gen_class is not None:
        return generate_batch(cfg.gen_class, cfg.n, cfg.density, cfg.seed, cfg.count), 0
    graphs, bad = [], 0
    for name in cfg.inputs or ["-"]:
        try:
            text = _read_source(name, stdin)
        except OSError as exc:
            print(f"{name}: {exc}", file=err)
            bad += 1
            continue
        g, b = _graphs_from_text(text, "<stdin>" if name == "-" else name, cfg.input_format, err)
        graphs.extend(g)
        bad += b
    return graphs, bad


# -- subcommands ---------------------------------------------------------


def _map(cfg: RunConfig, graphs: Sequence[Graph]):
    jobs = [(cfg.subcommand, g, cfg) for g in graphs]
    if cfg.workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            yield from pool.map(_run_one, jobs, chunksize=max(1, len(jobs) // (4 * cfg.workers)))
    else:
        yield from map(_run_one, jobs)


def _cmd_batch(cfg: RunConfig, stdin: TextIO, out: TextIO, err: TextIO) -> int:
    graphs, bad = _collect(cfg, stdin, err)
    flagged = False
    for i, (lines, hit) in enumerate(_map(cfg, graphs)):
        if cfg.fmt == "human" and i:
            print(file=out)
        for line in lines:
            print(line, file=out)
        flagged |= hit
    if flagged:
        return EXIT_FOUND
    return EXIT_PARSE if bad else EXIT_OK


def _hunt_chunk(lines: list[str]):
    res = hunt_counterexamples(lines)
    return res.scanned, res.skipped, [write_graph6(g) for g in res.found], res.malformed


def _cmd_hunt(cfg: RunConfig, stdin: TextIO, out: TextIO, err: TextIO) -> int:
    if cfg.exhaustive is not None:
        if cfg.iso and cfg.exhaustive > 7:
            raise UsageError("--iso covers n <= 7 only")
        stream = (g for n in range(1, cfg.exhaustive + 1)
                  for g in (nonisomorphic_graphs(n) if cfg.iso else labeled_graphs(n)))
        res = hunt_counterexamples(stream)
        scanned, skipped, found, malformed = res.scanned, res.skipped, [write_graph6(g) for g in res.found], []
    else:
        if cfg.fixture is not None:
            lines = [write_graph6(fixture(cfg.fixture))]
        elif cfg.gen_class is not None:
            lines = [write_graph6(g) for g in generate_batch(cfg.gen_class, cfg.n, cfg.density, cfg.seed, cfg.count)]
        else:
            lines = []
            for name in cfg.inputs or ["-"]:
                try:
                    lines.extend(_read_source(name, stdin).splitlines())
                except OSError as exc:
                    print(f"{name}: {exc}", file=err)
        size = max(1, len(lines) // max(1, 4 * cfg.workers))
        chunks = [lines[i:i + size] for i in range(0, len(lines), size)]
        if cfg.workers > 1 and len(chunks) > 1:
            with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
                parts = list(pool.map(_hunt_chunk, chunks))
        else:
            parts = [_hunt_chunk(c) for c in chunks]
        scanned = skipped = 0
        found, malformed = [], []
        for ci, (sc, sk, fd, bad) in enumerate(parts):
            scanned += sc
            skipped += sk
            found.extend(fd)
            malformed.extend((ci * size + ln, msg) for ln, msg in bad)
        for ln, msg in malformed:
            print(f"line {ln}: {msg}", file=err)
    for line in found:
        print(line, file=out)
    print(f"scanned={scanned} skipped={skipped} found={len(found)}", file=out)
    if found:
        return EXIT_FOUND
    return EXIT_PARSE if malformed else EXIT_OK


def _cmd_gen(cfg: RunConfig, stdin: TextIO, out: TextIO, err: TextIO) -> int:
    if cfg.gen_class is None:
        raise UsageError("gen needs --class")
    for g in generate_batch(cfg.gen_class, cfg.n, cfg.density, cfg.seed, cfg.count):
        print(write_graph6(g), file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("inputs", nargs="*", help="graph6 or edge-list files ('-' for stdin)")
    common.add_argument("--fixture", metavar="NAME", help="use a shipped literature graph")
    common.add_argument("--class", dest="gen_class", choices=[c.value for c in GraphClass],
                        help="generate the input instead of reading it")
    common.add_argument("--n", type=int, default=8, help="vertex count for --class")
    common.add_argument("--density", type=float, default=0.5)
    common.add_argument("--count", type=int, default=1)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--format", dest="fmt", choices=["machine", "human"], default="machine")
    common.add_argument("--input-format", choices=["auto", "graph6", "edgelist"], default="auto")
    common.add_argument("--method", choices=[m.value for m in Method], default=Method.DELETION.value)
    common.add_argument("--cap", type=int, default=DEFAULT_CAP, help="max longest paths to enumerate")
    common.add_argument("--dp-threshold", type=int, default=DEFAULT_DP_THRESHOLD)
    common.add_argument("--workers", type=int, default=1)

    parser = _Parser(prog="gallailab", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)
    sub.add_parser("recognize", parents=[common], help="class verdicts with certificates")
    p = sub.add_parser("longest", parents=[common], help="longest path order and paths")
    p.add_argument("--paths", action="store_true", help="list the longest paths")
    sub.add_parser("intersect", parents=[common], help="vertices common to all longest paths")
    sub.add_parser("verify", parents=[common], help="check the maximum-degree theorem")
    sub.add_parser("dominate", parents=[common], help="find a dominating path")
    p = sub.add_parser("hunt", parents=[common], help="scan for graphs with no common longest-path vertex")
    p.add_argument("--exhaustive", type=int, metavar="N", help="all graphs up to N vertices")
    p.add_argument("--iso", action="store_true", help="with --exhaustive: one graph per isomorphism class")
    sub.add_parser("gen", parents=[common], help="emit generated graphs as graph6")
    return parser


def run(argv: Sequence[str] | None = None, *, stdin: TextIO | None = None,
        stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    stdin = stdin or sys.stdin
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    try:
        ns = build_parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    cfg = RunConfig(**{k: v for k, v in vars(ns).items() if k in RunConfig.__dataclass_fields__})
    try:
        cfg.validate()
        if cfg.subcommand == "hunt":
            return _cmd_hunt(cfg, stdin, out, err)
        if cfg.subcommand == "gen":
            return _cmd_gen(cfg, stdin, out, err)
        return _cmd_batch(cfg, stdin, out, err)
    except UsageError as exc:
        print(f"gallailab: error: {exc}", file=err)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"gallailab: error: {exc}", file=err)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
