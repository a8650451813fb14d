"""Literature graphs shipped as edge-list data files."""
from __future__ import annotations

from importlib import resources

from .graph import Graph, parse_edge_list

_FILES = {
    "walther-zamfirescu-12": "walther_zamfirescu_12.txt",
}


def fixture_names() -> list[str]:
    return sorted(_FILES)


def fixture_text(name: str) -> str:
    try:
        fname = _FILES[name]
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; known: {', '.join(fixture_names())}") from None
    return resources.files(__package__).joinpath("data", fname).read_text()


def fixture(name: str) -> Graph:
    return parse_edge_list(fixture_text(name))
