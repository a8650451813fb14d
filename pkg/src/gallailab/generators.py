"""Seeded random instances for each graph class the properties quantify over.

The PRNG is defined here by its update equations so that a seed names the
same graph in any language:

* seeding with SplitMix64: ``z = seed + 0x9E3779B97F4A7C15``;
  ``z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9``;
  ``z = (z ^ (z >> 27)) * 0x94D049BB133111EB``; ``state = z ^ (z >> 31)``
  (all mod 2**64, state forced non-zero);
* stepping with xorshift64*: ``x ^= x >> 12; x ^= x << 25; x ^= x >> 27``,
  output ``x * 0x2545F4914F6CDD1D mod 2**64``.

Uniform floats take the top 53 output bits; bounded integers use rejection
sampling on the full 64-bit output.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .graph import Graph, complement
from .recognizers import find_induced_2k2

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15


def splitmix64(z: int) -> int:
    z = (z + GOLDEN) & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def derive_seed(seed: int, index: int) -> int:
    """Per-instance seed for batch generation: ``splitmix64(seed ^ splitmix64(index))``."""
    return splitmix64((seed & MASK64) ^ splitmix64(index & MASK64))


class XorShift64Star:
    def __init__(self, seed: int):
        self.state = splitmix64(seed & MASK64) or GOLDEN

    def next_u64(self) -> int:
        x = self.state
        x ^= x >> 12
        x ^= (x << 25) & MASK64
        x ^= x >> 27
        self.state = x
        return (x * 0x2545F4914F6CDD1D) & MASK64

    def random(self) -> float:
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def below(self, k: int) -> int:
        """Uniform integer in ``[0, k)``."""
        if k <= 0:
            raise ValueError("k must be positive")
        limit = (1 << 64) - (1 << 64) % k
        while True:
            r = self.next_u64()
            if r < limit:
                return r % k

    def shuffle(self, items: list) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]

    def choice(self, items):
        return items[self.below(len(items))]


class GraphClass(str, Enum):
    SPLIT = "split"
    CHORDAL = "chordal"
    COCHORDAL = "cochordal"
    TWO_K2_FREE = "2k2free"
    ERDOS_RENYI = "erdos-renyi"


@dataclass(frozen=True)
class GenSpec:
    n: int
    density: float
    seed: int
    kind: GraphClass

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"n must be non-negative, got {self.n}")
        if not 0.0 <= self.density <= 1.0:
            raise ValueError(f"density must lie in [0, 1], got {self.density}")
        object.__setattr__(self, "kind", GraphClass(self.kind))


def _check(spec: GenSpec, kind: GraphClass) -> XorShift64Star:
    if spec.kind is not kind:
        raise ValueError(f"spec is for {spec.kind.value}, not {kind.value}")
    return XorShift64Star(spec.seed)


def _er_masks(n: int, density: float, rng: XorShift64Star) -> list[int]:
    masks = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < density:
                masks[u] |= 1 << v
                masks[v] |= 1 << u
    return masks


def erdos_renyi(spec: GenSpec) -> Graph:
    """Each pair (in lexicographic order) is an edge with probability ``density``."""
    rng = _check(spec, GraphClass.ERDOS_RENYI)
    return Graph.from_masks(_er_masks(spec.n, spec.density, rng))


def random_split_graph(spec: GenSpec) -> Graph:
    rng = _check(spec, GraphClass.SPLIT)
    n = spec.n
    if n == 0:
        return Graph(0)
    k = 1 + rng.below(n)
    perm = list(range(n))
    rng.shuffle(perm)
    clique, indep = perm[:k], perm[k:]
    masks = [0] * n
    for i, u in enumerate(clique):
        for v in clique[i + 1:]:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
    for u in clique:
        for v in indep:
            if rng.random() < spec.density:
                masks[u] |= 1 << v
                masks[v] |= 1 << u
    return Graph.from_masks(masks)


def _chordal_masks(n: int, density: float, rng: XorShift64Star) -> list[int]:
    # Each new vertex attaches to a random subset of a clique of the graph
    # built so far, so insertion order reversed is a perfect elimination order.
    masks = [0] * n
    for v in range(1, n):
        root = rng.below(v)
        clique = [root]
        others = [u for u in range(v) if masks[root] >> u & 1]
        rng.shuffle(others)
        for u in others:
            if all(masks[u] >> w & 1 for w in clique):
                clique.append(u)
        for u in clique:
            if rng.random() < density:
                masks[u] |= 1 << v
                masks[v] |= 1 << u
    perm = list(range(n))
    rng.shuffle(perm)
    out = [0] * n
    for v in range(n):
        for u in range(n):
            if masks[v] >> u & 1:
                out[perm[v]] |= 1 << perm[u]
    return out


def random_chordal(spec: GenSpec) -> Graph:
    rng = _check(spec, GraphClass.CHORDAL)
    return Graph.from_masks(_chordal_masks(spec.n, spec.density, rng))


def random_cochordal(spec: GenSpec) -> Graph:
    """Complement of a random chordal graph."""
    rng = _check(spec, GraphClass.COCHORDAL)
    return complement(Graph.from_masks(_chordal_masks(spec.n, spec.density, rng)))


def repair_to_2k2_free(g: Graph, rng: XorShift64Star) -> tuple[Graph, int]:
    """Add cross edges until no induced 2K2 is left.

    Each round takes the first witness ``(a, b, c, d)`` and adds one of
    ``ac, ad, bc, bd`` uniformly; returns the repaired graph and the number
    of edges added (at most ``C(n, 2) - m``).
    """
    repairs = 0
    while (w := find_induced_2k2(g)) is not None:
        u, v = rng.choice([(w.a, w.c), (w.a, w.d), (w.b, w.c), (w.b, w.d)])
        masks = list(g.masks)
        masks[u] |= 1 << v
        masks[v] |= 1 << u
        g = Graph.from_masks(masks)
        repairs += 1
    return g, repairs


def random_2k2_free(spec: GenSpec) -> Graph:
    """Erdős–Rényi graph repaired into a 2K2-free one (biased towards dense graphs)."""
    rng = _check(spec, GraphClass.TWO_K2_FREE)
    g = Graph.from_masks(_er_masks(spec.n, spec.density, rng))
    return repair_to_2k2_free(g, rng)[0]


_DISPATCH = {
    GraphClass.SPLIT: random_split_graph,
    GraphClass.CHORDAL: random_chordal,
    GraphClass.COCHORDAL: random_cochordal,
    GraphClass.TWO_K2_FREE: random_2k2_free,
    GraphClass.ERDOS_RENYI: erdos_renyi,
}


def generate(spec: GenSpec) -> Graph:
    return _DISPATCH[spec.kind](spec)


def generate_batch(kind: GraphClass | str, n: int, density: float, seed: int, count: int) -> list[Graph]:
    """``count`` graphs with per-instance seeds from :func:`derive_seed`."""
    kind = GraphClass(kind)
    return [generate(GenSpec(n, density, derive_seed(seed, i), kind)) for i in range(count)]
