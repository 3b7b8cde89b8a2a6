"""Graph sources for sweeps and trials: the small-graph atlas and seeded
random generation.

All randomness flows from one integer seed through named child generators, so
every report can embed the seed it was produced from.
"""

from __future__ import annotations

import random
from typing import Iterator

from networkx.generators.atlas import graph_atlas_g

from .graphs import Graph, is_nice

_ATLAS_MAX_N = 7


def rng_for(seed: int, name: str) -> random.Random:
    """Named child generator: independent streams from one master seed."""
    return random.Random(f"{seed}:{name}")


def atlas_graphs(max_n: int) -> list[Graph]:
    """All graphs with up to max_n vertices, one per isomorphism class.

    Backed by the bundled atlas, which covers up to 7 vertices.
    """
    if not 0 <= max_n <= _ATLAS_MAX_N:
        raise ValueError(f"atlas covers 0..{_ATLAS_MAX_N} vertices, got {max_n}")
    out = []
    for nxg in graph_atlas_g():
        n = nxg.number_of_nodes()
        if n > max_n:
            break
        edges = tuple(sorted(tuple(sorted((u + 1, v + 1))) for u, v in nxg.edges()))
        out.append(Graph(n, edges))
    return out


def nice_atlas_graphs(max_n: int) -> list[Graph]:
    return [g for g in atlas_graphs(max_n) if is_nice(g)]


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    """One draw from the independent-edge model on n labelled vertices."""
    edges = tuple((u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)
                  if rng.random() < p)
    return Graph(n, edges)


def random_nice_graph(n: int, p: float, rng: random.Random,
                      max_attempts: int = 10000) -> Graph:
    """Rejection-sample a nice graph: draws are discarded, never repaired,
    so the result is unbiased among nice graphs at the given (n, p)."""
    for _ in range(max_attempts):
        g = random_graph(n, p, rng)
        if is_nice(g):
            return g
    raise ValueError(f"no nice graph found in {max_attempts} draws at n={n}, p={p}")


def random_nice_graphs(count: int, n: int, p: float, rng: random.Random) -> Iterator[Graph]:
    for _ in range(count):
        yield random_nice_graph(n, p, rng)
