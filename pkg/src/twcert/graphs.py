"""Graph representation, niceness checks, and edge-set partitioning.

Vertices are the integers 1..n.  Edges are pairs (u, v) with u < v, stored in
lexicographic order; that order is the canonical edge order used for every
matrix row/column and every edge-exponent vector in the package, so results
are reproducible byte for byte.

An edge-exponent vector (``EdgeVector``) is a plain tuple of non-negative
integers, one entry per edge in canonical order.  Vertex sets are handled as
sorted tuples throughout (determinism over hash iteration order).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Iterable, Sequence

from .errors import InputFormatError

Edge = tuple[int, int]
EdgeVector = tuple[int, ...]


def _norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """A simple graph on vertices 1..n with a canonical (sorted) edge list."""

    n: int
    edges: tuple[Edge, ...]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"vertex count must be non-negative, got {self.n}")
        object.__setattr__(self, "edges", tuple(sorted(self.edges)))
        seen = set()
        for u, v in self.edges:
            if not (1 <= u < v <= self.n):
                raise ValueError(f"edge ({u}, {v}) violates 1 <= u < v <= {self.n}")
            if (u, v) in seen:
                raise ValueError(f"duplicate edge ({u}, {v})")
            seen.add((u, v))

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def has_edge(self, u: int, v: int) -> bool:
        return _norm_edge(u, v) in edge_index(self)


@lru_cache(maxsize=None)
def edge_index(g: Graph) -> dict[Edge, int]:
    """Map each edge to its position in the canonical order."""
    return {e: i for i, e in enumerate(g.edges)}


@lru_cache(maxsize=None)
def adjacency(g: Graph) -> tuple[tuple[int, ...], ...]:
    """Sorted neighbour tuples, indexed by vertex (entry 0 unused)."""
    nbrs: list[list[int]] = [[] for _ in range(g.n + 1)]
    for u, v in g.edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    return tuple(tuple(sorted(a)) for a in nbrs)


def neighbours(g: Graph, i: int) -> tuple[int, ...]:
    _check_vertex(g, i)
    return adjacency(g)[i]


def degree(g: Graph, i: int) -> int:
    return len(neighbours(g, i))


def incident_edges(g: Graph, i: int) -> tuple[Edge, ...]:
    """All edges containing vertex i, in canonical order."""
    _check_vertex(g, i)
    return tuple(e for e in g.edges if i in e)


def _check_vertex(g: Graph, i: int) -> None:
    if not 1 <= i <= g.n:
        raise ValueError(f"vertex {i} out of range 1..{g.n}")


def components(g: Graph) -> list[tuple[int, ...]]:
    """Connected components as sorted vertex tuples (isolated vertices included)."""
    adj = adjacency(g)
    seen = [False] * (g.n + 1)
    out = []
    for start in g.vertices():
        if seen[start]:
            continue
        stack = [start]
        seen[start] = True
        comp = []
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in adj[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        out.append(tuple(sorted(comp)))
    return out


def is_nice(g: Graph) -> bool:
    """True iff no connected component is a single edge."""
    adj = adjacency(g)
    for u, v in g.edges:
        if len(adj[u]) == 1 and len(adj[v]) == 1:
            return False
    return True


# ---------------------------------------------------------------------------
# Partition of the edge set relative to a vertex subset J
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class JPartition:
    """Split of the edge set relative to a vertex subset J.

    e4: both ends in J.  e3: exactly one end in J.  Among the edges avoiding J,
    e2 are those isolated in the J-deleted graph and e1 the non-isolated ones.
    v1 and v2 are the vertex sets spanned by e1 and e2.
    """

    j: tuple[int, ...]
    e1: tuple[Edge, ...]
    e2: tuple[Edge, ...]
    e3: tuple[Edge, ...]
    e4: tuple[Edge, ...]
    v1: tuple[int, ...]
    v2: tuple[int, ...]


def partition_by(g: Graph, j: Iterable[int]) -> JPartition:
    """Partition the edges of g by their relation to the vertex subset J."""
    jset = set(j)
    for v in jset:
        _check_vertex(g, v)
    e1, e2, e3, e4 = [], [], [], []
    outside = [e for e in g.edges if e[0] not in jset and e[1] not in jset]
    deg_out: dict[int, int] = {}
    for u, v in outside:
        deg_out[u] = deg_out.get(u, 0) + 1
        deg_out[v] = deg_out.get(v, 0) + 1
    for e in g.edges:
        u, v = e
        inside = (u in jset) + (v in jset)
        if inside == 2:
            e4.append(e)
        elif inside == 1:
            e3.append(e)
        elif deg_out[u] == 1 and deg_out[v] == 1:
            e2.append(e)
        else:
            e1.append(e)
    v1 = sorted({v for e in e1 for v in e})
    v2 = sorted({v for e in e2 for v in e})
    return JPartition(tuple(sorted(jset)), tuple(e1), tuple(e2), tuple(e3),
                      tuple(e4), tuple(v1), tuple(v2))


# ---------------------------------------------------------------------------
# Subgraph families and their characteristic vectors
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SubgraphFamily:
    """A multiset of subgraphs, each given by a vertex sequence.

    A sequence (a, b) is an edge, (a, b, c) a path, and a closed walk repeats
    its first vertex at the end, e.g. (a, b, c, a).  Each member carries a
    positive multiplicity; scaling the family by k scales every multiplicity.
    """

    members: tuple[tuple[tuple[int, ...], int], ...]

    def scaled(self, k: int) -> "SubgraphFamily":
        return SubgraphFamily(tuple((seq, k * c) for seq, c in self.members))


def member_edges(seq: Sequence[int]) -> list[Edge]:
    """Edges traversed by a vertex sequence, in traversal order."""
    return [_norm_edge(seq[i], seq[i + 1]) for i in range(len(seq) - 1)]


def characteristic_vector(g: Graph, fam: SubgraphFamily) -> EdgeVector:
    """Count, per edge, the traversals by family members (with multiplicity)."""
    idx = edge_index(g)
    counts = [0] * g.m
    for seq, mult in fam.members:
        for e in member_edges(seq):
            if e not in idx:
                raise ValueError(f"family member uses unknown edge {e}")
            counts[idx[e]] += mult
    return tuple(counts)


# ---------------------------------------------------------------------------
# Edge-exponent vector helpers
# ---------------------------------------------------------------------------

def zero_vector(g: Graph) -> EdgeVector:
    return (0,) * g.m


def constant_vector(g: Graph, k: int) -> EdgeVector:
    return (k,) * g.m


def vector_total(k: EdgeVector) -> int:
    return sum(k)


def vector_factorial(k: EdgeVector) -> int:
    """Product of the factorials of the entries."""
    out = 1
    for e in k:
        out *= factorial(e)
    return out


def vector_leq(a: EdgeVector, b: EdgeVector) -> bool:
    return len(a) == len(b) and all(x <= y for x, y in zip(a, b))


def vector_add(a: EdgeVector, b: EdgeVector) -> EdgeVector:
    if len(a) != len(b):
        raise ValueError("edge-vector length mismatch")
    return tuple(x + y for x, y in zip(a, b))


# ---------------------------------------------------------------------------
# Subgraph extraction (with order-preserving vertex relabelling)
# ---------------------------------------------------------------------------

def subgraph_from_edges(g: Graph, edges: Iterable[Edge]) -> tuple[Graph, dict[int, int]]:
    """Graph spanned by the given edges, vertices relabelled 1..k.

    The relabelling is monotone, so the canonical edge order is preserved and
    edge-exponent vectors translate by position.
    """
    es = sorted(set(edges))
    verts = sorted({v for e in es for v in e})
    vmap = {v: i + 1 for i, v in enumerate(verts)}
    sub = Graph(len(verts), tuple((vmap[u], vmap[v]) for u, v in es))
    return sub, vmap


def subgraph_without_vertices(g: Graph, drop: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph after deleting the given vertices, relabelled 1..k."""
    dropset = set(drop)
    verts = [v for v in g.vertices() if v not in dropset]
    vmap = {v: i + 1 for i, v in enumerate(verts)}
    es = tuple((vmap[u], vmap[v]) for u, v in g.edges
               if u not in dropset and v not in dropset)
    return Graph(len(verts), es), vmap


# ---------------------------------------------------------------------------
# Text formats
# ---------------------------------------------------------------------------

def parse_graph(text: str) -> Graph:
    """Parse the edge-list format: first line "n m", then m lines "u v"."""
    lines = text.splitlines()
    rows = [(i + 1, ln.strip()) for i, ln in enumerate(lines) if ln.strip()]
    if not rows:
        raise InputFormatError(1, "empty graph file")
    lineno, head = rows[0]
    parts = head.split()
    if len(parts) != 2:
        raise InputFormatError(lineno, f"expected 'n m', got {head!r}")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise InputFormatError(lineno, f"expected integers 'n m', got {head!r}") from None
    if len(rows) - 1 != m:
        raise InputFormatError(lineno, f"declared {m} edges, found {len(rows) - 1}")
    edges = []
    for lineno, ln in rows[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise InputFormatError(lineno, f"expected 'u v', got {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise InputFormatError(lineno, f"expected integers 'u v', got {ln!r}") from None
        if not 1 <= u < v <= n:
            raise InputFormatError(lineno, f"edge ({u}, {v}) violates 1 <= u < v <= {n}")
        edges.append((u, v))
    try:
        return Graph(n, tuple(edges))
    except ValueError as exc:
        raise InputFormatError(rows[0][0], str(exc)) from None


def format_graph(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines += [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def parse_edge_vector(text: str, g: Graph) -> EdgeVector:
    """Parse the edge-vector format: m lines "u v k" (edges may come in any order)."""
    idx = edge_index(g)
    values: dict[Edge, int] = {}
    for lineno, ln in ((i + 1, ln.strip()) for i, ln in enumerate(text.splitlines())):
        if not ln:
            continue
        parts = ln.split()
        if len(parts) != 3:
            raise InputFormatError(lineno, f"expected 'u v k', got {ln!r}")
        try:
            u, v, k = int(parts[0]), int(parts[1]), int(parts[2])
        except ValueError:
            raise InputFormatError(lineno, f"expected integers 'u v k', got {ln!r}") from None
        e = _norm_edge(u, v)
        if e not in idx:
            raise InputFormatError(lineno, f"unknown edge ({u}, {v})")
        if e in values:
            raise InputFormatError(lineno, f"duplicate edge ({u}, {v})")
        if k < 0:
            raise InputFormatError(lineno, f"negative exponent {k}")
        values[e] = k
    missing = [e for e in g.edges if e not in values]
    if missing:
        raise InputFormatError(len(text.splitlines()) or 1,
                               f"missing entries for edges {missing}")
    return tuple(values[e] for e in g.edges)


def format_edge_vector(g: Graph, k: EdgeVector) -> str:
    return "\n".join(f"{u} {v} {x}" for (u, v), x in zip(g.edges, k)) + "\n"
