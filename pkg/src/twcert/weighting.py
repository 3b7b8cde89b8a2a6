"""Proper total weightings from list assignments, and the vertex-list shift.

A total weighting assigns an exact rational to every vertex and edge; it is
proper when no edge has equal weighted degrees at its two endpoints (vertex
weight plus incident edge weights).  The solver is plain exhaustive
backtracking over the list products with incremental endpoint sums: at desk
scale the point is the guarantee of success, not speed.

For connected non-bipartite graphs, singleton vertex lists can be shifted to
zero by walking odd closed walks and moving half the vertex value onto the
edge lists with alternating signs; solvability is preserved in both
directions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import InputFormatError
from .graphs import Edge, Graph, adjacency, components, edge_index

Weight = Fraction


@dataclass(frozen=True)
class ListAssignment:
    vertex_lists: dict[int, tuple[Fraction, ...]]
    edge_lists: dict[Edge, tuple[Fraction, ...]]


@dataclass(frozen=True)
class TotalWeighting:
    vertex_weights: dict[int, Fraction]
    edge_weights: dict[Edge, Fraction]


def check_proper(g: Graph, phi: TotalWeighting) -> bool:
    """True iff every edge separates the weighted degrees of its endpoints."""
    for v in g.vertices():
        if v not in phi.vertex_weights:
            raise ValueError(f"missing vertex weight for {v}")
    for e in g.edges:
        if e not in phi.edge_weights:
            raise ValueError(f"missing edge weight for {e}")
    sums = {v: phi.vertex_weights[v] for v in g.vertices()}
    for e in g.edges:
        w = phi.edge_weights[e]
        sums[e[0]] += w
        sums[e[1]] += w
    return all(sums[u] != sums[v] for u, v in g.edges)


def _validate_lists(g: Graph, lists: ListAssignment) -> None:
    for v in g.vertices():
        if not lists.vertex_lists.get(v):
            raise ValueError(f"empty or missing list for vertex {v}")
    for e in g.edges:
        if not lists.edge_lists.get(e):
            raise ValueError(f"empty or missing list for edge {e}")


def solve(g: Graph, lists: ListAssignment) -> Optional[TotalWeighting]:
    """First proper weighting drawn from the lists, in deterministic list
    order (vertices then edges, canonical order), or None.

    An edge's properness is checked as soon as both endpoint sums are final,
    which prunes most of the product space.
    """
    _validate_lists(g, lists)
    verts = list(g.vertices())
    slots: list[tuple[str, object, tuple[Fraction, ...]]] = []
    for v in verts:
        slots.append(("v", v, tuple(Fraction(x) for x in lists.vertex_lists[v])))
    for e in g.edges:
        slots.append(("e", e, tuple(Fraction(x) for x in lists.edge_lists[e])))

    last_touch = {v: g.n - 1 if g.n else 0 for v in verts}
    for pos, (kind, key, _) in enumerate(slots):
        if kind == "e":
            last_touch[key[0]] = pos
            last_touch[key[1]] = pos
    checks_at: dict[int, list[Edge]] = {}
    for e in g.edges:
        checks_at.setdefault(max(last_touch[e[0]], last_touch[e[1]]), []).append(e)

    sums = {v: Fraction(0) for v in verts}
    chosen: dict[object, Fraction] = {}

    def backtrack(pos: int) -> bool:
        if pos == len(slots):
            return True
        kind, key, values = slots[pos]
        touched = [key] if kind == "v" else list(key)
        for val in values:
            chosen[key] = val
            for t in touched:
                sums[t] += val
            if all(sums[u] != sums[v] for u, v in checks_at.get(pos, ())):
                if backtrack(pos + 1):
                    return True
            for t in touched:
                sums[t] -= val
        chosen.pop(key, None)
        return False

    if not backtrack(0):
        return None
    return TotalWeighting({v: chosen[v] for v in verts},
                          {e: chosen[e] for e in g.edges})


# ---------------------------------------------------------------------------
# Odd-walk shifting of singleton vertex lists
# ---------------------------------------------------------------------------

def _bipartition_parity(g: Graph) -> Optional[dict[int, int]]:
    """Two-colouring by BFS parity, or None when some edge closes an odd cycle."""
    parity: dict[int, int] = {}
    adj = adjacency(g)
    for start in g.vertices():
        if start in parity:
            continue
        parity[start] = 0
        frontier = [start]
        while frontier:
            nxt = []
            for v in frontier:
                for w in adj[v]:
                    if w not in parity:
                        parity[w] = parity[v] ^ 1
                        nxt.append(w)
            frontier = nxt
    for u, v in g.edges:
        if parity[u] == parity[v]:
            return None
    return parity


def _odd_closed_walk(g: Graph, start: int) -> list[int]:
    """Vertex sequence of an odd closed walk through start (BFS tree paths to
    the lexicographically least odd-closing edge, then back)."""
    adj = adjacency(g)
    parent: dict[int, int] = {start: 0}
    dist = {start: 0}
    frontier = [start]
    while frontier:
        nxt = []
        for v in frontier:
            for w in adj[v]:
                if w not in dist:
                    dist[w] = dist[v] + 1
                    parent[w] = v
                    nxt.append(w)
        frontier = nxt

    closing = None
    for u, v in g.edges:
        if u in dist and v in dist and (dist[u] ^ dist[v]) == 0:
            closing = (u, v)
            break
    if closing is None:
        raise ValueError("graph is bipartite; no odd closed walk exists")

    def path_to(v: int) -> list[int]:
        out = [v]
        while v != start:
            v = parent[v]
            out.append(v)
        return out[::-1]

    u, v = closing
    walk = path_to(u) + path_to(v)[::-1]
    assert walk[0] == walk[-1] == start and (len(walk) - 1) % 2 == 1
    return walk


def shift_to_zero_vertex_lists(g: Graph, lists: ListAssignment) -> ListAssignment:
    """Rewrite singleton vertex lists to {0}, preserving solvability.

    Each nonzero vertex value is walked around an odd closed walk: edges at
    odd walk positions absorb +a/2, even positions -a/2 (an edge traversed
    twice accumulates both shifts).  Requires a connected non-bipartite graph
    and singleton vertex lists.
    """
    _validate_lists(g, lists)
    if len(components(g)) != 1:
        raise ValueError("graph must be connected")
    if _bipartition_parity(g) is not None:
        raise ValueError("graph is bipartite; the shift needs an odd closed walk")
    for v in g.vertices():
        if len(lists.vertex_lists[v]) != 1:
            raise ValueError(f"vertex {v} list is not a singleton")

    vertex_lists = {v: tuple(Fraction(x) for x in lists.vertex_lists[v])
                    for v in g.vertices()}
    edge_lists = {e: tuple(Fraction(x) for x in lists.edge_lists[e])
                  for e in g.edges}

    for v in g.vertices():
        a = vertex_lists[v][0]
        if a == 0:
            continue
        walk = _odd_closed_walk(g, v)
        delta: dict[Edge, Fraction] = {}
        for pos in range(1, len(walk)):
            e = tuple(sorted((walk[pos - 1], walk[pos])))
            step = a / 2 if pos % 2 == 1 else -a / 2
            delta[e] = delta.get(e, Fraction(0)) + step
        for e, d in delta.items():
            if d:
                edge_lists[e] = tuple(x + d for x in edge_lists[e])
        vertex_lists[v] = (Fraction(0),)
    return ListAssignment(vertex_lists, edge_lists)


# ---------------------------------------------------------------------------
# Lists file format
# ---------------------------------------------------------------------------

def _parse_weight(token: str, lineno: int) -> Fraction:
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise InputFormatError(lineno, f"bad rational {token!r}") from None


def parse_lists(text: str, g: Graph) -> ListAssignment:
    """Parse lines "V u w" (singleton vertex weight) and "E u v w1 w2 ..."."""
    idx = edge_index(g)
    vlists: dict[int, tuple[Fraction, ...]] = {}
    elists: dict[Edge, tuple[Fraction, ...]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        ln = raw.strip()
        if not ln or ln.startswith("#"):
            continue
        parts = ln.split()
        if parts[0] == "V":
            if len(parts) != 3:
                raise InputFormatError(lineno, f"expected 'V u w', got {ln!r}")
            v = int(parts[1])
            if not 1 <= v <= g.n:
                raise InputFormatError(lineno, f"vertex {v} out of range")
            vlists[v] = (_parse_weight(parts[2], lineno),)
        elif parts[0] == "E":
            if len(parts) < 4:
                raise InputFormatError(lineno, f"expected 'E u v w1 ...', got {ln!r}")
            e = tuple(sorted((int(parts[1]), int(parts[2]))))
            if e not in idx:
                raise InputFormatError(lineno, f"unknown edge {e}")
            elists[e] = tuple(_parse_weight(t, lineno) for t in parts[3:])
        else:
            raise InputFormatError(lineno, f"expected 'V' or 'E' line, got {ln!r}")
    missing_v = [v for v in g.vertices() if v not in vlists]
    missing_e = [e for e in g.edges if e not in elists]
    if missing_v or missing_e:
        raise InputFormatError(len(text.splitlines()) or 1,
                               f"missing lists for vertices {missing_v} edges {missing_e}")
    return ListAssignment(vlists, elists)


def format_weighting(g: Graph, phi: TotalWeighting) -> str:
    lines = [f"V {v} {phi.vertex_weights[v]}" for v in g.vertices()]
    lines += [f"E {u} {v} {phi.edge_weights[(u, v)]}" for u, v in g.edges]
    return "\n".join(lines) + "\n"
