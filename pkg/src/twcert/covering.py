"""Good subsets, good assignments, and covering families with bounded edge load.

The constructive core.  A good subset J of a nice graph supports a family of
edges, short paths, and triangles that covers everything outside the residual
graph while loading no edge more than 5 times (plain construction) or 4 times
(the refined construction, which anchors path fans through a good assignment).

Determinism rules used throughout: vertex sets are processed in ascending
order, ties in the independent-set choice break by fewest isolated crossing
edges then lexicographically least set, neighbour fans are ordered ascending
apart from the explicit anchoring rules, and orientation ties resolve toward
the smaller (distance, index) key.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import ConstructionError, NotNiceError
from .graphs import (
    Edge,
    EdgeVector,
    Graph,
    JPartition,
    SubgraphFamily,
    adjacency,
    characteristic_vector,
    edge_index,
    is_nice,
    member_edges,
    partition_by,
)

# ---------------------------------------------------------------------------
# Exact maximum independent sets
# ---------------------------------------------------------------------------

def independence_number(vertices: Sequence[int], adj: dict[int, set[int]]) -> int:
    """Exact independence number by branch and bound with degree pivoting."""
    best = 0

    def rec(cands: set[int], size: int) -> None:
        nonlocal best
        if size + len(cands) <= best:
            return
        if not cands:
            best = max(best, size)
            return
        v = max(cands, key=lambda x: (len(adj[x] & cands), -x))
        if not adj[v] & cands:
            # isolated within the candidates: always take it
            rec(cands - {v}, size + 1)
            return
        rec(cands - adj[v] - {v}, size + 1)
        rec(cands - {v}, size)

    rec(set(vertices), 0)
    return best


def all_maximum_independent_sets(vertices: Sequence[int],
                                 adj: dict[int, set[int]]) -> list[tuple[int, ...]]:
    """Every maximum independent set, each as a sorted tuple, in lex order."""
    alpha = independence_number(vertices, adj)
    out: list[tuple[int, ...]] = []

    def rec(cands: list[int], cur: list[int]) -> None:
        if len(cur) + len(cands) < alpha:
            return
        if len(cur) == alpha:
            out.append(tuple(cur))
            return
        if not cands:
            return
        v = cands[0]
        rest = cands[1:]
        cur.append(v)
        rec([x for x in rest if x not in adj[v]], cur)
        cur.pop()
        rec(rest, cur)

    rec(sorted(vertices), [])
    return out


def _graph_adj_sets(g: Graph) -> dict[int, set[int]]:
    return {v: set(adjacency(g)[v]) for v in g.vertices()}


# ---------------------------------------------------------------------------
# Crossing-graph bookkeeping
# ---------------------------------------------------------------------------

def crossing_degrees(g: Graph, part: JPartition) -> dict[int, int]:
    """Degree of every vertex in the crossing subgraph (edges with one end in J)."""
    d = {v: 0 for v in g.vertices()}
    for u, v in part.e3:
        d[u] += 1
        d[v] += 1
    return d


def private_neighbours(g: Graph, part: JPartition) -> dict[int, list[int]]:
    """For each j in J, the outside vertices whose only J-neighbour is j."""
    jset = set(part.j)
    priv: dict[int, list[int]] = {j: [] for j in part.j}
    for i in g.vertices():
        if i in jset:
            continue
        jn = [x for x in adjacency(g)[i] if x in jset]
        if len(jn) == 1:
            priv[jn[0]].append(i)
    return priv


def nonprivate_neighbours(g: Graph, part: JPartition) -> dict[int, list[int]]:
    """For each j in J, its outside neighbours that have another J-neighbour."""
    jset = set(part.j)
    out: dict[int, list[int]] = {j: [] for j in part.j}
    for j in part.j:
        for i in adjacency(g)[j]:
            if i in jset:
                continue
            if sum(1 for x in adjacency(g)[i] if x in jset) >= 2:
                out[j].append(i)
    return out


def isolated_crossing_edges(g: Graph, part: JPartition) -> list[Edge]:
    """Crossing edges both of whose endpoints have crossing degree 1."""
    d3 = crossing_degrees(g, part)
    return [e for e in part.e3 if d3[e[0]] == 1 and d3[e[1]] == 1]


# ---------------------------------------------------------------------------
# Good subsets
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GoodSubset:
    """A validated vertex subset with the derived neighbour bookkeeping.

    private_map: j -> its unique private neighbour (absent if none).
    special_map: i -> the J-vertices that are special for i (have a private
    neighbour and i as their only non-private one).
    ie_map: matched edge inside J -> the distinct outside vertex adjacent to
    both of its endpoints.
    """

    j: tuple[int, ...]
    partition: JPartition
    private_map: dict[int, int]
    special_map: dict[int, tuple[int, ...]]
    ie_map: dict[Edge, int]


def _derive_maps(g: Graph, part: JPartition,
                 ie_map: dict[Edge, int]) -> tuple[dict[int, int], dict[int, tuple[int, ...]]]:
    priv = private_neighbours(g, part)
    nonpriv = nonprivate_neighbours(g, part)
    private_map = {j: lst[0] for j, lst in priv.items() if lst}
    special: dict[int, list[int]] = {}
    for j in part.j:
        if priv[j] and len(nonpriv[j]) == 1:
            special.setdefault(nonpriv[j][0], []).append(j)
    special_map = {i: tuple(sorted(js)) for i, js in special.items()}
    return private_map, special_map


def find_good_subset(g: Graph) -> GoodSubset:
    """Construct a good subset of a nice graph.

    Starts from the maximum independent set minimizing the number of isolated
    crossing edges (lexicographically least on ties), then absorbs one vertex
    from each clique of multiple private neighbours, chosen as a maximum
    independent set of the union of those cliques.
    """
    if not is_nice(g):
        raise NotNiceError("graph has an isolated-edge component")
    if g.n == 0:
        raise ConstructionError("empty graph has no nonempty vertex subset")
    adj = _graph_adj_sets(g)
    candidates = all_maximum_independent_sets(list(g.vertices()), adj)
    j0 = min(candidates,
             key=lambda js: (len(isolated_crossing_edges(g, partition_by(g, js))), js))
    part0 = partition_by(g, j0)
    if isolated_crossing_edges(g, part0):
        raise ConstructionError("chosen independent set leaves an isolated crossing edge")

    priv = private_neighbours(g, part0)
    cliques = [(j, priv[j]) for j in part0.j if len(priv[j]) >= 2]
    absorbed: list[int] = []
    if cliques:
        union = sorted({i for _, s in cliques for i in s})
        sub_adj = {v: adj[v] & set(union) for v in union}
        absorbed = list(min(all_maximum_independent_sets(union, sub_adj)))
    j1 = tuple(sorted(set(j0) | set(absorbed)))
    part1 = partition_by(g, j1)

    ie_map: dict[Edge, int] = {}
    for e in part1.e4:
        # the matched pair is (absorbed private neighbour, its sole former host)
        i_l = e[0] if e[0] in absorbed else e[1]
        j_l = e[1] if i_l == e[0] else e[0]
        others = [x for x in priv.get(j_l, []) if x != i_l]
        if not others:
            raise ConstructionError(f"no shared outside neighbour for matched pair {e}")
        ie_map[e] = min(others)

    private_map, special_map = _derive_maps(g, part1, ie_map)
    gs = GoodSubset(j1, part1, private_map, special_map, ie_map)
    violations = validate_good_subset(g, j1)
    if violations:
        raise ConstructionError(f"constructed subset fails validation: {violations}")
    return gs


def _distinct_representatives(demands: list[list[int]]) -> Optional[list[int]]:
    """System of distinct representatives via augmenting paths, or None."""
    match: dict[int, int] = {}

    def augment(idx: int, banned: set[int]) -> bool:
        for cand in demands[idx]:
            if cand in banned:
                continue
            banned.add(cand)
            if cand not in match or augment(match[cand], banned):
                match[cand] = idx
                return True
        return False

    for idx in range(len(demands)):
        if not augment(idx, set()):
            return None
    chosen = {idx: cand for cand, idx in match.items()}
    return [chosen[i] for i in range(len(demands))]


def validate_good_subset(g: Graph, j: Iterable[int]) -> list[str]:
    """Check the defining conditions; empty list iff the subset is good."""
    jset = set(j)
    violations = []
    if not jset:
        return ["nonempty: J must be a nonempty vertex subset"]
    part = partition_by(g, jset)
    d3 = crossing_degrees(g, part)
    priv = private_neighbours(g, part)

    deg4 = Counter()
    for u, v in part.e4:
        deg4[u] += 1
        deg4[v] += 1
    bad = sorted(v for v, d in deg4.items() if d > 1)
    if bad:
        violations.append(f"J1: vertices {bad} meet more than one inside edge")

    iso = isolated_crossing_edges(g, part)
    if iso:
        violations.append(f"J2: isolated crossing edges {iso}")

    multi = sorted(jv for jv, lst in priv.items() if len(lst) > 1)
    if multi:
        violations.append(f"J3: vertices {multi} have more than one private neighbour")

    demands = []
    for u, v in part.e4:
        if priv[u] or priv[v]:
            violations.append(f"J4: endpoint of inside edge ({u}, {v}) has a private neighbour")
        common = sorted(x for x in g.vertices()
                        if x not in jset and g.has_edge(x, u) and g.has_edge(x, v))
        demands.append(common)
    if part.e4 and _distinct_representatives(demands) is None:
        violations.append("J4: no distinct outside witnesses for the inside edges")

    for u, v in part.e2:
        for x in (u, v):
            if d3[x] == 0:
                violations.append(f"J5: endpoint {x} of isolated edge ({u}, {v}) has no neighbour in J")
    return violations


# ---------------------------------------------------------------------------
# Covering families
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CoveringFamily:
    """Edges covering the isolated outside edges, a path multiset covering the
    crossing edges, and one triangle per inside edge; kc is the per-edge load."""

    c2: tuple[tuple[Edge, Edge], ...]
    c3: tuple[tuple[tuple[int, ...], int], ...]
    c4: tuple[tuple[Edge, tuple[int, ...]], ...]
    kc: EdgeVector


def family_members(fam: CoveringFamily) -> SubgraphFamily:
    members = [(tuple(cov), 1) for _, cov in fam.c2]
    members += [(seq, cnt) for seq, cnt in fam.c3]
    members += [(walk, 1) for _, walk in fam.c4]
    return SubgraphFamily(tuple(members))


def _make_family(g: Graph, c2: dict[Edge, Edge], paths: Counter,
                 c4: dict[Edge, tuple[int, ...]]) -> CoveringFamily:
    c2_t = tuple(sorted(c2.items()))
    c3_t = tuple(sorted(paths.items()))
    c4_t = tuple(sorted(c4.items()))
    fam = CoveringFamily(c2_t, c3_t, c4_t, ())
    kc = characteristic_vector(g, family_members(fam))
    return CoveringFamily(c2_t, c3_t, c4_t, kc)


def _canon_path(seq: tuple[int, ...]) -> tuple[int, ...]:
    return seq if seq[0] <= seq[-1] else tuple(reversed(seq))


def _add_fan(paths: Counter, i: int, order: list[int], wrap: bool) -> None:
    """Length-2 paths through i between consecutive fan neighbours."""
    for l in range(len(order) - 1):
        paths[_canon_path((order[l], i, order[l + 1]))] += 1
    if wrap:
        paths[_canon_path((order[-1], i, order[0]))] += 1


def _fan_order(g: Graph, i: int, jset: set[int],
               ie_of: dict[int, Edge]) -> tuple[list[int], bool]:
    """Neighbour order and wraparound flag for the standard fan at i."""
    nbrs = sorted(x for x in adjacency(g)[i] if x in jset)
    if i in ie_of:
        e = ie_of[i]
        rest = [x for x in nbrs if x not in e]
        return [e[0]] + rest + [e[1]], False
    return nbrs, True


def _c2_anchor(e: Edge, d3: dict[int, int]) -> int:
    u, v = e
    if (d3[u] == 1) != (d3[v] == 1):
        return u if d3[u] == 1 else v
    return u


def build_family_b5(g: Graph, gs: GoodSubset) -> CoveringFamily:
    """The plain construction: doubled wraparound fans, an arbitrary covering
    edge per isolated outside edge, one triangle per inside edge.  Load at
    most 5 outside the residual edges, 0 on them."""
    part = gs.partition
    jset = set(part.j)
    d3 = crossing_degrees(g, part)
    ie_of = {i: e for e, i in gs.ie_map.items()}

    paths: Counter = Counter()
    for i in sorted(v for v in g.vertices() if v not in jset and d3[v] >= 2):
        order, wrap = _fan_order(g, i, jset, ie_of)
        _add_fan(paths, i, order, wrap)
    doubled = Counter({seq: 2 * c for seq, c in paths.items()})

    c2: dict[Edge, Edge] = {}
    for e in part.e2:
        i1 = _c2_anchor(e, d3)
        jn = sorted(x for x in adjacency(g)[i1] if x in jset)
        c2[e] = tuple(sorted((i1, jn[0])))

    c4 = {e: (ie, e[0], e[1], ie) for e, ie in gs.ie_map.items()}
    return _make_family(g, c2, doubled, c4)


# ---------------------------------------------------------------------------
# Good assignments
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Assignment:
    """For each J-vertex with outside neighbours, a chosen non-private one."""

    tau: dict[int, int]


def _specials_for(i: int, g: Graph, jset: set[int], priv: dict[int, list[int]],
                  nonpriv: dict[int, list[int]]) -> set[int]:
    out = set()
    for j in adjacency(g)[i]:
        if j in jset and priv[j] and nonpriv[j] == [i]:
            out.add(j)
    return out


def find_good_assignment(g: Graph, gs: GoodSubset) -> Assignment:
    """Choose a non-private neighbour for every J-vertex so that each outside
    vertex on an isolated edge keeps a neighbour it is not assigned to.

    Components of the shared-neighbour multigraph are handled either by
    orienting everything toward a root that needs no protection, or by
    tracing a cycle with distinct labels and assigning along it.
    """
    part = gs.partition
    jset = set(part.j)
    d3 = crossing_degrees(g, part)
    priv = private_neighbours(g, part)
    nonpriv = nonprivate_neighbours(g, part)
    v2set = set(part.v2)

    eye = sorted(v for v in g.vertices() if v not in jset and d3[v] >= 2)
    cliques = {j: sorted(lst) for j, lst in nonpriv.items() if len(lst) >= 2}

    # shared-neighbour multigraph on eye: i ~ i' per common label j
    h_adj: dict[int, set[int]] = {i: set() for i in eye}
    for lst in cliques.values():
        for a in lst:
            for b in lst:
                if a != b:
                    h_adj[a].add(b)

    tau: dict[int, int] = {}
    seen: set[int] = set()
    for start in eye:
        if start in seen:
            continue
        comp = _component_of(start, h_adj)
        seen |= comp
        comp_labels = sorted(j for j, lst in cliques.items() if lst[0] in comp)
        roots = sorted(i for i in comp
                       if i not in v2set
                       or any(not priv[j] for j in adjacency(g)[i] if j in jset))
        if roots:
            dist = _bfs_dist(h_adj, [roots[0]])
            for j in comp_labels:
                tau[j] = min(cliques[j], key=lambda v: (dist[v], v))
        else:
            cycle_tau, cycle_vertices = _trace_label_cycle(
                g, comp, jset, priv, nonpriv, h_adj)
            tau.update(cycle_tau)
            dist = _bfs_dist(h_adj, sorted(cycle_vertices))
            for j in comp_labels:
                if j not in cycle_tau:
                    tau[j] = min(cliques[j], key=lambda v: (dist[v], v))

    for j in sorted(part.j):
        if d3[j] >= 1 and j not in tau:
            lst = nonpriv[j]
            if len(lst) != 1:
                raise ConstructionError(
                    f"vertex {j} has {len(lst)} non-private neighbours but no clique assignment")
            tau[j] = lst[0]
    return Assignment(tau)


def _component_of(start: int, adj: dict[int, set[int]]) -> set[int]:
    comp = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in comp:
                comp.add(w)
                stack.append(w)
    return comp


def _bfs_dist(adj: dict[int, set[int]], sources: list[int]) -> dict[int, int]:
    dist = {s: 0 for s in sources}
    frontier = list(sources)
    d = 0
    while frontier:
        d += 1
        nxt = []
        for v in frontier:
            for w in adj[v]:
                if w not in dist:
                    dist[w] = d
                    nxt.append(w)
        frontier = nxt
    return dist


def _trace_label_cycle(g: Graph, comp: set[int], jset: set[int],
                       priv: dict[int, list[int]], nonpriv: dict[int, list[int]],
                       h_adj: dict[int, set[int]]) -> tuple[dict[int, int], set[int]]:
    """Walk the shared-neighbour multigraph along distinct non-special labels
    until a label reaches back to an earlier vertex, then close the cycle and
    assign each label to the tail of its cycle edge.

    Movement always prefers an unvisited vertex, so the walk never repeats a
    vertex; closure picks the largest eligible earlier index, which keeps the
    cycle labels pairwise distinct.
    """
    walk: list[int] = [min(comp)]
    labels: list[int] = []

    def nonspecial(i: int) -> list[int]:
        out = []
        for j in sorted(adjacency(g)[i]):
            if j in jset and i in nonpriv[j] and not (priv[j] and nonpriv[j] == [i]):
                out.append(j)
        return out

    for _ in range(4 * len(comp) + 4):
        it = walk[-1]
        prev_label = labels[-1] if labels else None
        options = [j for j in nonspecial(it)
                   if j != prev_label and len(nonpriv[j]) >= 2]
        if not options:
            raise ConstructionError(
                f"vertex {it} lacks a second non-special neighbour for the cycle trace")
        jt = options[0]
        candidates = [t for t in range(len(walk) - 1)
                      if jt in nonspecial(walk[t])]
        if candidates:
            t0 = max(candidates)
            cycle = walk[t0:]
            cycle_labels = labels[t0:] + [jt]
            if len(set(cycle_labels)) != len(cycle_labels) or len(set(cycle)) != len(cycle):
                raise ConstructionError("cycle trace produced repeated labels or vertices")
            tau = {cycle_labels[s]: cycle[s] for s in range(len(cycle))}
            return tau, set(cycle)
        unvisited = [v for v in sorted(nonpriv[jt]) if v not in walk]
        if not unvisited:
            raise ConstructionError(
                f"label {jt} has no unvisited neighbour and no closure candidate")
        walk.append(unvisited[0])
        labels.append(jt)
    raise ConstructionError("cycle trace failed to terminate")


def validate_assignment(g: Graph, gs: GoodSubset, assignment: Assignment) -> list[str]:
    """Check the assignment invariants; empty list iff valid."""
    part = gs.partition
    jset = set(part.j)
    d3 = crossing_degrees(g, part)
    priv = private_neighbours(g, part)
    nonpriv = nonprivate_neighbours(g, part)
    tau = assignment.tau
    violations = []
    for j in part.j:
        if d3[j] == 0:
            continue
        if j not in tau:
            violations.append(f"assignment: vertex {j} unassigned")
        elif tau[j] not in nonpriv[j]:
            violations.append(f"assignment: tau({j}) = {tau[j]} is not a non-private neighbour")
    for i in part.v2:
        if d3[i] < 2:
            continue
        ok = any(not priv[j] or tau.get(j) != i
                 for j in adjacency(g)[i] if j in jset)
        if not ok:
            violations.append(f"goodness: every protected neighbour of {i} is assigned to it")
    return violations


# ---------------------------------------------------------------------------
# The refined (load at most 4) construction
# ---------------------------------------------------------------------------

def build_family_b4(g: Graph, gs: GoodSubset, assignment: Assignment) -> CoveringFamily:
    """Covering family with load at most 4 outside the residual edges.

    Fans at endpoints of isolated outside edges drop their wraparound path and
    anchor their first neighbour through the good assignment; when the two
    fans do not share a last neighbour they are joined by one length-3 path
    through the isolated edge.  Covering edges attach at the anchored first
    neighbour, so their fan load is 2 instead of 4.
    """
    part = gs.partition
    jset = set(part.j)
    d3 = crossing_degrees(g, part)
    priv = private_neighbours(g, part)
    tau = assignment.tau
    ie_of = {i: e for e, i in gs.ie_map.items()}
    adj = adjacency(g)

    def jnbrs(i: int) -> list[int]:
        return sorted(x for x in adj[i] if x in jset)

    def anchor_label(i: int) -> int:
        cands = [j for j in jnbrs(i) if not priv[j] or tau.get(j) != i]
        if not cands:
            raise ConstructionError(f"no anchorable first neighbour at vertex {i}")
        return cands[0]

    paths: Counter = Counter()
    c2: dict[Edge, Edge] = {}
    handled: set[int] = set()

    for e in part.e2:
        u, v = e
        if d3[u] == 1 or d3[v] == 1:
            if d3[u] == 1:
                low = u
            else:
                low = v
            c2[e] = tuple(sorted((low, jnbrs(low)[0])))
            # the zero-load rule: no fan touches the covering edge
        elif u in ie_of or v in ie_of:
            anchor = u if u in ie_of else v
            c2[e] = tuple(sorted((anchor, ie_of[anchor][0])))
            # both fans stay standard; the anchored fan already has load 2 there
        else:
            a1 = anchor_label(u)
            a2 = anchor_label(v)
            order1 = [a1] + sorted(set(jnbrs(u)) - {a1})
            order2 = [a2] + sorted(set(jnbrs(v)) - {a2})
            if order1[-1] == order2[-1]:
                _add_fan(paths, u, order1, wrap=False)
                _add_fan(paths, v, order2, wrap=True)
            else:
                _add_fan(paths, u, order1, wrap=False)
                _add_fan(paths, v, order2, wrap=False)
                paths[_canon_path((order1[-1], u, v, order2[-1]))] += 1
            c2[e] = tuple(sorted((u, a1)))
            handled.add(u)
            handled.add(v)

    for i in sorted(x for x in g.vertices() if x not in jset and d3[x] >= 2):
        if i in handled:
            continue
        order, wrap = _fan_order(g, i, jset, ie_of)
        _add_fan(paths, i, order, wrap)

    doubled = Counter({seq: 2 * c for seq, c in paths.items()})
    c4 = {e: (ie, e[0], e[1], ie) for e, ie in gs.ie_map.items()}
    return _make_family(g, c2, doubled, c4)


# ---------------------------------------------------------------------------
# Family validation
# ---------------------------------------------------------------------------

def validate_family(g: Graph, part: JPartition, fam: CoveringFamily,
                    bound: Optional[int]) -> list[str]:
    """Check every covering-family invariant, plus the load cap when given."""
    jset = set(part.j)
    e1set, e2set, e3set, e4set = set(part.e1), set(part.e2), set(part.e3), set(part.e4)
    violations = []

    covered = {e for e, _ in fam.c2}
    if covered != e2set:
        violations.append(f"c2: covered edges {sorted(covered)} != isolated outside edges")
    for e, cov in fam.c2:
        if cov not in e3set:
            violations.append(f"c2: covering edge {cov} is not a crossing edge")
        if not set(e) & set(cov):
            violations.append(f"c2: covering edge {cov} does not touch {e}")

    end_count: Counter = Counter()
    parity_count: Counter = Counter()
    for seq, cnt in fam.c3:
        if cnt <= 0:
            violations.append(f"c3: non-positive multiplicity for {seq}")
        length = len(seq) - 1
        if length not in (2, 3):
            violations.append(f"c3: path {seq} has length {length}")
        if len(set(seq)) != len(seq):
            violations.append(f"c3: {seq} repeats a vertex")
        s, t = seq[0], seq[-1]
        if s == t or s not in jset or t not in jset:
            violations.append(f"c3: endpoints of {seq} are not distinct J-vertices")
        for e in member_edges(seq):
            if e not in e3set and e not in e2set:
                violations.append(f"c3: path {seq} uses edge {e} outside the crossing/isolated sets")
        end_count[s] += cnt
        end_count[t] += cnt
        parity_count[(min(s, t), max(s, t), length % 2)] += cnt

    for key, cnt in sorted(parity_count.items()):
        if cnt % 2:
            violations.append(f"c3: odd number ({cnt}) of parity-{key[2]} paths joining {key[:2]}")

    d3 = crossing_degrees(g, part)
    for j in part.j:
        if end_count[j] < 2 * d3[j]:
            violations.append(
                f"c3: vertex {j} ends {end_count[j]} paths, needs {2 * d3[j]}")

    walked = {e for e, _ in fam.c4}
    if walked != e4set:
        violations.append(f"c4: walks cover {sorted(walked)}, expected the inside edges")
    idx = edge_index(g)
    for e, walk in fam.c4:
        if walk[0] != walk[-1]:
            violations.append(f"c4: walk {walk} is not closed")
        if (len(walk) - 1) % 2 == 0:
            violations.append(f"c4: walk {walk} has even length")
        es = member_edges(walk)
        if e not in es:
            violations.append(f"c4: walk {walk} does not traverse {e}")
        for f in es:
            if f not in idx:
                violations.append(f"c4: walk {walk} uses unknown edge {f}")

    if bound is not None:
        for e, load in zip(g.edges, fam.kc):
            if e in e1set:
                if load != 0:
                    violations.append(f"cap: residual edge {e} carries load {load}")
            elif load > bound:
                violations.append(f"cap: edge {e} carries load {load} > {bound}")
    return violations
