"""Recursive certification: every nice graph gets a small-exponent certificate.

The pipeline peels a good subset off the graph, certifies the residual part
recursively, and lifts the residual witness through the covering family.  The
lift is effective: the family factors pair nonzero against the product of
edge-difference forms for at least one choice of inside-edge anchors, and
resolving each factor to a single edge (then projecting out the degree-padding
edges) produces a concrete witness with a nonzero permanent.

All pairings here run through the packed differential engine; the final
certificate is re-checked against the independent inclusion-exclusion
permanent before it is returned.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from itertools import product
from typing import Optional

from .algebra import (
    SparsePoly,
    inner_weighted,
    permanent,
    sum_power_product,
    weighting_matrix,
)
from .covering import (
    CoveringFamily,
    GoodSubset,
    build_family_b4,
    build_family_b5,
    crossing_degrees,
    find_good_assignment,
    find_good_subset,
    validate_assignment,
    validate_family,
)
from .errors import ConstructionError, FalsificationError, NotNiceError, PreconditionError
from .graphs import (
    Edge,
    EdgeVector,
    Graph,
    JPartition,
    components,
    degree,
    edge_index,
    is_nice,
    neighbours,
    subgraph_from_edges,
    subgraph_without_vertices,
    vector_add,
    vector_leq,
    vector_total,
    zero_vector,
)
from .pairing import (
    Form,
    apply_form,
    edge_diff_form,
    edge_sum_form,
    expand_forms,
    monomial_form,
    mul_form,
    pack_bits,
    pair_edge_monomial,
    pair_forms,
)
from .sufficiency import Certificate, find_witness_capped, is_sufficient

Trace = Optional[list]

_FALLBACK_EDGE_LIMIT = 18


def _note(trace: Trace, message: str) -> None:
    if trace is not None:
        trace.append(message)


# ---------------------------------------------------------------------------
# Pairing setup for one (graph, partition, family) instance
# ---------------------------------------------------------------------------

class _PairingInstance:
    """Packed data for pairing family factors against the edge-difference forms."""

    def __init__(self, g: Graph, part: JPartition, fam: CoveringFamily,
                 k1_witness: EdgeVector):
        self.g = g
        self.part = part
        self.fam = fam
        self.k1_witness = k1_witness

        d3 = crossing_degrees(g, part)
        ends: Counter = Counter()
        for seq, cnt in fam.c3:
            ends[seq[0]] += cnt
            ends[seq[-1]] += cnt
        outside = [v for v in g.vertices() if v not in set(part.j)]
        self.phantoms: list[Edge] = []
        for j in part.j:
            surplus = ends[j] - 2 * d3[j]
            if surplus < 0 or surplus % 2:
                raise PreconditionError(
                    f"path-end surplus at {j} is {surplus}; family violates the degree rule")
            if surplus:
                if not outside:
                    raise PreconditionError("no outside vertex available for padding")
                pad = tuple(sorted((outside[0], j)))
                self.phantoms += [pad] * (surplus // 2)

        self.bits = pack_bits(g.m + len(self.phantoms))
        base = expand_forms(g.n, self.bits, [edge_diff_form(e) for e in g.edges])
        self.q_chain = [base]
        for pad in self.phantoms:
            self.q_chain.append(mul_form(self.q_chain[-1], edge_diff_form(pad), self.bits))

        self.fixed_forms: list[Form] = []
        self.fixed_counts: Counter = Counter()
        for e, k in zip(g.edges, k1_witness):
            for _ in range(k):
                self.fixed_forms.append(edge_sum_form(e))
                self.fixed_counts[e] += 1
        for _, cov in fam.c2:
            self.fixed_forms.append(edge_sum_form(cov))
            self.fixed_counts[cov] += 1

        # one resolvable factor per path copy: the end-difference form equals the
        # alternating sum of its edge forms, so any single edge can stand in
        self.path_factors: list[tuple[Form, list[tuple[Form, Edge]]]] = []
        for seq, cnt in fam.c3:
            s, t = seq[0], seq[-1]
            sign = -1 if len(seq) - 1 == 2 else 1
            agg: Form = ((s - 1, 1), (t - 1, sign))
            alts = [(edge_sum_form(tuple(sorted((seq[i], seq[i + 1])))),
                     tuple(sorted((seq[i], seq[i + 1]))))
                    for i in range(len(seq) - 1)]
            for _ in range(cnt):
                self.path_factors.append((agg, alts))

        # per inside edge, the two anchored variants of the triangle factor
        self.triangles: list[tuple[Edge, dict[int, tuple[Form, list[tuple[Form, Edge]]]]]] = []
        for e, walk in fam.c4:
            variants = {}
            base_cycle = list(walk[:-1])
            for j_choice in e:
                k = base_cycle.index(j_choice)
                rot = base_cycle[k:] + base_cycle[:k] + [j_choice]
                alts = [(edge_sum_form(tuple(sorted((rot[i], rot[i + 1])))),
                         tuple(sorted((rot[i], rot[i + 1]))))
                        for i in range(len(rot) - 1)]
                variants[j_choice] = (monomial_form(j_choice - 1), alts)
            self.triangles.append((e, variants))

    def choice_factors(self, choice: tuple[int, ...]) -> list[tuple[Form, list[tuple[Form, Edge]]]]:
        return self.path_factors + [variants[c] for (_, variants), c
                                    in zip(self.triangles, choice)]

    def pair_choice(self, choice: tuple[int, ...]) -> int:
        forms = list(self.fixed_forms)
        forms += [agg for agg, _ in self.choice_factors(choice)]
        return pair_forms(forms, self.q_chain[-1], self.bits)

    def first_working_choice(self) -> tuple[tuple[int, ...], int]:
        """First inside-edge anchor choice with nonzero pairing."""
        options = [e for e, _ in self.triangles]
        for choice in product(*[(e[0], e[1]) for e in options]) if options else [()]:
            value = self.pair_choice(choice)
            if value:
                return choice, value
        raise FalsificationError(
            f"every anchor choice pairs to zero on {self.g.n} vertices, "
            f"edges {self.g.edges}, family {self.fam}")


def _resolve_witness(inst: _PairingInstance,
                     choice: tuple[int, ...]) -> tuple[EdgeVector, int]:
    """Resolve every family factor to one edge, then project out the padding.

    Maintains the invariant that the remaining aggregate pairing is nonzero,
    so at each step some alternative (and later some projection column) keeps
    it nonzero; the result is a witness exponent vector together with the
    exact permanent of its replicated edge-difference matrix.
    """
    g, bits = inst.g, inst.bits
    factors = inst.choice_factors(choice)
    q_cur = inst.q_chain[-1]
    for form in inst.fixed_forms:
        q_cur = apply_form(q_cur, form, bits)
    counts = Counter(inst.fixed_counts)

    for idx, (_, alts) in enumerate(factors):
        shared = q_cur
        for agg2, _ in factors[idx + 1:]:
            if not shared:
                break
            shared = apply_form(shared, agg2, bits)
        chosen = None
        for form, e in alts:
            if shared and apply_form(shared, form, bits).get(0, 0):
                chosen = (form, e)
                break
        if chosen is None:
            raise FalsificationError("factor resolution lost the nonzero pairing")
        q_cur = apply_form(q_cur, chosen[0], bits)
        counts[chosen[1]] += 1

    value = q_cur.get(0, 0)
    if value == 0:
        raise FalsificationError("resolved factors pair to zero")

    k_cur = [counts.get(e, 0) for e in g.edges]
    if sum(counts.values()) != sum(k_cur):
        raise FalsificationError("a resolved factor chose an edge outside the graph")
    if sum(k_cur) != g.m + len(inst.phantoms):
        raise FalsificationError("resolved exponent total is off")

    for r in range(len(inst.phantoms), 0, -1):
        a, b = inst.phantoms[r - 1]
        q_prev = inst.q_chain[r - 1]
        found = False
        for ei, e in enumerate(g.edges):
            if k_cur[ei] == 0 or ((a in e) == (b in e)):
                continue
            k_cur[ei] -= 1
            v = pair_edge_monomial(g.edges, k_cur, q_prev, bits)
            if v:
                value = v
                found = True
                break
            k_cur[ei] += 1
        if not found:
            raise FalsificationError("projection of a padding edge found no nonzero column")
    return tuple(k_cur), value


# ---------------------------------------------------------------------------
# Key-identity verifier and factor construction
# ---------------------------------------------------------------------------

def _check_residual_support(g: Graph, part: JPartition, k: EdgeVector) -> None:
    e1set = set(part.e1)
    for e, kv in zip(g.edges, k):
        if kv and e not in e1set:
            raise PreconditionError(f"exponent on {e} lies outside the residual edges")


def _restrict_to_edges(g: Graph, edges: tuple[Edge, ...], k: EdgeVector) -> EdgeVector:
    idx = edge_index(g)
    return tuple(k[idx[e]] for e in sorted(edges))


def _lift_from_edges(g: Graph, edges: tuple[Edge, ...], sub_k: EdgeVector) -> EdgeVector:
    idx = edge_index(g)
    out = [0] * g.m
    for e, kv in zip(sorted(edges), sub_k):
        out[idx[e]] = kv
    return tuple(out)


def verify_family_lift(g: Graph, gs: GoodSubset, fam: CoveringFamily,
                       k: EdgeVector) -> bool:
    """Check that adding the family load to a residual-sufficient cap yields a
    cap sufficient for the whole graph (exhaustively, through the permanent
    search).  Must be true on every valid input."""
    part = gs.partition
    _check_residual_support(g, part, k)
    if part.e1:
        sub, _ = subgraph_from_edges(g, part.e1)
        if is_sufficient(sub, _restrict_to_edges(g, part.e1, k)) is None:
            raise PreconditionError("cap vector is not sufficient for the residual graph")
    violations = validate_family(g, part, fam, bound=None)
    if violations:
        raise PreconditionError(f"invalid covering family: {violations}")
    return is_sufficient(g, vector_add(k, fam.kc)) is not None


def build_family_factors(g: Graph, gs: GoodSubset, fam: CoveringFamily,
                         k1_witness: EdgeVector
                         ) -> tuple[SparsePoly, SparsePoly, SparsePoly, SparsePoly, Fraction]:
    """Build the four family factors and their exact pairing value.

    The pairing runs against the difference forms of all edges plus enough
    padding copies at each J-vertex to balance the path-end surplus; anchor
    choices for inside edges are scanned in order and the first one pairing
    nonzero is returned.  Every anchor choice pairing to zero would falsify
    the construction and raises, never passes silently.
    """
    part = gs.partition
    _check_residual_support(g, part, k1_witness)
    violations = validate_family(g, part, fam, bound=None)
    if violations:
        raise PreconditionError(f"invalid covering family: {violations}")
    bits = pack_bits(g.m)
    q1 = expand_forms(g.n, bits, [edge_diff_form(e) for e in part.e1])
    if pair_edge_monomial(g.edges, k1_witness, q1, bits) == 0:
        raise PreconditionError("residual factor pairs to zero against the residual forms")

    inst = _PairingInstance(g, part, fam, k1_witness)
    choice, value = inst.first_working_choice()

    f1 = sum_power_product(g.edges, k1_witness, g.n)
    c2_edges = [cov for _, cov in fam.c2]
    f2 = sum_power_product(c2_edges, [1] * len(c2_edges), g.n)
    f3 = SparsePoly.constant(g.n, 1)
    for seq, cnt in fam.c3:
        s, t = seq[0], seq[-1]
        sign = -1 if len(seq) - 1 == 2 else 1
        es = [0] * g.n
        es[s - 1] = 1
        et = [0] * g.n
        et[t - 1] = 1
        factor = SparsePoly(g.n, {tuple(es): 1, tuple(et): sign}, degree=1)
        for _ in range(cnt):
            f3 = f3 * factor
    exp4 = [0] * g.n
    for c in choice:
        exp4[c - 1] += 1
    f4 = SparsePoly(g.n, {tuple(exp4): 1})
    return f1, f2, f3, f4, Fraction(value)


def check_anchor_identity(tplus: dict[tuple[int, int], int],
                          tminus: dict[tuple[int, int], int],
                          r: SparsePoly) -> bool:
    """Probe the pairing identity behind the anchor-choice step.

    With phi the product of squared difference/sum powers and psi the matching
    product of variable pairs, some monomial of r must pair nonzero against
    psi * r after multiplication by phi.  Returns whether one does; the
    construction predicts True on every instance, so this is a falsification
    probe, not a proof."""
    n = r.nvars
    if n > 4:
        raise ValueError(f"instance check limited to 4 variables, got {n}")
    phi = SparsePoly.constant(n, 1)
    psi = SparsePoly.constant(n, 1)
    pairs = sorted(set(tplus) | set(tminus))
    for (a, b) in pairs:
        if not (1 <= a < b <= n):
            raise ValueError(f"bad variable pair ({a}, {b})")
        tp = tplus.get((a, b), 0)
        tm = tminus.get((a, b), 0)
        ea = [0] * n
        ea[a - 1] = 1
        eb = [0] * n
        eb[b - 1] = 1
        diff = SparsePoly(n, {tuple(ea): 1, tuple(eb): -1}, degree=1)
        summ = SparsePoly(n, {tuple(ea): 1, tuple(eb): 1}, degree=1)
        for _ in range(2 * tp):
            phi = phi * diff
        for _ in range(2 * tm):
            phi = phi * summ
        eab = [0] * n
        eab[a - 1] = 1
        eab[b - 1] = 1
        pair_mono = SparsePoly(n, {tuple(eab): 1})
        for _ in range(tp + tm):
            psi = psi * pair_mono
    rhs = psi * r
    for mono in r.monomials():
        lhs = phi * SparsePoly(n, {mono: 1})
        if inner_weighted(lhs, rhs) != 0:
            return True
    return False


# ---------------------------------------------------------------------------
# Structural reductions (used by the cap-4 engine only)
# ---------------------------------------------------------------------------

def _pair_witness_value(g: Graph, witness: EdgeVector) -> int:
    bits = pack_bits(g.m)
    q = expand_forms(g.n, bits, [edge_diff_form(e) for e in g.edges])
    return pair_edge_monomial(g.edges, witness, q, bits)


def _degree_multiset(g: Graph) -> tuple[int, ...]:
    return tuple(sorted(degree(g, v) for v in g.vertices()))


def _is_path3(g: Graph) -> bool:
    return (g.n == 4 and g.m == 3 and _degree_multiset(g) == (1, 1, 2, 2)
            and len(components(g)) == 1)


def _is_c4(g: Graph) -> bool:
    return g.n == 4 and g.m == 4 and _degree_multiset(g) == (2, 2, 2, 2)


def _is_triangle_pendant(g: Graph) -> bool:
    if not (g.n == 4 and g.m == 4 and _degree_multiset(g) == (1, 2, 2, 3)):
        return False
    leaf = next(v for v in g.vertices() if degree(g, v) == 1)
    return degree(g, neighbours(g, leaf)[0]) == 3


def _try_base_case(g: Graph, trace: Trace) -> Optional[tuple[EdgeVector, EdgeVector, int]]:
    if _is_path3(g) or _is_c4(g) or _is_triangle_pendant(g):
        cert = find_witness_capped(g, 2)
        if cert is None:
            raise FalsificationError(f"named base graph got no cap-2 witness: {g.edges}")
        _note(trace, f"base case on {g.n} vertices {g.edges}: cap-2 witness {cert.witness}")
        return cert.cap, cert.witness, cert.permanent
    return None


def _lift_after_drop(g: Graph, dropped: tuple[int, ...], sub: Graph,
                     sub_k: EdgeVector) -> list[int]:
    dropset = set(dropped)
    kept = sorted(e for e in g.edges if not (set(e) & dropset))
    idx = edge_index(g)
    out = [0] * g.m
    for e, kv in zip(kept, sub_k):
        out[idx[e]] = kv
    return out


def _finish_reduction(g: Graph, dropped: tuple[int, ...], sub: Graph,
                      bound: int, trace: Trace,
                      extension: dict[Edge, tuple[int, int]],
                      label: str) -> Optional[tuple[EdgeVector, EdgeVector, int]]:
    """Recurse on the reduced graph and extend cap/witness by explicit values.

    extension maps each removed edge to (cap value, witness value).  The
    extended witness is verified to pair nonzero; a zero pairing abandons the
    reduction instead of shipping a broken certificate."""
    scap, swit, _ = _certify(sub, bound, trace)
    idx = edge_index(g)
    cap = _lift_after_drop(g, dropped, sub, scap)
    wit = _lift_after_drop(g, dropped, sub, swit)
    for e, (cv, wv) in extension.items():
        cap[idx[e]] = cv
        wit[idx[e]] = wv
    value = _pair_witness_value(g, tuple(wit))
    if value == 0:
        _note(trace, f"{label}: extension pairs to zero, abandoning the reduction")
        return None
    _note(trace, f"{label}: dropped {dropped}, extension {sorted(extension.items())}")
    return tuple(cap), tuple(wit), value


def _reduce_leaf_deg2(g: Graph, trace: Trace) -> Optional[tuple[EdgeVector, EdgeVector, int]]:
    """Delete a degree-1 vertex and its degree-2 neighbour; both new edge
    exponents are 1."""
    for v in g.vertices():
        if degree(g, v) != 1:
            continue
        u = neighbours(g, v)[0]
        if degree(g, u) != 2:
            continue
        sub, _ = subgraph_without_vertices(g, (u, v))
        if not is_nice(sub):
            continue
        w = next(x for x in neighbours(g, u) if x != v)
        e1 = tuple(sorted((u, v)))
        e2 = tuple(sorted((u, w)))
        out = _finish_reduction(g, (u, v), sub, 4, trace,
                                {e1: (1, 1), e2: (1, 1)}, "leaf reduction")
        if out:
            return out
    return None


def _reduce_two_deg2(g: Graph, trace: Trace) -> Optional[tuple[EdgeVector, EdgeVector, int]]:
    """Delete two adjacent degree-2 vertices; exponents 2 and 1 on the edges
    at one of them, 0 on the third removed edge."""
    for u, v in g.edges:
        if degree(g, u) != 2 or degree(g, v) != 2:
            continue
        sub, _ = subgraph_without_vertices(g, (u, v))
        if not is_nice(sub):
            continue
        w = next(x for x in neighbours(g, u) if x != v)
        w2 = next(x for x in neighbours(g, v) if x != u)
        e1 = (u, v)
        e2 = tuple(sorted((u, w)))
        e3 = tuple(sorted((v, w2)))
        out = _finish_reduction(g, (u, v), sub, 4, trace,
                                {e1: (2, 2), e2: (1, 1), e3: (0, 0)},
                                "adjacent-degree-2 reduction")
        if out:
            return out
    return None


def _reduce_deg3_deg2(g: Graph, trace: Trace) -> Optional[tuple[EdgeVector, EdgeVector, int]]:
    """Delete an adjacent (degree-3, degree-2) pair; the shared edge gets
    exponent 3, the least other removed edge 1, the rest 0."""
    for a, b in g.edges:
        for i, j in ((a, b), (b, a)):
            if degree(g, i) != 3 or degree(g, j) != 2:
                continue
            sub, _ = subgraph_without_vertices(g, (i, j))
            if not is_nice(sub):
                continue
            shared = tuple(sorted((i, j)))
            others = sorted(e for e in g.edges
                            if (set(e) & {i, j}) and e != shared)
            extension: dict[Edge, tuple[int, int]] = {shared: (3, 3)}
            extension[others[0]] = (1, 1)
            for e in others[1:]:
                extension[e] = (0, 0)
            out = _finish_reduction(g, (i, j), sub, 4, trace, extension,
                                    "degree-3/degree-2 reduction")
            if out:
                return out
    return None


# ---------------------------------------------------------------------------
# The recursive engines
# ---------------------------------------------------------------------------

def _fallback_search(g: Graph, bound: int, trace: Trace) -> tuple[EdgeVector, EdgeVector, int]:
    if g.m > _FALLBACK_EDGE_LIMIT:
        raise ConstructionError(
            f"construction failed and {g.m} edges is beyond the exhaustive fallback")
    cert = find_witness_capped(g, bound)
    if cert is None:
        raise FalsificationError(
            f"no cap-{bound} witness exists for {g.edges}; this contradicts the guarantee")
    _note(trace, f"exhaustive fallback found witness {cert.witness}")
    return cert.cap, cert.witness, cert.permanent


def _certify_connected(g: Graph, bound: int, trace: Trace) -> tuple[EdgeVector, EdgeVector, int]:
    if g.m == 0:
        return zero_vector(g), zero_vector(g), 1

    if bound == 4:
        base = _try_base_case(g, trace)
        if base:
            return base
        for reducer in (_reduce_leaf_deg2, _reduce_two_deg2, _reduce_deg3_deg2):
            out = reducer(g, trace)
            if out:
                return out

    gs = find_good_subset(g)
    part = gs.partition
    if bound == 5:
        fam = build_family_b5(g, gs)
        violations = validate_family(g, part, fam, 5)
        if violations:
            raise FalsificationError(f"plain family invalid: {violations}")
    else:
        try:
            assignment = find_good_assignment(g, gs)
            issues = validate_assignment(g, gs, assignment)
            if issues:
                raise ConstructionError(f"assignment invalid: {issues}")
            fam = build_family_b4(g, gs, assignment)
            violations = validate_family(g, part, fam, 4)
            if violations:
                raise ConstructionError(f"refined family invalid: {violations}")
        except ConstructionError as exc:
            _note(trace, f"refined construction failed ({exc}); falling back")
            return _fallback_search(g, bound, trace)

    _note(trace, f"subset {gs.j} on {g.n} vertices: "
                 f"|e1|={len(part.e1)} |e2|={len(part.e2)} "
                 f"|e3|={len(part.e3)} |e4|={len(part.e4)}, load {fam.kc}")
    if trace is not None:
        for e, cov in fam.c2:
            _note(trace, f"  cover {e} by {cov}")
        for seq, cnt in fam.c3:
            _note(trace, f"  path {seq} x{cnt}")
        for e, walk in fam.c4:
            _note(trace, f"  walk {walk} covers {e}")

    if part.e1:
        sub, _ = subgraph_from_edges(g, part.e1)
        scap, swit, _ = _certify(sub, bound, trace)
        k1cap = _lift_from_edges(g, part.e1, scap)
        k1wit = _lift_from_edges(g, part.e1, swit)
    else:
        k1cap = zero_vector(g)
        k1wit = zero_vector(g)

    inst = _PairingInstance(g, part, fam, k1wit)
    choice, _ = inst.first_working_choice()
    if choice:
        _note(trace, f"inside-edge anchors {choice}")
    witness, value = _resolve_witness(inst, choice)
    cap = vector_add(k1cap, fam.kc)
    if not vector_leq(witness, cap) or vector_total(witness) != g.m:
        raise FalsificationError("extracted witness violates the cap")
    return cap, witness, value


def _certify(g: Graph, bound: int, trace: Trace) -> tuple[EdgeVector, EdgeVector, int]:
    comps = components(g)
    if len(comps) == 1:
        return _certify_connected(g, bound, trace)
    idx = edge_index(g)
    cap = [0] * g.m
    wit = [0] * g.m
    value = 1
    for comp in comps:
        compset = set(comp)
        comp_edges = tuple(e for e in g.edges if e[0] in compset)
        if not comp_edges:
            continue
        sub, _ = subgraph_from_edges(g, comp_edges)
        scap, swit, sval = _certify_connected(sub, bound, trace)
        for e, cv, wv in zip(sorted(comp_edges), scap, swit):
            cap[idx[e]] = cv
            wit[idx[e]] = wv
        value *= sval
    return tuple(cap), tuple(wit), value


def _independent_permanent(g: Graph, witness: EdgeVector) -> int:
    """Permanent of the replicated edge-difference matrix via the
    inclusion-exclusion route, blockwise over components when large."""
    if g.m <= 22:
        return permanent(weighting_matrix(g, witness))
    value = 1
    idx = edge_index(g)
    for comp in components(g):
        compset = set(comp)
        comp_edges = tuple(e for e in g.edges if e[0] in compset)
        if not comp_edges:
            continue
        sub, _ = subgraph_from_edges(g, comp_edges)
        sub_wit = tuple(witness[idx[e]] for e in sorted(comp_edges))
        value *= permanent(weighting_matrix(sub, sub_wit))
    return value


def _certify_with_bound(g: Graph, bound: int, trace: Trace) -> Certificate:
    if not is_nice(g):
        raise NotNiceError("graph has an isolated-edge component")
    cap, witness, value = _certify(g, bound, trace)
    if any(c > bound for c in cap):
        raise FalsificationError(f"cap {cap} exceeds the bound {bound}")
    check = _independent_permanent(g, witness)
    if check != value:
        raise FalsificationError(
            f"permanent backends disagree: pairing {value}, inclusion-exclusion {check}")
    return Certificate(g, cap, witness, check)


def certify_b5(g: Graph, trace: Trace = None) -> Certificate:
    """Certificate with every exponent at most 5, by the plain construction."""
    return _certify_with_bound(g, 5, trace)


def certify_b4(g: Graph, trace: Trace = None) -> Certificate:
    """Certificate with every exponent at most 4: reductions where the small
    patterns are present, the refined covering construction otherwise, and an
    exhaustive search as the last resort."""
    return _certify_with_bound(g, 4, trace)
