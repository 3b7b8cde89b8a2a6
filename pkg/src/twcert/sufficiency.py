"""Sufficiency decisions: exhaustive witness search under an exponent cap.

A cap vector K is sufficient for a graph when some exponent vector K' <= K
with total |E| has a nonzero coefficient in the weighting polynomial, i.e. a
nonzero permanent of the replicated edge-difference matrix.  A certificate
records the cap, the witness, and the exact permanent value.

The search is a deterministic lexicographic sweep with early exit, so the
reported witness is always the lexicographically first success.  A cheap
pre-filter rejects candidates whose replicated matrix has an all-zero row
(the permanent is trivially zero there).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterator, Optional

from .algebra import build_c, permanent, weighting_matrix
from .graphs import (
    EdgeVector,
    Graph,
    constant_vector,
    vector_leq,
    vector_total,
)


@dataclass(frozen=True)
class Certificate:
    """A cap vector, a dominated witness with total |E|, and its nonzero permanent."""

    graph: Graph
    cap: EdgeVector
    witness: EdgeVector
    permanent: int

    def __post_init__(self):
        if len(self.cap) != self.graph.m or len(self.witness) != self.graph.m:
            raise ValueError("cap/witness length must equal edge count")
        if not vector_leq(self.witness, self.cap):
            raise ValueError("witness exceeds cap")
        if vector_total(self.witness) != self.graph.m:
            raise ValueError("witness total must equal edge count")
        if self.permanent == 0:
            raise ValueError("certificate permanent must be nonzero")


def enumerate_bounded(cap: EdgeVector, total: int) -> Iterator[EdgeVector]:
    """Yield every vector dominated by cap with the given total, in ascending
    lexicographic order on the canonical edge order, each exactly once."""
    n = len(cap)

    def rec(prefix: list[int], i: int, remaining: int) -> Iterator[EdgeVector]:
        if i == n:
            if remaining == 0:
                yield tuple(prefix)
            return
        tail_room = sum(cap[i + 1:])
        lo = max(0, remaining - tail_room)
        hi = min(cap[i], remaining)
        for v in range(lo, hi + 1):
            prefix.append(v)
            yield from rec(prefix, i + 1, remaining - v)
            prefix.pop()

    if total < 0:
        return
    yield from rec([], 0, total)


def _has_zero_row(g: Graph, candidate: EdgeVector) -> bool:
    """True when some row of the replicated edge-difference matrix is all zero."""
    c = build_c(g)
    support = [j for j, k in enumerate(candidate) if k]
    for row in c.data:
        if all(row[j] == 0 for j in support):
            return True
    return False


def is_sufficient(g: Graph, cap: EdgeVector) -> Optional[Certificate]:
    """First witness (lexicographic order) dominated by cap, or None.

    Candidates are evaluated lazily; the pre-filter skips those with an
    all-zero matrix row before any permanent is computed.
    """
    if len(cap) != g.m:
        raise ValueError("cap length must equal edge count")
    for candidate in enumerate_bounded(cap, g.m):
        if g.m and _has_zero_row(g, candidate):
            continue
        value = permanent(weighting_matrix(g, candidate))
        if value != 0:
            return Certificate(g, cap, candidate, value)
    return None


def find_witness_capped(g: Graph, b: int) -> Optional[Certificate]:
    """Search under the uniform cap b; a certificate exists iff some edge
    monomial with all exponents <= b survives in the weighting polynomial."""
    if b < 0:
        raise ValueError("cap must be non-negative")
    return is_sufficient(g, constant_vector(g, b))


def recheck_certificate(cert: Certificate) -> bool:
    """Independently recompute the witness permanent and compare."""
    return permanent(weighting_matrix(cert.graph, cert.witness)) == cert.permanent


# ---------------------------------------------------------------------------
# JSON interchange
# ---------------------------------------------------------------------------

def certificate_to_json(cert: Certificate) -> str:
    payload = {
        "n": cert.graph.n,
        "edges": [list(e) for e in cert.graph.edges],
        "cap": list(cert.cap),
        "witness": list(cert.witness),
        # decimal string: permanents outgrow fixed-width integers quickly
        "permanent": str(cert.permanent),
    }
    return json.dumps(payload)


def certificate_from_json(text: str) -> Certificate:
    payload = json.loads(text)
    g = Graph(int(payload["n"]), tuple((int(u), int(v)) for u, v in payload["edges"]))
    return Certificate(
        g,
        tuple(int(x) for x in payload["cap"]),
        tuple(int(x) for x in payload["witness"]),
        int(payload["permanent"]),
    )
