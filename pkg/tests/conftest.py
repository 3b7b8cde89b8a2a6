"""Shared fixtures and independent oracles.

The oracles here deliberately avoid the library's own computation paths:
permanents are summed over explicit permutations, and the weighting
polynomial is expanded with a plain dict-based multiply, so the tests check
the fast implementations against slow first-principles code.
"""

from __future__ import annotations

from itertools import permutations

import pytest

from twcert.graphs import Graph


@pytest.fixture
def triangle() -> Graph:
    return Graph(3, ((1, 2), (1, 3), (2, 3)))


@pytest.fixture
def p4() -> Graph:
    return Graph(4, ((1, 2), (2, 3), (3, 4)))


@pytest.fixture
def c5() -> Graph:
    return Graph(5, ((1, 2), (2, 3), (3, 4), (4, 5), (1, 5)))


@pytest.fixture
def star3() -> Graph:
    return Graph(4, ((1, 2), (1, 3), (1, 4)))


def per_bruteforce(rows) -> int:
    """Permanent by summing over all permutations."""
    n = len(rows)
    if n == 0:
        return 1
    assert all(len(r) == n for r in rows)
    total = 0
    for sigma in permutations(range(n)):
        prod = 1
        for i in range(n):
            prod *= rows[i][sigma[i]]
            if prod == 0:
                break
        total += prod
    return total


def weighting_matrix_rows(g: Graph, k) -> list[list[int]]:
    """Replicated edge-difference matrix built from scratch."""
    cols = []
    for e, count in zip(g.edges, k):
        for _ in range(count):
            cols.append(e)
    rows = []
    for u, v in g.edges:
        row = []
        for f in cols:
            entry = 0
            if f != (u, v):
                if u in f:
                    entry += 1
                if v in f:
                    entry -= 1
            row.append(entry)
        rows.append(row)
    return rows


def naive_weighting_polynomial(g: Graph) -> dict[tuple[int, ...], int]:
    """Full expansion of the weighting polynomial in edge variables,
    multiplying out one edge factor at a time with a plain dict."""
    m = g.m
    poly = {(0,) * m: 1}
    for u, v in g.edges:
        factor: dict[tuple[int, ...], int] = {}
        for j, f in enumerate(g.edges):
            coeff = (1 if u in f else 0) - (1 if v in f else 0)
            if f == (u, v):
                coeff = 0
            if coeff:
                e = [0] * m
                e[j] = 1
                factor[tuple(e)] = coeff
        nxt: dict[tuple[int, ...], int] = {}
        for ea, ca in poly.items():
            for eb, cb in factor.items():
                key = tuple(x + y for x, y in zip(ea, eb))
                nxt[key] = nxt.get(key, 0) + ca * cb
        poly = {k: v for k, v in nxt.items() if v}
    return poly


def first_witness_reference(g: Graph, cap) -> tuple | None:
    """Reference for the capped witness search: lexicographic sweep with the
    permutation-based permanent."""
    m = g.m

    def rec(prefix: list[int], remaining: int):
        i = len(prefix)
        if i == m:
            if remaining == 0:
                value = per_bruteforce(weighting_matrix_rows(g, tuple(prefix)))
                if value != 0:
                    return tuple(prefix), value
            return None
        tail = sum(cap[i + 1:])
        for v in range(max(0, remaining - tail), min(cap[i], remaining) + 1):
            out = rec(prefix + [v], remaining - v)
            if out:
                return out
        return None

    return rec([], m)
