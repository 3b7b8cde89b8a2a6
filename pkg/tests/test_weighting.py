"""Proper total weightings, the list solver, and the vertex-list shift."""

from __future__ import annotations

from fractions import Fraction

import pytest

from twcert.errors import InputFormatError
from twcert.generate import random_nice_graph, rng_for
from twcert.graphs import Graph, components
from twcert.weighting import _bipartition_parity
from twcert.weighting import (
    ListAssignment,
    TotalWeighting,
    check_proper,
    format_weighting,
    parse_lists,
    shift_to_zero_vertex_lists,
    solve,
)


def _lists(g: Graph, vertex, edge) -> ListAssignment:
    return ListAssignment(
        {v: tuple(Fraction(x) for x in vertex(v)) for v in g.vertices()},
        {e: tuple(Fraction(x) for x in edge(e)) for e in g.edges},
    )


def test_check_proper_examples(triangle, p4):
    phi = TotalWeighting({v: Fraction(v) for v in triangle.vertices()},
                         {e: Fraction(1) for e in triangle.edges})
    assert check_proper(triangle, phi)

    k2 = Graph(2, ((1, 2),))
    const = TotalWeighting({1: Fraction(3), 2: Fraction(3)}, {(1, 2): Fraction(1)})
    assert not check_proper(k2, const)

    phi4 = TotalWeighting({v: Fraction(0) for v in p4.vertices()},
                          {(1, 2): Fraction(1), (2, 3): Fraction(2), (3, 4): Fraction(1)})
    assert not check_proper(p4, phi4)  # sums 1, 3, 3, 1 clash on the middle edge

    with pytest.raises(ValueError):
        check_proper(k2, TotalWeighting({1: Fraction(0)}, {(1, 2): Fraction(1)}))


def test_solve_single_edge_unsolvable():
    k2 = Graph(2, ((1, 2),))
    lists = _lists(k2, lambda v: (0,), lambda e: (1,))
    assert solve(k2, lists) is None


def test_solve_p4(p4):
    lists = _lists(p4, lambda v: (0,), lambda e: (0, 1, 2))
    phi = solve(p4, lists)
    assert phi is not None and check_proper(p4, phi)
    for e, w in phi.edge_weights.items():
        assert w in lists.edge_lists[e]


def test_solve_returns_first_in_list_order(triangle):
    lists = _lists(triangle, lambda v: (0,), lambda e: (0, 1, 2))
    phi = solve(triangle, lists)
    assert phi is not None
    # deterministic: re-running gives the identical weighting
    assert solve(triangle, lists) == phi


def test_shift_identity_when_zero(triangle):
    lists = _lists(triangle, lambda v: (0,), lambda e: (1, 2))
    shifted = shift_to_zero_vertex_lists(triangle, lists)
    assert shifted == lists


def test_shift_triangle_walkthrough(triangle):
    lists = ListAssignment(
        {1: (Fraction(2),), 2: (Fraction(0),), 3: (Fraction(0),)},
        {e: (Fraction(0), Fraction(1)) for e in triangle.edges},
    )
    shifted = shift_to_zero_vertex_lists(triangle, lists)
    assert all(shifted.vertex_lists[v] == (Fraction(0),) for v in triangle.vertices())
    # the odd walk at vertex 1 alternates +1/-1 on its three edges
    deltas = sorted(shifted.edge_lists[e][0] - lists.edge_lists[e][0]
                    for e in triangle.edges)
    assert deltas == [Fraction(-1), Fraction(1), Fraction(1)]
    # solvability agrees on both sides
    assert (solve(triangle, lists) is None) == (solve(triangle, shifted) is None)


def test_shift_rejects_bipartite_and_disconnected():
    c4 = Graph(4, ((1, 2), (2, 3), (3, 4), (1, 4)))
    lists = _lists(c4, lambda v: (1,), lambda e: (0,))
    with pytest.raises(ValueError):
        shift_to_zero_vertex_lists(c4, lists)
    two = Graph(6, ((1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6)))
    lists2 = _lists(two, lambda v: (1,), lambda e: (0,))
    with pytest.raises(ValueError):
        shift_to_zero_vertex_lists(two, lists2)


def test_shift_roundtrip_equivalence():
    rng = rng_for(20240811, "shift-unit")
    done = 0
    while done < 10:
        g = random_nice_graph(5, 0.5, rng)
        if len(components(g)) != 1 or _bipartition_parity(g) is not None:
            continue
        pool = [Fraction(0), Fraction(1), Fraction(-1), Fraction(1, 2), Fraction(2)]
        lists = ListAssignment(
            {v: (rng.choice(pool),) for v in g.vertices()},
            {e: tuple(rng.sample(pool, rng.choice((1, 2)))) for e in g.edges},
        )
        shifted = shift_to_zero_vertex_lists(g, lists)
        assert (solve(g, lists) is None) == (solve(g, shifted) is None)
        done += 1


def test_parse_lists(p4):
    text = "V 1 0\nV 2 0\nV 3 0\nV 4 0\n" \
           "E 1 2 1/2 1\nE 2 3 0 1 2\nE 3 4 -1\n"
    lists = parse_lists(text, p4)
    assert lists.edge_lists[(1, 2)] == (Fraction(1, 2), Fraction(1))
    assert lists.vertex_lists[3] == (Fraction(0),)
    with pytest.raises(InputFormatError):
        parse_lists("V 1 0\n", p4)
    with pytest.raises(InputFormatError):
        parse_lists(text + "E 1 4 3\n", p4)


def test_format_weighting_roundtrip(triangle):
    lists = _lists(triangle, lambda v: (0,), lambda e: (0, 1, 2))
    phi = solve(triangle, lists)
    text = format_weighting(triangle, phi)
    assert "V 1 0" in text and text.count("E ") == 3
