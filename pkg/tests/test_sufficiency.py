"""Capped witness search: enumeration order, pre-filter, certificates."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import first_witness_reference
from twcert.graphs import Graph
from twcert.sufficiency import (
    Certificate,
    certificate_from_json,
    certificate_to_json,
    enumerate_bounded,
    find_witness_capped,
    is_sufficient,
    recheck_certificate,
)


def test_enumerate_bounded_examples():
    assert list(enumerate_bounded((1, 1, 1), 3)) == [(1, 1, 1)]
    assert list(enumerate_bounded((2, 2), 2)) == [(0, 2), (1, 1), (2, 0)]
    assert list(enumerate_bounded((0, 0), 1)) == []
    assert list(enumerate_bounded((), 0)) == [()]


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(0, 3), min_size=1, max_size=4), st.integers(0, 8))
def test_enumerate_bounded_complete_and_sorted(cap, total):
    got = list(enumerate_bounded(tuple(cap), total))
    expected = sorted(
        k for k in _all_vectors(tuple(cap)) if sum(k) == total)
    assert got == expected


def _all_vectors(cap):
    if not cap:
        yield ()
        return
    for head in range(cap[0] + 1):
        for tail in _all_vectors(cap[1:]):
            yield (head,) + tail


def test_is_sufficient_p4(p4):
    cert = is_sufficient(p4, (1, 2, 0))
    assert cert is not None
    assert cert.witness == (1, 2, 0) and cert.permanent == -2
    assert is_sufficient(p4, (1, 1, 1)) is None


def test_is_sufficient_triangle(triangle):
    cert = is_sufficient(triangle, (2, 2, 2))
    assert cert is not None
    ref = first_witness_reference(triangle, (2, 2, 2))
    assert (cert.witness, cert.permanent) == ref == ((0, 1, 2), -2)


def test_find_witness_capped_anchors(p4):
    assert find_witness_capped(p4, 1) is None
    cert = find_witness_capped(p4, 2)
    assert cert is not None and max(cert.witness) <= 2
    assert (cert.witness, cert.permanent) == first_witness_reference(p4, (2, 2, 2))


def test_find_witness_capped_k2():
    k2 = Graph(2, ((1, 2),))
    for b in (0, 1, 3):
        assert find_witness_capped(k2, b) is None


def test_empty_graph_certificate():
    g = Graph(3, ())
    cert = is_sufficient(g, ())
    assert cert is not None and cert.permanent == 1 and cert.witness == ()


@settings(max_examples=25, deadline=None)
@given(st.sampled_from([
    ((1, 2), (2, 3), (3, 4)),
    ((1, 2), (1, 3), (2, 3)),
    ((1, 2), (1, 3), (1, 4)),
    ((1, 2), (1, 3), (2, 3), (3, 4)),
]), st.lists(st.integers(0, 3), min_size=4, max_size=4))
def test_matches_reference_search(edges, cap):
    n = max(v for e in edges for v in e)
    g = Graph(n, edges)
    cap = tuple(cap[:g.m])
    cert = is_sufficient(g, cap)
    ref = first_witness_reference(g, cap)
    if ref is None:
        assert cert is None
    else:
        assert cert is not None and (cert.witness, cert.permanent) == ref


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(0, 2), min_size=3, max_size=3),
       st.lists(st.integers(0, 2), min_size=3, max_size=3))
def test_monotone_in_cap(extra, base):
    g = Graph(3, ((1, 2), (1, 3), (2, 3)))
    low = tuple(base)
    high = tuple(b + e for b, e in zip(base, extra))
    if is_sufficient(g, low) is not None:
        assert is_sufficient(g, high) is not None


def test_recheck_and_json_roundtrip(p4):
    cert = find_witness_capped(p4, 2)
    assert recheck_certificate(cert)
    again = certificate_from_json(certificate_to_json(cert))
    assert again == cert
    with pytest.raises(ValueError):
        Certificate(p4, (2, 2, 2), (2, 2, 2), 5)  # total != edge count
    with pytest.raises(ValueError):
        Certificate(p4, (1, 1, 1), (1, 2, 0), 5)  # witness exceeds cap
    with pytest.raises(ValueError):
        Certificate(p4, (2, 2, 2), (1, 2, 0), 0)  # zero permanent
