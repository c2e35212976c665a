import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mwgdraw.characterize import (BipartiteShape, CharacterizeError, OutOfScopeError, Reason,
                                  ShapeKind, Verdict, classify_bipartite, decide_bipartite_pair,
                                  decide_multipartite_all_ge2, decide_pair)
from mwgdraw.model import GraphSpec

K = GraphSpec.of


def bipartite_specs(lo=2, hi=10):
    return [K(a, n - a) for n in range(lo, hi + 1) for a in range(1, n // 2 + 1)]


def test_shape_examples():
    assert classify_bipartite(K(5, 1)) == BipartiteShape(ShapeKind.STAR, 6)
    assert classify_bipartite(K(2, 2)).kind is ShapeKind.K22
    assert classify_bipartite(K(3, 2)).kind is ShapeKind.OTHER
    assert classify_bipartite(K(1, 1)) == BipartiteShape(ShapeKind.STAR, 2)
    with pytest.raises(CharacterizeError):
        classify_bipartite(K(2, 2, 2))


@pytest.mark.parametrize("s0, s1, drawable, reason", [
    ((2, 2), (2, 2), True, Reason.OK),
    ((2, 2), (1, 5), True, Reason.OK),
    ((2, 2), (1, 1), True, Reason.OK),
    ((1, 2), (1, 6), False, Reason.SIZE_GAP),
    ((2, 3), (1, 4), False, Reason.SHAPE_VIOLATION),
    ((1, 1), (1, 3), True, Reason.OK),
    ((1, 1), (1, 4), False, Reason.SIZE_GAP),
])
def test_bipartite_examples(s0, s1, drawable, reason):
    v = decide_bipartite_pair(K(*s0), K(*s1))
    assert v.drawable is drawable and v.reason is reason


def test_bipartite_rejects_non_bipartite():
    with pytest.raises(CharacterizeError):
        decide_bipartite_pair(K(2, 2, 2), K(2, 2))


@pytest.mark.parametrize("s0, s1, drawable", [
    ((2, 2), (2, 2), True), ((2, 2, 2), (2, 2), False), ((2, 2), (3, 3), False),
    ((2, 2, 2), (2, 2, 2), False), ((3, 2), (2, 2), False),
])
def test_multipartite_examples(s0, s1, drawable):
    assert decide_multipartite_all_ge2(K(*s0), K(*s1)).drawable is drawable


def test_multipartite_out_of_scope():
    with pytest.raises(OutOfScopeError):
        decide_multipartite_all_ge2(K(1, 2), K(2, 2))
    with pytest.raises(OutOfScopeError):
        decide_pair(K(1, 2, 2), K(2, 2))


def test_verdict_reason_invariant():
    with pytest.raises(CharacterizeError):
        Verdict(True, Reason.SIZE_GAP)
    with pytest.raises(CharacterizeError):
        Verdict(False, Reason.OK)


def _explicit_predicate(s0, s1):
    def ok(s):
        return min(s.partition_sizes) == 1 or s.partition_sizes == (2, 2)
    return ok(s0) and ok(s1) and abs(s0.n - s1.n) <= 2


def test_bipartite_matches_explicit_predicate_and_is_symmetric():
    specs = bipartite_specs()
    for s0, s1 in itertools.product(specs, repeat=2):
        v = decide_bipartite_pair(s0, s1)
        assert v.drawable == _explicit_predicate(s0, s1)
        w = decide_bipartite_pair(s1, s0)
        assert (v.drawable, v.reason) == (w.drawable, w.reason)


@given(st.integers(2, 6), st.integers(2, 6), st.integers(2, 6), st.integers(2, 6))
def test_multipartite_agrees_with_bipartite_on_common_domain(a, b, c, d):
    s0, s1 = K(a, b), K(c, d)
    assert decide_multipartite_all_ge2(s0, s1).drawable == decide_bipartite_pair(s0, s1).drawable


@given(st.lists(st.integers(1, 5), min_size=2, max_size=2),
       st.lists(st.integers(1, 5), min_size=2, max_size=2))
def test_decide_pair_symmetric(a, b):
    s0, s1 = GraphSpec(tuple(a)), GraphSpec(tuple(b))
    v, w = decide_pair(s0, s1), decide_pair(s1, s0)
    assert (v.drawable, v.reason) == (w.drawable, w.reason)
