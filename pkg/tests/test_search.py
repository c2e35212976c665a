from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mwgdraw import kernels
from mwgdraw.construct import draw_pair
from mwgdraw.geometry import pt
from mwgdraw.model import Drawing, GraphSpec, MwgInstance, induce_mwg, matches_spec
from mwgdraw.properties import run_all
from mwgdraw.search import SearchConfig, SearchMode, score, search, search_graphs

K = GraphSpec.of
MODES = list(SearchMode)


def test_config_validation():
    with pytest.raises(ValueError):
        SearchConfig(budget=0)
    with pytest.raises(ValueError):
        SearchConfig(coordinate_bound=0)
    with pytest.raises(ValueError):
        SearchConfig(workers=0)
    assert SearchConfig(mode="grid").mode is SearchMode.GRID


def test_size_limit():
    with pytest.raises(ValueError):
        search(K(4, 5), K(4, 4), SearchConfig())


@pytest.mark.parametrize("mode", MODES)
def test_single_edges_found_immediately(mode):
    res = search(K(1, 1), K(1, 1), SearchConfig(budget=50, mode=mode))
    assert res.instance is not None and res.stats.found and res.stats.attempts <= 50


@pytest.mark.parametrize("mode", [SearchMode.ANNEAL, SearchMode.GRID])
def test_k22_pair_found(mode):
    res = search(K(2, 2), K(2, 2), SearchConfig(budget=10 ** 6, seed=0, mode=mode))
    assert res.stats.found
    g0, g1 = induce_mwg(res.instance)
    assert matches_spec(g0, K(2, 2)) is not None and matches_spec(g1, K(2, 2)) is not None
    assert run_all(res.instance).ok


def test_random_mode_reports_budget_exhaustion_honestly():
    res = search(K(2, 2), K(2, 2), SearchConfig(budget=20_000, seed=0, mode=SearchMode.RANDOM))
    assert res.instance is None
    d = res.stats.as_dict()
    assert d["status"] == "not found within budget" and d["attempts"] == 20_000
    assert res.best_candidate is not None
    assert Fraction(d["best_score"]) == score(res.best_candidate, K(2, 2), K(2, 2))


@pytest.mark.parametrize("mode", MODES)
def test_k23_pair_never_found(mode):
    res = search(K(2, 3), K(2, 3), SearchConfig(budget=10 ** 7, seed=0, mode=mode))
    assert not res.stats.found and res.stats.attempts == 10 ** 7
    assert res.stats.best_score < 1


@pytest.mark.parametrize("mode", MODES)
def test_replay_is_identical(mode):
    cfg = SearchConfig(budget=30_000, seed=7, mode=mode)
    a, b = search(K(1, 2), K(1, 3), cfg), search(K(1, 2), K(1, 3), cfg)
    assert a.instance == b.instance and a.best_candidate == b.best_candidate
    assert (a.stats.attempts, a.stats.best_mismatches, a.stats.restarts) == \
        (b.stats.attempts, b.stats.best_mismatches, b.stats.restarts)


def test_workers_are_deterministic():
    cfg = SearchConfig(budget=200_000, seed=3, workers=3)
    a, b = search(K(1, 3), K(1, 4), cfg), search(K(1, 3), K(1, 4), cfg)
    assert a.instance == b.instance and a.stats.attempts == b.stats.attempts


@pytest.mark.skipif("cython" not in kernels.available(), reason="compiled backend not built")
@pytest.mark.parametrize("mode", MODES)
def test_backends_agree(mode):
    cfg = SearchConfig(budget=3_000, seed=1, mode=mode, coordinate_bound=4)
    a = search(K(1, 2), K(2, 2), cfg, backend="cython")
    b = search(K(1, 2), K(2, 2), cfg, backend="python")
    assert a.instance == b.instance and a.best_candidate == b.best_candidate
    assert (a.stats.attempts, a.stats.best_mismatches) == (b.stats.attempts, b.stats.best_mismatches)


def test_accept_filter_vetoes():
    seen = []

    def reject_first(inst):
        seen.append(inst)
        return len(seen) > 1

    res = search(K(1, 1), K(1, 1), SearchConfig(budget=10_000, mode=SearchMode.ANNEAL),
                 accept=reject_first)
    assert res.stats.found and res.stats.rejected == 1 and len(seen) == 2


def test_search_graphs_arbitrary_targets():
    # a path on three vertices against a single edge
    res = search_graphs([(0, 1), (1, 2)], [(0, 1)], 3, 2, SearchConfig(budget=200_000, seed=0))
    assert res.stats.found
    g0, g1 = induce_mwg(res.instance)
    assert g0.edges == {frozenset(("a0", "a1")), frozenset(("a1", "a2"))}
    assert res.instance.gamma0.intended_edges == g0.edges


def test_found_instances_pass_properties():
    for pair in [(K(1, 2), K(1, 2)), (K(1, 3), K(2, 2)), (K(1, 4), K(1, 2))]:
        res = search(*pair, SearchConfig(budget=500_000, seed=2))
        assert res.stats.found and run_all(res.instance).ok


# ---------------------------------------------------------------- score

def test_score_exact_realization_is_one():
    assert score(draw_pair(K(2, 2), K(1, 3)), K(2, 2), K(1, 3)) == 1


def test_score_below_one_on_mismatch():
    inst = draw_pair(K(1, 2), K(1, 2))
    s = score(inst, K(1, 2), K(3))
    assert s < 1
    with pytest.raises(ValueError):
        score(inst, K(2, 2), K(1, 2))


@settings(max_examples=60)
@given(st.lists(st.tuples(st.integers(-4, 4), st.integers(1, 4)), min_size=3, max_size=3, unique=True),
       st.lists(st.tuples(st.integers(-4, 4), st.integers(-4, -1)), min_size=3, max_size=3,
                unique=True),
       st.sampled_from([(1, 2), (3,), (1, 1, 1)]), st.sampled_from([(1, 2), (3,), (1, 1, 1)]))
def test_score_is_one_iff_specs_match(A, B, s0, s1):
    inst = MwgInstance(Drawing.from_points([pt(*p) for p in A], "a"),
                       Drawing.from_points([pt(*p) for p in B], "b"))
    g0, g1 = induce_mwg(inst)
    exact = matches_spec(g0, GraphSpec(s0)) is not None and matches_spec(g1, GraphSpec(s1)) is not None
    assert (score(inst, GraphSpec(s0), GraphSpec(s1)) == 1) == exact
