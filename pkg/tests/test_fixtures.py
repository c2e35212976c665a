"""Locks the checked-in coordinates and the positional facts each fixture exists for."""
import hashlib
import itertools

import pytest

from mwgdraw import drawfile
from mwgdraw.fixtures import NAMES, fixture
from mwgdraw.geometry import find_separating_line
from mwgdraw.model import Drawing, GraphSpec, MwgInstance, diameter, induce_mwg, matches_spec
from mwgdraw.properties import Status, intended_graphs, run_all

K22 = GraphSpec.of(2, 2)


def _blocked(p, u, v):
    # independent of the library predicate: |p-m|^2 <= |u-v|^2 / 4 with m the midpoint
    mx, my = (u.x + v.x) / 2, (u.y + v.y) / 2
    return (p.x - mx) ** 2 + (p.y - my) ** 2 <= ((u.x - v.x) ** 2 + (u.y - v.y) ** 2) / 4


def _oracle_edges(d, others):
    return {frozenset((a, b)) for (a, pa), (b, pb) in itertools.combinations(d.vertices, 2)
            if not any(_blocked(q, pa, pb) for q in others)}


def test_coordinates_are_locked():
    digest = hashlib.sha256("".join(drawfile.dumps(fixture(n)) for n in NAMES).encode()).hexdigest()
    assert digest == FROZEN_DIGEST


@pytest.mark.parametrize("name", NAMES)
def test_induced_graphs_match_intent(name):
    inst = fixture(name)
    g0, g1 = induce_mwg(inst)
    assert _oracle_edges(inst.gamma0, inst.gamma1.positions) == set(g0.edges)
    assert _oracle_edges(inst.gamma1, inst.gamma0.positions) == set(g1.edges)
    assert (g0, g1) == intended_graphs(inst)


def test_k22_k22_is_separated_pair_of_4_cycles():
    inst = fixture("K22_K22")
    g0, g1 = induce_mwg(inst)
    assert matches_spec(g0, K22) and matches_spec(g1, K22)
    assert all(p.y > 0 for p in inst.gamma0.positions)
    assert all(p.y < 0 for p in inst.gamma1.positions)


def test_k22_k22_dropping_lowest_witnesses_keeps_the_cycle():
    inst = fixture("K22_K22")
    low = sorted(inst.gamma1.vertices, key=lambda lp: lp[1].y)
    part = inst.gamma1.intended_partition
    assert part[low[0][0]] != part[low[1][0]]
    for k in (1, 2):
        kept = frozenset(lbl for lbl, _ in low[k:])
        rest = Drawing(tuple(v for v in inst.gamma1.vertices if v[0] in kept))
        g0, _ = induce_mwg(MwgInstance(inst.gamma0, rest))
        assert matches_spec(g0, K22) is not None


def test_k22_k22_terrain_checks_pass():
    checks = run_all(fixture("K22_K22")).checks
    assert checks["convex_terrain"].status is Status.PASS
    assert checks["witness_ordering"].status is Status.PASS


def test_k22_ind3_extremes_are_on_the_cycle_side():
    inst = fixture("K22_IND3")
    g0, g1 = induce_mwg(inst)
    assert matches_spec(g0, K22) and matches_spec(g1, GraphSpec.of(3))
    xs0 = [p.x for p in inst.gamma0.positions]
    xs1 = [p.x for p in inst.gamma1.positions]
    assert min(xs0) < min(xs1) and max(xs0) > max(xs1)


@pytest.mark.parametrize("name, d0, d1", [("NONSEP_DIAM3", 3, 2), ("NONSEP_DIAM1", 2, 1)])
def test_nonseparable_fixtures(name, d0, d1):
    inst = fixture(name)
    assert inst.separator is None
    assert find_separating_line(inst.gamma0.positions, inst.gamma1.positions) is None
    assert find_separating_line(inst.gamma1.positions, inst.gamma0.positions) is None
    g0, g1 = induce_mwg(inst)
    assert (diameter(g0), diameter(g1)) == (d0, d1)


def test_nonsep_diam1_side_is_5_cycle_around_an_edge():
    g0, g1 = induce_mwg(fixture("NONSEP_DIAM1"))
    assert len(g0.edges) == 5 and all(len(nb) == 2 for nb in g0.neighbors().values())
    assert len(g1.edges) == 1


def test_unknown_fixture():
    with pytest.raises(KeyError):
        fixture("nope")


FROZEN_DIGEST = "fe95518ff542d15816f8ebfe75f1f6be1a32c9933c0ffc41c4cee81dbae8aed2"
