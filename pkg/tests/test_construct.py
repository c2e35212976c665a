import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mwgdraw.characterize import decide_bipartite_pair
from mwgdraw.construct import (NotDrawableError, PlacementKind, add_isolated_vertex,
                               add_universal_vertex, draw_pair, seed_independent_pair)
from mwgdraw.fixtures import fixture
from mwgdraw.geometry import find_separating_line, pt
from mwgdraw.model import (Drawing, GraphSpec, ModelError, MwgInstance, induce_mwg, matches_spec)
from mwgdraw.properties import run_all

K = GraphSpec.of


def _every_disk_blocked(inst):
    """Independent edgelessness check straight from the disk definition."""
    for mine, theirs in ((inst.gamma0, inst.gamma1), (inst.gamma1, inst.gamma0)):
        for u, v in itertools.combinations(mine.positions, 2):
            cx, cy = (u.x + v.x) / 2, (u.y + v.y) / 2
            r2 = ((u.x - v.x) ** 2 + (u.y - v.y) ** 2) / 4
            if not any((p.x - cx) ** 2 + (p.y - cy) ** 2 <= r2 for p in theirs.positions):
                return False
    return True


def _diff_ok(before, after, new_label):
    old, new = induce_mwg(before), induce_mwg(after)
    for s in (0, 1):
        if new[s].subgraph(old[s].labels).edges != old[s].edges:
            return False
    return True


# ---------------------------------------------------------------- seeds

def test_seed_one_one_coordinates():
    inst = seed_independent_pair(1, 1)
    assert inst.gamma0.positions == (pt(0, 1),)
    assert inst.gamma1.positions == (pt(-1, -1),)
    g0, g1 = induce_mwg(inst)
    assert not g0.edges and not g1.edges


@pytest.mark.parametrize("k0, k1", [(2, 2), (3, 2), (2, 3), (5, 5), (6, 5)])
def test_seed_edgeless(k0, k1):
    inst = seed_independent_pair(k0, k1)
    assert (len(inst.gamma0), len(inst.gamma1)) == (k0, k1)
    assert _every_disk_blocked(inst)
    assert all(p.y > 0 for p in inst.gamma0.positions) and all(p.y < 0 for p in inst.gamma1.positions)
    assert inst.separator.separates(inst.gamma0.positions, inst.gamma1.positions)


def test_seed_gap_rejected():
    with pytest.raises(ValueError):
        seed_independent_pair(1, 3)


# ---------------------------------------------------------------- isolated vertex

def test_isolated_joins_side_without_rightmost():
    inst = seed_independent_pair(1, 1)
    out, cert = add_isolated_vertex(inst)
    assert cert.kind is PlacementKind.ISOLATED and cert.side == 1
    assert len(out.gamma1) == 2 and cert.check()
    assert _every_disk_blocked(out)
    for _ in range(2):
        prev = out
        rightmost = max(out.gamma0.positions + out.gamma1.positions, key=lambda p: p.x)
        owner = 0 if rightmost in out.gamma0.positions else 1
        out, cert = add_isolated_vertex(out)
        assert cert.side == 1 - owner and _diff_ok(prev, out, cert.new_label)
        assert _every_disk_blocked(out)


@pytest.mark.parametrize("end", ["right", "left"])
def test_isolated_on_k22_ind3(end):
    inst = fixture("K22_IND3")
    out, cert = add_isolated_vertex(inst, end)
    assert cert.side == 1
    g0, g1 = induce_mwg(out)
    assert matches_spec(g0, K(2, 2)) is not None and not g1.edges
    assert _diff_ok(inst, out, cert.new_label)


def test_isolated_requires_normalized_instance():
    d0 = Drawing.from_points([pt(0, -1)], "a")
    d1 = Drawing.from_points([pt(0, 1)], "b")
    with pytest.raises(ModelError):
        add_isolated_vertex(MwgInstance(d0, d1))


# ---------------------------------------------------------------- universal vertex

def test_universal_makes_a_star():
    inst = seed_independent_pair(2, 1)
    out, cert = add_universal_vertex(inst, 0)
    assert cert.kind is PlacementKind.UNIVERSAL and cert.check()
    g0, g1 = induce_mwg(out)
    assert matches_spec(g0, K(1, 2)) is not None
    assert _diff_ok(inst, out, cert.new_label)


def test_universal_on_single_vertex_side():
    out, cert = add_universal_vertex(seed_independent_pair(1, 1), 0)
    g0, _ = induce_mwg(out)
    assert len(g0.edges) == 1


@pytest.mark.parametrize("n", [2, 3, 4, 6])
def test_universal_both_sides_gives_two_stars(n):
    inst = seed_independent_pair(n - 1, n - 1)
    inst, c0 = add_universal_vertex(inst, 0)
    inst, c1 = add_universal_vertex(inst, 1)
    g0, g1 = induce_mwg(inst)
    assert matches_spec(g0, K(1, n - 1)) is not None and matches_spec(g1, K(1, n - 1)) is not None
    assert c0.check() and c1.check()


def test_universal_side_validation():
    with pytest.raises(ValueError):
        add_universal_vertex(seed_independent_pair(1, 1), 2)


@settings(max_examples=25)
@given(st.lists(st.sampled_from(["iso-right", "iso-left", "uni0", "uni1"]), min_size=1, max_size=5))
def test_additions_preserve_prior_adjacency(ops):
    inst = seed_independent_pair(2, 2)
    for op in ops:
        if op.startswith("iso"):
            out, cert = add_isolated_vertex(inst, op.split("-")[1])
            degree0 = True
        else:
            out, cert = add_universal_vertex(inst, int(op[-1]))
            degree0 = False
        assert _diff_ok(inst, out, cert.new_label)
        g = induce_mwg(out)[cert.side]
        deg = sum(1 for e in g.edges if cert.new_label in e)
        assert deg == (0 if degree0 else len(g.labels) - 1)
        inst = out


# ---------------------------------------------------------------- draw_pair

NAMED = [((2, 2), (2, 2)), ((2, 2), (1, 1)), ((2, 2), (1, 2)), ((2, 2), (1, 3)),
         ((2, 2), (1, 4)), ((2, 2), (1, 5)), ((1, 3), (1, 3))]


@pytest.mark.parametrize("s0, s1", NAMED + [(b, a) for a, b in NAMED])
def test_draw_pair_named(s0, s1):
    inst = draw_pair(K(*s0), K(*s1))
    g0, g1 = induce_mwg(inst)
    assert matches_spec(g0, K(*s0)) is not None and matches_spec(g1, K(*s1)) is not None
    assert find_separating_line(inst.gamma0.positions, inst.gamma1.positions) is not None
    assert run_all(inst).failures == []


def test_draw_pair_closure_small():
    specs = [K(a, n - a) for n in range(2, 11) for a in range(1, n // 2 + 1)]
    for s0, s1 in itertools.product(specs, repeat=2):
        if decide_bipartite_pair(s0, s1).drawable:
            g0, g1 = induce_mwg(draw_pair(s0, s1))
            assert matches_spec(g0, s0) is not None and matches_spec(g1, s1) is not None


def test_draw_pair_rejects_undrawable():
    with pytest.raises(NotDrawableError) as err:
        draw_pair(K(1, 2), K(1, 6))
    assert not err.value.verdict.drawable


def test_draw_pair_deterministic_and_exact():
    a = draw_pair(K(1, 7), K(1, 5))
    b = draw_pair(K(1, 7), K(1, 5))
    assert a == b
    for p in a.gamma0.positions + a.gamma1.positions:
        assert p.x.denominator >= 1 and p.y.denominator >= 1


def test_draw_pair_coordinate_growth_recorded():
    # growth is allowed, but it must be deterministic; track the bit length as it grows
    sizes = [max(max(abs(p.x.numerator), abs(p.y.numerator))
                 for p in draw_pair(K(1, n - 1), K(1, n - 1)).gamma0.positions).bit_length()
             for n in (4, 8, 16, 32)]
    assert sizes == sorted(sizes)
