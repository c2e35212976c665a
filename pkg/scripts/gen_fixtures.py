"""Mint the checked-in coordinate fixtures with the search oracle.

Run once; the printed table is the ``_DATA`` mapping in src/mwgdraw/fixtures.py.
Every fixture is re-verified exactly by the test suite, so rerunning this
script is only needed to change them.
"""
import itertools
import sys

from mwgdraw.geometry import find_separating_line
from mwgdraw.model import GraphSpec, induce_mwg, diameter, matches_spec, MwgInstance
from mwgdraw.search import SearchConfig, search, search_graphs


def _lowest(d, k):
    order = sorted(d.vertices, key=lambda lp: (lp[1].y, lp[1].x))
    return [lbl for lbl, _ in order[:k]]


def _drop(inst, labels):
    from mwgdraw.model import Drawing
    g1 = Drawing(tuple(v for v in inst.gamma1.vertices if v[0] not in labels))
    return MwgInstance(inst.gamma0, g1)


def k22_k22_ok(inst):
    ys = [p.y for p in inst.gamma1.positions]
    if len(set(ys)) != len(ys):
        return False
    low = _lowest(inst.gamma1, 2)
    part = inst.gamma1.intended_partition
    if part[low[0]] == part[low[1]]:
        return False
    k22 = GraphSpec.of(2, 2)
    for k in (1, 2):
        g0, _ = induce_mwg(_drop(inst, low[:k]))
        if matches_spec(g0, k22) is None:
            return False
    from mwgdraw.properties import run_all, Status
    rep = run_all(inst)
    return all(r.status is Status.PASS for name, r in rep.checks.items()
               if name in ("convex_terrain", "witness_ordering"))


def k22_ind3_ok(inst):
    pts = [(p.x, 0) for p in inst.gamma0.positions] + [(p.x, 1) for p in inst.gamma1.positions]
    xs = sorted(pts)
    # strict extremes, both on the C4 side
    return xs[0][1] == 0 and xs[-1][1] == 0 and xs[0][0] < xs[1][0] and xs[-2][0] < xs[-1][0]


def nonsep(inst):
    return find_separating_line(inst.gamma0.positions, inst.gamma1.positions) is None


def show(name, inst):
    print(f"    {name!r}: {{")
    for s, d in enumerate((inst.gamma0, inst.gamma1)):
        pts = ", ".join(f"({lbl!r}, {str(p.x)!r}, {str(p.y)!r})" for lbl, p in d.vertices)
        print(f"        'gamma{s}': [{pts}],")
        if d.intended_partition is not None:
            print(f"        'partition{s}': {[d.intended_partition[l] for l in d.labels]},")
        if d.intended_edges is not None:
            es = sorted(tuple(sorted(e)) for e in d.intended_edges)
            print(f"        'edges{s}': {es},")
    print("    },")


def main():
    k22 = GraphSpec.of(2, 2)
    out = {}
    cfg = SearchConfig(budget=2_000_000, seed=11, coordinate_bound=8, separated=True)
    r = search(k22, k22, cfg, accept=k22_k22_ok)
    assert r.instance is not None, r.stats.as_dict()
    out["K22_K22"] = r.instance
    r = search(k22, GraphSpec.of(3), cfg, accept=k22_ind3_ok)
    assert r.instance is not None, r.stats.as_dict()
    out["K22_IND3"] = r.instance

    path4 = [(0, 1), (1, 2), (2, 3)]
    path3 = [(0, 1), (1, 2)]
    cfg = SearchConfig(budget=2_000_000, seed=5, coordinate_bound=8)
    r = search_graphs(path4, path3, 4, 3, cfg, accept=nonsep)
    assert r.instance is not None, r.stats.as_dict()
    out["NONSEP_DIAM3"] = r.instance

    c5 = [(i, (i + 1) % 5) for i in range(5)]
    for m in (2, 3):
        r = search_graphs(c5, list(itertools.combinations(range(m), 2)), 5, m, cfg, accept=nonsep)
        if r.instance is not None:
            break
    assert r.instance is not None, r.stats.as_dict()
    out["NONSEP_DIAM1"] = r.instance

    print("FIXTURES = {")
    for k, v in out.items():
        show(k, v)
    print("}")
    for k, v in out.items():
        g0, g1 = induce_mwg(v)
        print(k, diameter(g0), diameter(g1), file=sys.stderr)


if __name__ == "__main__":
    main()
