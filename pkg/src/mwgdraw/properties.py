"""Checkers for the structural consequences of MWG-drawings.

By default every checker re-induces both graphs from coordinates; the
statements hold for every such graph, so a FAIL then points at a bug.
Passing claimed graphs instead (a file's intended graphs, say) audits stored
adjacency against the geometry. A checker returns NOT_APPLICABLE, naming
the failed hypothesis, whenever the statement it tests does not apply.

Statements that assume a horizontal separator with the drawing on top are
evaluated in a separator-aligned frame: each point maps to
``(s, h) = (b*x - a*y, value(p))`` for the separating line ``a*x + b*y = c``,
with ``h`` negated when the checked side lies on the negative side. The map
is a similarity, so disks, wedges and strips correspond exactly.
"""
from __future__ import annotations

import enum
import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

from .geometry import (BELOW, DegenerateError, Point, SeparatingLine, StripLabel,
                       WedgeLabel, classify_strip, classify_wedge, convex_hull, find_separating_line,
                       gabriel_contains, in_closed_far_strip, in_closed_hull3, in_open_cone,
                       is_convex_terrain, on_segment, orient,
                       segments_intersect, Segment)
from .model import (InducedGraph, MwgInstance, complete_multipartite_edges, diameter, induce_mwg,
                    multipartite_classes)


class Status(enum.Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    NOT_APPLICABLE = "NOT_APPLICABLE"


@dataclass(frozen=True)
class Violation:
    """A counterexample; ``kind`` selects the predicate that :func:`confirm` re-evaluates."""
    kind: str
    side: int | None
    labels: tuple[str, ...]
    points: tuple[Point, ...]
    detail: str = ""
    aux: tuple = ()

    def as_dict(self) -> dict:
        return {"kind": self.kind, "side": self.side, "labels": list(self.labels),
                "points": [[str(p.x), str(p.y)] for p in self.points], "detail": self.detail}


@dataclass(frozen=True)
class SideResult:
    status: Status
    hypothesis: str = ""
    violations: tuple[Violation, ...] = ()
    note: str = ""


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: Status
    sides: tuple[SideResult, ...]
    hypothesis: str = ""
    note: str = ""

    @property
    def violations(self) -> tuple[Violation, ...]:
        return tuple(v for s in self.sides for v in s.violations)

    def as_dict(self) -> dict:
        return {
            "status": self.status.value,
            "hypothesis": self.hypothesis or None,
            "note": self.note or None,
            "sides": [{"status": s.status.value, "hypothesis": s.hypothesis or None,
                       "note": s.note or None,
                       "violations": [v.as_dict() for v in s.violations]} for s in self.sides],
        }


@dataclass(frozen=True)
class PropertyReport:
    checks: dict[str, CheckResult] = field(default_factory=dict)

    @property
    def failures(self) -> list[str]:
        return [n for n, r in self.checks.items() if r.status is Status.FAIL]

    @property
    def ok(self) -> bool:
        return not self.failures

    def as_dict(self) -> dict:
        return {"ok": self.ok, "checks": {n: r.as_dict() for n, r in self.checks.items()}}


MAX_VIOLATIONS = 8


def _combine(name: str, sides: list[SideResult], note: str = "") -> CheckResult:
    statuses = {s.status for s in sides}
    if Status.FAIL in statuses:
        status = Status.FAIL
    elif Status.PASS in statuses:
        status = Status.PASS
    else:
        status = Status.NOT_APPLICABLE
    hyp = "; ".join(f"gamma{i}: {s.hypothesis}" for i, s in enumerate(sides) if s.hypothesis)
    return CheckResult(name, status, tuple(sides), hyp, note)


def _na(hyp: str, note: str = "") -> SideResult:
    return SideResult(Status.NOT_APPLICABLE, hypothesis=hyp, note=note)


def _verdict(found: list[Violation], note: str = "") -> SideResult:
    if found:
        return SideResult(Status.FAIL, violations=tuple(found[:MAX_VIOLATIONS]),
                          note=f"{len(found)} violation(s)")
    return SideResult(Status.PASS, note=note)


# ---------------------------------------------------------------- shared context

class _Context:
    """Per-instance data shared by all checkers; computed lazily, read-only afterwards."""

    def __init__(self, inst: MwgInstance, graphs=None):
        self.inst = inst
        self.graphs = tuple(graphs) if graphs is not None else induce_mwg(inst)
        self.pos = [dict(inst.gamma0.vertices), dict(inst.gamma1.vertices)]
        self.diam = tuple(diameter(g) for g in self.graphs)
        self.classes = tuple(multipartite_classes(g) for g in self.graphs)
        self.line = self._separator()
        self._frames: dict[int, tuple[dict, list]] = {}

    def _separator(self) -> SeparatingLine | None:
        a, b = self.inst.gamma0.positions, self.inst.gamma1.positions
        sep = self.inst.separator
        if sep is not None and sep.separates(a, b):
            return sep
        return find_separating_line(a, b)

    def witnesses(self, i: int) -> list[Point]:
        return list(self.pos[1 - i].values())

    def witness_items(self, i: int) -> list[tuple[str, Point]]:
        return list(self.pos[1 - i].items())

    def frame(self, i: int) -> tuple[dict[str, Point], list[tuple[str, Point]]]:
        """Side ``i`` and its witnesses in the separator frame (side ``i`` above)."""
        if i not in self._frames:
            ln = self.line
            sgn = ln.side_of_first if i == 0 else -ln.side_of_first

            def f(p: Point) -> Point:
                return Point(ln.b * p.x - ln.a * p.y, sgn * ln.value(p))

            side = {lbl: f(p) for lbl, p in self.pos[i].items()}
            wit = [(lbl, f(p)) for lbl, p in self.pos[1 - i].items()]
            self._frames[i] = (side, wit)
        return self._frames[i]

    def bipartite(self, i: int) -> bool:
        c = self.classes[i]
        return c is not None and len(c) == 2


def _ordered(fr: dict[str, Point], a: str, b: str) -> tuple[str, str]:
    return (a, b) if (fr[a].x, fr[a].y) <= (fr[b].x, fr[b].y) else (b, a)


# ---------------------------------------------------------------- checkers

def _triangle(ctx: _Context) -> CheckResult:
    sides = []
    for i, g in enumerate(ctx.graphs):
        pos, nb = ctx.pos[i], g.neighbors()
        found, any_pair = [], False
        for v in g.labels:
            for a, b in itertools.combinations(sorted(nb[v], key=g.labels.index), 2):
                any_pair = True
                for wl, w in ctx.witness_items(i):
                    if in_closed_hull3(w, pos[v], pos[a], pos[b]):
                        found.append(Violation("point_in_triangle", i, (v, a, b, wl),
                                               (pos[v], pos[a], pos[b], w),
                                               f"witness {wl} in triangle of edges {v}{a}, {v}{b}"))
        sides.append(_verdict(found) if any_pair else _na("adjacent edge pair",
                                                           "no two edges share a vertex"))
    return _combine("triangle_property", sides)


def _common_neighbor_wedge(ctx: _Context) -> CheckResult:
    sides = []
    for i, g in enumerate(ctx.graphs):
        pos, nb = ctx.pos[i], g.neighbors()
        non_edges = g.non_edges()
        if not non_edges:
            sides.append(_na("non-edge", "complete graph"))
            continue
        found = []
        for u, v in non_edges:
            common = [z for z in g.labels if z in nb[u] and z in nb[v]]
            for pl, p in ctx.witness_items(i):
                if not gabriel_contains(p, pos[u], pos[v]):
                    continue
                for z in common:
                    try:
                        inside = in_open_cone(p, pos[u], pos[v], pos[z])
                    except DegenerateError:
                        inside = False
                    if not inside:
                        found.append(Violation("outside_wedge", i, (pl, u, v, z),
                                               (p, pos[u], pos[v], pos[z]),
                                               f"common neighbour {z} outside W({pl},{u},{v})"))
        sides.append(_verdict(found))
    return _combine("common_neighbor_wedge", sides)


def _non_crossing(ctx: _Context) -> CheckResult:
    if any(d > 2 for d in ctx.diam):
        hyp = f"diameter <= 2 (diameters {ctx.diam[0]}, {ctx.diam[1]})"
        return CheckResult("non_crossing", Status.NOT_APPLICABLE, (_na(hyp),), hyp)
    p0, p1 = ctx.pos
    segs0 = list(itertools.combinations(ctx.graphs[0].labels, 2))
    segs1 = list(itertools.combinations(ctx.graphs[1].labels, 2))
    found = []
    for a, b in segs0:
        for c, d in segs1:
            if segments_intersect(Segment(p0[a], p0[b]), Segment(p1[c], p1[d])):
                found.append(Violation("segments_meet", None, (a, b, c, d),
                                       (p0[a], p0[b], p1[c], p1[d]),
                                       f"segment {a}{b} meets segment {c}{d}"))
    return CheckResult("non_crossing", Status.FAIL if found else Status.PASS, (_verdict(found),))


def _linear_separability(ctx: _Context) -> CheckResult:
    info = "separable" if ctx.line is not None else "not separable"
    if any(d != 2 for d in ctx.diam):
        hyp = f"diameter == 2 (diameters {ctx.diam[0]}, {ctx.diam[1]})"
        return CheckResult("linear_separability", Status.NOT_APPLICABLE, (_na(hyp, info),), hyp,
                           note=f"informational: {info}")
    if ctx.line is not None:
        return CheckResult("linear_separability", Status.PASS, (SideResult(Status.PASS, note=info),))
    v = Violation("not_separable", None, ctx.graphs[0].labels + ctx.graphs[1].labels,
                  ctx.inst.gamma0.positions + ctx.inst.gamma1.positions,
                  "no line separates the two drawings", aux=(len(ctx.pos[0]),))
    return CheckResult("linear_separability", Status.FAIL, (_verdict([v]),))


def _side_gate(ctx: _Context, i: int, need: Callable[[int], bool], what: str) -> SideResult | None:
    if not need(i):
        return _na(what)
    if ctx.line is None:
        return _na("linearly separable from witnesses")
    return None


def _alternating(ctx: _Context) -> CheckResult:
    sides = []
    for i, g in enumerate(ctx.graphs):
        gate = _side_gate(ctx, i, ctx.bipartite, "complete bipartite")
        if gate:
            sides.append(gate)
            continue
        pos, found, count = ctx.pos[i], [], 0
        edges = g.edge_list()
        for (u0, u1), (v0, v1) in itertools.combinations(edges, 2):
            if {u0, u1} & {v0, v1}:
                continue
            for a, b in ((v0, v1), (v1, v0)):
                # cross pairs u0-a and u1-b must both be non-edges
                if g.has_edge(u0, a) or g.has_edge(u1, b):
                    continue
                count += 1
                pts = (pos[u0], pos[u1], pos[a], pos[b])
                if segments_intersect(Segment(pos[u0], pos[u1]), Segment(pos[a], pos[b])):
                    found.append(Violation("alternating_edges_meet", i, (u0, u1, a, b), pts,
                                           f"edges {u0}{u1} and {a}{b} meet"))
                if not segments_intersect(Segment(pos[u0], pos[a]), Segment(pos[u1], pos[b])):
                    found.append(Violation("alternating_non_edges_disjoint", i, (u0, a, u1, b),
                                           (pos[u0], pos[a], pos[u1], pos[b]),
                                           f"non-edges {u0}{a} and {u1}{b} do not cross"))
        sides.append(_verdict(found, "" if count else "vacuous: no alternating 4-cycle"))
    return _combine("alternating_4cycles", sides)


def _four_cycles(g: InducedGraph):
    """Each 4-cycle a-b-c-d-a of edges once, as (a, b, c, d) with diagonals ac and bd."""
    nb = g.neighbors()
    idx = {l: k for k, l in enumerate(g.labels)}
    for a, c in itertools.combinations(g.labels, 2):
        common = sorted(nb[a] & nb[c], key=idx.__getitem__)
        for b, d in itertools.combinations(common, 2):
            # each cycle has two diagonals; emit it from the lexicographically first one
            if (idx[a], idx[c]) < tuple(sorted((idx[b], idx[d]))):
                yield a, b, c, d


def _convexity(ctx: _Context) -> CheckResult:
    sides = []
    for i, g in enumerate(ctx.graphs):
        gate = _side_gate(ctx, i, ctx.bipartite, "complete bipartite")
        if gate:
            sides.append(gate)
            continue
        pos, found, count = ctx.pos[i], [], 0
        for a, b, c, d in _four_cycles(g):
            count += 1
            if not segments_intersect(Segment(pos[a], pos[c]), Segment(pos[b], pos[d])):
                found.append(Violation("non_convex_4cycle", i, (a, b, c, d),
                                       (pos[a], pos[b], pos[c], pos[d]),
                                       f"4-cycle {a}{b}{c}{d} is not convex"))
        sides.append(_verdict(found, "" if count else "vacuous: no 4-cycle"))
    return _combine("4cycle_convexity", sides)


def _planarity(ctx: _Context) -> CheckResult:
    if not (ctx.bipartite(0) and ctx.bipartite(1)):
        hyp = "both sides complete bipartite"
        return CheckResult("planarity", Status.NOT_APPLICABLE, (_na(hyp), _na(hyp)), hyp)
    sides = []
    for i, g in enumerate(ctx.graphs):
        pos, found = ctx.pos[i], []
        for (a, b), (c, d) in itertools.combinations(g.edge_list(), 2):
            shared = {a, b} & {c, d}
            if not shared:
                bad = segments_intersect(Segment(pos[a], pos[b]), Segment(pos[c], pos[d]))
            else:
                # edges sharing an endpoint overlap only if one runs along the other
                (s,) = shared
                x = ({a, b} - shared).pop()
                y = ({c, d} - shared).pop()
                bad = on_segment(pos[x], pos[s], pos[y]) or on_segment(pos[y], pos[s], pos[x])
            if bad:
                found.append(Violation("edges_meet", i, (a, b, c, d),
                                       (pos[a], pos[b], pos[c], pos[d]),
                                       f"edges {a}{b} and {c}{d} cross"))
        sides.append(_verdict(found))
    return _combine("planarity", sides)


def _edge_blocking(ctx: _Context) -> CheckResult:
    sides = []
    for i, g in enumerate(ctx.graphs):
        gate = _side_gate(ctx, i, lambda _: True, "")
        if gate:
            sides.append(gate)
            continue
        fr, wit = ctx.frame(i)
        found, skipped, count = [], 0, 0
        for u, v in g.edge_list():
            if fr[u].x == fr[v].x:
                skipped += 1  # empty open strip
                continue
            for z in g.labels:
                if z in (u, v) or not in_closed_far_strip(fr[u], fr[v], BELOW, fr[z]):
                    continue
                count += 1
                for y in (u, v):
                    if g.has_edge(y, z):
                        continue
                    p = next((wl for wl, w in wit if gabriel_contains(w, fr[y], fr[z])), None)
                    if p is None:
                        # only reachable with claimed graphs: the non-edge has no witness
                        found.append(Violation(
                            "far_strip_non_edge", i, (u, v, z, y), (fr[u], fr[v], fr[z], fr[y]),
                            f"{z} in far strip of edge {u}{v} but {y}{z} claimed absent (frame coords)"))
                        continue
                    found.append(Violation(
                        "far_strip_vertex_blocked", i, (u, v, z, y, p),
                        (fr[u], fr[v], fr[z], fr[y], dict(wit)[p]),
                        f"{z} in far strip of edge {u}{v} but {y}{z} blocked by {p} (frame coords)"))
        note = "" if count else "vacuous: no vertex in a far strip"
        if skipped:
            note = f"{note}; " * bool(note) + f"{skipped} edge(s) perpendicular to the separator skipped"
        sides.append(_verdict(found, note))
    return _combine("edge_blocking", sides)


def _induced_c4s(g: InducedGraph):
    for a, b, c, d in _four_cycles(g):
        if not g.has_edge(a, c) and not g.has_edge(b, d):
            yield a, b, c, d


def _vertical_strip(ctx: _Context) -> CheckResult:
    sides = []
    for i, g in enumerate(ctx.graphs):
        gate = _side_gate(ctx, i, lambda _: True, "")
        if gate:
            sides.append(gate)
            continue
        fr, _ = ctx.frame(i)
        found, count = [], 0
        for a, b, c, d in _induced_c4s(g):
            count += 1
            for u0, u1, v0, v1 in ((a, c, b, d), (b, d, a, c)):
                u0, u1 = _ordered(fr, u0, u1)
                pts = (fr[u0], fr[u1], fr[v0], fr[v1])
                labels = (u0, u1, v0, v1)
                o0, o1 = orient(fr[u0], fr[u1], fr[v0]), orient(fr[u0], fr[u1], fr[v1])
                if o0 == 0 or o0 == o1:
                    found.append(Violation("c4_same_side", i, labels, pts,
                                           f"{v0}, {v1} not on opposite sides of line {u0}{u1}"))
                if fr[u0].x == fr[u1].x:
                    found.append(Violation("c4_empty_strip", i, labels, pts,
                                           f"{u0}{u1} is perpendicular to the separator"))
                    continue
                lab = [classify_strip(fr[u0], fr[u1], BELOW, fr[v]) for v in (v0, v1)]
                closed = [fr[u0].x <= fr[v].x <= fr[u1].x for v in (v0, v1)]
                ok = ((lab[0] is StripLabel.NEAR and not closed[1])
                      or (lab[1] is StripLabel.NEAR and not closed[0]))
                if not ok:
                    found.append(Violation("c4_strip_rule", i, labels, pts,
                                           f"neither of {v0}, {v1} is near-strip with the other "
                                           f"outside the strip of {u0}{u1} (frame coords)"))
        sides.append(_verdict(found, "" if count else "vacuous: no induced 4-cycle"))
    return _combine("vertical_strip", sides)


def _no_k23(ctx: _Context) -> CheckResult:
    sides = []
    for i, g in enumerate(ctx.graphs):
        gate = _side_gate(ctx, i, ctx.bipartite, "complete bipartite")
        if gate:
            sides.append(gate)
            continue
        pos, nb, found = ctx.pos[i], g.neighbors(), []
        for a, b in itertools.combinations(g.labels, 2):
            common = sorted(nb[a] & nb[b], key=g.labels.index)
            if len(common) >= 3:
                labels = (a, b, *common[:3])
                found.append(Violation("k23_subgraph", i, labels,
                                       tuple(pos[l] for l in labels) + tuple(ctx.witnesses(i)),
                                       f"{a}, {b} share neighbours {', '.join(common[:3])}"))
        sides.append(_verdict(found))
    return _combine("no_k23", sides)


def _strip_witness(ctx: _Context) -> CheckResult:
    if ctx.line is None:
        return CheckResult("strip_witness", Status.NOT_APPLICABLE,
                           (_na("linearly separable"), _na("linearly separable")),
                           "linearly separable")
    sides = []
    for i, g in enumerate(ctx.graphs):
        fr, wit = ctx.frame(i)
        found, count = [], 0
        for a, b in g.non_edges():
            u0, u1 = _ordered(fr, a, b)
            for pl, p in wit:
                if not gabriel_contains(p, fr[u0], fr[u1]):
                    continue
                count += 1
                near = (fr[u0].x < fr[u1].x
                        and classify_strip(fr[u0], fr[u1], BELOW, p) is StripLabel.NEAR)
                if not near:
                    found.append(Violation("witness_outside_near_strip", i, (u0, u1, pl),
                                           (fr[u0], fr[u1], p),
                                           f"witness {pl} of {u0}{u1} not in its near strip "
                                           f"(frame coords)"))
        sides.append(_verdict(found, "" if count else "vacuous: no non-edge"))
    return _combine("strip_witness", sides)


def _terrain_gate(ctx: _Context, i: int, min_classes: int = 2) -> SideResult | None:
    c = ctx.classes[i]
    if c is None or not all(len(x) == 2 for x in c):
        return _na("complete multipartite with classes of size two")
    if len(c) < min_classes:
        return _na("at least two classes")
    if ctx.line is None:
        return _na("linearly separable from witnesses")
    fr, _ = ctx.frame(i)
    if len({p.x for p in fr.values()}) < len(fr):
        return _na("distinct coordinates along the separator")
    return None


def _x_order(ctx: _Context, i: int) -> list[str]:
    fr, _ = ctx.frame(i)
    return sorted(fr, key=lambda l: fr[l].x)


def _convex_terrain(ctx: _Context) -> CheckResult:
    sides = []
    for i in range(2):
        gate = _terrain_gate(ctx, i)
        if gate:
            sides.append(gate)
            continue
        pos, found = ctx.pos[i], []
        hull = convex_hull(pos.values())
        if not is_convex_terrain(hull, ctx.line):
            found.append(Violation("not_convex_terrain", i, tuple(pos), tuple(hull.vertices),
                                   "hull is not a convex terrain over the separator",
                                   aux=(ctx.line,)))
        order = _x_order(ctx, i)
        fr, _ = ctx.frame(i)
        cls = {l: k for k, comp in enumerate(ctx.classes[i]) for l in comp}
        k = len(order) // 2
        for j in range(k):
            a, b = order[j], order[j + k]
            if cls[a] != cls[b]:
                found.append(Violation("class_pairing", i, tuple(order),
                                       tuple(fr[l] for l in order),
                                       f"positions {j + 1} and {j + k + 1} along the separator "
                                       f"({a}, {b}) are in different classes",
                                       aux=(j, tuple(cls[l] for l in order))))
        sides.append(_verdict(found))
    return _combine("convex_terrain", sides)


def _witness_ordering(ctx: _Context) -> CheckResult:
    sides = []
    for i in range(2):
        gate = _terrain_gate(ctx, i, min_classes=1)
        if gate:
            sides.append(gate)
            continue
        if len(ctx.classes[i]) == 1:
            sides.append(SideResult(Status.PASS, note="vacuous: one class"))
            continue
        fr, wit = ctx.frame(i)
        order = _x_order(ctx, i)
        k = len(order) // 2
        found = []
        hull = convex_hull(fr.values())
        labels = list(fr)
        for comp in ctx.classes[i]:
            on = [l for l in comp if hull.on_boundary(fr[l])]
            if len(on) < 2:
                found.append(Violation("class_off_hull", i, tuple(labels),
                                       tuple(fr[l] for l in labels),
                                       "class has fewer than two vertices on the hull boundary",
                                       aux=tuple(labels.index(l) for l in comp)))
        per_class = []
        for j in range(k):
            a, b = order[j], order[j + k]
            per_class.append([(pl, p) for pl, p in wit if gabriel_contains(p, fr[a], fr[b])])
            if not per_class[-1]:
                found.append(Violation("class_without_witness", i, (a, b),
                                       (fr[a], fr[b], *(p for _, p in wit)),
                                       "non-adjacent class pair has no witness"))
        owner: dict[str, int] = {}
        for j, ws in enumerate(per_class):
            for pl, p in ws:
                if pl in owner:
                    o = owner[pl]
                    found.append(Violation("shared_witness", i,
                                           (pl, order[o], order[o + k], order[j], order[j + k]),
                                           (p, fr[order[o]], fr[order[o + k]], fr[order[j]],
                                            fr[order[j + k]]),
                                           f"{pl} witnesses two classes"))
                owner.setdefault(pl, j)
        for j in range(k):
            a, b = order[j], order[j + k]
            for pj_l, pj in per_class[j]:
                for m in range(k):
                    if m == j:
                        continue
                    want = WedgeLabel.LEFT if m < j else WedgeLabel.RIGHT
                    for pm_l, pm in per_class[m]:
                        if pm_l == pj_l:
                            continue  # reported as shared_witness
                        try:
                            got = classify_wedge(pj, fr[a], fr[b], pm)
                        except DegenerateError as exc:
                            got = None
                            detail = f"degenerate wedge at {pj_l}: {exc}"
                        else:
                            detail = (f"witness {pm_l} of class {m + 1} is in the {got.value} "
                                      f"wedge of ({pj_l},{a},{b}), expected {want.value}")
                        if got is not want:
                            found.append(Violation("witness_wedge_order", i,
                                                   (pj_l, a, b, pm_l, want.value),
                                                   (pj, fr[a], fr[b], pm), detail))
        sides.append(_verdict(found))
    return _combine("witness_ordering", sides)


CHECKS: dict[str, Callable[[_Context], CheckResult]] = {
    "triangle_property": _triangle,
    "common_neighbor_wedge": _common_neighbor_wedge,
    "non_crossing": _non_crossing,
    "linear_separability": _linear_separability,
    "alternating_4cycles": _alternating,
    "4cycle_convexity": _convexity,
    "planarity": _planarity,
    "edge_blocking": _edge_blocking,
    "vertical_strip": _vertical_strip,
    "no_k23": _no_k23,
    "strip_witness": _strip_witness,
    "convex_terrain": _convex_terrain,
    "witness_ordering": _witness_ordering,
}


def intended_graphs(inst: MwgInstance) -> tuple[InducedGraph, InducedGraph]:
    """The graphs a drawing claims to realize; sides without intent fall back to re-induction."""
    induced = induce_mwg(inst)
    out = []
    for d, g in zip((inst.gamma0, inst.gamma1), induced):
        if d.intended_edges is not None:
            out.append(InducedGraph(d.labels, d.intended_edges))
        elif d.intended_partition is not None:
            out.append(InducedGraph(d.labels, complete_multipartite_edges(d.intended_partition)))
        else:
            out.append(g)
    return out[0], out[1]


def _public(name: str):
    def run(inst: MwgInstance, graphs=None) -> CheckResult:
        return CHECKS[name](_Context(inst, graphs))
    run.__name__ = f"check_{name}"
    run.__doc__ = f"Run the ``{name}`` checker on its own."
    return run


check_triangle_property = _public("triangle_property")
check_common_neighbor_wedge = _public("common_neighbor_wedge")
check_non_crossing = _public("non_crossing")
check_linear_separability = _public("linear_separability")
check_alternating_4cycles = _public("alternating_4cycles")
check_4cycle_convexity = _public("4cycle_convexity")
check_planarity = _public("planarity")
check_edge_blocking = _public("edge_blocking")
check_vertical_strip = _public("vertical_strip")
check_no_k23 = _public("no_k23")
check_strip_witness = _public("strip_witness")
check_convex_terrain = _public("convex_terrain")
check_witness_ordering = _public("witness_ordering")


def run_all(inst: MwgInstance, workers: int = 1, graphs=None) -> PropertyReport:
    """Run every checker; with ``workers > 1`` they run on a thread pool.

    ``graphs`` replaces the re-induced pair, e.g. with :func:`intended_graphs`
    to audit what a file claims rather than what its coordinates induce.
    """
    ctx = _Context(inst, graphs)
    for i in range(2):
        if ctx.line is not None:
            ctx.frame(i)  # warm the cache so threads only read
    names = list(CHECKS)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda n: CHECKS[n](ctx), names))
    else:
        results = [CHECKS[n](ctx) for n in names]
    return PropertyReport(dict(zip(names, results)))


# ---------------------------------------------------------------- soundness

def confirm(v: Violation) -> bool:
    """Re-evaluate a violation with geometry predicates only (no induced graphs).

    Returns True when the recorded points really exhibit the claimed defect.
    """
    P, k = v.points, v.kind
    if k == "point_in_triangle":
        return in_closed_hull3(P[3], P[0], P[1], P[2])
    if k == "outside_wedge":
        if not gabriel_contains(P[0], P[1], P[2]):
            return False
        try:
            return not in_open_cone(P[0], P[1], P[2], P[3])
        except DegenerateError:
            return True
    if k in ("segments_meet", "alternating_edges_meet"):
        return segments_intersect(Segment(P[0], P[1]), Segment(P[2], P[3]))
    if k == "edges_meet":
        pts = dict(zip(v.labels, P))
        shared = set(v.labels[:2]) & set(v.labels[2:])
        if not shared:
            return segments_intersect(Segment(P[0], P[1]), Segment(P[2], P[3]))
        (s,) = shared
        x = (set(v.labels[:2]) - shared).pop()
        y = (set(v.labels[2:]) - shared).pop()
        return on_segment(pts[x], pts[s], pts[y]) or on_segment(pts[y], pts[s], pts[x])
    if k == "not_separable":
        n0 = v.aux[0]
        return find_separating_line(P[:n0], P[n0:]) is None
    if k == "alternating_non_edges_disjoint":
        return not segments_intersect(Segment(P[0], P[1]), Segment(P[2], P[3]))
    if k == "non_convex_4cycle":
        return not segments_intersect(Segment(P[0], P[2]), Segment(P[1], P[3]))
    if k == "far_strip_vertex_blocked":
        u, w, z, y, p = P
        return in_closed_far_strip(u, w, BELOW, z) and gabriel_contains(p, y, z)
    if k == "far_strip_non_edge":
        return in_closed_far_strip(P[0], P[1], BELOW, P[2])
    if k == "c4_same_side":
        o0, o1 = orient(P[0], P[1], P[2]), orient(P[0], P[1], P[3])
        return o0 == 0 or o0 == o1
    if k == "c4_empty_strip":
        return P[0].x == P[1].x
    if k == "c4_strip_rule":
        u0, u1, v0, v1 = P
        lab = [classify_strip(u0, u1, BELOW, q) for q in (v0, v1)]
        closed = [u0.x <= q.x <= u1.x for q in (v0, v1)]
        return not ((lab[0] is StripLabel.NEAR and not closed[1])
                    or (lab[1] is StripLabel.NEAR and not closed[0]))
    if k == "k23_subgraph":
        core, wit = P[:5], P[5:]
        return all(not any(gabriel_contains(w, x, y) for w in wit)
                   for x in core[:2] for y in core[2:])
    if k == "witness_outside_near_strip":
        u0, u1, p = P
        if not gabriel_contains(p, u0, u1):
            return False
        return u0.x >= u1.x or classify_strip(u0, u1, BELOW, p) is not StripLabel.NEAR
    if k == "not_convex_terrain":
        return not is_convex_terrain(convex_hull(P), v.aux[0])
    if k == "class_pairing":
        j, cls = v.aux
        half = len(P) // 2
        in_order = all(P[m].x < P[m + 1].x for m in range(len(P) - 1))
        return in_order and cls[j] != cls[j + half]
    if k == "class_off_hull":
        hull = convex_hull(P)
        return sum(hull.on_boundary(P[m]) for m in v.aux) < 2
    if k == "class_without_witness":
        return not any(gabriel_contains(w, P[0], P[1]) for w in P[2:])
    if k == "shared_witness":
        return gabriel_contains(P[0], P[1], P[2]) and gabriel_contains(P[0], P[3], P[4])
    if k == "witness_wedge_order":
        want = WedgeLabel(v.labels[4])
        try:
            return classify_wedge(P[0], P[1], P[2], P[3]) is not want
        except DegenerateError:
            return True
    raise ValueError(f"unknown violation kind {k!r}")


__all__ = [
    "Status", "Violation", "SideResult", "CheckResult", "PropertyReport", "CHECKS", "run_all",
    "intended_graphs",
    "confirm", "check_triangle_property", "check_common_neighbor_wedge", "check_non_crossing",
    "check_linear_separability", "check_alternating_4cycles", "check_4cycle_convexity",
    "check_planarity", "check_edge_blocking", "check_vertical_strip", "check_no_k23",
    "check_strip_witness", "check_convex_terrain", "check_witness_ordering",
]
