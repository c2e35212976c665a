"""Explicit rational MWG-drawings for every drawable complete bipartite pair.

Every instance built here is normalized: the separating line is ``y = 0`` with
``gamma0`` strictly above it and ``gamma1`` strictly below.

The public vertex-addition operations copy their input. ``draw_pair`` instead
drives a mutable :class:`_Builder`, which keeps per-side extremes and the list
of known edges so that a whole star/star construction costs linear time.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .characterize import ShapeKind, Verdict, classify_bipartite, decide_pair
from .geometry import HORIZONTAL, Point
from .model import (Drawing, GraphSpec, InducedGraph, ModelError, MwgInstance, induce_mwg,
                    matches_spec)


class ConstructionError(RuntimeError):
    """A placement failed its own re-induction check."""


class NotDrawableError(ValueError):
    def __init__(self, verdict: Verdict, spec0: GraphSpec, spec1: GraphSpec):
        super().__init__(f"<{spec0}, {spec1}> is not drawable: {verdict.reason.value} ({verdict.detail})")
        self.verdict = verdict


class PlacementKind(enum.Enum):
    UNIVERSAL = "UNIVERSAL"
    ISOLATED = "ISOLATED"


@dataclass(frozen=True)
class PlacementCertificate:
    kind: PlacementKind
    new_label: str
    side: int
    position: Point
    # UNIVERSAL: line_x, p_prime, p_second (None when no edge disk meets the line), p_max
    # ISOLATED: extreme (u), p_max on the separating line, threshold at the new height
    auxiliary: dict = field(default_factory=dict)

    def check(self) -> bool:
        """Re-test the strict threshold inequalities the placement relied on."""
        sigma = 1 if self.side == 0 else -1
        if self.kind is PlacementKind.UNIVERSAL:
            if self.position.x != self.auxiliary["line_x"]:
                return False
            return sigma * self.position.y > sigma * self.auxiliary["p_max"].y
        tau = self.auxiliary["tau"]
        return tau * self.position.x > tau * self.auxiliary["threshold_x"] and sigma * self.position.y > 0


def _floor_plus_one(v: Fraction) -> int:
    return math.floor(v) + 1


class _Side:
    __slots__ = ("labels", "points", "cls", "edges", "min_i", "max_i", "flat_y")

    def __init__(self):
        self.labels: list[str] = []
        self.points: list[Point] = []
        self.cls: list[int] = []
        self.edges: list[tuple[int, int]] = []
        self.min_i = self.max_i = -1
        self.flat_y: Fraction | None = None

    def append(self, label: str, p: Point, cls: int) -> int:
        i = len(self.points)
        self.labels.append(label)
        self.points.append(p)
        self.cls.append(cls)
        if i == 0:
            self.min_i = self.max_i = 0
            self.flat_y = p.y
        else:
            if p.x < self.points[self.min_i].x:
                self.min_i = i
            if p.x > self.points[self.max_i].x:
                self.max_i = i
            if self.flat_y is not None and p.y != self.flat_y:
                self.flat_y = None
        return i

    def max_x(self) -> Fraction:
        return self.points[self.max_i].x

    def min_x(self) -> Fraction:
        return self.points[self.min_i].x


class _Builder:
    def __init__(self):
        self.sides = (_Side(), _Side())
        self._taken: set[str] = set()
        self._counter = [0, 0]

    @classmethod
    def from_instance(cls, inst: MwgInstance) -> "_Builder":
        _require_normalized(inst)
        b = cls()
        graphs = induce_mwg(inst)
        for s, (d, g) in enumerate(zip((inst.gamma0, inst.gamma1), graphs)):
            part = d.intended_partition or {}
            index = {}
            for lbl, p in d.vertices:
                index[lbl] = b.sides[s].append(lbl, p, part.get(lbl, -1))
                b._taken.add(lbl)
            for e in g.edges:
                i, j = sorted(index[l] for l in e)
                b.sides[s].edges.append((i, j))
        return b

    def fresh_label(self, s: int) -> str:
        prefix = "ab"[s]
        while True:
            lbl = f"{prefix}{self._counter[s]}"
            self._counter[s] += 1
            if lbl not in self._taken:
                self._taken.add(lbl)
                return lbl

    def add(self, s: int, p: Point, cls: int = -1) -> str:
        lbl = self.fresh_label(s)
        self.sides[s].append(lbl, p, cls)
        return lbl

    def swap(self) -> None:
        """Exchange the roles of the sides by reflecting in the separating line."""
        for side in self.sides:
            side.points = [Point(p.x, -p.y) for p in side.points]
            if side.flat_y is not None:
                side.flat_y = -side.flat_y
        self.sides = (self.sides[1], self.sides[0])
        self._counter.reverse()

    # -- isolated vertex ---------------------------------------------------

    def isolated(self, end: str = "right", cls: int = -1) -> PlacementCertificate:
        if end not in ("right", "left"):
            raise ValueError("end must be 'right' or 'left'")
        tau = 1 if end == "right" else -1
        ext = []
        for s, side in enumerate(self.sides):
            if side.points:
                i = side.max_i if tau == 1 else side.min_i
                ext.append((tau * side.points[i].x, s, i))
        if len(ext) < 2:
            raise ModelError("isolated-vertex addition needs both drawings non-empty")
        if ext[0][0] == ext[1][0]:
            raise ModelError(f"the {end}most x-coordinate is shared by both drawings")
        _, us, ui = max(ext)
        t = 1 - us
        sigma = 1 if t == 0 else -1
        u = self.sides[us].points[ui]
        uxn, uyn = tau * u.x, sigma * u.y  # normalized: target above, extreme to the right
        target = self.sides[t]
        if target.flat_y is not None:
            # all target heights equal: the ratio below peaks at the largest normalized x
            vi = target.max_i if tau == 1 else target.min_i
            v = target.points[vi]
            best = (sigma * v.y - uyn) / (uxn - tau * v.x)
        else:
            best = max((sigma * v.y - uyn) / (uxn - tau * v.x) for v in target.points)
        p_max_x = uxn + best * (0 - uyn)
        thr = uxn + best * (1 - uyn)
        new = Point(tau * _floor_plus_one(thr), sigma)
        lbl = self.add(t, new, cls)
        return PlacementCertificate(PlacementKind.ISOLATED, lbl, t, new, {
            "tau": tau, "extreme": u, "p_max": Point(tau * p_max_x, 0),
            "ell_max": (u, Point(tau * p_max_x, 0)), "threshold_x": tau * thr,
        })

    # -- universal vertex --------------------------------------------------

    def universal(self, t: int, cls: int = -1) -> PlacementCertificate:
        target, opp = self.sides[t], self.sides[1 - t]
        sigma = 1 if t == 0 else -1
        xs = [s.max_x() for s in self.sides if s.points]
        line_x = Fraction(max(xs) + 1) if xs else Fraction(0)
        p_prime = None
        for v in target.points:
            vy = sigma * v.y
            h = vy + (line_x - v.x) ** 2 / vy
            if p_prime is None or h > p_prime:
                p_prime = h
        p_second = None
        for i, j in opp.edges:
            a, b = opp.points[i], opp.points[j]
            cx, cy = (a.x + b.x) / 2, sigma * (a.y + b.y) / 2
            dx, dy = a.x - b.x, a.y - b.y
            if 4 * (line_x - cx) ** 2 > dx * dx + dy * dy:
                continue
            # rational bound on the disk's top: radius <= (|dx| + |dy|) / 2
            top = cy + (abs(dx) + abs(dy)) / 2
            if p_second is None or top > p_second:
                p_second = top
        tops = [h for h in (p_prime, p_second) if h is not None]
        p_max = max(tops) if tops else Fraction(0)
        new = Point(line_x, sigma * (p_max + 1))
        n_before = len(target.points)
        lbl = self.add(t, new, cls)
        k = len(target.points) - 1
        target.edges.extend((i, k) for i in range(n_before))
        aux = {"line_x": line_x, "p_max": Point(line_x, sigma * p_max),
               "p_prime": None if p_prime is None else Point(line_x, sigma * p_prime),
               "p_second": None if p_second is None else Point(line_x, sigma * p_second)}
        return PlacementCertificate(PlacementKind.UNIVERSAL, lbl, t, new, aux)

    # -- output --------------------------------------------------------------

    def freeze(self, specs=(None, None), metadata=None, canonical: bool = False) -> MwgInstance:
        """Snapshot as an instance; ``canonical`` renames side ``s`` to ``a0, a1, ...``/``b0, ...``."""
        drawings = []
        for s, (side, spec) in enumerate(zip(self.sides, specs)):
            labels = [f"{'ab'[s]}{i}" for i in range(len(side.labels))] if canonical else side.labels
            part = None
            if spec is not None and all(c >= 0 for c in side.cls):
                part = dict(zip(labels, side.cls))
            drawings.append(Drawing(tuple(zip(labels, side.points)), intended_spec=spec,
                                    intended_partition=part))
        return MwgInstance(drawings[0], drawings[1], HORIZONTAL, dict(metadata or {}))

    def known_graph(self, s: int) -> InducedGraph:
        side = self.sides[s]
        return InducedGraph(tuple(side.labels), frozenset(
            frozenset((side.labels[i], side.labels[j])) for i, j in side.edges))


def _require_normalized(inst: MwgInstance) -> None:
    if not all(p.y > 0 for p in inst.gamma0.positions) or not all(p.y < 0 for p in inst.gamma1.positions):
        raise ModelError("instance must be separated by y = 0 with gamma0 above")


def _check_growth(before: MwgInstance, after: MwgInstance, cert: PlacementCertificate) -> None:
    old = induce_mwg(before)
    new = induce_mwg(after)
    for s in (0, 1):
        kept = new[s].subgraph(old[s].labels)
        if kept.edges != old[s].edges:
            raise ConstructionError(f"placing {cert.new_label} changed adjacencies of gamma{s}")
    g = new[cert.side]
    degree = sum(1 for e in g.edges if cert.new_label in e)
    want = len(g.labels) - 1 if cert.kind is PlacementKind.UNIVERSAL else 0
    if degree != want:
        raise ConstructionError(f"{cert.kind.value} vertex {cert.new_label} has degree {degree}, expected {want}")
    if not cert.check():
        raise ConstructionError(f"certificate for {cert.new_label} does not hold")


def add_isolated_vertex(inst: MwgInstance, end: str = "right",
                        verify: bool = True) -> tuple[MwgInstance, PlacementCertificate]:
    """Add a vertex with no edges beyond the ``end``-most vertex of the instance.

    It joins the drawing that does not own that extreme vertex.
    """
    b = _Builder.from_instance(inst)
    cert = b.isolated(end)
    out = b.freeze(metadata=inst.metadata)
    if verify:
        _check_growth(inst, out, cert)
    return out, cert


def add_universal_vertex(inst: MwgInstance, side: int,
                         verify: bool = True) -> tuple[MwgInstance, PlacementCertificate]:
    """Add a vertex of ``side`` adjacent to every vertex already on that side."""
    if side not in (0, 1):
        raise ValueError("side must be 0 or 1")
    b = _Builder.from_instance(inst)
    cert = b.universal(side)
    out = b.freeze(metadata=inst.metadata)
    if verify:
        _check_growth(inst, out, cert)
    return out, cert


def _seed_builder(k0: int, k1: int, cls0: int = -1, cls1: int = -1) -> _Builder:
    if k0 < 1 or k1 < 1:
        raise ValueError("both independent sets need at least one vertex")
    if abs(k0 - k1) > 1:
        raise ValueError(f"independent set sizes {k0} and {k1} differ by more than one")
    # additions alternate gamma1, gamma0, ... so the larger set must be gamma1
    flip = k0 > k1
    if flip:
        k0, k1, cls0, cls1 = k1, k0, cls1, cls0
    b = _Builder()
    b.add(0, Point(0, 1), cls0)
    b.add(1, Point(-1, -1), cls1)
    while len(b.sides[0].points) < k0 or len(b.sides[1].points) < k1:
        t = 1 - _rightmost_side(b)
        b.isolated("right", cls1 if t == 1 else cls0)
    if flip:
        b.swap()
    return b


def _rightmost_side(b: _Builder) -> int:
    return 0 if b.sides[0].max_x() > b.sides[1].max_x() else 1


def seed_independent_pair(k0: int, k1: int, verify: bool = True) -> MwgInstance:
    """Two edgeless drawings of sizes ``k0`` (above y=0) and ``k1`` (below)."""
    inst = _seed_builder(k0, k1).freeze(specs=(GraphSpec.of(k0), GraphSpec.of(k1)))
    if verify:
        g0, g1 = induce_mwg(inst)
        if g0.edges or g1.edges:
            raise ConstructionError("seed drawings are not edgeless")
    return inst


# ------------------------------------------------------------------ draw_pair

def _stars(n0: int, n1: int) -> _Builder:
    """Star with n0 vertices above, star with n1 below; class 0 = leaves, 1 = centre."""
    if n1 > n0:
        b = _stars(n1, n0)
        b.swap()
        return b
    if n0 - n1 <= 1:
        b = _seed_builder(n0 - 1, n1 - 1, 0, 0)
        b.universal(0, 1)
        b.universal(1, 1)
        return b
    # gap of two: universal below (rightmost overall), isolated above, universal above
    b = _seed_builder(n0 - 2, n1 - 1, 0, 0)
    b.universal(1, 1)
    if _rightmost_side(b) != 1:
        raise ConstructionError("universal vertex did not become the rightmost vertex")
    b.isolated("right", 0)
    b.universal(0, 1)
    return b


def _drop_lowest(b: _Builder, count: int) -> _Builder:
    side = b.sides[1]
    order = sorted(range(len(side.points)), key=lambda i: (side.points[i].y, side.points[i].x))
    drop = set(order[:count])
    out = _Builder()
    for s, src in enumerate(b.sides):
        keep = [i for i in range(len(src.points)) if s == 0 or i not in drop]
        remap = {i: k for k, i in enumerate(keep)}
        for i in keep:
            out.sides[s].append(src.labels[i], src.points[i], src.cls[i])
            out._taken.add(src.labels[i])
        out.sides[s].edges = [(remap[i], remap[j]) for i, j in src.edges if i in remap and j in remap]
    return out


def _relabel_star_classes(b: _Builder, s: int) -> None:
    """Classes for a star side from its known edges: the centre is the max-degree vertex."""
    side = b.sides[s]
    n = len(side.points)
    deg = [0] * n
    for i, j in side.edges:
        deg[i] += 1
        deg[j] += 1
    if n == 2:
        side.cls = [0, 1]
        return
    centre = max(range(n), key=deg.__getitem__)
    side.cls = [1 if i == centre else 0 for i in range(n)]


def _k22_with_star(n1: int) -> _Builder:
    from .fixtures import fixture  # fixtures import construct helpers lazily

    if n1 in (2, 3):
        b = _Builder.from_instance(fixture("K22_K22"))
        b = _drop_lowest(b, 4 - n1)
        _relabel_star_classes(b, 1)
        return b
    b = _Builder.from_instance(fixture("K22_IND3"))
    if n1 >= 5:
        b.isolated("right", 0)
    if n1 == 6:
        b.isolated("left", 0)
    b.sides[1].cls = [0] * len(b.sides[1].points)
    b.universal(1, 1)
    return b


def draw_pair(spec0: GraphSpec, spec1: GraphSpec, verify: bool = True) -> MwgInstance:
    """An MWG-drawing realizing ``<spec0, spec1>``; raises NotDrawableError otherwise.

    With ``verify`` the result is re-induced and matched against both specs;
    construction alone is linear in the number of vertices.
    """
    verdict = decide_pair(spec0, spec1)
    if not verdict.drawable:
        raise NotDrawableError(verdict, spec0, spec1)
    sh0, sh1 = classify_bipartite(spec0), classify_bipartite(spec1)
    kinds = (sh0.kind, sh1.kind)
    if kinds == (ShapeKind.STAR, ShapeKind.STAR):
        b = _stars(spec0.n, spec1.n)
        route = "stars"
    elif kinds == (ShapeKind.K22, ShapeKind.K22):
        from .fixtures import fixture
        b = _Builder.from_instance(fixture("K22_K22"))
        route = "fixture K22_K22"
    elif kinds[0] is ShapeKind.K22:
        b = _k22_with_star(spec1.n)
        route = "K22 with star"
    else:
        b = _k22_with_star(spec0.n)
        b.swap()
        route = "star with K22"
    if any(c < 0 for side in b.sides for c in side.cls):
        raise ConstructionError("construction left a vertex without a partition class")
    inst = b.freeze(specs=(spec0, spec1), metadata={"construction": route,
                                                    "pair": f"{spec0};{spec1}"},
                   canonical=True)
    if verify:
        verify_instance(inst, spec0, spec1)
    return inst


def verify_instance(inst: MwgInstance, spec0: GraphSpec, spec1: GraphSpec) -> tuple[dict, dict]:
    g0, g1 = induce_mwg(inst)
    m0 = matches_spec(g0, spec0) if len(g0.labels) == spec0.n else None
    m1 = matches_spec(g1, spec1) if len(g1.labels) == spec1.n else None
    if m0 is None or m1 is None:
        bad = 0 if m0 is None else 1
        raise ConstructionError(f"gamma{bad} does not realize {(spec0, spec1)[bad]}")
    return m0, m1


__all__ = [
    "ConstructionError", "NotDrawableError", "PlacementKind", "PlacementCertificate",
    "seed_independent_pair", "add_isolated_vertex", "add_universal_vertex", "draw_pair",
    "verify_instance",
]
