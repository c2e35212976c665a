"""Exact planar predicates over rational coordinates.

Every predicate here is decided with :class:`fractions.Fraction` arithmetic;
there are no tolerances anywhere in this module.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence


class GeometryError(ValueError):
    """Raised when a predicate's precondition does not hold."""


class DegenerateError(GeometryError):
    pass


def as_rational(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a coordinate")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        # decimal intent: 0.1 -> 1/10, not the binary expansion
        return Fraction(repr(value))
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot use {type(value).__name__} as a coordinate")


@dataclass(frozen=True, order=True)
class Point:
    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", as_rational(self.x))
        object.__setattr__(self, "y", as_rational(self.y))

    def __sub__(self, other: "Point") -> "Point":
        return Point(self.x - other.x, self.y - other.y)

    def __add__(self, other: "Point") -> "Point":
        return Point(self.x + other.x, self.y + other.y)

    def dot(self, other: "Point") -> Fraction:
        return self.x * other.x + self.y * other.y

    def cross(self, other: "Point") -> Fraction:
        return self.x * other.y - self.y * other.x

    def __repr__(self):
        return f"Point({self.x}, {self.y})"


def pt(x, y) -> Point:
    return Point(as_rational(x), as_rational(y))


@dataclass(frozen=True)
class Segment:
    a: Point
    b: Point

    def __post_init__(self):
        if self.a == self.b:
            raise DegenerateError(f"segment endpoints coincide at {self.a}")


def orient(a: Point, b: Point, c: Point) -> int:
    """Sign of the turn a -> b -> c: +1 left (ccw), -1 right, 0 collinear."""
    d = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
    return (d > 0) - (d < 0)


def _sign(v) -> int:
    return (v > 0) - (v < 0)


# ---------------------------------------------------------------- disks

def gabriel_contains(p: Point, u: Point, v: Point) -> bool:
    """True iff ``p`` lies in the closed disk with ``u`` and ``v`` antipodal."""
    if u == v:
        raise DegenerateError("Gabriel disk of a point with itself")
    return (u.x - p.x) * (v.x - p.x) + (u.y - p.y) * (v.y - p.y) <= 0


# ---------------------------------------------------------------- wedges

class WedgeLabel(enum.Enum):
    TOP = "TOP"
    BOTTOM = "BOTTOM"
    LEFT = "LEFT"
    RIGHT = "RIGHT"
    BOUNDARY = "BOUNDARY"


def _wedge_directions(b: Point, a: Point, c: Point) -> tuple[Point, Point]:
    da, dc = a - b, c - b
    if da.x == 0 and da.y == 0 or dc.x == 0 and dc.y == 0:
        raise DegenerateError("wedge defining point coincides with apex")
    if da.x == 0 or da.y == 0 or dc.x == 0 or dc.y == 0:
        raise DegenerateError("wedge defining line is axis-parallel")
    if da.cross(dc) == 0:
        raise DegenerateError("wedge defining lines coincide")
    # With equal slope signs two wedges each contain two axis directions and
    # the other two contain none, so TOP/BOTTOM/LEFT/RIGHT is not a partition.
    if _sign(da.x * da.y) == _sign(dc.x * dc.y):
        raise DegenerateError("wedge defining lines have slopes of equal sign")
    return da, dc


def _in_open_cone(d1: Point, d2: Point, q: Point) -> bool:
    # open cone spanned by d1, d2 (angle strictly between 0 and pi)
    s = _sign(d1.cross(d2))
    return _sign(d1.cross(q)) == s and _sign(q.cross(d2)) == s


def _cone_label(d1: Point, d2: Point) -> WedgeLabel:
    # each wedge of two opposite-slope lines contains exactly one axis direction
    for axis, label in ((Point(0, 1), WedgeLabel.TOP), (Point(0, -1), WedgeLabel.BOTTOM),
                        (Point(-1, 0), WedgeLabel.LEFT), (Point(1, 0), WedgeLabel.RIGHT)):
        if _in_open_cone(d1, d2, axis):
            return label
    raise AssertionError("cone contains no axis direction")


def classify_wedge(b: Point, a: Point, c: Point, q: Point) -> WedgeLabel:
    """Label of the wedge at apex ``b`` (lines ``ba`` and ``bc``) containing ``q``.

    BOUNDARY is returned for points on either line, including ``b`` itself.
    """
    da, dc = _wedge_directions(b, a, c)
    dq = q - b
    if da.cross(dq) == 0 or dc.cross(dq) == 0:
        return WedgeLabel.BOUNDARY
    for d1, d2 in ((da, dc), (Point(-da.x, -da.y), Point(-dc.x, -dc.y)),
                   (da, Point(-dc.x, -dc.y)), (Point(-da.x, -da.y), dc)):
        if _in_open_cone(d1, d2, dq):
            return _cone_label(d1, d2)
    raise AssertionError("point in no wedge")


def canonical_wedge(b: Point, a: Point, c: Point) -> WedgeLabel:
    """Label of W[b,a,c], the wedge having both ``a`` and ``c`` on its boundary."""
    da, dc = _wedge_directions(b, a, c)
    return _cone_label(da, dc)


def in_open_cone(b: Point, a: Point, c: Point, q: Point) -> bool:
    """True iff ``q`` is strictly inside the cone at ``b`` spanned by rays to ``a``, ``c``.

    This is W(b,a,c) without the axis-parallel restriction needed for labels.
    """
    da, dc = a - b, c - b
    if da.cross(dc) == 0:
        raise DegenerateError("cone rays are collinear")
    return _in_open_cone(da, dc, q - b)


# ---------------------------------------------------------------- strips

class StripLabel(enum.Enum):
    NEAR = "NEAR"
    FAR = "FAR"
    ON_SEGMENT_LINE = "ON_SEGMENT_LINE"
    OUTSIDE = "OUTSIDE"


ABOVE = 1
BELOW = -1


def classify_strip(u0: Point, u1: Point, near_side: int, q: Point) -> StripLabel:
    """Place ``q`` relative to the open vertical strip of ``u0``, ``u1``.

    ``near_side`` is ABOVE or BELOW: the side of the segment line that faces
    the separating line.
    """
    if not u0.x < u1.x:
        raise GeometryError("strip requires x(u0) < x(u1)")
    if near_side not in (ABOVE, BELOW):
        raise GeometryError("near_side must be ABOVE (+1) or BELOW (-1)")
    if q.x <= u0.x or q.x >= u1.x:
        return StripLabel.OUTSIDE
    side = orient(u0, u1, q)  # +1 above the segment line since u0 is left of u1
    if side == 0:
        return StripLabel.ON_SEGMENT_LINE
    return StripLabel.NEAR if side == near_side else StripLabel.FAR


def in_closed_strip(u0: Point, u1: Point, q: Point) -> bool:
    lo, hi = min(u0.x, u1.x), max(u0.x, u1.x)
    return lo <= q.x <= hi


def in_closed_far_strip(u0: Point, u1: Point, near_side: int, q: Point) -> bool:
    """Closure of the far half-strip: x within [x(u0), x(u1)], on or beyond the segment line."""
    if u0.x > u1.x:
        u0, u1 = u1, u0
    if not u0.x < u1.x:
        raise GeometryError("strip requires distinct x")
    if not u0.x <= q.x <= u1.x:
        return False
    return orient(u0, u1, q) != near_side


# ---------------------------------------------------------------- segments

def on_segment(p: Point, a: Point, b: Point) -> bool:
    """True iff p lies on the closed segment ab (a == b allowed)."""
    if orient(a, b, p) != 0:
        return False
    return min(a.x, b.x) <= p.x <= max(a.x, b.x) and min(a.y, b.y) <= p.y <= max(a.y, b.y)


def _closed_segments_meet(a: Point, b: Point, c: Point, d: Point) -> bool:
    o1, o2 = orient(a, b, c), orient(a, b, d)
    o3, o4 = orient(c, d, a), orient(c, d, b)
    if o1 != o2 and o3 != o4 and 0 not in (o1, o2, o3, o4):
        return True
    return (on_segment(c, a, b) or on_segment(d, a, b)
            or on_segment(a, c, d) or on_segment(b, c, d))


def segments_intersect(s1: Segment, s2: Segment) -> bool:
    """True iff the closed segments share at least one point."""
    return _closed_segments_meet(s1.a, s1.b, s2.a, s2.b)


def segments_cross_properly(a: Point, b: Point, c: Point, d: Point) -> bool:
    """Interiors cross at a single point; touching or collinear overlap does not count."""
    o1, o2 = orient(a, b, c), orient(a, b, d)
    o3, o4 = orient(c, d, a), orient(c, d, b)
    return o1 * o2 < 0 and o3 * o4 < 0


def point_in_triangle(q: Point, a: Point, b: Point, c: Point) -> bool:
    """Closed-triangle membership."""
    s = orient(a, b, c)
    if s == 0:
        raise DegenerateError("triangle vertices are collinear")
    return orient(a, b, q) * s >= 0 and orient(b, c, q) * s >= 0 and orient(c, a, q) * s >= 0


def in_closed_hull3(q: Point, a: Point, b: Point, c: Point) -> bool:
    """Like point_in_triangle, but a collinear triple degrades to its spanning segment."""
    if orient(a, b, c) != 0:
        return point_in_triangle(q, a, b, c)
    pts = sorted({a, b, c})
    return on_segment(q, pts[0], pts[-1])


# ---------------------------------------------------------------- hulls

@dataclass(frozen=True)
class ConvexPolygon:
    """Counterclockwise vertex cycle; ``len(vertices)`` < 3 means degenerate."""
    vertices: tuple[Point, ...]

    @property
    def degenerate(self) -> bool:
        return len(self.vertices) < 3

    @property
    def kind(self) -> str:
        return {1: "point", 2: "segment"}.get(len(self.vertices), "polygon")

    def contains(self, q: Point) -> bool:
        """Closed membership."""
        vs = self.vertices
        if len(vs) == 1:
            return q == vs[0]
        if len(vs) == 2:
            return on_segment(q, vs[0], vs[1])
        return all(orient(vs[i], vs[(i + 1) % len(vs)], q) >= 0 for i in range(len(vs)))

    def on_boundary(self, q: Point) -> bool:
        vs = self.vertices
        if len(vs) <= 2:
            return self.contains(q)
        return any(on_segment(q, vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs)))

    def edges(self) -> list[tuple[Point, Point]]:
        vs = self.vertices
        if len(vs) == 1:
            return []
        if len(vs) == 2:
            return [(vs[0], vs[1])]
        return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]


def convex_hull(points: Iterable[Point]) -> ConvexPolygon:
    """Andrew's monotone chain; collinear boundary points are dropped."""
    pts = sorted(set(points))
    if not pts:
        raise GeometryError("convex hull of an empty set")
    if len(pts) <= 2:
        return ConvexPolygon(tuple(pts))

    def half(seq):
        chain: list[Point] = []
        for p in seq:
            while len(chain) >= 2 and orient(chain[-2], chain[-1], p) <= 0:
                chain.pop()
            chain.append(p)
        return chain

    lower, upper = half(pts), half(reversed(pts))
    hull = lower[:-1] + upper[:-1]
    if len(hull) == 2 and hull[0] == hull[1]:
        hull = hull[:1]
    return ConvexPolygon(tuple(hull))


# ---------------------------------------------------------------- separation

@dataclass(frozen=True)
class SeparatingLine:
    """The line a*x + b*y = c; the first point set is strictly on side ``side_of_first``."""
    a: Fraction
    b: Fraction
    c: Fraction
    side_of_first: int

    def __post_init__(self):
        for name in ("a", "b", "c"):
            object.__setattr__(self, name, as_rational(getattr(self, name)))
        if self.a == 0 and self.b == 0:
            raise GeometryError("line normal must be non-zero")
        if self.side_of_first not in (1, -1):
            raise GeometryError("side_of_first must be +1 or -1")

    def value(self, p: Point) -> Fraction:
        return self.a * p.x + self.b * p.y - self.c

    def side(self, p: Point) -> int:
        return _sign(self.value(p))

    def separates(self, first: Iterable[Point], second: Iterable[Point]) -> bool:
        s = self.side_of_first
        return (all(self.side(p) == s for p in first)
                and all(self.side(p) == -s for p in second))


HORIZONTAL = SeparatingLine(Fraction(0), Fraction(1), Fraction(0), 1)


def _candidate_axes(ha: ConvexPolygon, hb: ConvexPolygon) -> list[Point]:
    axes = [Point(0, 1), Point(1, 0)]
    for poly in (ha, hb):
        for p, q in poly.edges():
            d = q - p
            axes.append(Point(-d.y, d.x))
    # closest features of disjoint convex sets are vertex-vertex or vertex-edge;
    # the latter is covered by edge normals above
    for p in ha.vertices:
        for q in hb.vertices:
            axes.append(q - p)
    return axes


def find_separating_line(A: Sequence[Point], B: Sequence[Point]) -> SeparatingLine | None:
    """A line with ``A`` strictly on one side and ``B`` strictly on the other, or None."""
    if not A or not B:
        raise GeometryError("both point sets must be non-empty")
    if set(A) & set(B):
        raise GeometryError("point sets share a point")
    ha, hb = convex_hull(A), convex_hull(B)
    for n in _candidate_axes(ha, hb):
        if n.x == 0 and n.y == 0:
            continue
        pa = [n.dot(p) for p in ha.vertices]
        pb = [n.dot(p) for p in hb.vertices]
        if max(pa) < min(pb):
            return SeparatingLine(n.x, n.y, (max(pa) + min(pb)) / 2, -1)
        if max(pb) < min(pa):
            return SeparatingLine(n.x, n.y, (max(pb) + min(pa)) / 2, 1)
    return None


def is_convex_terrain(poly: ConvexPolygon, line: SeparatingLine) -> bool:
    """True iff each hull vertex's perpendicular drop to ``line`` meets the hull only at that vertex."""
    sides = {line.side(v) for v in poly.vertices}
    if 0 in sides or len(sides) != 1:
        raise GeometryError("polygon must lie strictly on one side of the line")
    s = sides.pop()
    down = Point(-s * line.a, -s * line.b)  # towards the line
    vs = poly.vertices
    n = len(vs)
    if n == 1:
        return True
    if n == 2:
        d = vs[1] - vs[0]
        if d.cross(down) != 0:
            return True
        # a segment perpendicular to the line: the far endpoint drops through the near one
        return False
    for i, v in enumerate(vs):
        prev, nxt = vs[i - 1] - v, vs[(i + 1) % n] - v
        # closed tangent cone at a ccw vertex: left of v->next and right of v->prev
        if nxt.cross(down) >= 0 and down.cross(prev) >= 0:
            return False
    return True
