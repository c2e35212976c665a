"""Witness Gabriel semantics: drawings, witness sets and the graphs they induce."""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from . import kernels
from .geometry import Point, SeparatingLine, gabriel_contains


class ModelError(ValueError):
    pass


@dataclass(frozen=True)
class GraphSpec:
    """Complete multipartite graph given by its partition-set sizes."""
    partition_sizes: tuple[int, ...]

    def __post_init__(self):
        sizes = tuple(sorted((int(s) for s in self.partition_sizes), reverse=True))
        if not sizes or any(s < 1 for s in sizes):
            raise ModelError(f"partition sizes must be positive and non-empty: {self.partition_sizes}")
        object.__setattr__(self, "partition_sizes", sizes)

    @classmethod
    def of(cls, *sizes: int) -> "GraphSpec":
        return cls(tuple(sizes))

    @property
    def n(self) -> int:
        return sum(self.partition_sizes)

    @property
    def k(self) -> int:
        return len(self.partition_sizes)

    @property
    def is_bipartite(self) -> bool:
        return self.k == 2

    def __str__(self):
        return "K" + ",".join(str(s) for s in sorted(self.partition_sizes))


def _pair(a: str, b: str) -> frozenset:
    return frozenset((a, b))


@dataclass(frozen=True)
class Drawing:
    vertices: tuple[tuple[str, Point], ...]
    intended_spec: GraphSpec | None = None
    intended_partition: Mapping[str, int] | None = None
    # explicit target graph for drawings that are not complete multipartite
    intended_edges: frozenset | None = None

    def __post_init__(self):
        verts = tuple((str(lbl), p) for lbl, p in self.vertices)
        object.__setattr__(self, "vertices", verts)
        labels = [lbl for lbl, _ in verts]
        if len(set(labels)) != len(labels):
            raise ModelError("vertex labels must be unique")
        if len({p for _, p in verts}) != len(verts):
            raise ModelError("vertex positions must be pairwise distinct")
        if self.intended_partition is not None:
            part = dict(self.intended_partition)
            if set(part) != set(labels):
                raise ModelError("intended partition must cover exactly the drawing's labels")
            if self.intended_spec is not None:
                counts: dict[int, int] = {}
                for idx in part.values():
                    counts[idx] = counts.get(idx, 0) + 1
                if tuple(sorted(counts.values(), reverse=True)) != self.intended_spec.partition_sizes:
                    raise ModelError("intended partition inconsistent with intended spec")
            object.__setattr__(self, "intended_partition", part)
        if self.intended_edges is not None:
            edges = frozenset(frozenset(e) for e in self.intended_edges)
            for e in edges:
                if len(e) != 2 or not e <= set(labels):
                    raise ModelError(f"bad intended edge {sorted(e)}")
            object.__setattr__(self, "intended_edges", edges)

    @classmethod
    def from_points(cls, points: Iterable[Point], prefix: str = "v", **kw) -> "Drawing":
        return cls(tuple((f"{prefix}{i}", p) for i, p in enumerate(points)), **kw)

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(lbl for lbl, _ in self.vertices)

    @property
    def positions(self) -> tuple[Point, ...]:
        return tuple(p for _, p in self.vertices)

    def position(self, label: str) -> Point:
        for lbl, p in self.vertices:
            if lbl == label:
                return p
        raise KeyError(label)

    def __len__(self):
        return len(self.vertices)


@dataclass(frozen=True)
class MwgInstance:
    gamma0: Drawing
    gamma1: Drawing
    separator: SeparatingLine | None = None
    metadata: Mapping[str, str] = field(default_factory=dict)

    def __post_init__(self):
        if set(self.gamma0.positions) & set(self.gamma1.positions):
            raise ModelError("the two drawings share a vertex position")
        if self.separator is not None and not self.separator.separates(
                self.gamma0.positions, self.gamma1.positions):
            raise ModelError("separator does not strictly separate the drawings")

    def side(self, i: int) -> Drawing:
        return (self.gamma0, self.gamma1)[i]


@dataclass(frozen=True)
class InducedGraph:
    labels: tuple[str, ...]
    edges: frozenset

    def __post_init__(self):
        known = set(self.labels)
        for e in self.edges:
            if len(e) != 2:
                raise ModelError("self-loop in induced graph")
            if not e <= known:
                raise ModelError("edge between unknown labels")

    def has_edge(self, a: str, b: str) -> bool:
        return _pair(a, b) in self.edges

    def neighbors(self) -> dict[str, set[str]]:
        nb: dict[str, set[str]] = {lbl: set() for lbl in self.labels}
        for e in self.edges:
            a, b = tuple(e)
            nb[a].add(b)
            nb[b].add(a)
        return nb

    def non_edges(self) -> list[tuple[str, str]]:
        out = []
        for i, a in enumerate(self.labels):
            for b in self.labels[i + 1:]:
                if _pair(a, b) not in self.edges:
                    out.append((a, b))
        return out

    def edge_list(self) -> list[tuple[str, str]]:
        order = {lbl: i for i, lbl in enumerate(self.labels)}
        return sorted((tuple(sorted(e, key=order.__getitem__)) for e in self.edges),
                      key=lambda e: (order[e[0]], order[e[1]]))

    def subgraph(self, keep: Iterable[str]) -> "InducedGraph":
        keep = set(keep)
        return InducedGraph(tuple(l for l in self.labels if l in keep),
                            frozenset(e for e in self.edges if e <= keep))


def _scaled_integers(points: Sequence[Point]) -> list[int] | None:
    """Coordinates multiplied by a common denominator, if they fit the int64 kernel."""
    den = 1
    for p in points:
        den = math.lcm(den, p.x.denominator, p.y.denominator)
    out = []
    for p in points:
        for c in (p.x, p.y):
            v = c.numerator * (den // c.denominator)
            if abs(v) >= kernels.COORD_LIMIT:
                return None
            out.append(v)
    return out


def blocked_pairs(vertices: Sequence[Point], witnesses: Sequence[Point]) -> list[list[bool]]:
    """n x n matrix: True where the closed Gabriel disk of the pair holds a witness."""
    n = len(vertices)
    if not witnesses:
        return [[False] * n for _ in range(n)]
    flat = _scaled_integers(list(vertices) + list(witnesses))
    if flat is not None:
        return kernels.blocked_matrix(flat[:2 * n], flat[2 * n:])
    out = [[False] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            hit = any(gabriel_contains(p, vertices[i], vertices[j]) for p in witnesses)
            out[i][j] = out[j][i] = hit
    return out


def induce_wg(V: Drawing, P: Sequence[Point]) -> InducedGraph:
    """Edge {u, v} iff no witness lies in the closed disk D[u, v]."""
    clash = set(V.positions) & set(P)
    if clash:
        raise ModelError(f"witness coincides with a vertex at {sorted(clash)[0]}")
    labels = V.labels
    blocked = blocked_pairs(V.positions, list(P))
    edges = frozenset(_pair(labels[i], labels[j])
                      for i in range(len(labels)) for j in range(i + 1, len(labels))
                      if not blocked[i][j])
    return InducedGraph(labels, edges)


def induce_mwg(inst: MwgInstance) -> tuple[InducedGraph, InducedGraph]:
    return (induce_wg(inst.gamma0, inst.gamma1.positions),
            induce_wg(inst.gamma1, inst.gamma0.positions))


def multipartite_classes(g: InducedGraph) -> list[list[str]] | None:
    """Partition classes if ``g`` is complete multipartite, else None.

    A graph is complete multipartite exactly when every connected component of
    its complement is a clique of the complement.
    """
    nb = g.neighbors()
    labels = g.labels
    seen: set[str] = set()
    classes = []
    for start in labels:
        if start in seen:
            continue
        comp = [start]
        seen.add(start)
        queue = deque([start])
        while queue:
            a = queue.popleft()
            for b in labels:
                if b not in seen and b != a and b not in nb[a]:
                    seen.add(b)
                    comp.append(b)
                    queue.append(b)
        classes.append(comp)
    for comp in classes:
        members = set(comp)
        for a in comp:
            if nb[a] & members:
                return None
    return classes


def matches_spec(g: InducedGraph, spec: GraphSpec) -> dict[str, int] | None:
    """A label -> class index map realizing ``spec`` on ``g``, or None.

    Class indices follow the order of ``spec.partition_sizes``.
    """
    if len(g.labels) != spec.n:
        raise ModelError(f"graph has {len(g.labels)} vertices, spec needs {spec.n}")
    classes = multipartite_classes(g)
    if classes is None:
        return None
    if sorted((len(c) for c in classes), reverse=True) != list(spec.partition_sizes):
        return None
    order = {lbl: i for i, lbl in enumerate(g.labels)}
    classes.sort(key=lambda c: (-len(c), min(order[l] for l in c)))
    return {lbl: idx for idx, comp in enumerate(classes) for lbl in comp}


def spec_of(g: InducedGraph) -> GraphSpec | None:
    classes = multipartite_classes(g)
    if classes is None or not classes:
        return None
    return GraphSpec(tuple(len(c) for c in classes))


def diameter(g: InducedGraph) -> float | int:
    """Largest BFS eccentricity; ``math.inf`` when disconnected."""
    nb = g.neighbors()
    best = 0
    for s in g.labels:
        dist = {s: 0}
        queue = deque([s])
        while queue:
            a = queue.popleft()
            for b in nb[a]:
                if b not in dist:
                    dist[b] = dist[a] + 1
                    queue.append(b)
        if len(dist) < len(g.labels):
            return math.inf
        best = max(best, max(dist.values()))
    return best


def intended_graph_matches(d: Drawing, g: InducedGraph) -> bool | None:
    """Compare an induced graph with whatever intent the drawing carries; None if it carries none."""
    if d.intended_edges is not None:
        return g.edges == d.intended_edges
    if d.intended_spec is not None:
        part = matches_spec(g, d.intended_spec) if len(g.labels) == d.intended_spec.n else None
        return part is not None
    return None


def complete_multipartite_edges(partition: Mapping[str, int]) -> frozenset:
    labels = list(partition)
    return frozenset(_pair(a, b) for i, a in enumerate(labels) for b in labels[i + 1:]
                     if partition[a] != partition[b])


__all__ = [
    "GraphSpec", "Drawing", "MwgInstance", "InducedGraph", "ModelError",
    "induce_wg", "induce_mwg", "matches_spec", "diameter", "multipartite_classes",
    "spec_of", "blocked_pairs", "intended_graph_matches", "complete_multipartite_edges",
]
