"""Drawability decisions for pairs of complete multipartite graphs.

Both procedures only inspect partition sizes, so after parsing they run in
constant time.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

from .model import GraphSpec


class CharacterizeError(ValueError):
    pass


class OutOfScopeError(CharacterizeError):
    """The pair falls in a case the characterization does not settle."""


class Reason(enum.Enum):
    OK = "OK"
    SHAPE_VIOLATION = "SHAPE_VIOLATION"
    SIZE_GAP = "SIZE_GAP"
    K23_SUBGRAPH = "K23_SUBGRAPH"
    MULTIPARTITE_RULE = "MULTIPARTITE_RULE"


@dataclass(frozen=True)
class Verdict:
    drawable: bool
    reason: Reason
    detail: str = ""

    def __post_init__(self):
        if self.drawable != (self.reason is Reason.OK):
            raise CharacterizeError("reason must be OK exactly when drawable")

    def __str__(self):
        return "DRAWABLE" if self.drawable else f"NOT_DRAWABLE {self.reason.value}"


class ShapeKind(enum.Enum):
    STAR = "STAR"
    K22 = "K22"
    OTHER = "OTHER"


@dataclass(frozen=True)
class BipartiteShape:
    kind: ShapeKind
    n: int

    def __str__(self):
        return f"STAR({self.n})" if self.kind is ShapeKind.STAR else self.kind.value


def classify_bipartite(spec: GraphSpec) -> BipartiteShape:
    if not spec.is_bipartite:
        raise CharacterizeError(f"{spec} is not bipartite")
    big, small = spec.partition_sizes
    if small == 1:
        return BipartiteShape(ShapeKind.STAR, spec.n)
    if (big, small) == (2, 2):
        return BipartiteShape(ShapeKind.K22, 4)
    return BipartiteShape(ShapeKind.OTHER, spec.n)


def decide_bipartite_pair(spec0: GraphSpec, spec1: GraphSpec) -> Verdict:
    for s in (spec0, spec1):
        if not s.is_bipartite:
            raise CharacterizeError(f"{s} is not bipartite; use decide_pair")
    shapes = (classify_bipartite(spec0), classify_bipartite(spec1))
    bad = [s for s, sh in zip((spec0, spec1), shapes) if sh.kind is ShapeKind.OTHER]
    if bad:
        return Verdict(False, Reason.SHAPE_VIOLATION,
                       f"{bad[0]} is neither a star nor K2,2, so it contains K2,3")
    gap = abs(spec0.n - spec1.n)
    if gap > 2:
        return Verdict(False, Reason.SIZE_GAP, f"|{spec0.n} - {spec1.n}| = {gap} > 2")
    return Verdict(True, Reason.OK, f"{shapes[0]} / {shapes[1]}")


def decide_multipartite_all_ge2(spec0: GraphSpec, spec1: GraphSpec) -> Verdict:
    for s in (spec0, spec1):
        if min(s.partition_sizes) < 2:
            raise OutOfScopeError(f"{s} has a partition set of size one; that case is open")
    if spec0.partition_sizes == (2, 2) and spec1.partition_sizes == (2, 2):
        return Verdict(True, Reason.OK, "K2,2 / K2,2")
    for s in (spec0, spec1):
        if max(s.partition_sizes) >= 3:
            return Verdict(False, Reason.K23_SUBGRAPH, f"{s} contains K2,3")
    return Verdict(False, Reason.MULTIPARTITE_RULE,
                   "a graph with more than two partition sets, all of size two")


def decide_pair(spec0: GraphSpec, spec1: GraphSpec) -> Verdict:
    """Route to the bipartite characterization or the multipartite rule."""
    if spec0.is_bipartite and spec1.is_bipartite:
        return decide_bipartite_pair(spec0, spec1)
    if min(spec0.partition_sizes + spec1.partition_sizes) >= 2:
        v = decide_multipartite_all_ge2(spec0, spec1)
        if not v.drawable and v.reason is Reason.K23_SUBGRAPH:
            # with more than two sets the governing rule is still the multipartite one
            return Verdict(False, Reason.MULTIPARTITE_RULE, v.detail)
        return v
    raise OutOfScopeError(
        f"<{spec0}, {spec1}> mixes a size-one partition set with a non-bipartite graph")
