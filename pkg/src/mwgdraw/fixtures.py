"""Checked-in coordinate fixtures.

Minted once by ``scripts/gen_fixtures.py`` (search oracle plus positional
filters) and locked by the test suite; no coordinates here are hand-tuned.

- ``K22_K22``: both sides induce a 4-cycle, separated by ``y = 0``. Dropping
  the lowest one or two ``gamma1`` vertices keeps ``gamma0`` a 4-cycle.
- ``K22_IND3``: a 4-cycle over an independent set of three; the leftmost and
  rightmost vertices of the whole instance are both in ``gamma0``.
- ``NONSEP_DIAM3``: a path on four vertices (diameter 3) against a path on
  three (diameter 2); the drawings are not linearly separable.
- ``NONSEP_DIAM1``: a 5-cycle against a single edge inside it (diameter 1);
  not linearly separable.
"""
from __future__ import annotations

from .geometry import HORIZONTAL, pt
from .model import Drawing, GraphSpec, MwgInstance

_DATA = {
    "K22_K22": {
        "gamma0": [("a0", "5", "7"), ("a1", "-6", "1"), ("a2", "-8", "3"), ("a3", "1", "2")],
        "partition0": [0, 0, 1, 1],
        "gamma1": [("b0", "6", "-4"), ("b1", "-4", "-2"), ("b2", "-8", "-7"), ("b3", "3", "-1")],
        "partition1": [0, 0, 1, 1],
        "specs": ((2, 2), (2, 2)),
    },
    "K22_IND3": {
        "gamma0": [("a0", "-8", "8"), ("a1", "3", "1"), ("a2", "-1", "1"), ("a3", "8", "8")],
        "partition0": [0, 0, 1, 1],
        "gamma1": [("b0", "-6", "-1"), ("b1", "2", "-1"), ("b2", "7", "-1")],
        "partition1": [0, 0, 0],
        "specs": ((2, 2), (3,)),
    },
    "NONSEP_DIAM3": {
        "gamma0": [("a0", "2", "8"), ("a1", "2", "2"), ("a2", "2", "0"), ("a3", "6", "-2")],
        "edges0": [("a0", "a1"), ("a1", "a2"), ("a2", "a3")],
        "gamma1": [("b0", "8", "0"), ("b1", "3", "2"), ("b2", "3", "8")],
        "edges1": [("b0", "b1"), ("b1", "b2")],
    },
    "NONSEP_DIAM1": {
        "gamma0": [("a0", "5", "4"), ("a1", "5", "-5"), ("a2", "-5", "-6"), ("a3", "-8", "6"),
                   ("a4", "2", "8")],
        "edges0": [("a0", "a1"), ("a0", "a4"), ("a1", "a2"), ("a2", "a3"), ("a3", "a4")],
        "gamma1": [("b0", "2", "3"), ("b1", "0", "0")],
        "edges1": [("b0", "b1")],
    },
}

NAMES = tuple(_DATA)


def fixture(name: str) -> MwgInstance:
    try:
        data = _DATA[name]
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; known: {', '.join(NAMES)}") from None
    sides = []
    for s in (0, 1):
        verts = tuple((lbl, pt(x, y)) for lbl, x, y in data[f"gamma{s}"])
        kw = {}
        if "specs" in data:
            kw["intended_spec"] = GraphSpec(data["specs"][s])
            kw["intended_partition"] = {lbl: c for (lbl, _), c in zip(verts, data[f"partition{s}"])}
        else:
            kw["intended_edges"] = frozenset(frozenset(e) for e in data[f"edges{s}"])
        sides.append(Drawing(verts, **kw))
    sep = HORIZONTAL if "specs" in data else None
    return MwgInstance(sides[0], sides[1], separator=sep, metadata={"fixture": name})
