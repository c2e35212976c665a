"""Drawing file format (versioned JSON) and the pair spec string grammar.

Rationals are always strings ``"p"`` or ``"p/q"`` so no tool in between can
round them. Layout::

    {
      "version": 1,
      "gamma0": [{"label": "a0", "x": "0", "y": "1"}, ...],
      "gamma1": [...],
      "intendedSpecs": [[2, 2], [1, 3]],          # optional
      "intendedPartitions": [{"a0": 0, ...}, ...], # optional, per side or null
      "intendedEdges": [[["a0", "a1"], ...], null],# optional, per side or null
      "separator": {"a": "0", "b": "1", "c": "0", "sideOfFirst": 1},  # optional
      "metadata": {"key": "value"}
    }
"""
from __future__ import annotations

import json
import re
from fractions import Fraction
from pathlib import Path

from .geometry import GeometryError, Point, SeparatingLine
from .model import Drawing, GraphSpec, ModelError, MwgInstance

VERSION = 1

_RATIONAL = re.compile(r"[+-]?\d+(?:/\d+)?")
_SPEC = re.compile(r"K(\d+(?:,\d+)+)")


class FormatError(ValueError):
    pass


def parse_rational(text: str) -> Fraction:
    if not isinstance(text, str):
        raise FormatError(f"rational must be a string, got {type(text).__name__}")
    if not _RATIONAL.fullmatch(text):
        raise FormatError(f"malformed rational {text!r}")
    num, _, den = text.partition("/")
    if den and int(den) == 0:
        raise FormatError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den else 1)


def format_rational(v: Fraction) -> str:
    return str(Fraction(v))


def parse_spec(text: str) -> GraphSpec:
    compact = "".join(text.split())
    m = _SPEC.fullmatch(compact)
    if not m:
        raise FormatError(f"malformed graph spec {text!r}; expected e.g. K2,3")
    sizes = tuple(int(s) for s in m.group(1).split(","))
    if min(sizes) < 1:
        raise FormatError(f"partition sizes must be positive in {text!r}")
    return GraphSpec(sizes)


def parse_pair(text: str) -> tuple[GraphSpec, GraphSpec]:
    """``"K2,2;K1,5"`` -> two specs; whitespace anywhere is ignored."""
    parts = "".join(text.split()).split(";")
    if len(parts) != 2:
        raise FormatError(f"expected two specs separated by ';' in {text!r}")
    return parse_spec(parts[0]), parse_spec(parts[1])


def format_spec(spec: GraphSpec) -> str:
    return str(spec)


def format_pair(spec0: GraphSpec, spec1: GraphSpec) -> str:
    return f"{format_spec(spec0)};{format_spec(spec1)}"


# ---------------------------------------------------------------- instances

def _side_to_json(d: Drawing) -> list[dict]:
    return [{"label": lbl, "x": format_rational(p.x), "y": format_rational(p.y)}
            for lbl, p in d.vertices]


def to_dict(inst: MwgInstance) -> dict:
    sides = (inst.gamma0, inst.gamma1)
    out: dict = {"version": VERSION, "gamma0": _side_to_json(inst.gamma0),
                 "gamma1": _side_to_json(inst.gamma1)}
    if any(d.intended_spec is not None for d in sides):
        if not all(d.intended_spec is not None for d in sides):
            raise FormatError("intended specs must be given for both sides or neither")
        out["intendedSpecs"] = [list(d.intended_spec.partition_sizes) for d in sides]
    if any(d.intended_partition is not None for d in sides):
        out["intendedPartitions"] = [None if d.intended_partition is None
                                     else dict(d.intended_partition) for d in sides]
    if any(d.intended_edges is not None for d in sides):
        out["intendedEdges"] = [None if d.intended_edges is None else
                                sorted(sorted(e) for e in d.intended_edges) for d in sides]
    if inst.separator is not None:
        s = inst.separator
        out["separator"] = {"a": format_rational(s.a), "b": format_rational(s.b),
                            "c": format_rational(s.c), "sideOfFirst": s.side_of_first}
    out["metadata"] = {str(k): str(v) for k, v in inst.metadata.items()}
    return out


def dumps(inst: MwgInstance) -> str:
    return json.dumps(to_dict(inst), indent=2) + "\n"


def _expect(cond: bool, msg: str) -> None:
    if not cond:
        raise FormatError(msg)


def _side_from_json(raw, name: str) -> list[tuple[str, Point]]:
    _expect(isinstance(raw, list) and raw, f"{name} must be a non-empty list")
    out = []
    for k, item in enumerate(raw):
        _expect(isinstance(item, dict) and set(item) == {"label", "x", "y"},
                f"{name}[{k}] must have exactly label, x, y")
        _expect(isinstance(item["label"], str) and item["label"], f"{name}[{k}].label must be a string")
        out.append((item["label"], Point(parse_rational(item["x"]), parse_rational(item["y"]))))
    return out


def from_dict(data) -> MwgInstance:
    """Validate and build an instance; any defect raises FormatError."""
    try:
        return _from_dict(data)
    except FormatError:
        raise
    except (ModelError, GeometryError, TypeError, ValueError, AttributeError) as exc:
        raise FormatError(str(exc)) from exc


def _from_dict(data) -> MwgInstance:
    _expect(isinstance(data, dict), "drawing file must be a JSON object")
    _expect(data.get("version") == VERSION, f"unsupported version {data.get('version')!r}")
    known = {"version", "gamma0", "gamma1", "intendedSpecs", "intendedPartitions",
             "intendedEdges", "separator", "metadata"}
    extra = set(data) - known
    _expect(not extra, f"unknown fields: {', '.join(sorted(extra))}")
    sides = [_side_from_json(data.get("gamma0"), "gamma0"),
             _side_from_json(data.get("gamma1"), "gamma1")]
    specs = [None, None]
    if data.get("intendedSpecs") is not None:
        raw = data["intendedSpecs"]
        _expect(isinstance(raw, list) and len(raw) == 2, "intendedSpecs must be a pair")
        for s in (0, 1):
            _expect(isinstance(raw[s], list) and raw[s]
                    and all(isinstance(v, int) and not isinstance(v, bool) and v > 0 for v in raw[s]),
                    "intendedSpecs entries must be lists of positive integers")
            specs[s] = GraphSpec(tuple(raw[s]))
    parts = [None, None]
    if data.get("intendedPartitions") is not None:
        raw = data["intendedPartitions"]
        _expect(isinstance(raw, list) and len(raw) == 2, "intendedPartitions must be a pair")
        for s in (0, 1):
            if raw[s] is not None:
                _expect(isinstance(raw[s], dict), "partition must map labels to class indices")
                parts[s] = {str(k): int(v) for k, v in raw[s].items()}
    edges = [None, None]
    if data.get("intendedEdges") is not None:
        raw = data["intendedEdges"]
        _expect(isinstance(raw, list) and len(raw) == 2, "intendedEdges must be a pair")
        for s in (0, 1):
            if raw[s] is not None:
                _expect(all(isinstance(e, list) and len(e) == 2 for e in raw[s]),
                        "edges must be label pairs")
                edges[s] = frozenset(frozenset(e) for e in raw[s])
    sep = None
    if data.get("separator") is not None:
        raw = data["separator"]
        _expect(isinstance(raw, dict) and set(raw) == {"a", "b", "c", "sideOfFirst"},
                "separator needs a, b, c, sideOfFirst")
        sep = SeparatingLine(parse_rational(raw["a"]), parse_rational(raw["b"]),
                             parse_rational(raw["c"]), raw["sideOfFirst"])
    meta = data.get("metadata", {})
    _expect(isinstance(meta, dict) and all(isinstance(v, str) for v in meta.values()),
            "metadata must be a string map")
    drawings = [Drawing(tuple(sides[s]), intended_spec=specs[s], intended_partition=parts[s],
                        intended_edges=edges[s]) for s in (0, 1)]
    return MwgInstance(drawings[0], drawings[1], sep, dict(meta))


def loads(text: str) -> MwgInstance:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from exc
    return from_dict(data)


def load(path: str | Path) -> MwgInstance:
    return loads(Path(path).read_text())


def save(inst: MwgInstance, path: str | Path) -> None:
    Path(path).write_text(dumps(inst))
