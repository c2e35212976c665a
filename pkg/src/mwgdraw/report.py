"""Line-oriented text and JSON renderings of property reports and verify summaries."""
from __future__ import annotations

import json
import os
import sys

from .geometry import find_separating_line
from .model import MwgInstance, diameter, induce_mwg, spec_of
from .properties import PropertyReport, Status

_ANSI = {Status.PASS: "\033[32m", Status.FAIL: "\033[31m", Status.NOT_APPLICABLE: "\033[33m"}
_RESET = "\033[0m"


def use_color(stream=None) -> bool:
    stream = stream or sys.stdout
    if os.environ.get("MWG_NO_COLOR", "") not in ("",):
        return False
    return hasattr(stream, "isatty") and stream.isatty()


def _paint(status: Status, color: bool) -> str:
    text = status.value
    return f"{_ANSI[status]}{text}{_RESET}" if color else text


def report_text(rep: PropertyReport, color: bool = False) -> str:
    width = max(len(n) for n in rep.checks)
    lines = []
    for name, res in rep.checks.items():
        tail = []
        if res.status is Status.NOT_APPLICABLE and res.hypothesis:
            tail.append(f"hypothesis: {res.hypothesis}")
        if res.note:
            tail.append(res.note)
        pad = " " * (len("NOT_APPLICABLE") - len(res.status.value))
        lines.append(f"{name:<{width}}  {_paint(res.status, color)}{pad}  {'; '.join(tail)}".rstrip())
        for i, side in enumerate(res.sides):
            for v in side.violations:
                pts = " ".join(f"({p.x},{p.y})" for p in v.points[:6])
                lines.append(f"    witness[{v.kind}] {' '.join(v.labels)}: {v.detail}  {pts}")
    lines.append(f"summary: {'no FAIL' if rep.ok else 'FAIL in ' + ', '.join(rep.failures)}")
    return "\n".join(lines) + "\n"


def report_json(rep: PropertyReport) -> str:
    return json.dumps(rep.as_dict(), indent=2) + "\n"


def _dia(d) -> str:
    return "inf" if d == float("inf") else str(d)


def verify_summary(inst: MwgInstance) -> dict:
    graphs = induce_mwg(inst)
    out = {}
    for s, (d, g) in enumerate(zip((inst.gamma0, inst.gamma1), graphs)):
        spec = spec_of(g)
        out[f"gamma{s}"] = {
            "vertices": len(g.labels),
            "edges": [list(e) for e in g.edge_list()],
            "diameter": _dia(diameter(g)),
            "completeMultipartite": None if spec is None else str(spec),
        }
    line = find_separating_line(inst.gamma0.positions, inst.gamma1.positions)
    out["separable"] = line is not None
    if line is not None:
        out["separator"] = f"{line.a}*x + {line.b}*y = {line.c}"
    return out


def verify_text(summary: dict) -> str:
    lines = []
    for s in ("gamma0", "gamma1"):
        g = summary[s]
        kind = g["completeMultipartite"] or "not complete multipartite"
        lines.append(f"{s}: {g['vertices']} vertices, {len(g['edges'])} edges, "
                     f"diameter {g['diameter']}, {kind}")
        lines.append("  edges: " + (" ".join(f"{a}-{b}" for a, b in g["edges"]) or "(none)"))
    sep = summary.get("separator")
    lines.append(f"separable: {'yes (' + sep + ')' if sep else 'no'}")
    return "\n".join(lines) + "\n"
