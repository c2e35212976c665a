"""Command line entry point: ``mwgdraw {test,draw,verify,check,search,fixture}``.

Exit codes: 0 success or drawable, 1 negative verdict or FAIL, 2 usage,
parse or out-of-scope errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import drawfile, report, svg
from .characterize import CharacterizeError, decide_pair
from .construct import NotDrawableError, draw_pair, verify_instance
from .fixtures import NAMES as FIXTURE_NAMES, fixture
from .model import ModelError, induce_mwg, matches_spec
from .properties import intended_graphs, run_all
from .search import SearchConfig, SearchMode, search

OK, NEGATIVE, ERROR = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(ERROR)


def _write_outputs(inst, out: str | None, svg_path: str | None, disks: bool, title: str) -> None:
    if out:
        drawfile.save(inst, out)
        print(f"wrote {out}")
    if svg_path:
        Path(svg_path).write_text(svg.render(inst, disks=disks, title=title))
        print(f"wrote {svg_path}")


def cmd_test(args) -> int:
    spec0, spec1 = drawfile.parse_pair(args.pair)
    verdict = decide_pair(spec0, spec1)
    print(verdict)
    return OK if verdict.drawable else NEGATIVE


def cmd_draw(args) -> int:
    spec0, spec1 = drawfile.parse_pair(args.pair)
    try:
        inst = draw_pair(spec0, spec1, verify=False)
    except NotDrawableError as exc:
        print(exc.verdict)
        return NEGATIVE
    if not args.no_verify:
        verify_instance(inst, spec0, spec1)
        print("verification PASS")
    _write_outputs(inst, args.out, args.svg, args.disks, drawfile.format_pair(spec0, spec1))
    return OK


def cmd_verify(args) -> int:
    inst = drawfile.load(args.path)
    summary = report.verify_summary(inst)
    if args.json:
        print(json.dumps(summary, indent=2))
    else:
        print(report.verify_text(summary), end="")
    if args.expect:
        spec0, spec1 = drawfile.parse_pair(args.expect)
        graphs = induce_mwg(inst)
        ok = all(len(g.labels) == s.n and matches_spec(g, s) is not None
                 for g, s in zip(graphs, (spec0, spec1)))
        print(f"expect {drawfile.format_pair(spec0, spec1)}: {'MATCH' if ok else 'MISMATCH'}")
        return OK if ok else NEGATIVE
    return OK


def cmd_check(args) -> int:
    inst = drawfile.load(args.path)
    rep = run_all(inst, graphs=intended_graphs(inst) if args.intended else None)
    if args.json:
        print(report.report_json(rep), end="")
    else:
        print(report.report_text(rep, color=report.use_color()), end="")
    return OK if rep.ok else NEGATIVE


def cmd_search(args) -> int:
    spec0, spec1 = drawfile.parse_pair(args.pair)
    cfg = SearchConfig(budget=args.budget, seed=args.seed, grid_resolution=args.grid_resolution,
                       coordinate_bound=args.bound, mode=SearchMode(args.mode.upper()),
                       separated=args.separated, workers=args.workers)
    res = search(spec0, spec1, cfg)
    stats = res.stats.as_dict()
    stats["pair"] = drawfile.format_pair(spec0, spec1)
    stats["seed"] = args.seed
    stats["mode"] = cfg.mode.value
    print(json.dumps(stats, indent=2))
    if res.instance is None:
        return NEGATIVE
    _write_outputs(res.instance, args.out, args.svg, args.disks, stats["pair"])
    return OK


def cmd_fixture(args) -> int:
    inst = fixture(args.name)
    if not args.out and not args.svg:
        print(drawfile.dumps(inst), end="")
        return OK
    _write_outputs(inst, args.out, args.svg, args.disks, args.name)
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="mwgdraw", description="Mutual witness Gabriel drawings of complete "
                                            "multipartite graph pairs.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    t = sub.add_parser("test", help="decide drawability of a pair, e.g. 'K2,2;K1,5'")
    t.add_argument("pair")
    t.set_defaults(func=cmd_test)

    d = sub.add_parser("draw", help="construct a drawing for a drawable pair")
    d.add_argument("pair")
    d.add_argument("--out", "-o", required=True, help="drawing file (JSON)")
    d.add_argument("--svg", help="also render SVG here")
    d.add_argument("--disks", action="store_true", help="draw Gabriel disks of non-edges")
    d.add_argument("--no-verify", action="store_true", help="skip exact re-induction")
    d.set_defaults(func=cmd_draw)

    v = sub.add_parser("verify", help="re-induce the graphs of a drawing file")
    v.add_argument("path")
    v.add_argument("--expect", help="pair the drawing must realize")
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("check", help="run every structural checker on a drawing file")
    c.add_argument("path")
    c.add_argument("--json", action="store_true")
    c.add_argument("--intended", action="store_true",
                   help="check the graphs the file declares instead of re-inducing them")
    c.set_defaults(func=cmd_check)

    s = sub.add_parser("search", help="search a bounded grid for a realization")
    s.add_argument("pair")
    s.add_argument("--budget", type=int, default=100_000)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--mode", default="ANNEAL", choices=[m.value for m in SearchMode]
                   + [m.value.lower() for m in SearchMode])
    s.add_argument("--grid-resolution", type=int, default=1)
    s.add_argument("--bound", type=int, default=6, help="coordinate bound")
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--separated", action="store_true", help="keep gamma0 above y=0, gamma1 below")
    s.add_argument("--out", "-o")
    s.add_argument("--svg")
    s.add_argument("--disks", action="store_true")
    s.set_defaults(func=cmd_search)

    f = sub.add_parser("fixture", help="emit a stored fixture")
    f.add_argument("name", choices=FIXTURE_NAMES)
    f.add_argument("--out", "-o")
    f.add_argument("--svg")
    f.add_argument("--disks", action="store_true")
    f.set_defaults(func=cmd_fixture)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (drawfile.FormatError, CharacterizeError, ModelError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return ERROR


if __name__ == "__main__":
    sys.exit(main())
