"""Command-line interface. Every command prints one JSON document.

Exit codes: 0 success, 1 when a check finds a violation (a star, a grid
disagreement, an exhausted oracle budget), 2 on input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import selfcheck
from .coloring import ColoredGraph
from .constructions import lower_bound_coloring, star_critical_lower_coloring
from .errors import MalformedInput, StarRamseyError
from .family import StarFamily
from .formulas import (
    ramsey_classical,
    ramsey_general,
    ramsey_uniform,
    star_critical_classical,
    star_critical_uniform,
)
from .oracle import (
    SearchConfig,
    brute_force_ramsey,
    brute_force_star_critical,
    oracle_result_or_exhausted,
)
from .verifier import find_star


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _positive_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "table"), default="json")

    def mst(p, required=True):
        p.add_argument("--m", type=int, required=required)
        p.add_argument("--s", type=int, required=required)
        p.add_argument("--t", type=int, required=required)

    def family_or_mst(p):
        p.add_argument("--family", type=Path)
        mst(p, required=False)

    def oracle_opts(p):
        p.add_argument("--budget", type=int, default=10**9)
        p.add_argument("--break-symmetry", action="store_true")
        p.add_argument("--parallel-width", type=int, default=0)

    parser = _Parser(prog="starramsey", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    formula = sub.add_parser("formula").add_subparsers(dest="what", required=True, parser_class=_Parser)
    mst(formula.add_parser("uniform", parents=[common]))
    formula.add_parser("general", parents=[common]).add_argument("--family", type=Path, required=True)
    formula.add_parser("classical", parents=[common]).add_argument(
        "--m", type=_positive_list, required=True
    )
    mst(formula.add_parser("star-critical", parents=[common]))

    construct = sub.add_parser("construct").add_subparsers(dest="what", required=True, parser_class=_Parser)
    p = construct.add_parser("lower", parents=[common])
    family_or_mst(p)
    p.add_argument("--out", type=Path)
    p = construct.add_parser("star-critical", parents=[common])
    mst(p)
    p.add_argument("--out", type=Path)

    p = sub.add_parser("verify", parents=[common])
    family_or_mst(p)
    p.add_argument("--coloring", type=Path, required=True)

    oracle = sub.add_parser("oracle").add_subparsers(dest="what", required=True, parser_class=_Parser)
    p = oracle.add_parser("ramsey", parents=[common])
    family_or_mst(p)
    oracle_opts(p)
    p = oracle.add_parser("star-critical", parents=[common])
    mst(p)
    oracle_opts(p)

    p = sub.add_parser("selfcheck", parents=[common])
    p.add_argument("--grid", choices=("small", "full"), default="small")
    return parser


def _read(path: Path) -> str:
    try:
        return path.read_text()
    except OSError as exc:
        raise MalformedInput(f"cannot read {path}: {exc.strerror}") from None


def _family(args) -> StarFamily:
    if args.family is not None:
        if args.m is not None or args.s is not None or args.t is not None:
            raise _UsageError("give either --family or --m/--s/--t, not both")
        return StarFamily.from_json(_read(args.family))
    if args.m is None or args.s is None or args.t is None:
        raise _UsageError("need --family or all of --m, --s, --t")
    return StarFamily.uniform(args.m, args.s, args.t)


def _config(args, f: StarFamily | None = None) -> SearchConfig:
    if args.break_symmetry and f is not None and not f.is_uniform:
        raise _UsageError("--break-symmetry needs a uniform family")
    if args.budget < 1 or args.parallel_width < 0:
        raise _UsageError("--budget must be >= 1 and --parallel-width >= 0")
    return SearchConfig(
        node_budget=args.budget,
        break_color_symmetry=args.break_symmetry,
        parallel_width=args.parallel_width,
    )


def _write(path: Path | None, g: ColoredGraph) -> None:
    if path is not None:
        path.write_text(g.to_json() + "\n")


def dispatch(args) -> tuple[dict, int]:
    cmd = args.command
    if cmd == "formula":
        if args.what == "uniform":
            return ramsey_uniform(args.m, args.s, args.t).to_dict(), 0
        if args.what == "general":
            return ramsey_general(StarFamily.from_json(_read(args.family))).to_dict(), 0
        if args.what == "classical":
            r = ramsey_classical(args.m)
            rs = star_critical_classical(args.m)
            doc = rs.to_dict()
            doc.update(r=r.r, branch=r.branch, rstar_branch=rs.branch)
            return doc, 0
        return star_critical_uniform(args.m, args.s, args.t).to_dict(), 0
    if cmd == "construct":
        if args.what == "lower":
            g = lower_bound_coloring(_family(args))
        else:
            g = star_critical_lower_coloring(args.m, args.s, args.t)
        _write(args.out, g)
        return g.to_dict(), 0
    if cmd == "verify":
        f = _family(args)
        g = ColoredGraph.from_json(_read(args.coloring))
        w = find_star(g, f)
        return {"ok": w is None, "witness": None if w is None else w.to_dict()}, int(w is not None)
    if cmd == "oracle":
        if args.what == "ramsey":
            f = _family(args)
            res = oracle_result_or_exhausted(brute_force_ramsey, f, _config(args, f))
        else:
            res = oracle_result_or_exhausted(
                brute_force_star_critical, args.m, args.s, args.t, _config(args)
            )
        return res.to_dict(), int(not isinstance(res.value, int))
    report = selfcheck.run(args.grid)
    return report, int(not report["ok"])


def _table(doc: dict) -> str:
    width = max((len(k) for k in doc), default=0)
    lines = []
    for key, value in doc.items():
        text = value if isinstance(value, str) else json.dumps(value)
        lines.append(f"{key:<{width}}  {text}")
    return "\n".join(lines)


def run(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    fmt = "json"
    try:
        args = build_parser().parse_args(argv)
        fmt = getattr(args, "format", "json")
        doc, code = dispatch(args)
    except _UsageError as exc:
        doc, code = {"error": "MalformedInput", "detail": str(exc)}, 2
    except StarRamseyError as exc:
        doc, code = {"error": exc.code, "detail": str(exc)}, 2
    print(_table(doc) if fmt == "table" else json.dumps(doc), file=stdout)
    return code


def main() -> None:
    sys.exit(run())
