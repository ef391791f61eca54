"""Command-line driver.

Exit codes: 0 answered, 10 found (SAT / class / resolution), 20 none exists,
30 unknown because a search limit was hit, 1 usage or input error,
3 oracle mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import formats
from .correspondence import classify, design_to_formula, formula_to_design
from .errors import BlockXsatError
from .generators import CATALOG, catalog, random_partial, sts
from .oracle import brute_force_xsat
from .params import admissibility
from .solver import (
    ColumnChoice,
    SearchConfig,
    SearchStats,
    enumerate_xsat,
    find_parallel_class,
    find_resolution,
)
from .structure import DesignView, FormulaView

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MISMATCH = 3
EXIT_FOUND = 10
EXIT_NONE = 20
EXIT_UNKNOWN = 30


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _load(path: str):
    text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    return formats.read_any(text)


def _structure(path: str):
    return _load(path).structure


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _search_exit(found: bool, stats: SearchStats) -> int:
    if found:
        return EXIT_FOUND
    return EXIT_UNKNOWN if stats.limit_hit else EXIT_NONE


def _status(found: bool, stats: SearchStats) -> str:
    return {EXIT_FOUND: "found", EXIT_NONE: "none", EXIT_UNKNOWN: "unknown"}[
        _search_exit(found, stats)
    ]


def _one_based(cols) -> list[int]:
    return [j + 1 for j in cols]


def _config(args, solution_limit=None) -> SearchConfig:
    return SearchConfig(
        node_limit=args.node_limit,
        solution_limit=solution_limit,
        column_choice=ColumnChoice.FIRST_INDEX if args.first_index else ColumnChoice.MIN_SUPPORT,
        seed=args.seed,
    )


def cmd_params(args) -> int:
    rep = admissibility(args.m, args.l, args.lam)
    d = rep.to_dict()
    rows = [f"{key:22s} {d[key]}" for key in sorted(d)]
    _emit(args, d, "\n".join(rows))
    return EXIT_OK


def cmd_classify(args) -> int:
    s = _structure(args.file)
    d = {"m": s.m, "n": s.n, **classify(s).to_dict()}
    rows = [f"{key:20s} {value}" for key, value in d.items()]
    _emit(args, d, "\n".join(rows))
    return EXIT_OK


def cmd_convert(args) -> int:
    view = _load(args.file)
    if args.to == "design":
        if isinstance(view, FormulaView):
            view, _ = formula_to_design(view)
        out = formats.write_design(view)
    else:
        if isinstance(view, DesignView):
            view = design_to_formula(view)
        out = formats.write_dimacs(view)
    _write(args, out)
    return EXIT_OK


def _write(args, out: str) -> None:
    if args.output:
        Path(args.output).write_text(out, encoding="utf-8")
    else:
        sys.stdout.write(out)


def cmd_xsat(args) -> int:
    s = _structure(args.file)
    limit = args.enumerate if args.enumerate is not None else 1
    sols, stats = enumerate_xsat(FormulaView(s), _config(args, limit))
    payload = {
        "status": _status(bool(sols), stats),
        "solutions": [_one_based(x.chosen) for x in sols],
        "stats": stats.to_dict(),
    }
    lines = [{"found": "SAT", "none": "UNSAT", "unknown": "UNKNOWN"}[payload["status"]]]
    lines += ["v " + " ".join(map(str, sol)) for sol in payload["solutions"]]
    _emit(args, payload, "\n".join(lines))
    return _search_exit(bool(sols), stats)


def _class_lines(blocks, parts) -> list[str]:
    return [f"  block {j + 1}: {' '.join(map(str, _one_based(sorted(p))))}"
            for j, p in zip(blocks, parts)]


def cmd_parallel_class(args) -> int:
    s = _structure(args.file)
    pc, stats = find_parallel_class(DesignView(s), _config(args))
    payload = {
        "status": _status(pc is not None, stats),
        "blocks": _one_based(pc.blocks) if pc else None,
        "stats": stats.to_dict(),
    }
    lines = [f"parallel class: {payload['status']}"]
    if pc:
        lines += _class_lines(pc.blocks, pc.parts)
    _emit(args, payload, "\n".join(lines))
    return _search_exit(pc is not None, stats)


def cmd_resolve(args) -> int:
    s = _structure(args.file)
    res, stats = find_resolution(DesignView(s), _config(args))
    payload = {
        "status": _status(res is not None, stats),
        "classes": [_one_based(c.blocks) for c in res.classes] if res else None,
        "stats": stats.to_dict(),
    }
    lines = [f"resolution: {payload['status']}"]
    if res:
        lines[0] += f" ({len(res)} classes)"
        for idx, c in enumerate(res.classes, start=1):
            lines.append(f"class {idx}:")
            lines += _class_lines(c.blocks, c.parts)
    _emit(args, payload, "\n".join(lines))
    return _search_exit(res is not None, stats)


def cmd_generate(args) -> int:
    if args.kind == "sts":
        s = sts(args.m)
    elif args.kind == "catalog":
        s = catalog(args.name)
    else:
        s = random_partial(args.m, args.l, args.n, args.seed)
    if args.format == "cnf":
        out = formats.write_dimacs(FormulaView(s))
    else:
        out = formats.write_design(DesignView(s))
    _write(args, out)
    return EXIT_OK


def cmd_oracle_check(args) -> int:
    f = FormulaView(_structure(args.file))
    engine, stats = enumerate_xsat(f)
    oracle = brute_force_xsat(f)
    a = [x.chosen for x in engine]
    b = [x.chosen for x in oracle]
    match = a == b
    payload = {
        "match": match,
        "engine_count": len(a),
        "oracle_count": len(b),
        "stats": stats.to_dict(),
    }
    text = f"{'match' if match else 'MISMATCH'}: engine {len(a)} solutions, oracle {len(b)}"
    _emit(args, payload, text)
    return EXIT_OK if match else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="blockxsat", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, search=False):
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        if search:
            sp.add_argument("--node-limit", type=int, default=None)
            sp.add_argument("--seed", type=int, default=None, help="randomized tie-breaking")
            sp.add_argument("--first-index", action="store_true",
                            help="branch on the lowest uncovered row instead of the most constrained")

    sp = sub.add_parser("params", help="parameter laws and existence conditions for (m, l, lambda)")
    sp.add_argument("m", type=int)
    sp.add_argument("l", type=int)
    sp.add_argument("lam", metavar="lambda", type=int)
    common(sp)
    sp.set_defaults(func=cmd_params)

    sp = sub.add_parser("classify", help="measure regularity, uniformity, pair multiplicity")
    sp.add_argument("file")
    common(sp)
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("convert", help="formula <-> design")
    sp.add_argument("--to", choices=("design", "cnf"), required=True)
    sp.add_argument("-o", "--output")
    sp.add_argument("file")
    sp.set_defaults(func=cmd_convert)

    sp = sub.add_parser("xsat", help="exact satisfiability")
    sp.add_argument("file")
    sp.add_argument("--enumerate", type=int, metavar="N", help="list up to N solutions")
    common(sp, search=True)
    sp.set_defaults(func=cmd_xsat)

    sp = sub.add_parser("parallel-class", help="find one parallel class")
    sp.add_argument("file")
    common(sp, search=True)
    sp.set_defaults(func=cmd_parallel_class)

    sp = sub.add_parser("resolve", help="partition all blocks into parallel classes")
    sp.add_argument("file")
    common(sp, search=True)
    sp.set_defaults(func=cmd_resolve)

    sp = sub.add_parser("generate", help="emit a design")
    gen = sp.add_subparsers(dest="kind", required=True, parser_class=_Parser)
    g = gen.add_parser("sts")
    g.add_argument("m", type=int)
    g = gen.add_parser("catalog")
    g.add_argument("name", choices=sorted(CATALOG))
    g = gen.add_parser("random")
    g.add_argument("m", type=int)
    g.add_argument("l", type=int)
    g.add_argument("n", type=int)
    g.add_argument("--seed", type=int, required=True)
    for g in gen.choices.values():
        g.add_argument("--format", choices=("design", "cnf"), default="design")
        g.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_generate)

    sp = sub.add_parser("oracle-check", help="compare exact-cover enumeration with brute force")
    sp.add_argument("file")
    common(sp)
    sp.set_defaults(func=cmd_oracle_check)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (BlockXsatError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
