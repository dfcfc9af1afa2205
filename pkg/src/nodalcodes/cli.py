"""Command-line interface.

Thin in-process client of the report layer in service.py.  Exit codes:
0 for pass, 1 for fail, 2 for a budgeted (incomplete but sound) search,
64 for a usage error.  With --json the full report is printed with
sorted keys so output is byte-identical between runs up to the
timestamp field.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import service

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_BUDGETED = 2
EXIT_USAGE = 64

_STATUS_EXIT = {"pass": EXIT_PASS, "fail": EXIT_FAIL, "budgeted": EXIT_BUDGETED}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _common_flags() -> _Parser:
    common = _Parser(add_help=False)
    # SUPPRESS keeps a subparser from clobbering a flag given before the
    # verb; real defaults are filled in after parsing.
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="emit the full JSON report")
    common.add_argument("--budget", type=int, default=argparse.SUPPRESS,
                        metavar="NODES",
                        help="search budget in nodes for budgetable commands")
    common.add_argument("--jobs", type=int, default=argparse.SUPPRESS, metavar="N",
                        help="worker count (results are identical for all N)")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, metavar="S",
                        help="seed for randomized checks (echoed in the report)")
    return common


def build_parser() -> _Parser:
    common = _common_flags()
    parser = _Parser(prog="nodalcodes", description=__doc__, parents=[common])
    sub = parser.add_subparsers(dest="verb", required=True,
                                parser_class=lambda **kw: _Parser(parents=[common], **kw))

    p = sub.add_parser("codes", help="weight enumerators, duals, equivalence")
    p.add_argument("action", choices=["enumerator", "dual", "equivalent"])
    p.add_argument("rows", nargs="+", help="generator rows as 0/1 strings; "
                   "for 'equivalent' separate the two matrices with a single '/'")

    p = sub.add_parser("families", help="named code families and catalogs")
    p.add_argument("action",
                   choices=["quintic", "quartic", "k8", "sextic", "candidates"])
    p.add_argument("--nodes", type=int, default=None)

    p = sub.add_parser("pg", help="finite Radon transform round trips")
    p.add_argument("--q", type=int, default=2)
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--trials", type=int, default=20)

    p = sub.add_parser("search", help="code enumeration and extension search")
    p.add_argument("action", choices=["restricted", "extensions", "solve"])
    p.add_argument("--k", type=int, default=None)

    p = sub.add_parser("k3", help="candidate codes of nodal K3 surfaces")
    p.add_argument("action", choices=["classify", "existence"])
    p.add_argument("--nu", type=int, default=None)
    p.add_argument("--dmod8", type=int, default=None)
    p.add_argument("--case", choices=["t13", "t15"], default=None)
    p.add_argument("--d", type=int, default=None)

    p = sub.add_parser("barth", help="the 65-node sextic: geometry and code")
    p.add_argument("action", choices=["nodes", "secants", "graph", "code",
                                      "det", "segre", "aut", "census"])

    p = sub.add_parser("dorohall", help="distance-regular graphs on 65 vertices")
    p.add_argument("action", choices=["build", "compare", "indep"])
    p.add_argument("graphs", nargs="*",
                   help="graph names (frobenius|quadric|nodes)")
    p.add_argument("--size", type=int, default=None)

    p = sub.add_parser("unobstructed", help="evaluation ranks at the nodes")
    p.add_argument("action", nargs="?",
                   choices=["planes", "line", "projection"], default=None)
    p.add_argument("--surface", default=None)

    p = sub.add_parser("acceptance", help="run the acceptance suite")
    p.add_argument("--suite", choices=["core"], default="core")
    p.add_argument("--criteria", type=int, nargs="*", default=None)

    return parser


def _dispatch(args) -> service.Report:
    if args.verb == "codes":
        rows, other = args.rows, None
        if "/" in rows:
            idx = rows.index("/")
            rows, other = rows[:idx], rows[idx + 1:]
        return service.codes_report(args.action, rows, other)
    if args.verb == "families":
        return service.families_report(args.action, args.nodes)
    if args.verb == "pg":
        return service.pg_report(args.q, args.k, args.seed, args.trials)
    if args.verb == "search":
        return service.search_report(args.action, args.k, args.budget)
    if args.verb == "k3":
        return service.k3_report(args.action, args.nu, args.dmod8,
                                 args.case, args.d, args.budget)
    if args.verb == "barth":
        return service.barth_report(args.action, args.budget)
    if args.verb == "dorohall":
        which = args.graphs[0] if args.graphs else None
        other = args.graphs[1] if len(args.graphs) > 1 else None
        return service.dorohall_report(args.action, which, other,
                                       args.size, args.budget)
    if args.verb == "unobstructed":
        return service.unobstructed_report(args.surface, args.action)
    if args.verb == "acceptance":
        return service.acceptance_report(args.criteria, args.budget)
    raise service.UsageError(f"unknown verb {args.verb!r}")


def _print_text(report: service.Report) -> None:
    print(f"{report.command}: {report.status}")
    if report.command == "acceptance":
        for r in report.payload["results"]:
            line = f"  [{r['status']:>8}] {r['number']:>2} {r['slug']}"
            if r["status"] == "fail" and "error" in r:
                line += f" -- {r['error']}"
            print(line)
        return
    for key, value in sorted(report.payload.items()):
        text = json.dumps(value, sort_keys=True)
        if len(text) > 200:
            text = text[:197] + "..."
        print(f"  {key}: {text}")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else EXIT_USAGE
    for name, default in (("json", False), ("budget", None),
                          ("jobs", 1), ("seed", 0)):
        if not hasattr(args, name):
            setattr(args, name, default)
    try:
        report = _dispatch(args)
    except service.UsageError as exc:
        print(f"nodalcodes: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.seed and report.seed is None:
        report.seed = args.seed
    if args.json:
        print(json.dumps(report.model_dump(by_alias=True), sort_keys=True))
    else:
        _print_text(report)
    return _STATUS_EXIT.get(report.status, EXIT_FAIL)


if __name__ == "__main__":
    sys.exit(main())
