"""Command-line entry point.

Exit codes: 0 success, 1 property check failed, 2 search budget exceeded,
3 invalid input or parse error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import io
from .claims import AuditParams, audit_all, audit_report, get_claim, registry
from .errors import InvalidInput, ModsumError
from .graph import FAMILIES, generate_family
from .labeling import classify, is_injective_labeling
from .search import Budget, PropertySpec, Status, min_modulus

EXIT_OK, EXIT_FAIL, EXIT_BUDGET, EXIT_INPUT = 0, 1, 2, 3


def _positive_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


class _Parser(argparse.ArgumentParser):
    # usage errors share the invalid-input exit code
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="modsum", description="Modular sumset labelings of graphs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("gen", help="emit a family graph as JSON")
    p.add_argument("--family", required=True, choices=sorted(FAMILIES))
    p.add_argument("--size", type=_positive_int)
    p.add_argument("--size2", type=_positive_int)

    p = sub.add_parser("verify", help="check that a labeling is injective")
    p.add_argument("--labeling", required=True, type=Path)

    p = sub.add_parser("classify", help="report every property of a labeling")
    p.add_argument("--labeling", required=True, type=Path)
    p.add_argument("--json", action="store_true", help="print JSON instead of text")

    p = sub.add_parser("search", help="least modulus admitting a labeling with a property")
    p.add_argument("--graph", required=True, type=Path)
    p.add_argument("--spec", required=True, help="plain, indexer, weak, weak-literal, weak-k-uniform, strong, ...")
    p.add_argument("--k", type=_positive_int)
    p.add_argument("--n-max", type=_positive_int)
    p.add_argument("--budget-nodes", type=_positive_int)
    p.add_argument("--budget-seconds", type=_positive_int)

    p = sub.add_parser("audit", help="check claims against exhaustive search")
    which = p.add_mutually_exclusive_group()
    which.add_argument("--claim", action="append", help="claim id (repeatable)")
    which.add_argument("--all", action="store_true", help="every registered claim (default)")
    p.add_argument("--max-vertices", type=_positive_int)
    p.add_argument("--max-modulus", type=_positive_int)
    p.add_argument("--budget-nodes", type=_positive_int)
    p.add_argument("--budget-seconds", type=_positive_int)
    p.add_argument("--json", type=Path, help="also write the JSON report here")
    p.add_argument("--list", action="store_true", help="list claim ids and exit")

    p = sub.add_parser("export", help="write a labeling as Graphviz DOT")
    p.add_argument("--labeling", required=True, type=Path)
    p.add_argument("--dot", required=True, type=Path)
    return parser


def _read(path: Path) -> str:
    try:
        return path.read_text(encoding="utf-8")
    except OSError as exc:
        raise InvalidInput(f"cannot read {path}: {exc.strerror}") from None


def _budget(args) -> Budget:
    default = Budget()
    return Budget(
        nodes=args.budget_nodes or default.nodes,
        seconds=float(args.budget_seconds) if args.budget_seconds else default.seconds,
    )


def cmd_gen(args, out):
    g = generate_family(args.family, args.size, args.size2)
    print(io.dumps(io.graph_to_json(g)), file=out)
    return EXIT_OK


def cmd_verify(args, out):
    lab = io.parse_labeling(_read(args.labeling))
    ok, clash = is_injective_labeling(lab)
    report = {"injective": ok}
    if not ok:
        u, v = clash
        report["clash"] = {"vertices": [u, v], "label": list(lab.labels[u].members)}
    print(io.dumps(report), file=out)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_classify(args, out):
    lab = io.parse_labeling(_read(args.labeling))
    ok, clash = is_injective_labeling(lab)
    if not ok:
        print(io.dumps({"injective": False, "clash": list(clash)}), file=out)
        return EXIT_FAIL
    rep = classify(lab).to_json()
    if args.json:
        print(io.dumps(rep), file=out)
    else:
        for key in sorted(rep):
            if key != "witnesses":
                print(f"{key}: {rep[key]}", file=out)
        for key, w in rep["witnesses"].items():
            print(f"witness[{key}]: {w}", file=out)
    return EXIT_OK


def cmd_search(args, out):
    g = io.parse_graph(_read(args.graph))
    spec = PropertySpec.parse(args.spec, args.k)
    result = min_modulus(g, spec, n_max=args.n_max, budget=_budget(args))
    print(io.dumps(result.to_json()), file=out)
    if result.value is not None:
        return EXIT_OK
    if any(o.status is Status.BUDGET_EXCEEDED for _, o in result.per_n):
        return EXIT_BUDGET
    return EXIT_FAIL


def cmd_audit(args, out):
    if args.list:
        for c in registry():
            print(f"{c.id:<12} {c.expected.value:<8} {c.description}", file=out)
        return EXIT_OK
    ids = None
    if args.claim:
        ids = [get_claim(cid).id for cid in args.claim]
    defaults = AuditParams()
    params = AuditParams(
        max_vertices=args.max_vertices or defaults.max_vertices,
        max_modulus=args.max_modulus or defaults.max_modulus,
        budget=_budget(args),
    )
    report = audit_report(audit_all(params, ids))
    out.write(report.text)
    if args.json:
        args.json.write_text(io.dumps(report.data) + "\n", encoding="utf-8")
    return report.exit_code


def cmd_export(args, out):
    lab = io.parse_labeling(_read(args.labeling))
    args.dot.write_text(io.emit_dot(lab), encoding="utf-8")
    return EXIT_OK


COMMANDS = {
    "gen": cmd_gen,
    "verify": cmd_verify,
    "classify": cmd_classify,
    "search": cmd_search,
    "audit": cmd_audit,
    "export": cmd_export,
}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_INPUT
    try:
        return COMMANDS[args.command](args, out)
    except ModsumError as exc:
        print(f"modsum: error: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
