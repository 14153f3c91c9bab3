"""Command-line front end.

Exit codes: 0 success, 2 refused precondition, 3 failed verification,
4 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import errors
from .cosets import coset_lattice, coset_poset, format_facets, order_complex, render
from .dot import hasse_dot
from .expr import parse_group_expr
from .groups import DEFAULT_MAX_ORDER, load_table
from .homology import MAX_CM_FACES, betti, is_seq_cm, predicted_spheres
from .labeling import build_context, dump_labels, labeled_hasse, with_square_free_factors
from .report import labeling_pipeline, run_report
from .subgroups import classify, is_solvable

EXIT_OK, EXIT_REFUSED, EXIT_FAILED, EXIT_INPUT = 0, 2, 3, 4


def _load(args):
    if args.table:
        return load_table(args.table, max_order=args.max_order)
    if not args.expr:
        raise errors.BadTable("give a group expression or --table PATH")
    return parse_group_expr(args.expr, args.max_order)


def _emit(args, data: dict, text: str):
    if args.json:
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        print(text)


def _write_dot(path, text):
    with open(path, "w") as fh:
        fh.write(text)


def cmd_classify(args) -> int:
    g = _load(args)
    cl = classify(g)
    data = {"schema": 1, "group": g.label, "order": g.order, "solvable": cl.solvable,
            "supersolvable": cl.supersolvable,
            "sylows_elementary_abelian": cl.sylows_elementary_abelian,
            "complemented": cl.complemented}
    text = "\n".join(f"{k}: {v}" for k, v in data.items() if k != "schema")
    _emit(args, data, text)
    return EXIT_OK


def cmd_poset(args) -> int:
    g = _load(args)
    poset = coset_poset(g)
    k = order_complex(poset)
    if args.dot:
        _write_dot(args.dot, hasse_dot(g, coset_lattice(g)))
    if args.facets:
        with open(args.facets, "w") as fh:
            fh.write(format_facets(k))
    data = {"schema": 1, "group": g.label, "elements": len(poset), "covers": len(poset.covers),
            "dimension": k.dim, "f_vector": k.f_vector(), "components": len(k.components())}
    text = "\n".join(f"{k_}: {v}" for k_, v in data.items() if k_ != "schema")
    _emit(args, data, text)
    return EXIT_OK


def cmd_label(args) -> int:
    g = _load(args)
    if args.decompose:
        g = with_square_free_factors(g)
    lh = labeled_hasse(build_context(g, args.levels))
    if args.dot:
        _write_dot(args.dot, hasse_dot(g, lh.lattice, lh.labels))
    if args.json:
        rows = [{"lower": render(g, lo), "upper": render(g, hi), "label": lh.labels[lo, hi]}
                for lo, hi in lh.lattice.covers]
        print(json.dumps({"schema": 1, "group": g.label, "levels": args.levels, "labels": rows},
                         indent=2, sort_keys=True))
    else:
        print(dump_labels(lh), end="")
    return EXIT_OK


def cmd_verify(args) -> int:
    g = given = _load(args)
    if args.decompose:
        g = with_square_free_factors(g)
    build_context(g, args.levels)  # surfaces a refusal with its own error code
    res = labeling_pipeline(g, args.levels)
    res["presentation"] = "given" if g is given else "decomposed"
    lh = res.pop("lh")
    if args.dot:
        _write_dot(args.dot, hasse_dot(g, lh.lattice, lh.labels))
    data = {"schema": 1, "group": g.label, **res}
    text = "\n".join(f"{k}: {v}" for k, v in data.items()
                     if k not in ("schema", "violations", "refused", "built"))
    _emit(args, data, text)
    return EXIT_OK if res["el_ok"] and res["shelling_ok_by_convention"] else EXIT_FAILED


def cmd_homology(args) -> int:
    g = _load(args)
    k = order_complex(coset_poset(g))
    bv = betti(k, args.field)
    data = {"schema": 1, "group": g.label, "field": bv.field, "betti": list(bv.ranks)}
    if is_solvable(g):
        d, n = predicted_spheres(g)
        data["predicted_spheres"] = {"dimension": d, "count": n}
    if k.num_faces() <= MAX_CM_FACES:
        data["seq_cm"] = is_seq_cm(k, args.field).ok
    else:
        data["seq_cm"] = None
    text = "\n".join(f"{k_}: {v}" for k_, v in data.items() if k_ != "schema")
    _emit(args, data, text)
    return EXIT_OK


def cmd_report(args) -> int:
    g = _load(args)
    rep = run_report(g, args.field, args.levels, args.max_order)
    if args.dot:
        if rep["labeling"]["built"]:
            lh = labeled_hasse(build_context(with_square_free_factors(g), args.levels))
            _write_dot(args.dot, hasse_dot(g, lh.lattice, lh.labels))
        elif g.order > 1:
            _write_dot(args.dot, hasse_dot(g, coset_lattice(g)))
    print(json.dumps(rep, indent=2, sort_keys=True))
    return EXIT_OK if rep["agreement"]["all"] else EXIT_FAILED


COMMANDS = {
    "classify": (cmd_classify, "supersolvable / complemented classification"),
    "poset": (cmd_poset, "coset poset sizes, Hasse diagram and facets"),
    "label": (cmd_label, "edge labels of the coset lattice"),
    "verify": (cmd_verify, "check the labeling and the induced shelling"),
    "homology": (cmd_homology, "reduced Betti numbers and Cohen-Macaulay test"),
    "report": (cmd_report, "run everything and print a JSON report"),
}


def _field_arg(s: str) -> str:
    s = s.lower()
    if s not in ("q", "2", "3"):
        raise argparse.ArgumentTypeError("field must be q, 2 or 3")
    return "Q" if s == "q" else s


class _Parser(argparse.ArgumentParser):
    """Usage errors are input errors, so they exit with status 4 rather than 2."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("expr", nargs="?", help='group expression such as "Z6 x S3"')
    common.add_argument("--table", metavar="PATH", help="read a JSON Cayley table instead")
    common.add_argument("--field", type=_field_arg, default="Q", help="q, 2 or 3 (default q)")
    common.add_argument("--levels", choices=("lex", "prime"), default="lex",
                        help="how label levels are numbered")
    common.add_argument("--dot", metavar="PATH", help="write a DOT Hasse diagram")
    common.add_argument("--json", action="store_true", help="JSON output")
    common.add_argument("--max-order", type=int, default=DEFAULT_MAX_ORDER, metavar="N")
    parser = _Parser(prog="cosetshell", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_) in COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=help_)
        if name == "poset":
            p.add_argument("--facets", metavar="PATH", help="write the facet list")
        if name in ("label", "verify"):
            p.add_argument("--decompose", action="store_true",
                           help="search for a square-free direct decomposition first")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command][0](args)
    except errors.CosetShellError as exc:
        print(f"error [{exc.code}]: {exc}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"error [IOError]: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
