"""Command-line interface.

Exit codes: certify 0/1/2 for In/Out/Unknown; check-matrix and replay 0
for true/sound and 1 otherwise; 64 for malformed input or usage errors;
74 for I/O failures.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .census import census
from .classify import DEFAULT_TRIALS, IN, OUT, Settings, classify
from .documents import (
    DocumentError,
    certificate_to_doc,
    dumps,
    loads,
    property_witness_to_doc,
    replay_document,
    verdict_document,
    verdict_record,
    witness_to_doc,
)
from .forcing import close
from .graph import Graph, GraphFormatError, parse_edge_list, parse_graph6
from .linalg import ShapeError, parse_matrix
from .refute import (
    BARBELL_CAP,
    barbell_search,
    barbell_witness,
    c4_witness,
    cocktail_witness,
    complement_path_witness,
    corona_lift,
    kn_minus_c4_witness,
    named_witness,
    regular_witness,
    sample_refute,
)
from .strong import PropertyKind, has_property, property_witness

EX_USAGE = 64
EX_IOERR = 74


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EX_USAGE, f"{self.prog}: error: {message}\n")


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def _graph_from_args(args) -> Graph:
    try:
        if args.graph6 is not None:
            return parse_graph6(args.graph6)
        return parse_edge_list(_read(args.edges))
    except GraphFormatError as exc:
        raise UsageError(f"cannot parse graph: {exc}") from exc


def _add_graph_input(p: argparse.ArgumentParser, required: bool = True) -> None:
    grp = p.add_mutually_exclusive_group(required=required)
    grp.add_argument("--graph6", help="graph in short-form graph6")
    grp.add_argument("--edges", help="edge-list file ('-' for stdin): n, then one pair per line")


# -- subcommands -------------------------------------------------------


def cmd_certify(args) -> int:
    g = _graph_from_args(args)
    settings = Settings(seed=args.seed, trials=args.trials)
    v = classify(g, settings)
    doc = verdict_document(g, v, settings)
    path = None
    if args.emit_certificate and doc is not None:
        _write(args.emit_certificate, dumps(doc))
        path = args.emit_certificate
    sys.stdout.write(dumps(verdict_record(g, v, settings, path)))
    return {IN: 0, OUT: 1}.get(v.status, 2)


def cmd_check_matrix(args) -> int:
    try:
        a = parse_matrix(_read(args.matrix))
    except (ValueError, ShapeError) as exc:
        raise UsageError(f"cannot parse matrix: {exc}") from exc
    if not a.is_symmetric():
        raise UsageError("matrix is not symmetric")
    kind = PropertyKind(args.property)
    ok = has_property(a, kind)
    print("true" if ok else "false")
    if not ok and args.emit_witness:
        x = property_witness(a, kind)
        _write(args.emit_witness, dumps(property_witness_to_doc(a, x, kind)))
    return 0 if ok else 1


def _witness_for(args):
    fam = args.family
    if fam == "g98":
        return named_witness("G98")
    if fam == "g99":
        return named_witness("G99")
    if fam == "c4":
        return c4_witness()
    if fam in ("kn-minus-c4", "cocktail", "complement-path", "corona"):
        if args.n is None:
            raise UsageError(f"--n is required for {fam}")
        if fam == "kn-minus-c4":
            return kn_minus_c4_witness(args.n)
        if fam == "cocktail":
            return cocktail_witness(args.n, seed=args.seed)
        if fam == "complement-path":
            return complement_path_witness(args.n, seed=args.seed)
        return corona_lift(c4_witness(), args.n)
    if args.graph6 is None and args.edges is None:
        raise UsageError(f"a graph is required for {fam}")
    g = _graph_from_args(args)
    if fam == "regular":
        return regular_witness(g)
    if fam == "barbell":
        if g.n > BARBELL_CAP:
            raise UsageError(f"barbell search is capped at n = {BARBELL_CAP}")
        p = barbell_search(g)
        return barbell_witness(g, p) if p is not None else None
    return sample_refute(g, args.trials, args.seed)


def cmd_witness(args) -> int:
    try:
        w = _witness_for(args)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if w is None:
        print("no witness found", file=sys.stderr)
        return 1
    _write(args.out, dumps(witness_to_doc(w)))
    return 0


def cmd_replay(args) -> int:
    try:
        doc = loads(_read(args.certificate))
        ok = replay_document(doc)
    except DocumentError as exc:
        raise UsageError(f"malformed document: {exc}") from exc
    print("sound" if ok else "unsound")
    return 0 if ok else 1


def cmd_census(args) -> int:
    try:
        lines = _read(args.input).splitlines()
    except OSError as exc:
        print(f"cannot read input: {exc}", file=sys.stderr)
        return EX_IOERR
    result = census(lines, seed=args.seed, trials=args.trials, jobs=args.jobs)
    try:
        if args.out:
            os.makedirs(args.out, exist_ok=True)
        records = []
        for e in result.entries:
            if e.error is not None:
                print(f"line {e.index + 1}: {e.error}", file=sys.stderr)
                records.append({"line": e.index + 1, "input": e.line, "error": e.error})
                continue
            rec = dict(e.record, line=e.index + 1)
            if args.out and e.document is not None:
                name = f"graph-{e.index + 1:06d}.json"
                _write(os.path.join(args.out, name), dumps(e.document))
                rec["document"] = name
            records.append(rec)
        if args.out:
            with open(os.path.join(args.out, "records.jsonl"), "w", encoding="utf-8") as fh:
                for rec in records:
                    fh.write(json.dumps(rec, sort_keys=True) + "\n")
    except OSError as exc:
        print(f"cannot write output: {exc}", file=sys.stderr)
        return EX_IOERR
    sys.stdout.write(dumps(result.summary))
    return 0


def cmd_forcing_trace(args) -> int:
    g = _graph_from_args(args)
    cert = close(g)
    if args.json:
        sys.stdout.write(dumps(certificate_to_doc(cert)))
    else:
        for t, step in enumerate(cert.steps, 1):
            added = " ".join(f"{{{i},{j}}}" for i, j in step.added_pairs)
            print(f"{t:3d} {step.rule:<9} {added}")
        print("complete" if cert.complete else f"stalled with {len(cert.final.non_edges())} non-edges left")
    return 0 if cert.complete else 2


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="sspgraph", description="Certify or refute the strong spectral property for graphs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("certify", help="classify a graph and print its verdict record")
    _add_graph_input(p)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    p.add_argument("--emit-certificate", metavar="PATH", help="write the certificate or witness document")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("check-matrix", help="decide SSP, SMP or SAP for one symmetric matrix")
    p.add_argument("--matrix", required=True, help="matrix file ('-' for stdin)")
    p.add_argument("--property", choices=[k.value for k in PropertyKind], default="ssp")
    p.add_argument("--emit-witness", metavar="PATH")
    p.set_defaults(func=cmd_check_matrix)

    p = sub.add_parser("witness", help="build a verified witness from a known construction")
    p.add_argument(
        "family",
        choices=["regular", "barbell", "sample", "kn-minus-c4", "cocktail", "complement-path", "corona", "c4", "g98", "g99"],
    )
    _add_graph_input(p, required=False)
    p.add_argument("--n", type=int, help="size parameter of the family")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("replay", help="check a certificate or witness document")
    p.add_argument("--certificate", required=True, help="document path ('-' for stdin)")
    p.set_defaults(func=cmd_replay)

    p = sub.add_parser("census", help="classify a stream of graph6 lines")
    p.add_argument("--in", dest="input", default="-", help="graph6 file, one graph per line (default stdin)")
    p.add_argument("--out", help="directory for records.jsonl and per-graph documents")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("forcing-trace", help="print the forcing closure step by step")
    _add_graph_input(p)
    p.add_argument("--json", action="store_true", help="print the certificate document instead")
    p.set_defaults(func=cmd_forcing_trace)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"sspgraph: {exc}", file=sys.stderr)
        return EX_USAGE
    except OSError as exc:
        print(f"sspgraph: {exc}", file=sys.stderr)
        return EX_IOERR
