"""Command-line front end.

Exit codes: 0 success, 1 invalid input, 2 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import balancing, explorer, order
from .words import Code, CodeError, PathLengthSequence, canonical_code, is_maximal, kraft_sum, parse_sequence

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_INTERNAL = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def parse_sequence_arg(text: str) -> PathLengthSequence:
    try:
        return parse_sequence(text)
    except CodeError as exc:
        raise UsageError(str(exc)) from None


def _size_arg(text: str) -> int:
    if not text.isdigit() or int(text) < 1:
        raise argparse.ArgumentTypeError(f"invalid size {text!r}")
    return int(text)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="imbalance", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def pair(name, help_text, formats=("text", "json")):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("first")
        p.add_argument("second")
        p.add_argument("--format", choices=formats, default="text")
        return p

    pair("compare", "classify two sequences in the imbalance order")
    pair("decompose", "comparability blocks of two canonical codes")
    p = pair("meet", "greatest lower bound by iterated balancing")
    p.add_argument("--trace", action="store_true", help="print every balancing step")
    p = pair("join", "least upper bound over the enumerated universe")
    p.add_argument("--max-size", type=int, default=explorer.DEFAULT_MAX_SIZE)

    p = sub.add_parser("enumerate", help="list every sequence of a size")
    p.add_argument("--size", type=_size_arg, required=True)
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("lattice", help="build the imbalance poset of a size")
    p.add_argument("--size", type=_size_arg, required=True)
    p.add_argument("--check", choices=("lattice", "modular"))
    p.add_argument("--max-size", type=int, default=explorer.DEFAULT_MAX_SIZE)
    p.add_argument("--format", choices=("text", "json", "dot"), default="text")

    p = sub.add_parser("check-maximal", help="test a set of words for maximality")
    p.add_argument("words", nargs="+")
    p.add_argument("--format", choices=("text", "json"), default="text")
    return parser


def _emit(out, fmt, text, record):
    if fmt == "json":
        out.write(json.dumps(record) + "\n")
    else:
        out.write(text + "\n")


def run(args: argparse.Namespace, out) -> int:
    verb = args.verb
    fmt = args.format

    if verb in ("compare", "decompose", "meet", "join"):
        a = parse_sequence_arg(args.first)
        b = parse_sequence_arg(args.second)
        if len(a) != len(b):
            raise UsageError(f"size mismatch: {len(a)} vs {len(b)}")

    if verb == "compare":
        rel = order.compare(a, b)
        _emit(out, fmt, rel.value, {"first": str(a), "second": str(b), "relation": rel.value})
    elif verb == "decompose":
        dec = order.interval_decomposition(canonical_code(a), canonical_code(b))
        lines = []
        for blk in dec.blocks:
            lines.append(
                f"{blk.index} A={{{','.join(map(str, blk.a_words))}}} B={{{','.join(map(str, blk.b_words))}}} "
                f"dominating={blk.dominating} kraft={blk.kraft}"
            )
        _emit(out, fmt, "\n".join(lines), dec.to_records())
    elif verb == "meet":
        trace = balancing.meet(a, b)
        if fmt == "json":
            _emit(out, fmt, "", trace.to_record())
        else:
            if args.trace:
                for idx, step in enumerate(trace.steps, start=1):
                    out.write(f"step {idx}: {step}\n")
            out.write(f"{trace.meet}\n")
    elif verb == "join":
        universe = _universe(len(a), args.max_size)
        lub = balancing.join(a, b, universe)
        _emit(out, fmt, str(lub), {"first": str(a), "second": str(b), "join": str(lub)})
    elif verb == "enumerate":
        seqs = explorer.enumerate_sequences(args.size)
        if args.count_only:
            _emit(out, fmt, str(len(seqs)), {"size": args.size, "count": len(seqs)})
        else:
            _emit(out, fmt, "\n".join(map(str, seqs)), [list(s.lengths) for s in seqs])
    elif verb == "lattice":
        return _run_lattice(args, out)
    elif verb == "check-maximal":
        try:
            code = Code(args.words)
        except CodeError as exc:
            raise UsageError(str(exc)) from None
        ok = is_maximal(code)
        _emit(out, fmt, "true" if ok else "false", {"maximal": ok, "kraft_sum": str(kraft_sum(code))})
    return EXIT_OK


def _universe(t: int, cap: int):
    if t > cap:
        raise UsageError(f"size {t} exceeds the cap {cap}; pass --max-size to override")
    return explorer.enumerate_sequences(t)


def _run_lattice(args, out) -> int:
    try:
        p = explorer.build_poset(args.size, max_size=args.max_size)
    except explorer.SizeCapError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "dot":
        out.write(explorer.export_dot(p))
        return EXIT_OK

    record = p.to_dict()
    lines = [
        f"size {p.size}: {p.count} sequences, {len(p.covers)} covers",
        f"bottom {p.elements[p.bottom]}",
        f"top {p.elements[p.top]}",
    ]
    status = EXIT_OK
    if args.check:
        lat = explorer.check_lattice(p)
        record["lattice_check"] = lat.to_dict()
        lines.append(f"lattice: {str(lat.is_lattice).lower()}")
        if not lat.is_lattice:
            status = EXIT_INTERNAL
        elif args.check == "modular":
            mod = explorer.check_modularity(p, lat)
            record["modularity_check"] = mod.to_dict()
            lines.append(f"modular: {str(mod.modular).lower()}")
            if mod.witness:
                x, y, z = mod.witness
                lines.append(f"witness x={x} y={y} z={z}")
    _emit(out, args.format, "\n".join(lines), record)
    return status


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return run(args, out)
    except UsageError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT
    except CodeError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT
    except (balancing.InvariantError, balancing.LatticeError, AssertionError) as exc:
        err.write(f"internal error: {exc}\n")
        state = getattr(exc, "state", None)
        if state:
            err.write(json.dumps(state, indent=2, default=str) + "\n")
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
