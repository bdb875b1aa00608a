"""Command-line entry point.

    zdlab analyze <ring> --ideal <gens>
    zdlab graph <ring> --ideal <gens> --kind classic|extended --format dot|json|text -o <path>
    zdlab verify [--corpus <path>] [-o <path>] [--jobs N]

Exit codes: 0 ok, 1 inconsistent verdict, 2 parse error, 3 size cap, 4 I/O.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from zdlab.amalgam import t_partition
from zdlab.corpus import DEFAULT_CORPUS
from zdlab.export import FORMATS
from zdlab.harness import Instance, report_exit_code, run_corpus
from zdlab.idealalg import annihilator_of_set, nilradical, nonzero_zero_divisors
from zdlab.ringkernel import DEFAULT_SIZE_CAP, SizeCapError
from zdlab.ringspec import IdealSpecError, InfiniteRingError, SpecSyntaxError
from zdlab.zdgraph import (
    CLASSIC,
    EXTENDED,
    classic_graph,
    diameter,
    extended_graph,
    girth,
    graphs_equal,
    has_condition_a,
    is_complete,
)

EXIT_OK, EXIT_INCONSISTENT, EXIT_PARSE, EXIT_SIZE, EXIT_IO = 0, 1, 2, 3, 4

PARSE_ERRORS = (SpecSyntaxError, InfiniteRingError, IdealSpecError)


def _fmt(value):
    if isinstance(value, float) and math.isinf(value):
        return "inf"
    if isinstance(value, bool):
        return "yes" if value else "no"
    return str(value)


def analyze_rows(inst):
    R, S = inst.ring, inst.amalgam
    rows = [
        ("|R|", R.size),
        ("|I|", len(inst.ideal)),
        ("|R⋈I|", S.size),
        ("|Z(R)*|", len(nonzero_zero_divisors(R))),
        ("|Nil(R)|", len(nilradical(R))),
        ("I ⊆ Ann(Nil(R))", inst.ideal.issubset(annihilator_of_set(R, nilradical(R).elements))),
        ("|Z(R⋈I)*|", len(nonzero_zero_divisors(S))),
    ]
    rows += [(k, v) for k, v in t_partition(S).sizes().items()]
    for name, classic, extended in (("R", inst.gamma_r, inst.gammabar_r),
                                    ("R⋈I", inst.gamma_s, inst.gammabar_s)):
        for sym, g in (("Γ", classic), ("Γ̄", extended)):
            rows += [
                (f"{sym}({name}) vertices", len(g)),
                (f"{sym}({name}) edges", g.edge_count),
                (f"{sym}({name}) diameter", diameter(g)),
                (f"{sym}({name}) girth", girth(g)),
                (f"{sym}({name}) complete", is_complete(g)),
            ]
        rows.append((f"Γ̄({name}) condition A", has_condition_a(extended)))
        rows.append((f"Γ({name}) = Γ̄({name})", graphs_equal(classic, extended)))
    return rows


def cmd_analyze(args, out):
    inst = Instance.from_specs(args.ring, args.ideal, size_cap=args.size_cap)
    rows = analyze_rows(inst)
    width = max(len(k) for k, _ in rows)
    out.write(f"instance: {inst.spec}\n")
    for key, value in rows:
        out.write(f"{key:<{width}}  {_fmt(value)}\n")
    return EXIT_OK


def cmd_graph(args, out):
    inst = Instance.from_specs(args.ring, args.ideal, size_cap=args.size_cap)
    target = inst.ring if args.of == "ring" else inst.amalgam
    g = classic_graph(target) if args.kind == CLASSIC else extended_graph(target)
    _write(FORMATS[args.format](g), args.output, out)
    return EXIT_OK


def cmd_verify(args, out):
    if args.corpus:
        with open(args.corpus, encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = DEFAULT_CORPUS
    report = run_corpus(text, size_cap=args.size_cap, jobs=args.jobs)
    _write(json.dumps(report, indent=2) + "\n", args.output, out)
    s = report["summary"]
    sys.stderr.write(f"checked {s['checked']}, skipped {s['skipped']}, inconsistent {s['inconsistent']}, "
                     f"parse errors {s['parse_errors']}, over size cap {s['size_capped']}\n")
    return report_exit_code(report)


def _write(text, path, out):
    if path in (None, "-"):
        out.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--size-cap", type=int, default=argparse.SUPPRESS,
                        help=f"maximum ring size (default {DEFAULT_SIZE_CAP})")

    parser = argparse.ArgumentParser(prog="zdlab", parents=[common],
                                     description="Zero-divisor graphs of amalgamated duplications.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="print the metrics of R and R⋈I")
    p.add_argument("ring")
    p.add_argument("--ideal", default="0")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("graph", parents=[common], help="export a zero-divisor graph")
    p.add_argument("ring")
    p.add_argument("--ideal", default="0")
    p.add_argument("--kind", choices=[CLASSIC, EXTENDED], default=EXTENDED)
    p.add_argument("--format", choices=sorted(FORMATS), default="dot")
    p.add_argument("--of", choices=["amalgam", "ring"], default="amalgam",
                   help="graph of R⋈I (default) or of R")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("verify", parents=[common], help="run every checker over a corpus")
    p.add_argument("--corpus", help="corpus file, one 'ring ; ideal' per line (default: built-in)")
    p.add_argument("-o", "--output")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, out=None):
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    if not hasattr(args, "size_cap"):
        args.size_cap = DEFAULT_SIZE_CAP
    try:
        return args.func(args, out)
    except PARSE_ERRORS as exc:
        sys.stderr.write(f"parse error: {exc}\n")
        return EXIT_PARSE
    except SizeCapError as exc:
        sys.stderr.write(f"size cap: {exc}\n")
        return EXIT_SIZE
    except OSError as exc:
        sys.stderr.write(f"I/O error: {exc}\n")
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
