"""Command line front end.

Exit status: 0 on success, 1 when a computation fails (caps, unsupported
relations, golden mismatches), 2 on usage errors.
"""

import argparse
import os
import sys
from importlib import resources

from .clusters import generalized_cluster_polynomial
from .core import (CapExceeded, DiagramShape, Pattern, PatternSet, parse_pattern,
                   parse_relation)
from .egf import DEFAULT_ORDER, gf_closed
from .families import FamilyId, family_polys
from .oracle import DEFAULT_CAP_CELLS, distribution_polynomial
from .poset import (DEFAULT_CAP_POSET, block_chain_poset, le_chain_formula, le_end_formula,
                    le_start_end_formula, le_start_formula, linear_extension_count)
from .presets import PRESETS

ENV_PREFIX = "GENCLUSTER_"


class UsageError(Exception):
    pass


def _env_int(name, default):
    raw = os.environ.get(ENV_PREFIX + name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise UsageError("%s%s must be an integer, got %r" % (ENV_PREFIX, name, raw)) from None


def _shape(text):
    try:
        i, j, k = (int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError("shape must be i,j,k (got %r)" % text) from None
    if min(i, j, k) < 0 or k < 1:
        raise argparse.ArgumentTypeError("shape needs i, j >= 0 and k >= 1")
    return i, j, k


def _bundled(name):
    if name.endswith(".pat"):
        name = name[:-4]
    path = resources.files("gencluster") / "data" / "patterns" / (name + ".pat")
    return path if path.is_file() else None


def load_pattern(spec: str) -> Pattern:
    """A pattern file path, a bundled name such as a33, or WORD:k."""
    try:
        if os.path.isfile(spec):
            with open(spec, encoding="utf-8") as fh:
                return parse_pattern(fh.read())
        if ":" in spec:
            word, _, k = spec.rpartition(":")
            return Pattern.from_word(word, int(k))
        path = _bundled(spec)
        if path is not None:
            return parse_pattern(path.read_text(encoding="utf-8"))
    except ValueError as exc:
        raise UsageError("bad pattern %r: %s" % (spec, exc)) from None
    raise UsageError("no pattern file or shorthand %r" % spec)


def load_sets(specs):
    if not specs:
        raise UsageError("at least one --pattern is required")
    out = []
    for idx, spec in enumerate(specs):
        members = tuple(load_pattern(s) for s in spec.split("+"))
        try:
            out.append(PatternSet(members, idx))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    return tuple(out)


def _relation(name):
    try:
        return parse_relation(name)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _emit(rows, fmt, out, header=("param", "polynomial")):
    if fmt == "csv":
        for label, value in rows:
            out.write("%s,%s\n" % (label, value))
        return
    width = max([len(header[0])] + [len(str(label)) for label, _ in rows])
    out.write("%s | %s\n" % (header[0].ljust(width), header[1]))
    for label, value in rows:
        out.write("%s | %s\n" % (str(label).ljust(width), value))


# -- subcommands ----------------------------------------------------------------

def cmd_dist(args, out):
    i, j, k = args.shape
    sets = load_sets(args.pattern)
    r = _relation(args.relation)
    m = i + j + k * args.n
    if args.theorem:
        poly = gf_closed(i, j, k, sets, r, m, args.source,
                         cap_poset=args.cap_poset, cap_cells=args.cap_cells)[m]
    else:
        poly = distribution_polynomial(DiagramShape(i, k, args.n, j), r, sets,
                                       cap=args.cap_cells, jobs=args.jobs)
    if args.format == "csv":
        out.write("%d,%s\n" % (args.n, poly))
    else:
        out.write("%s\n" % poly)


def cmd_cluster(args, out):
    i, j, k = args.shape
    sets = load_sets(args.pattern)
    r = _relation(args.relation)
    poly = generalized_cluster_polynomial(args.kind, i, j, k, args.n, sets, r,
                                          cap_poset=args.cap_poset, cap_cells=args.cap_cells,
                                          method="brute" if args.fallback else "auto")
    if args.format == "csv":
        out.write("%d,%s\n" % (args.n, poly))
    else:
        out.write("%s\n" % poly)


def cmd_family(args, out):
    try:
        fid = FamilyId.parse(args.id)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    poly = family_polys(fid, args.kind, args.n)
    if args.format == "csv":
        out.write("%d,%s\n" % (args.n, poly))
    else:
        out.write("%s\n" % poly)


def cmd_series(args, out):
    sets = load_sets(args.pattern)
    r = _relation(args.relation)
    shapes = [args.shape] + list(args.combine or [])
    k = args.shape[2]
    if any(s[2] != k for s in shapes):
        raise UsageError("combined shapes must share k")
    total = None
    for i, j, _ in shapes:
        s = gf_closed(i, j, k, sets, r, args.order, args.source,
                      cap_poset=args.cap_poset, cap_cells=args.cap_cells)
        total = s if total is None else total + s
    for m, c in enumerate(total):
        if args.format == "csv":
            out.write("%d,%s\n" % (m, c))
        else:
            out.write("%d: %s\n" % (m, c))


def cmd_le(args, out):
    try:
        blocks = [int(t) for t in args.blocks.split(",")]
    except ValueError:
        raise UsageError("--blocks must be comma-separated integers") from None
    start = args.start or args.start_end
    end = args.end or args.start_end
    if args.dp:
        value = linear_extension_count(block_chain_poset(blocks, start, end), args.cap_poset)
    elif start and end:
        value = le_start_end_formula(blocks)
    elif start:
        value = le_start_formula(blocks)
    elif end:
        value = le_end_formula(blocks)
    else:
        value = le_chain_formula(blocks)
    out.write("%d\n" % value)


def cmd_table(args, out):
    if args.list or not args.preset:
        for name in sorted(PRESETS):
            out.write("%s  %s\n" % (name.ljust(14), PRESETS[name].description))
        return 0
    preset = PRESETS.get(args.preset)
    if preset is None:
        raise UsageError("unknown preset %r (try `table --list`)" % args.preset)
    rows = [(label, str(value)) for label, value in preset.rows()]
    _emit(rows, args.format, out)
    if args.check:
        golden = preset.golden()
        bad = [(label, got, want) for (label, got), want in zip(rows, golden) if got != want]
        if len(golden) != len(rows):
            out.write("check: golden has %d rows, computed %d\n" % (len(golden), len(rows)))
            return 1
        for label, got, want in bad:
            out.write("mismatch at %s: got %s, golden %s\n" % (label, got, want))
        out.write("check: %d/%d rows match %s\n" % (len(rows) - len(bad), len(rows),
                                                  preset.golden_path().name))
        return 1 if bad else 0
    return 0


def cmd_patterns(args, out):
    for spec in args.spec:
        p = load_pattern(spec)
        out.write(p.to_text())
    return 0


# -- parser ---------------------------------------------------------------------

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cap-cells", type=int, default=argparse.SUPPRESS,
                        help="largest diagram the enumerator will walk (default 16)")
    common.add_argument("--cap-poset", type=int, default=argparse.SUPPRESS,
                        help="largest poset for linear-extension counts (default 24)")
    common.add_argument("--jobs", type=int, default=argparse.SUPPRESS,
                        help="worker processes for enumeration (default 1)")
    common.add_argument("--order", type=int, default=argparse.SUPPRESS,
                        help="series truncation order (default 12)")
    common.add_argument("--format", choices=("table", "csv"), default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(prog="gencluster", parents=[common],
                                     description="Consecutive block patterns in fillings.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_patterns(p):
        p.add_argument("--pattern", action="append",
                       help="pattern set: file, bundled name (a23, a33, ...) or WORD:k; "
                            "join members with +; repeat for joint sets")
        p.add_argument("--relation", default="euler",
                       help="euler, universal, rows or bottom (default euler)")

    p = sub.add_parser("dist", parents=[common], help="distribution polynomial of one size")
    p.add_argument("--shape", type=_shape, required=True, help="i,j,k")
    p.add_argument("--n", type=int, required=True, help="number of body columns")
    add_patterns(p)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--oracle", action="store_true", help="exhaustive enumeration (default)")
    mode.add_argument("--theorem", action="store_true", help="cluster formulas")
    p.add_argument("--source", choices=("engine", "family"), default="engine")
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser("cluster", parents=[common], help="cluster polynomials")
    p.add_argument("--kind", type=str.upper, choices=("C", "GC", "GSC", "GEC", "GSEC"),
                   required=True)
    p.add_argument("--shape", type=_shape, required=True, help="i,j,k")
    p.add_argument("--n", type=int, required=True)
    add_patterns(p)
    p.add_argument("--fallback", action="store_true", help="use exhaustive enumeration")
    p.set_defaults(func=cmd_cluster)

    p = sub.add_parser("family", parents=[common], help="family recursions")
    p.add_argument("--id", required=True,
                   help="a_k3:K, du162534, gt124356, pkm:K,M or joint-ud")
    p.add_argument("--kind", type=str.upper, required=True,
                   help="C, GC, GSC, GEC, GSEC (gt124356: C, GC, GEC_J1, GEC_J2)")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("series", parents=[common], help="generating function coefficients")
    p.add_argument("--shape", type=_shape, required=True, help="i,j,k")
    p.add_argument("--combine", type=_shape, action="append",
                   help="add the series of another shape i,j,k (repeatable)")
    add_patterns(p)
    p.add_argument("--source", choices=("engine", "family"), default="engine")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("le", parents=[common], help="linear extensions of block diagrams")
    p.add_argument("--blocks", required=True, help="block sizes, e.g. 3,1,1,5,1")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--end", action="store_true", help="last block is a lone end cell")
    g.add_argument("--start", action="store_true", help="first block is a lone start cell")
    g.add_argument("--start-end", action="store_true", help="lone cells at both ends")
    p.add_argument("--dp", action="store_true", help="count by dynamic programming")
    p.set_defaults(func=cmd_le)

    p = sub.add_parser("table", parents=[common], help="reproduce a named table")
    p.add_argument("--preset")
    p.add_argument("--check", action="store_true", help="compare with the golden file")
    p.add_argument("--list", action="store_true", help="list presets")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("patterns", parents=[common], help="validate and print patterns")
    p.add_argument("spec", nargs="+")
    p.set_defaults(func=cmd_patterns)
    return parser


def _settings(args):
    defaults = {"cap_cells": ("CAP_CELLS", DEFAULT_CAP_CELLS),
                "cap_poset": ("CAP_POSET", DEFAULT_CAP_POSET),
                "jobs": ("JOBS", 1), "order": ("ORDER", DEFAULT_ORDER)}
    for attr, (env, default) in defaults.items():
        if not hasattr(args, attr):
            setattr(args, attr, _env_int(env, default))
    if not hasattr(args, "format"):
        fmt = os.environ.get(ENV_PREFIX + "FORMAT", "table")
        if fmt not in ("table", "csv"):
            raise UsageError("%sFORMAT must be table or csv" % ENV_PREFIX)
        args.format = fmt


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        _settings(args)
        status = args.func(args, out)
    except UsageError as exc:
        err.write("usage error: %s\n" % exc)
        return 2
    except (CapExceeded, ValueError, IndexError) as exc:
        err.write("error: %s\n" % exc)
        return 1
    return status or 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
