"""Command-line interface.

One executable, ``ppcforge``, with batch subcommands: construct designs
with a prescribed maximum PPC, solve/verify design files, print bound
tables, search and check sequencings, emit Room squares, and run the
brute-force oracles.  Exit codes: 0 success, 1 usage or I/O problem,
2 verification failure, 3 search budget exhausted.

Machine-readable output (design files, ``--format rows`` tables, square and
sequencing files) is deterministic for fixed flags; wall-clock timings go
to stderr only.
"""

import argparse
import os
import sys
import time
from typing import List, Optional

from . import bounds as bounds_mod
from . import construct as construct_mod
from .core import Design, ParseError, ToolkitError, deserialize, read_ppc_comments, serialize
from .onefactor import BudgetExhausted, room_square, room_to_text, validate_room
from .oracle import brute_beta
from .ppc import solve_max_ppc
from .sequence import (
    check_sequencing,
    find_sequencing,
    sequencing_from_text,
    sequencing_to_text,
)

_DEF_BUDGET = 20_000_000


def _default_budget() -> int:
    raw = os.environ.get("PPCFORGE_BUDGET")
    if raw:
        try:
            return int(raw)
        except ValueError:
            print(f"ignoring non-integer PPCFORGE_BUDGET={raw!r}", file=sys.stderr)
    return _DEF_BUDGET


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_design(path: str) -> Design:
    return deserialize(_read(path))


_VARIANTS = ("pure", "packed", "trimmed")
_LEGACY_VARIANT = {"3": "pure", "4": "packed", "5": "trimmed"}


def _cmd_construct(args: argparse.Namespace) -> int:
    rho, v = args.rho, args.v
    variant = args.variant
    if args.force_thm:
        variant = _LEGACY_VARIANT[args.force_thm]
    if variant is None:
        variant = "packed" if (v - rho) % 2 == 0 else "trimmed"
    if variant == "trimmed":
        ell = v - rho + 1
        builder = construct_mod.factor_join_odd
    elif variant == "packed":
        ell = v - rho
        builder = construct_mod.factor_join_packed
    else:
        ell = v - rho
        builder = construct_mod.factor_join
    if ell % 2:
        print(
            f"error: variant {variant} needs v-rho {'even' if variant != 'trimmed' else 'odd'} "
            f"(got rho={rho}, v={v})",
            file=sys.stderr,
        )
        return 1
    witness = builder(rho, ell, strategy=args.strategy)
    result = solve_max_ppc(witness.design, budget=args.budget)
    if not result.optimal:
        print("solver budget exhausted before proving the maximum", file=sys.stderr)
        return 3
    verdict = "verified" if result.size == rho else f"MISMATCH (solver says {result.size})"
    text = serialize(witness.design, ppc=witness.witness_ppc)
    report = (
        f"PSTS({witness.design.v}) with b={witness.design.b} blocks, "
        f"variant={variant}; maximum PPC = {result.size} {verdict}\n"
        f"witness: {' '.join(','.join(map(str, blk)) for blk in witness.witness_ppc)}\n"
    )
    if args.out:
        _emit(text, args.out)
        sys.stdout.write(report)
    else:
        sys.stdout.write(text)
        sys.stderr.write(report)
    return 0 if result.size == rho else 2


def _cmd_solve(args: argparse.Namespace) -> int:
    design = _load_design(args.file)
    t0 = time.perf_counter()
    result = solve_max_ppc(design, budget=args.budget)
    elapsed = time.perf_counter() - t0
    status = "optimal" if result.optimal else "budget-exhausted (lower bound)"
    print(f"max ppc = {result.size} ({status})")
    for blk in result.witness:
        print("  " + " ".join(map(str, blk)))
    print(f"nodes: {result.nodes}", file=sys.stderr)
    print(f"time: {elapsed:.3f}s", file=sys.stderr)
    return 0 if result.optimal else 3


def _cmd_verify(args: argparse.Namespace) -> int:
    try:
        design = _load_design(args.file)
    except ToolkitError as exc:
        print(f"invalid: {exc}")
        return 2
    cap = bounds_mod.packing_number(design.v)
    if design.b > cap:
        print(f"invalid: {design.b} blocks exceeds the packing number {cap}")
        return 2
    comments = read_ppc_comments(_read(args.file))
    if comments:
        used = set()
        block_set = set(design.blocks)
        for blk in comments:
            if tuple(sorted(blk)) not in block_set:
                print(f"invalid: claimed class block {blk} is not in the design")
                return 2
            for p in blk:
                if p in used:
                    print(f"invalid: claimed class reuses point {p}")
                    return 2
                used.add(p)
        print(f"ok: v={design.v} b={design.b}, embedded class of {len(comments)} disjoint blocks")
    else:
        print(f"ok: v={design.v} b={design.b}")
    return 0


def _cmd_bounds(args: argparse.Namespace) -> int:
    rows = bounds_mod.bound_table(args.v, args.rho_max, with_known=args.with_known)
    sys.stdout.write(bounds_mod.format_table(rows, style=args.format))
    return 0


def _cmd_sequence_find(args: argparse.Namespace) -> int:
    design = _load_design(args.file)
    outcome = find_sequencing(design, budget=args.budget)
    if outcome.found:
        text = sequencing_to_text(design.v, outcome.sequencing.perm)
        _emit(text, args.out)
        if args.out:
            print(f"sequencing found ({outcome.nodes} nodes)")
        return 0
    if outcome.proven_nonsequenceable:
        print("nonsequenceable: the search space was exhausted")
        return 2
    print("not found within budget (not a nonsequenceability proof)", file=sys.stderr)
    return 3


def _cmd_sequence_check(args: argparse.Namespace) -> int:
    design = _load_design(args.file)
    v, perm = sequencing_from_text(_read(args.perm))
    if v != design.v:
        print(f"error: permutation file says v={v}, design has v={design.v}", file=sys.stderr)
        return 1
    seq = check_sequencing(design, perm)
    if seq.valid:
        print("valid sequencing")
        return 0
    t, start = seq.violation
    print(f"invalid: window of {3 * t} points at position {start} is a union of {t} blocks")
    return 2


def _cmd_roomsquare(args: argparse.Namespace) -> int:
    square = room_square(args.side)
    validate_room(square)
    _emit(room_to_text(square), args.out)
    if args.out:
        print(f"side-{args.side} square written")
    return 0


def _cmd_oracle_beta(args: argparse.Namespace) -> int:
    result = brute_beta(args.rho, args.v, budget=args.budget)
    if not result.complete:
        print(f"budget exhausted; best found so far {result.value}", file=sys.stderr)
        return 3
    print(f"beta({args.rho},{args.v}) = {result.value}")
    if result.witness:
        print("witness:")
        sys.stdout.write(serialize(Design(args.v, tuple(sorted(result.witness)))))
    return 0


def _cmd_check_sts27(args: argparse.Namespace) -> int:
    try:
        triples = construct_mod.check_sts27_triples()
    except ToolkitError as exc:
        print(f"invalid: {exc}")
        return 2
    points = {p for tri in triples for p in tri}
    print(f"ok: {len(triples)} sum-zero triples, {len(points)} distinct points")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ppcforge",
        description="Partial Steiner triple systems with a prescribed maximum "
        "partial parallel class: construction, exact solving, bounds, Room "
        "squares, sequencings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    budget = _default_budget()

    p = sub.add_parser("construct", help="build a PSTS(v) whose maximum PPC is rho")
    p.add_argument("--rho", type=int, required=True)
    p.add_argument("--v", type=int, required=True)
    p.add_argument("--strategy", choices=("room", "roundrobin"), default="room")
    p.add_argument(
        "--variant",
        choices=_VARIANTS,
        default=None,
        help="pure: factors only; packed: plus apex packing (default for even "
        "v-rho); trimmed: packed then one point deleted (default for odd v-rho)",
    )
    p.add_argument(
        "--force-thm",
        choices=tuple(_LEGACY_VARIANT),
        default=None,
        help="numeric alias for --variant: 3=pure, 4=packed, 5=trimmed",
    )
    p.add_argument("--out", default=None)
    p.add_argument("--budget", type=int, default=budget)
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("solve-ppc", help="exact maximum PPC of a design file")
    p.add_argument("file")
    p.add_argument("--budget", type=int, default=budget)
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("verify", help="validate a design file and its embedded class")
    p.add_argument("file")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("bounds", help="bound table for one v")
    p.add_argument("--v", type=int, required=True)
    p.add_argument("--rho-max", type=int, default=None)
    p.add_argument("--with-known", action="store_true")
    p.add_argument("--format", choices=("text", "rows"), default="text")
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("table1", help="shorthand: bounds --v 27 --rho-max 9 --with-known")
    p.add_argument("--format", choices=("text", "rows"), default="text")
    p.set_defaults(func=_cmd_bounds, v=27, rho_max=9, with_known=True)

    p = sub.add_parser("sequence", help="find or check sequencings")
    seq_sub = p.add_subparsers(dest="action", required=True)
    pf = seq_sub.add_parser("find")
    pf.add_argument("file")
    pf.add_argument("--out", default=None)
    pf.add_argument("--budget", type=int, default=budget)
    pf.set_defaults(func=_cmd_sequence_find)
    pc = seq_sub.add_parser("check")
    pc.add_argument("file")
    pc.add_argument("perm", help="sequencing file: 'v=<n>' header then the permutation")
    pc.set_defaults(func=_cmd_sequence_check)

    p = sub.add_parser("roomsquare", help="generate and print a Room square")
    p.add_argument("--side", type=int, required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_roomsquare)

    p = sub.add_parser("oracle", help="brute-force ground truth")
    orc_sub = p.add_subparsers(dest="action", required=True)
    po = orc_sub.add_parser("beta")
    po.add_argument("--rho", type=int, required=True)
    po.add_argument("--v", type=int, required=True)
    po.add_argument("--budget", type=int, default=budget)
    po.set_defaults(func=_cmd_oracle_beta)

    p = sub.add_parser("check-sts27", help="verify the stored sum-zero triples")
    p.set_defaults(func=_cmd_check_sts27)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse uses status 2 for usage errors; 2 means verification
        # failure here, so fold usage problems into the generic error code
        code = exc.code if isinstance(exc.code, int) else 1
        return 1 if code == 2 else code
    try:
        return args.func(args)
    except BudgetExhausted as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return 3
    except (ToolkitError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entry() -> None:
    sys.exit(main(argv=None))
