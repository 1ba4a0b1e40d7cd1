"""Command-line surface: count, enumerate, sequence, verify, simulate.

Data goes to stdout, diagnostics to stderr.  Exit codes: 0 success, 1
verification mismatch or runtime failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys

from . import counting, engine, sequences
from .errors import (
    BoundsError,
    CapacityError,
    DimensionError,
    DomainError,
    ParseError,
)
from .neighborhoods import NeighborhoodSpec, diamond, enumerate_offsets, format_offset, k_radius
from .verification import run_verification


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nbhd",
        description="Cellular-automata neighborhoods: count, enumerate, verify, "
        "emit OEIS sequences, and simulate totalistic automata.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_spec_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("--d", type=int, required=True, help="lattice dimension")
        p.add_argument("--k", type=int, help="max nonzero coordinates (k-radius family)")
        p.add_argument("--r", type=int, default=1, help="radius (default 1)")
        p.add_argument("--diamond", action="store_true", help="diamond family instead of k-radius")
        p.add_argument("--sharp-k", action="store_true", help="exactly k nonzero coordinates")
        p.add_argument("--sharp-r", action="store_true", help="shell at distance exactly r")

    p_count = sub.add_parser("count", help="print the neighborhood size")
    add_spec_flags(p_count)

    p_enum = sub.add_parser("enumerate", help="print member offsets, one per line")
    add_spec_flags(p_enum)

    p_seq = sub.add_parser("sequence", help="emit one of the cited OEIS sequences")
    p_seq.add_argument(
        "--id", required=True, choices=[s.value for s in sequences.SequenceId]
    )
    p_seq.add_argument("--terms", type=int, required=True)
    p_seq.add_argument("--bfile", action="store_true", help="b-file format ('n a(n)' lines)")

    p_verify = sub.add_parser("verify", help="run formula/recurrence/oracle cross-checks")
    p_verify.add_argument("--max-d", type=int, default=4)
    p_verify.add_argument("--max-k", type=int, default=None)
    p_verify.add_argument("--max-r", type=int, default=3)

    p_sim = sub.add_parser("simulate", help="run a totalistic automaton")
    p_sim.add_argument("--dims", required=True, help="grid size per axis, e.g. 16,16")
    p_sim.add_argument("--k", type=int)
    p_sim.add_argument("--r", type=int, default=1)
    p_sim.add_argument("--diamond", action="store_true")
    p_sim.add_argument("--rule", required=True, help="birth/survival rule, e.g. B3/S23")
    p_sim.add_argument("--steps", type=int, required=True)
    p_sim.add_argument("--pattern", required=True, help="live-cell coordinate file")
    p_sim.add_argument("--boundary", choices=["torus", "dead"], default="torus")
    p_sim.add_argument("--snapshot-every", type=int, default=None)
    return parser


def _spec_from_args(parser: argparse.ArgumentParser, args: argparse.Namespace) -> NeighborhoodSpec:
    if args.d < 1:
        parser.error("--d must be >= 1")
    if args.r < 1:
        parser.error("--r must be >= 1")
    if args.diamond:
        if args.k is not None:
            parser.error("--k does not apply with --diamond")
        if getattr(args, "sharp_k", False):
            parser.error("--sharp-k does not apply with --diamond")
        return diamond(args.d, args.r, sharp_r=getattr(args, "sharp_r", False))
    if args.k is None:
        parser.error("--k is required unless --diamond is given")
    if not 1 <= args.k <= args.d:
        parser.error(f"--k must satisfy 1 <= k <= d, got k={args.k}, d={args.d}")
    return k_radius(
        args.d,
        args.k,
        args.r,
        sharp_k=getattr(args, "sharp_k", False),
        sharp_r=getattr(args, "sharp_r", False),
    )


def parse_args(argv: list[str] | None = None) -> argparse.Namespace:
    return build_parser().parse_args(argv)


def _cmd_count(args: argparse.Namespace, spec: NeighborhoodSpec) -> int:
    if not counting.closed_form_available(spec):
        print(
            "note: no closed form for this spec; counting by brute-force box scan",
            file=sys.stderr,
        )
    print(counting.count(spec))
    return 0


def _cmd_enumerate(args: argparse.Namespace, spec: NeighborhoodSpec) -> int:
    for offset in enumerate_offsets(spec):
        print(format_offset(offset))
    return 0


def _cmd_sequence(args: argparse.Namespace) -> int:
    seq_id = sequences.SequenceId(args.id)
    if args.bfile:
        sys.stdout.flush()
        sequences.emit_bfile(seq_id, args.terms, sys.stdout.buffer)
        sys.stdout.buffer.flush()
    else:
        for entry in sequences.generate(seq_id, args.terms):
            print(entry.value)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    results = run_verification(args.max_d, args.max_k, args.max_r)
    width = max(len(r.name) for r in results)
    failed = False
    for r in results:
        status = "PASS" if r.ok else "FAIL"
        print(f"{r.name:<{width}}  {r.cases:>6} cases  {status}")
        if not r.ok:
            failed = True
            for detail in r.failures[:10]:
                print(f"  {detail}", file=sys.stderr)
    print("all checks passed" if not failed else "verification FAILED")
    return 1 if failed else 0


def _cmd_simulate(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    try:
        dims = tuple(int(f) for f in args.dims.split(","))
    except ValueError:
        parser.error(f"--dims must be comma-separated integers, got {args.dims!r}")
    if args.steps < 0:
        parser.error("--steps must be >= 0")
    if args.snapshot_every is not None and args.snapshot_every < 1:
        parser.error("--snapshot-every must be >= 1")
    args.d = len(dims)
    args.sharp_k = False
    args.sharp_r = False
    spec = _spec_from_args(parser, args)
    try:
        rule = engine.parse_rule(args.rule)
    except ParseError as exc:
        parser.error(str(exc))

    cells = engine.load_pattern(args.pattern)
    boundary = engine.Boundary.TOROIDAL if args.boundary == "torus" else engine.Boundary.FIXED_DEAD
    grid = engine.make_grid(dims, boundary, cells)
    offsets = enumerate_offsets(spec)

    every = args.snapshot_every
    for i in range(1, args.steps + 1):
        grid = engine.step(grid, rule, offsets)
        if every is not None and i % every == 0:
            print(f"step {i} population {engine.population(grid)}")
            print(engine.render_snapshot(grid))
            print()
    print(f"final population {engine.population(grid)}")
    return 0


def execute(args: argparse.Namespace, parser: argparse.ArgumentParser | None = None) -> int:
    """Run a parsed command; returns the process exit code."""
    parser = parser or build_parser()
    try:
        if args.command == "count":
            return _cmd_count(args, _spec_from_args(parser, args))
        if args.command == "enumerate":
            return _cmd_enumerate(args, _spec_from_args(parser, args))
        if args.command == "sequence":
            return _cmd_sequence(args)
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "simulate":
            return _cmd_simulate(parser, args)
        parser.error(f"unknown command {args.command!r}")
    except (CapacityError, DomainError, DimensionError, BoundsError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return execute(args, parser)


if __name__ == "__main__":
    sys.exit(main())
