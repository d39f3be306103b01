"""Command-line front end.

Subcommands: enumerate, pieri, qpieri, giambelli, qgiambelli, multiply,
verify.  Output is JSON by default (``--format text`` for a human form)
and deterministic byte for byte for a fixed request.  Exit codes: 0 on
success, 1 on verification failure, 2 on bad arguments.

``verify`` runs the acceptance suites over a grid of (k, n) pairs given
as ``--grid "0:2,0:3,1:2"``; ISOSCHUB_WORKERS controls multiprocess
fan-out across suite tasks (output order stays deterministic).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import serialize, verify
from .giambelli import giambelli_og, quantum_giambelli_ig, quantum_giambelli_og, raising_expand
from .partitions import IG, SpaceContext, enumerate_p
from .pieri import classical_pieri, quantum_pieri
from .rings import qh_multiply


def _context(args) -> SpaceContext:
    return SpaceContext(args.family, args.n, args.k)


def _parse_grid(text: str) -> tuple[tuple[int, int], ...]:
    points = []
    for piece in text.split(","):
        piece = piece.strip()
        if not piece:
            continue
        k_str, _, n_str = piece.partition(":")
        points.append((int(k_str), int(n_str)))
    if not points:
        raise ValueError("empty grid")
    for k, n in points:
        SpaceContext(IG, n, k)  # validates n > k >= 0
    return tuple(points)


def _emit_combination(combo, args, out):
    if args.format == "json":
        json.dump(serialize.combination_to_json(combo), out)
        out.write("\n")
    else:
        out.write(serialize.combination_to_text(combo, args.family) + "\n")


def _emit_polynomial(poly, args, out):
    if args.format == "json":
        json.dump(serialize.polynomial_to_json(poly), out)
        out.write("\n")
    else:
        out.write(serialize.polynomial_to_text(poly) + "\n")


def _cmd_enumerate(args, out):
    members = enumerate_p(args.k, args.n)
    if args.format == "json":
        json.dump([list(lam) for lam in members], out)
        out.write("\n")
    else:
        for lam in members:
            out.write(serialize.format_partition(lam) + "\n")
    return 0


def _cmd_pieri(args, out):
    combo = classical_pieri(_context(args), args.p, args.lam)
    _emit_combination(combo, args, out)
    return 0


def _cmd_qpieri(args, out):
    combo = quantum_pieri(_context(args), args.p, args.lam)
    _emit_combination(combo, args, out)
    return 0


def _cmd_giambelli(args, out):
    ctx = _context(args)
    ctx.require(args.lam)
    if args.family == IG:
        poly = raising_expand(args.lam, args.k)
    else:
        c_form, tau_form = giambelli_og(args.lam, args.k)
        poly = c_form if args.generators == "c" else tau_form
    _emit_polynomial(poly, args, out)
    return 0


def _cmd_qgiambelli(args, out):
    ctx = _context(args)
    if args.family == IG:
        poly = quantum_giambelli_ig(args.lam, ctx)
    else:
        poly = quantum_giambelli_og(args.lam, ctx)
    _emit_polynomial(poly, args, out)
    return 0


def _cmd_multiply(args, out):
    combo = qh_multiply(_context(args), args.lam, args.mu)
    _emit_combination(combo, args, out)
    return 0


def _verify_task(item):
    number, grid = item
    return list(verify.run_criterion(number, grid))


def _cmd_verify(args, out):
    grid = args.grid
    numbers = args.checks or sorted(verify.CRITERIA)
    tasks = [(number, grid) for number in numbers]
    workers = int(os.environ.get("ISOSCHUB_WORKERS", "1"))
    if workers > 1 and len(tasks) > 1:
        import multiprocessing

        with multiprocessing.Pool(min(workers, len(tasks))) as pool:
            blocks = pool.map(_verify_task, tasks)
    else:
        blocks = [_verify_task(task) for task in tasks]
    failures = 0
    for (number, _), records in zip(tasks, blocks):
        name = verify.CRITERIA[number][0]
        for record in records:
            if not record["ok"]:
                failures += 1
            if args.format == "json":
                json.dump(record, out, sort_keys=True)
                out.write("\n")
            elif not record["ok"]:
                out.write(f"FAIL {json.dumps(record, sort_keys=True)}\n")
        passed = sum(1 for record in records if record["ok"])
        summary = (f"criterion {number} ({name}): "
                   f"{passed}/{len(records)} checks passed")
        if args.format == "text":
            out.write(summary + "\n")
        else:
            print(summary, file=sys.stderr)
    return 1 if failures else 0


def _partition_arg(text):
    try:
        return serialize.parse_partition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _grid_arg(text):
    try:
        return _parse_grid(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="isoschub",
        description="Exact Schubert calculus for isotropic Grassmannians",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, family=True, need_lambda=False):
        if family:
            p.add_argument("--family", choices=("IG", "OG"), required=True)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--k", type=int, required=True)
        if need_lambda:
            p.add_argument("--lambda", dest="lam", type=_partition_arg,
                           default=(), help="partition, e.g. 4,3 (0 = empty)")
        p.add_argument("--format", choices=("json", "text"), default="json")

    p = sub.add_parser("enumerate", help="list the Schubert index set P(k,n)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(fn=_cmd_enumerate)

    p = sub.add_parser("pieri", help="classical Pieri product")
    add_common(p, need_lambda=True)
    p.add_argument("--p", type=int, required=True)
    p.set_defaults(fn=_cmd_pieri)

    p = sub.add_parser("qpieri", help="quantum Pieri product")
    add_common(p, need_lambda=True)
    p.add_argument("--p", type=int, required=True)
    p.set_defaults(fn=_cmd_qpieri)

    p = sub.add_parser("giambelli", help="classical Giambelli polynomial")
    add_common(p, need_lambda=True)
    p.add_argument("--generators", choices=("tau", "c"), default="tau",
                   help="generator family for OG output")
    p.set_defaults(fn=_cmd_giambelli)

    p = sub.add_parser("qgiambelli", help="quantum Giambelli polynomial")
    add_common(p, need_lambda=True)
    p.set_defaults(fn=_cmd_qgiambelli)

    p = sub.add_parser("multiply", help="quantum product of two classes")
    add_common(p, need_lambda=True)
    p.add_argument("--mu", type=_partition_arg, default=(),
                   help="second partition")
    p.set_defaults(fn=_cmd_multiply)

    p = sub.add_parser("verify", help="run the verification suites")
    p.add_argument("--grid", type=_grid_arg, default=verify.GRID,
                   help='grid of k:n pairs, e.g. "0:2,0:3,1:2"')
    p.add_argument("--checks", type=lambda s: [int(x) for x in s.split(",")],
                   default=None, help="criteria to run, e.g. 1,2,8")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(fn=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args, sys.stdout)
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
