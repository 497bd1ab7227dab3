"""Command-line front end: queries, sweeps, table emission and verification.

Subcommands: dims, lr, char, horn, spectrum, sweep, xy, verify.
Exit codes: 0 ok, 1 verification failure, 2 usage/input error.
Identical invocations produce byte-identical output files.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .frames import YoungFrame, dim_sym, dim_unitary, format_frame, parse_frame
from .horn import HornTriple, basic_horn_holds, horn_feasible
from .lr import CHARACTER_ORACLE_CAP, lr_coefficient, lr_tableaux, lr_via_characters
from .spectra import (
    channel_output_spectrum,
    sweep_to_csv,
    table_to_csv,
    table_to_json_obj,
    twirl_spectrum,
    xy_optimize,
)
from .symmetric_group import character
from .verify import DEFAULT_Q_GRID, SUITES, RunConfig, run_suite

USAGE_ERROR = 2
VERIFY_FAILURE = 1


class InputError(Exception):
    """Bad user input: reported on stderr, exit code 2."""


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json_dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _parse_frame_arg(text: str) -> YoungFrame:
    try:
        return parse_frame(text)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _parse_q(text: str) -> Fraction:
    try:
        q = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise InputError(f"cannot parse rational weight {text!r}") from None
    if not 0 <= q <= 1:
        raise InputError(f"weight {text} outside [0, 1]")
    return q


def cmd_dims(args: argparse.Namespace) -> int:
    lam = _parse_frame_arg(args.frame)
    if not lam.fits(args.d):
        raise InputError(f"frame {args.frame} has more than {args.d} rows")
    ds, du = dim_sym(lam), dim_unitary(lam, args.d)
    if args.format == "json":
        text = _json_dump(
            {
                "frame": format_frame(lam, args.d),
                "d": args.d,
                "dim_sym": ds,
                "dim_unitary": du,
                "projector_trace": ds * du,
            }
        )
    else:
        text = (
            f"frame={format_frame(lam, args.d)} d={args.d} "
            f"dim_sym={ds} dim_unitary={du} projector_trace={ds * du}\n"
        )
    _emit(text, args.out)
    return 0


def cmd_lr(args: argparse.Namespace) -> int:
    lam = _parse_frame_arg(args.lam)
    mu = _parse_frame_arg(args.mu)
    nu = _parse_frame_arg(args.nu)
    note = None
    if lam.n != mu.n + nu.n:
        note = f"size mismatch: {lam.n} != {mu.n} + {nu.n}; coefficient is 0"
    coeff = lr_coefficient(lam, mu, nu)
    if lam.n <= CHARACTER_ORACLE_CAP:
        oracle_value = lr_via_characters(lam, mu, nu)
        agree = coeff == oracle_value
    else:
        oracle_value, agree = None, None
    witnesses = lr_tableaux(lam, mu, nu) if args.witness else []
    if args.format == "json":
        obj = {
            "lam": str(lam),
            "mu": str(mu),
            "nu": str(nu),
            "coefficient": coeff,
            "character_oracle": oracle_value,
            "agree": agree,
        }
        if note:
            obj["note"] = note
        if args.witness:
            obj["witnesses"] = [t.render().split("\n") for t in witnesses]
        text = _json_dump(obj)
    else:
        lines = [f"coefficient={coeff} character_oracle={oracle_value} agree={agree}"]
        if note:
            lines.append(note)
        for i, t in enumerate(witnesses, 1):
            lines.append(f"witness {i}:")
            lines.append(t.render())
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return 0


def cmd_char(args: argparse.Namespace) -> int:
    lam = _parse_frame_arg(args.lam)
    ct = _parse_frame_arg(args.cycles)
    if lam.n != ct.n:
        raise InputError(f"frame has {lam.n} boxes but cycle type has {ct.n}")
    value = character(lam, ct)
    if args.format == "json":
        text = _json_dump({"lam": str(lam), "cycle_type": str(ct), "character": value})
    else:
        text = f"character={value}\n"
    _emit(text, args.out)
    return 0


def cmd_horn(args: argparse.Namespace) -> int:
    lam = _parse_frame_arg(args.lam)
    mu = _parse_frame_arg(args.mu)
    nu = _parse_frame_arg(args.nu)
    try:
        triple = HornTriple(lam, mu, nu, args.d)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    results = {}
    if args.basic or not args.feasible:
        results["basic"] = basic_horn_holds(triple)
    if args.feasible or not args.basic:
        results["feasible"] = horn_feasible(triple)
    if args.format == "json":
        text = _json_dump({"lam": str(lam), "mu": str(mu), "nu": str(nu), "d": args.d, **results})
    else:
        text = " ".join(f"{k}={v}" for k, v in results.items()) + "\n"
    _emit(text, args.out)
    return 0


def cmd_spectrum(args: argparse.Namespace) -> int:
    lam = _parse_frame_arg(args.lam)
    if not lam.fits(args.d):
        raise InputError(f"frame {args.lam} has more than {args.d} rows")
    if (args.q is None) == (args.k is None):
        raise InputError("provide exactly one of --q or --k")
    try:
        if args.q is not None:
            table = channel_output_spectrum(lam, _parse_q(args.q), args.d)
        else:
            if not 0 <= args.k <= lam.n:
                raise InputError(f"k={args.k} outside 0..{lam.n}")
            table = twirl_spectrum(lam, args.k, args.d, normalized=not args.unnormalized)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    fmt = args.format or "csv"
    text = _json_dump(table_to_json_obj(table)) if fmt == "json" else table_to_csv(table)
    _emit(text, args.out)
    return 0


def cmd_sweep(args: argparse.Namespace) -> int:
    lam = _parse_frame_arg(args.lam)
    if not lam.fits(args.d):
        raise InputError(f"frame {args.lam} has more than {args.d} rows")
    grid = [_parse_q(tok) for tok in args.grid.split(",") if tok.strip()]
    if not grid:
        raise InputError("q grid must be nonempty")
    try:
        text = sweep_to_csv(lam, args.d, grid, exact=args.exact)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    _emit(text, args.out)
    return 0


def cmd_xy(args: argparse.Namespace) -> int:
    lam = _parse_frame_arg(args.lam)
    lam_p = _parse_frame_arg(args.lam_prime)
    if args.l + args.k != lam.n or lam.n != lam_p.n:
        raise InputError(f"split {args.l}+{args.k} does not match frames with {lam.n} boxes")
    extrema = xy_optimize(lam, lam_p, args.l, args.k, args.d)
    fmt_triple = (
        lambda t: None if t is None else [format_frame(f) for f in t]
    )
    if args.format == "json":
        text = _json_dump(
            {
                "lam": str(lam),
                "lam_prime": str(lam_p),
                "l": args.l,
                "k": args.k,
                "d": args.d,
                "x_max": extrema.x,
                "y_min": extrema.y,
                "argmax": fmt_triple(extrema.argmax),
                "argmin": fmt_triple(extrema.argmin),
            }
        )
    else:
        text = (
            f"X={extrema.x} Y={extrema.y} "
            f"argmax={fmt_triple(extrema.argmax)} argmin={fmt_triple(extrema.argmin)}\n"
        )
    _emit(text, args.out)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    grid = (
        tuple(_parse_q(tok) for tok in args.grid.split(",") if tok.strip())
        if args.grid
        else DEFAULT_Q_GRID
    )
    try:
        cfg = RunConfig(d_max=args.cap_d, n_max=args.cap_n, q_grid=grid, seed=args.seed)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    try:
        report = run_suite(args.suite, cfg)
    except KeyError:
        raise InputError(
            f"unknown suite {args.suite!r}; choose from {', '.join([*SUITES, 'all'])}"
        ) from None
    for check in report.checks:
        status = "PASS" if check.passed else "FAIL"
        print(f"[{status}] {check.name} ({check.checked} checks)", file=sys.stderr)
    _emit(report.to_json(), args.out)
    return 0 if report.passed else VERIFY_FAILURE


def _add_global_flags(parser: argparse.ArgumentParser, *, suppress: bool) -> None:
    # The same flags live on the root parser (with real defaults) and on each
    # subparser (defaulting to SUPPRESS), so they are accepted on either side
    # of the subcommand without the subparser clobbering root-level values.
    def default(value):
        return argparse.SUPPRESS if suppress else value

    parser.add_argument("--d", type=int, default=default(2),
                        help="local dimension / frame row budget (default 2)")
    parser.add_argument("--format", choices=["text", "csv", "json"], default=default(None),
                        help="output format (default: text, csv for tables)")
    parser.add_argument("--out", default=default(None), help="output file (default stdout)")
    parser.add_argument("--cap-n", type=int, default=default(6),
                        help="size cap for verification sweeps")
    parser.add_argument("--cap-d", type=int, default=default(3),
                        help="dimension cap for verification sweeps")
    parser.add_argument("--exact", action="store_const", const=True, default=default(False),
                        help="emit exact rationals in sweep cells")
    parser.add_argument("--seed", type=int, default=default(0), help="seed for sampled checks")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="isotwirl",
        description="Exact spectra of depolarised permutation-invariant states over isotypical blocks.",
    )
    _add_global_flags(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _add_global_flags(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dims", help="dimensions and projector trace of a frame", parents=[common])
    p.add_argument("frame")
    p.set_defaults(fn=cmd_dims)

    p = sub.add_parser("lr", help="Littlewood-Richardson coefficient with character cross-check", parents=[common])
    p.add_argument("lam")
    p.add_argument("mu")
    p.add_argument("nu")
    p.add_argument("--witness", action="store_true", help="print the witness tableaux")
    p.set_defaults(fn=cmd_lr)

    p = sub.add_parser("char", help="symmetric-group character at a cycle type", parents=[common])
    p.add_argument("lam")
    p.add_argument("cycles")
    p.set_defaults(fn=cmd_char)

    p = sub.add_parser("horn", help="eigenvalue-sum checks for a spectra triple", parents=[common])
    p.add_argument("lam")
    p.add_argument("mu")
    p.add_argument("nu")
    p.add_argument("--basic", action="store_true", help="only the basic inequality family")
    p.add_argument("--feasible", action="store_true", help="only exact feasibility (LR positivity)")
    p.set_defaults(fn=cmd_horn)

    p = sub.add_parser("spectrum", help="output spectrum over isotypical blocks", parents=[common])
    p.add_argument("lam")
    p.add_argument("--q", default=None, help="depolarising weight (rational, e.g. 1/4 or 0.25)")
    p.add_argument("--k", type=int, default=None, help="number of maximally mixed sites instead of --q")
    p.add_argument("--unnormalized", action="store_true",
                   help="weights for the unnormalized projector instead of the flat state")
    p.set_defaults(fn=cmd_spectrum)

    p = sub.add_parser("sweep", help="spectrum table for a grid of depolarising weights", parents=[common])
    p.add_argument("lam")
    p.add_argument("--grid", required=True, help="comma-separated weights, e.g. 0.1,0.2,0.3")
    p.set_defaults(fn=cmd_sweep)

    p = sub.add_parser("xy", help="extremal dimension products over connecting chains", parents=[common])
    p.add_argument("lam")
    p.add_argument("lam_prime")
    p.add_argument("l", type=int)
    p.add_argument("k", type=int)
    p.set_defaults(fn=cmd_xy)

    p = sub.add_parser("verify", help="run a verification suite and emit its JSON report", parents=[common])
    p.add_argument("suite", help="saturation | support | oracle | tail | xybound | all")
    p.add_argument("--grid", default=None, help="override the q grid for the tail suite")
    p.set_defaults(fn=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
