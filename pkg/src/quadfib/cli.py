"""Command-line front end.

Subcommands: ``unit``, ``fib``, ``lucas``, ``kfib``, ``verify``, ``gf`` and
``oeis-check``; every subcommand accepts ``--format plain|json|csv``,
``--out FILE`` and ``--cache-dir DIR``.  Exit codes: 0 success/match,
1 verification mismatch, 2 usage error, 3 I/O or network error.
"""

from __future__ import annotations

import argparse
import re
import sys
from fractions import Fraction
from typing import Any

from . import genfun, identities, oeis, serialize
from .errors import (
    BFileParseError,
    CacheMissError,
    NetworkError,
    QuadfibError,
    ResourceLimitError,
)
from .sequences import (
    SeqContext,
    context,
    context_with_unit,
    kfib_map,
    slice_terms,
)

_RANGE_RE = re.compile(r"\A(-?\d+)\.\.(-?\d+)\Z")
_EXIT_OK, _EXIT_MISMATCH, _EXIT_USAGE, _EXIT_IO = 0, 1, 2, 3


class _UsageError(Exception):
    pass


def _parse_range(text: str) -> tuple[int, int]:
    m = _RANGE_RE.match(text)
    if not m:
        raise _UsageError(f"expected a range like -20..20, got {text!r}")
    return int(m.group(1)), int(m.group(2))


def _parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise _UsageError(f"expected a rational like 1/2, got {text!r}") from exc


def _parse_sign(text: str) -> int:
    if text in ("+", "+1", "1"):
        return 1
    if text in ("-", "-1"):
        return -1
    raise _UsageError(f"expected + or -, got {text!r}")


def _context_for(args: argparse.Namespace) -> SeqContext:
    power = getattr(args, "unit_power", None)
    sign = getattr(args, "unit_sign", None)
    if power is None and sign is None:
        return context(args.d)
    return context_with_unit(
        args.d,
        _parse_sign(sign) if sign is not None else 1,
        power if power is not None else 1,
    )


def _write(args: argparse.Namespace, text: str) -> None:
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _context_header(command: str, ctx: SeqContext) -> dict[str, Any]:
    return {
        "command": command,
        "d": ctx.d.d,
        "unit": serialize.element_to_json(ctx.unit.element),
        "delta": ctx.delta,
    }


# -- subcommand handlers ---------------------------------------------------------


def _cmd_unit(args: argparse.Namespace) -> int:
    ctx = context(args.d)
    if args.format == "json":
        payload = _context_header("unit", ctx)
        payload["discriminant"] = ctx.d.discriminant
        _write(args, serialize.emit_json(payload))
    elif args.format == "plain":
        _write(
            args,
            f"d={ctx.d.d} epsilon={ctx.unit.element} delta={ctx.delta} "
            f"discriminant={ctx.d.discriminant}\n",
        )
    else:
        raise _UsageError("csv output is only defined for term listings")
    return _EXIT_OK


def _cmd_terms(args: argparse.Namespace) -> int:
    if args.from_ > args.to:
        raise _UsageError(f"--from {args.from_} exceeds --to {args.to}")
    ctx = _context_for(args)
    terms = slice_terms(ctx, args.from_, args.to)
    if args.format == "plain":
        if args.command == "fib":
            body = " ".join(str(t.fib) for t in terms)
        else:
            body = " ".join(serialize.frac_to_str(t.lucas) for t in terms)
        _write(args, body + "\n")
    elif args.format == "csv":
        _write(args, serialize.emit_terms_csv(terms))
    else:
        payload = _context_header(args.command, ctx)
        payload["terms"] = [serialize.term_to_json(t) for t in terms]
        _write(args, serialize.emit_json(payload))
    return _EXIT_OK


def _cmd_kfib(args: argparse.Namespace) -> int:
    mapping = kfib_map(args.k)
    ctx = mapping.context()
    terms = slice_terms(ctx, 1, args.terms)
    if args.format == "plain":
        lines = [
            f"d={mapping.d.d} r={mapping.r} unit={mapping.unit.element} "
            f"norm={mapping.unit.delta}",
            "F: " + " ".join(str(t.fib) for t in terms),
        ]
        _write(args, "\n".join(lines) + "\n")
    elif args.format == "csv":
        _write(args, serialize.emit_terms_csv(terms))
    else:
        payload = _context_header("kfib", ctx)
        payload["k"] = mapping.k
        payload["r"] = mapping.r
        payload["terms"] = [serialize.term_to_json(t) for t in terms]
        _write(args, serialize.emit_json(payload))
    return _EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    ctx = _context_for(args)
    index_range = _parse_range(args.range)
    if args.identity == "all":
        reports = identities.verify_all(ctx, index_range)
    else:
        reports = [identities.verify(ctx, args.identity, index_range)]
    if args.format == "plain":
        lines = []
        for r in reports:
            state = "pass" if r.passed else f"FAIL ({len(r.counterexamples)} counterexamples)"
            skipped = f" skipped={r.skipped}" if r.skipped else ""
            lines.append(
                f"{r.identity} d={r.d.d} range={r.index_range[0]}..{r.index_range[1]} "
                f"{state}{skipped}"
            )
        _write(args, "\n".join(lines) + "\n")
    elif args.format == "json":
        payload = _context_header("verify", ctx)
        payload["reports"] = [serialize.identity_report_to_json(r) for r in reports]
        _write(args, serialize.emit_json(payload))
    else:
        raise _UsageError("csv output is only defined for term listings")
    return _EXIT_OK if all(r.passed for r in reports) else _EXIT_MISMATCH


def _cmd_gf(args: argparse.Namespace) -> int:
    ctx = context(args.d)
    x = _parse_fraction(args.x)
    query = genfun.GFQuery(ctx, x, args.terms)
    f1, g1 = genfun.gf_alt_closed(ctx, x)
    closed = {
        "fib": genfun.gf_fib_closed(ctx, x),
        "lucas": genfun.gf_lucas_closed(ctx, x),
        "alt_fib": f1,
        "alt_lucas": g1,
    }
    rows = []
    for which, closed_value in closed.items():
        truncated = genfun.gf_truncated(query, which)
        rows.append((which, closed_value, truncated, abs(closed_value - truncated)))
    if args.format == "plain":
        lines = [
            f"{which}: closed={serialize.frac_to_str(c)} "
            f"truncated={serialize.frac_to_str(t)} "
            f"abs_error={serialize.frac_to_str(e)}"
            for which, c, t, e in rows
        ]
        _write(args, "\n".join(lines) + "\n")
    elif args.format == "json":
        payload = _context_header("gf", ctx)
        payload["x"] = serialize.frac_to_str(x)
        payload["truncation"] = args.terms
        payload["series"] = [
            {
                "which": which,
                "closed": serialize.frac_to_str(c),
                "truncated": serialize.frac_to_str(t),
                "abs_error": serialize.frac_to_str(e),
            }
            for which, c, t, e in rows
        ]
        _write(args, serialize.emit_json(payload))
    else:
        raise _UsageError("csv output is only defined for term listings")
    return _EXIT_OK


def _cmd_oeis_check(args: argparse.Namespace) -> int:
    ctx = context(args.d)
    if args.a:
        plan = [("fib", args.a), ("lucas", args.a)]
        require_all = False  # an explicit A-number names one sequence, not both
    else:
        cited = oeis.CITED_SEQUENCES.get(ctx.d.d)
        if not cited:
            raise _UsageError(
                f"no cited A-number for d={ctx.d.d}; pass one explicitly with --a"
            )
        plan = sorted(cited.items())
        require_all = True
    reports = []
    for which, a_number in plan:
        ref = oeis.oeis_fetch(a_number, args.cache_dir, offline=args.offline)
        reports.append(oeis.oeis_match(ctx, which, ref))
    if args.format == "plain":
        lines = [
            f"{r.which} {r.a_number} verdict={r.verdict} shift={r.shift} "
            f"matched={r.matched_terms}"
            for r in reports
        ]
        _write(args, "\n".join(lines) + "\n")
    elif args.format == "json":
        payload = _context_header("oeis-check", ctx)
        payload["reports"] = [serialize.match_report_to_json(r) for r in reports]
        _write(args, serialize.emit_json(payload))
    else:
        raise _UsageError("csv output is only defined for term listings")
    matches = [r.verdict == "match" for r in reports]
    ok = all(matches) if require_all else any(matches)
    return _EXIT_OK if ok else _EXIT_MISMATCH


# -- parser ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("plain", "json", "csv"), default="plain",
        help="output format (default: plain)",
    )
    common.add_argument("--out", metavar="FILE", help="write output to FILE")
    common.add_argument(
        "--cache-dir", metavar="DIR", default=None,
        help="OEIS b-file cache directory (default: $QUADFIB_CACHE_DIR or ./.oeis-cache)",
    )

    parser = argparse.ArgumentParser(
        prog="quadfib",
        description="Exact Fibonacci and Lucas sequences attached to Q(√d).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("unit", parents=[common], help="fundamental unit of Q(√d)")
    p.add_argument("d", type=int)
    p.set_defaults(handler=_cmd_unit)

    for name, blurb in (("fib", "Fibonacci terms"), ("lucas", "Lucas terms")):
        p = sub.add_parser(name, parents=[common], help=blurb)
        p.add_argument("d", type=int)
        p.add_argument("--from", dest="from_", type=int, default=1, metavar="A")
        p.add_argument("--to", dest="to", type=int, default=10, metavar="B")
        p.add_argument(
            "--unit-power", type=int, default=None, metavar="L",
            help="use the unit sign*eps^L instead of the fundamental unit",
        )
        p.add_argument("--unit-sign", default=None, metavar="+/-")
        p.set_defaults(handler=_cmd_terms)

    p = sub.add_parser("kfib", parents=[common], help="field of the k-Fibonacci sequence")
    p.add_argument("k", type=int)
    p.add_argument("--terms", type=int, default=8, metavar="N")
    p.set_defaults(handler=_cmd_kfib)

    p = sub.add_parser("verify", parents=[common], help="verify identities exactly")
    p.add_argument("d", type=int)
    p.add_argument(
        "--identity", default="all", metavar="TAG",
        help="catalog tag, or 'all' (default)",
    )
    p.add_argument("--range", default="-25..25", metavar="A..B")
    p.add_argument("--unit-power", type=int, default=None, metavar="L")
    p.add_argument("--unit-sign", default=None, metavar="+/-")
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("gf", parents=[common], help="generating functions at a point")
    p.add_argument("d", type=int)
    p.add_argument("--x", required=True, metavar="P/Q")
    p.add_argument("--terms", type=int, default=200, metavar="N")
    p.set_defaults(handler=_cmd_gf)

    p = sub.add_parser("oeis-check", parents=[common], help="cross-check against OEIS b-files")
    p.add_argument("d", type=int)
    p.add_argument("--a", default=None, metavar="A000000", help="explicit A-number")
    p.add_argument("--offline", action="store_true", help="never touch the network")
    p.set_defaults(handler=_cmd_oeis_check)

    return parser


def _glue_dash_values(argv: list[str]) -> list[str]:
    """Join flags whose values may start with '-' (ranges, signs, rationals)."""
    out: list[str] = []
    fuse = ("--range", "--x", "--unit-sign")
    it = iter(argv)
    for token in it:
        if token in fuse:
            value = next(it, None)
            out.append(token if value is None else f"{token}={value}")
        else:
            out.append(token)
    return out


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    try:
        args = parser.parse_args(_glue_dash_values(list(argv)))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except _UsageError as exc:
        print(f"quadfib: {exc}", file=sys.stderr)
        return _EXIT_USAGE
    except (NetworkError, CacheMissError, BFileParseError, ResourceLimitError) as exc:
        print(f"quadfib: {exc}", file=sys.stderr)
        return _EXIT_IO
    except (QuadfibError, ValueError, ZeroDivisionError) as exc:
        print(f"quadfib: {exc}", file=sys.stderr)
        return _EXIT_USAGE
    except OSError as exc:
        print(f"quadfib: {exc}", file=sys.stderr)
        return _EXIT_IO


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
