"""Command-line front end: ``rcb array|seq|hankel|verify``.

Every subcommand is a thin adapter over library calls.  Exit codes: 0 on
success, 1 when a verification or computation fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import re
import sys
from pathlib import Path

from . import family as F
from .exactalg import DEFAULT_ORDER, AlgebraError, ParamPoly, Series, as_rat
from .fixtures import verify_all
from .hankel import (
    InsufficientTerms,
    ZeroHankelBlock,
    ZeroPivot,
    hankel_transform,
    jfraction_extract,
    sfraction_extract,
)
from .riordan import SeqVec, TriMatrix, production_matrix, to_matrix

ARRAYS = ("coeff", "moment", "production", "reversal")
SEQUENCES = ("moments", "rowsums", "central", "centralplus", "polys")
HANKEL_SOURCES = ("moments", "unmoments", "rowsums", "central", "centralplus")
_RAT = re.compile(r"[+-]?\d+(?:/\d+)?")


class UsageError(Exception):
    pass


def parse_r(text: str):
    """``symbolic`` or an exact rational literal; floats are rejected."""
    if text == "symbolic":
        return None
    if not _RAT.fullmatch(text.strip()):
        raise argparse.ArgumentTypeError(
            f"--r takes 'symbolic' or an exact rational p/q, not {text!r}"
        )
    try:
        return as_rat(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def default_order() -> int:
    env = os.environ.get("RCB_ORDER")
    if not env:
        return DEFAULT_ORDER
    try:
        return int(env)
    except ValueError:
        raise UsageError(f"RCB_ORDER must be an integer, got {env!r}") from None


def _common(p: argparse.ArgumentParser, fmt_default: str = "text") -> None:
    p.add_argument("--r", type=parse_r, default=None, metavar="R",
                   help="'symbolic' (default) or an exact rational p/q")
    p.add_argument("--order", type=int, default=None, help="truncation order (default 32, env RCB_ORDER)")
    p.add_argument("--format", choices=("text", "json", "csv"), default=fmt_default)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rcb", description="Riordan arrays and the restricted Chebyshev-Boubaker family."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("array", help="render a coefficient, moment or production matrix")
    p.set_defaults(subparser=p)
    p.add_argument("which", choices=ARRAYS)
    p.add_argument("--rows", type=int, default=7)
    _common(p)

    p = sub.add_parser("seq", help="render a sequence")
    p.set_defaults(subparser=p)
    p.add_argument("which", choices=SEQUENCES)
    p.add_argument("--n", type=int, default=10, help="number of terms")
    _common(p)

    p = sub.add_parser("hankel", help="Hankel transform and continued fractions")
    p.set_defaults(subparser=p)
    p.add_argument("source", nargs="?", choices=HANKEL_SOURCES)
    p.add_argument("--file", type=Path, help="file of terms (comma or whitespace separated)")
    p.add_argument("--max-n", type=int, default=5, dest="max_n")
    p.add_argument("--cf", choices=("j", "s"))
    _common(p)

    p = sub.add_parser("verify", help="check stored claims against the computations")
    p.set_defaults(subparser=p)
    p.add_argument("pattern", nargs="?", default="*", help="claim-id glob, e.g. 'paper.*'")
    _common(p, fmt_default="json")
    return parser


# --- output -----------------------------------------------------------------


def _dump(obj) -> str:
    return json.dumps(obj, indent=2)


def _csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for row in rows:
        writer.writerow(row)
    return buf.getvalue().rstrip("\n")


def render_matrix(M: TriMatrix, fmt: str) -> str:
    if fmt == "json":
        return _dump(M.to_json())
    if fmt == "csv":
        return _csv([[i] + [str(e) for e in row] for i, row in enumerate(M.rows)])
    return M.render()


def render_seq(s: SeqVec, fmt: str) -> str:
    if fmt == "json":
        return _dump(s.to_json())
    if fmt == "csv":
        return _csv([[s.offset + i] + [str(c) for c in t.to_json()["coeffs"]] for i, t in enumerate(s)])
    return s.render()


def render_polys(polys, fmt: str) -> str:
    if fmt == "json":
        return _dump({"polys": [[c.to_json() for c in p] for p in polys]})
    if fmt == "csv":
        return _csv([[n] + [str(c) for c in p] for n, p in enumerate(polys)])
    return "\n".join(f"P_{n}(x) = {F.render_xpoly(p)}" for n, p in enumerate(polys))


# --- commands ----------------------------------------------------------------


def _ctx(args) -> F.FamilyContext:
    order = args.order if args.order is not None else default_order()
    if order < 4:
        raise UsageError("--order must be at least 4")
    return F.FamilyContext(args.r, order)


def cmd_array(args) -> tuple[int, str]:
    ctx = _ctx(args)
    rows = args.rows
    limit = ctx.order - 1 if args.which == "production" else ctx.order
    if not 1 <= rows <= limit:
        raise UsageError(f"--rows must be between 1 and {limit} at order {ctx.order}")
    if args.which == "coeff":
        M = to_matrix(F.coefficient_array(ctx), rows)
    elif args.which == "moment":
        M = to_matrix(F.moment_matrix(ctx), rows)
    elif args.which == "production":
        M = production_matrix(F.moment_matrix(ctx), rows)
    else:
        M = F.h_hat_coefficient_array(rows).row_reversal()
        if ctx.r is not None:
            M = M.evaluate_r(ctx.r)
    return 0, render_matrix(M, args.format)


def cmd_seq(args) -> tuple[int, str]:
    ctx = _ctx(args)
    n = args.n
    if not 1 <= n <= ctx.order:
        raise UsageError(f"--n must be between 1 and {ctx.order} at order {ctx.order}")
    if args.which == "polys":
        return 0, render_polys(F.polynomials(ctx, n), args.format)
    if args.which == "moments":
        s = F.moments(ctx, n)
    elif args.which == "rowsums":
        s = F.row_sum_sequence(ctx, n)
    elif args.which == "central":
        s = F.central_sequence(ctx, n)
    else:
        s = F.central_plus_sequence(ctx, n)
    return 0, render_seq(s, args.format)


def read_terms(path: Path) -> list:
    try:
        text = path.read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    items = [t for t in re.split(r"[,\n;]+", text) if t.strip()]
    try:
        return [ParamPoly.parse(t) for t in items]
    except ValueError as exc:
        if len(items) != 1:
            raise UsageError(str(exc)) from None
    # a single line of whitespace-separated terms
    try:
        return [ParamPoly.parse(t) for t in items[0].split()]
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def hankel_source(name: str, ctx: F.FamilyContext, n_terms: int) -> list:
    if name == "moments":
        return list(F.moments(ctx, n_terms))
    if name == "unmoments":
        return list(F.moments_unaerated(ctx, n_terms))
    if name == "rowsums":
        return list(F.row_sum_sequence(ctx, n_terms))
    if name == "central":
        return list(F.central_sequence(ctx, n_terms))
    return list(F.central_plus_sequence(ctx, n_terms))


def cmd_hankel(args) -> tuple[int, str]:
    ctx = _ctx(args)
    if (args.source is None) == (args.file is None):
        raise UsageError("give exactly one of a built-in SOURCE or --file")
    max_n = args.max_n
    if not 0 <= max_n <= ctx.order // 2:
        raise UsageError(f"--max-n must be between 0 and {ctx.order // 2} at order {ctx.order}")
    if args.file is not None:
        terms = read_terms(args.file)
        if ctx.r is not None:
            terms = [ParamPoly.const(t(ctx.r)) for t in terms]
    else:
        terms = hankel_source(args.source, ctx, 2 * max_n + 2)
    try:
        h = hankel_transform(terms, max_n)
    except InsufficientTerms as exc:
        raise UsageError(f"need {exc.needed} terms for --max-n {max_n}, have {exc.have}") from None

    out: dict = {"hankel": h.to_json()}
    text = [h.render()]
    rows = [[n] + [str(c) for c in t.to_json()["coeffs"]] for n, t in enumerate(h)]
    status = 0
    if args.cf:
        gf = Series(terms, len(terms))
        try:
            if args.cf == "j":
                cf = jfraction_extract(gf, max_n)
            else:
                cf = sfraction_extract(gf, max_n)
            note = ""
        except (ZeroHankelBlock, ZeroPivot) as exc:
            cf, note = exc.partial, str(exc)
        except AlgebraError as exc:
            hint = "; try a numeric --r" if ctx.r is None else ""
            return 1, f"continued fraction failed: {exc}{hint}"
        out["cf"] = cf.to_json()
        if note:
            out["note"] = note
        if args.cf == "j":
            text.append("a: " + ", ".join(str(v) for v in cf.a))
            text.append("b: " + ", ".join(str(v) for v in cf.b))
        else:
            text.append("alpha: " + ", ".join(str(v) for v in cf.alpha))
        if note:
            text.append(note)
    if args.format == "json":
        return status, _dump(out)
    if args.format == "csv":
        return status, _csv(rows)
    return status, "\n".join(text)


def cmd_verify(args) -> tuple[int, str]:
    ctx = _ctx(args)
    report = verify_all(ctx, args.pattern)
    if not report.results:
        print(f"warning: no claims match {args.pattern!r}", file=sys.stderr)
    code = 0 if report.ok else 1
    if args.format == "json":
        return code, _dump(report.to_json())
    if args.format == "csv":
        return code, _csv([[rep.claim_id, rep.status] for rep in report.results])
    lines = [f"{rep.status.upper():7} {rep.claim_id}" for rep in report.results]
    c = report.counts
    lines.append(f"{c['pass']} passed, {c['fail']} failed, {c['skipped']} skipped")
    return code, "\n".join(lines)


COMMANDS = {"array": cmd_array, "seq": cmd_seq, "hankel": cmd_hankel, "verify": cmd_verify}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code, text = COMMANDS[args.command](args)
    except UsageError as exc:
        args.subparser.error(str(exc))
    if text:
        stream = sys.stdout if code == 0 or args.command == "verify" else sys.stderr
        print(text, file=stream)
    return code


if __name__ == "__main__":
    sys.exit(main())
