"""
Command-line interface.

    riordan-circ array --poly "1,5" --rows 7 --cols 7
    riordan-circ column --poly "1,5" --k 3
    riordan-circ orbit --poly "-4/11,6/11" --rotated --curve --nmax 10
    riordan-circ classify --poly "93/100,1/2,-19/50"
    riordan-circ az --poly "1,1" --order 6
    riordan-circ verify --poly "-1/3,2/3,2/3" prop5 --nmax 3
    riordan-circ oeis --id A001700 --from theorem6 --a 1 --b 1 --nmax 5

All numbers are exact: integers or p/q, never decimals.  Exit codes: 0 success,
1 a verified claim failed, 2 usage or domain error, 3 OEIS unavailable.
"""

from __future__ import annotations

import csv
import functools
import io
import json
import sys

import click
import numpy as np

from . import azseq, circulant, dynamics, oeis, riordan
from .errors import DomainError, OEISUnavailable, VerificationError
from .reports import jsonable
from .series import ParamPoly, format_poly, parse_poly, parse_rational

__all__ = ["cli", "main"]

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_UNAVAILABLE = 0, 1, 2, 3


class PolyType(click.ParamType):
    name = "poly"

    def convert(self, value, param, ctx):
        try:
            return parse_poly(value)
        except DomainError as exc:
            self.fail(str(exc), param, ctx)


class RationalType(click.ParamType):
    name = "rational"

    def convert(self, value, param, ctx):
        try:
            return parse_rational(str(value))
        except DomainError as exc:
            self.fail(str(exc), param, ctx)


POLY = PolyType()
RATIONAL = RationalType()


def output_options(f):
    f = click.option("--out", "out", type=click.Path(dir_okay=False), default=None,
                     help="Write output here instead of stdout.")(f)
    f = click.option("--format", "fmt", type=click.Choice(["table", "csv", "json"]), default=None,
                     help="Output format (overrides the global flag).")(f)
    return f


def guarded(f):
    """Map library exceptions onto the exit-code contract."""

    @functools.wraps(f)
    def wrapper(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except VerificationError as exc:
            report = getattr(exc, "report", None)
            if report is not None:
                click.echo(report.to_json())
            click.echo(f"violation: {exc}", err=True)
            sys.exit(EXIT_VIOLATION)
        except OEISUnavailable as exc:
            click.echo(f"unavailable: {exc}", err=True)
            sys.exit(EXIT_UNAVAILABLE)
        except DomainError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(EXIT_USAGE)

    return wrapper


def _settings(ctx, fmt, out):
    g = ctx.find_root().obj or {}
    return fmt or g.get("fmt") or "table", out or g.get("out")


def _emit(ctx, fmt, out, text: str) -> None:
    fmt, out = _settings(ctx, fmt, out)
    if not text.endswith("\n"):
        text += "\n"
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _table(header, rows) -> str:
    cells = [list(map(str, header))] + [[str(x) for x in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    return "\n".join("  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in cells)


def _render(fmt, header, rows, obj) -> str:
    if fmt == "json":
        return json.dumps(jsonable(obj), indent=2)
    if fmt == "csv":
        return _csv(header, rows)
    return _table(header, rows)


@click.group(help=__doc__)
@click.option("--format", "fmt", type=click.Choice(["table", "csv", "json"]), default="table")
@click.option("--out", "out", type=click.Path(dir_okay=False), default=None)
@click.pass_context
def cli(ctx, fmt, out):
    ctx.obj = {"fmt": fmt, "out": out}


@cli.command("array")
@click.option("--poly", type=POLY, required=True, help='Coefficients "a0,a1,...,ad".')
@click.option("--rows", type=int, default=7, show_default=True)
@click.option("--cols", type=int, default=7, show_default=True)
@output_options
@click.pass_context
@guarded
def cmd_array(ctx, poly, rows, cols, fmt, out):
    """Print the top-left block of the Riordan array of p."""
    arr = riordan.build(poly, rows, cols)
    f, _ = _settings(ctx, fmt, out)
    if f == "json":
        text = arr.to_json()
    elif f == "csv":
        text = arr.to_csv()
    else:
        text = _table([f"k={k}" for k in range(arr.cols)], arr.entries)
    _emit(ctx, fmt, out, text)


@cli.command("column")
@click.option("--poly", type=POLY, required=True)
@click.option("--k", "k", type=int, required=True, help="Column index.")
@click.option("--reps", type=int, default=3, show_default=True)
@output_options
@click.pass_context
@guarded
def cmd_column(ctx, poly, k, reps, fmt, out):
    """One column with its periodicity report."""
    rep = riordan.verify_theorem1(poly, k, reps)
    N = rep.start + (reps + 1) * rep.period
    col = riordan.column_gf(poly, k, N).coeffs
    f, _ = _settings(ctx, fmt, out)
    rows = [(i, x) for i, x in enumerate(col)]
    if f == "json":
        text = json.dumps({"p": format_poly(poly), "k": k, "column": [str(x) for x in col],
                           "report": rep.to_dict()}, indent=2)
    elif f == "csv":
        text = _csv(["i", "C"], rows)
    else:
        text = _table(["i", "C"], rows) + (
            f"\nperiodic from i={rep.start}, block {tuple(map(str, rep.block))}, "
            f"period {rep.period}, prime period {rep.prime_period}"
        )
    _emit(ctx, fmt, out, text)


def _axis_names(n: int) -> list[str]:
    return ["x", "y", "z"][:n] if n <= 3 else [f"v{i}" for i in range(n)]


@cli.command("orbit")
@click.option("--poly", type=POLY, required=True)
@click.option("--nmax", type=int, default=10, show_default=True)
@click.option("--rotated", is_flag=True, help="Rotated coordinates (d = 1 or 2).")
@click.option("--curve", is_flag=True, help="Also sample the curve carrying the orbit.")
@click.option("--samples", type=int, default=200, show_default=True)
@output_options
@click.pass_context
@guarded
def cmd_orbit(ctx, poly, nmax, rotated, curve, samples, fmt, out):
    """Orbit points V^n (a_0, ..., a_d), exact or rotated."""
    d = poly.degree
    rotated = rotated or curve
    if rotated and d not in (1, 2):
        raise DomainError("--rotated needs a linear or quadratic polynomial")
    names = _axis_names(d + 1)
    if not rotated:
        pts = [(n, *v) for n, v in zip(range(nmax + 1), circulant.iter_orbit(poly))]
    elif d == 1:
        a, b = poly.coeffs
        pts = [(n, *dynamics.rotated_orbit_linear(a, b, n)) for n in range(nmax + 1)]
    else:
        pts = [(n, *dynamics.rotated_orbit_quadratic(*poly.coeffs, n)) for n in range(nmax + 1)]
    pts = [tuple(float(x) if isinstance(x, np.floating) else x for x in r) for r in pts]
    header = ["n"] + names
    curve_rows = []
    if curve:
        if d == 1:
            ts = np.linspace(0, nmax + 1, samples)
            for br, arr in dynamics.linear_curve_points(*poly.coeffs, ts):
                curve_rows += [(float(t), float(x), float(y), br) for t, x, y in arr]
        else:
            ts = np.linspace(0, nmax, samples)
            for br, arr in enumerate(dynamics.helix_points(*poly.coeffs, ts)):
                curve_rows += [(float(t), *map(float, row), br) for t, row in zip(ts, arr)]
    curve_header = ["t"] + names + ["branch"]
    f, _ = _settings(ctx, fmt, out)
    if f == "json":
        obj = {"p": format_poly(poly), "rotated": rotated,
               "orbit": [dict(zip(header, r)) for r in pts]}
        if curve:
            obj["curve"] = [dict(zip(curve_header, r)) for r in curve_rows]
        text = json.dumps(jsonable(obj), indent=2)
    else:
        text = _render(f, header, pts, None)
        if curve:
            text = text.rstrip("\n") + "\n\n" + _render(f, curve_header, curve_rows, None)
    _emit(ctx, fmt, out, text)


@cli.command("classify")
@click.option("--poly", type=POLY, required=True)
@click.option("--cylinder-tol", type=float, default=0.0, show_default=True,
              help="Treat |r - 1| <= tol as r = 1 (quadratic case).")
@output_options
@click.pass_context
@guarded
def cmd_classify(ctx, poly, cylinder_tol, fmt, out):
    """Qualitative fate of the orbit for linear or quadratic p."""
    if poly.degree == 1:
        res = dynamics.classify_linear(*poly.coeffs)
    elif poly.degree == 2:
        res = dynamics.classify_quadratic(*poly.coeffs, cylinder_tol=cylinder_tol)
    else:
        raise DomainError("classification covers degree 1 and 2 only")
    obj = {"p": format_poly(poly), **res.to_dict()}
    f, _ = _settings(ctx, fmt, out)
    if f == "table":
        text = "\n".join(f"{k}: {v}" for k, v in obj.items())
    elif f == "csv":
        text = _csv(["key", "value"], [(k, json.dumps(v)) for k, v in obj.items()])
    else:
        text = json.dumps(obj, indent=2)
    _emit(ctx, fmt, out, text)


@cli.command("az")
@click.option("--poly", type=POLY, required=True)
@click.option("--order", "N", type=int, default=8, show_default=True)
@output_options
@click.pass_context
@guarded
def cmd_az(ctx, poly, N, fmt, out):
    """A- and Z-sequences to order N."""
    az = azseq.az_sequences(poly, N)
    rows = [(n, az.A[n], az.Z[n]) for n in range(N)]
    f, _ = _settings(ctx, fmt, out)
    text = json.dumps(az.to_dict(poly)) if f == "json" else _render(f, ["n", "A", "Z"], rows, None)
    _emit(ctx, fmt, out, text)


def _linear_ab(poly):
    if poly.degree < 1:
        raise DomainError("need p = a + bt (a, b read from the first two coefficients)")
    return poly.coeffs[0], poly.coeffs[1]


@cli.command("verify")
@click.option("--poly", type=POLY, default=None, help="Defaults to (-1+2t+2t^2)/3 for prop5.")
@click.argument("which", type=click.Choice(
    ["theorem1", "theorem2", "prop5", "rogers", "theorem6", "catalan", "diagonalization"]))
@click.option("--k", "kmax", type=int, default=8, show_default=True, help="theorem1: columns 1..k.")
@click.option("--reps", type=int, default=3, show_default=True)
@click.option("--nmax", type=int, default=None, help="theorem2/prop5/theorem6 bound.")
@click.option("--rows", type=int, default=10, show_default=True, help="rogers: array size.")
@click.option("--order", "N", type=int, default=10, show_default=True, help="catalan: series order.")
@click.option("--tol", type=float, default=1e-9, show_default=True)
@output_options
@click.pass_context
@guarded
def cmd_verify(ctx, poly, which, kmax, reps, nmax, rows, N, tol, fmt, out):
    """Check one of the exact claims; exit 1 if it fails."""
    if poly is None:
        if which != "prop5":
            raise click.UsageError("--poly is required")
        poly = dynamics.PROP5_POLY
    if which == "theorem1":
        reports = [riordan.verify_theorem1(poly, k, reps).to_dict() for k in range(1, kmax + 1)]
        obj = {"claim": "theorem1", "passed": True, "checks": len(reports), "columns": reports}
    elif which == "theorem2":
        obj = circulant.verify_theorem2(poly, nmax or 6).to_dict()
    elif which == "prop5":
        obj = dynamics.verify_prop5(nmax or 3, poly).to_dict()
    elif which == "rogers":
        obj = azseq.verify_rogers(poly, rows).to_dict()
    elif which == "theorem6":
        obj = azseq.theorem6_check(*_linear_ab(poly), nmax or 8).to_dict()
    elif which == "catalan":
        obj = azseq.verify_catalan_forms(*_linear_ab(poly), N).to_dict()
    else:
        obj = circulant.verify_diagonalization(poly, tol).to_dict()
    f, _ = _settings(ctx, fmt, out)
    if f == "table":
        text = f"PASS {obj['claim']} ({obj['checks']} checks)"
    else:
        text = json.dumps(jsonable(obj), indent=2)
    _emit(ctx, fmt, out, text)


def _oeis_terms(source, terms, a, b, nmax):
    if source == "terms":
        if not terms:
            raise DomainError("--from terms needs --terms")
        vals = [parse_rational(t) for t in terms.split(",")]
    elif source == "theorem6":
        vals = azseq.theorem6_check(a, b, nmax).details["values"]
    elif source == "theorem6-c2":
        A = azseq.csum_expansion(nmax + 5, 3)
        vals = [A[n][2] for n in range(4, nmax + 5)]
    else:
        vals = azseq.catalan_table(nmax)
    if any(getattr(v, "denominator", 1) != 1 for v in vals):
        raise DomainError("OEIS comparison needs integer terms")
    return [int(v) for v in vals]


@cli.command("oeis")
@click.option("--id", "seq_id", required=True, help="A-number, e.g. A001700.")
@click.option("--from", "source", type=click.Choice(["theorem6", "theorem6-c2", "catalan", "terms"]),
              default="terms", show_default=True)
@click.option("--terms", default=None, help="Comma-separated integers for --from terms.")
@click.option("--a", "a", type=RATIONAL, default="1", show_default=True)
@click.option("--b", "b", type=RATIONAL, default="1", show_default=True)
@click.option("--nmax", type=int, default=5, show_default=True)
@click.option("--max-offset", type=int, default=3, show_default=True)
@click.option("--offline", is_flag=True, help="Never touch the network.")
@output_options
@click.pass_context
@guarded
def cmd_oeis(ctx, seq_id, source, terms, a, b, nmax, max_offset, offline, fmt, out):
    """Compare library-generated integers with an OEIS b-file."""
    vals = _oeis_terms(source, terms, a, b, nmax)
    client = oeis.OEISClient(offline=True if offline else None)
    rep = oeis.check_sequence(vals, seq_id, range(max_offset + 1), client)
    f, _ = _settings(ctx, fmt, out)
    if f == "table":
        text = (f"{rep.verdict} {rep.seq_id}: {rep.matched_prefix}/{len(rep.terms)} terms, "
                f"offset {rep.offset}, sign-stripped {rep.sign_stripped}, source {rep.source}")
    else:
        text = json.dumps(rep.to_dict(), indent=2)
    _emit(ctx, fmt, out, text)
    if not rep.ok:
        sys.exit(EXIT_VIOLATION)


def main(argv=None):
    cli.main(args=argv, prog_name="riordan-circ")


if __name__ == "__main__":
    main()
