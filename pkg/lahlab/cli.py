"""lahlab command-line tool.

Usage:
    lahlab table lah|stirling1|stirling2 --nmax N      Print triangle rows 0..N
    lahlab poly laguerre --alpha R --n N               Laguerre coefficients (ascending)
    lahlab poly bell --n N                             Exponential polynomial coefficients
    lahlab derive --n N [--c R --p R --lambda R]       Closed forms of D^n [x^lambda e^(c x^p)]
                  [--method M] [--x0 R]
    lahlab verify [--suite S] [--nmax N]               Run identity checks
    lahlab series lahgf|laguerregf|bellgf|todorovgf    Generating-function coefficient checks
                  [--k K] [--m M] [--alpha R] [--order N]

Every command takes --format plain|csv|json. Exit codes: 0 when every printed
check passes, 1 when one fails, 2 for usage or domain errors.
"""
from __future__ import annotations

import csv
import io
import json
import logging
import sys
from fractions import Fraction
from typing import Any, Iterable, List, Optional, Sequence

import click
from pydantic import ValidationError

from .errors import DomainError, UsageError
from .exact import to_rational


# ── Internal helpers ──────────────────────────────────────────────────────────

def _ok(msg: str) -> None:
    click.echo(click.style("✓ ", fg="green") + msg, err=True)


def _err(msg: str) -> None:
    click.echo(click.style("Error: ", fg="red") + msg, err=True)


def _fail(msg: str) -> None:
    _err(msg)
    sys.exit(2)


class RationalParam(click.ParamType):
    """Accepts ``p/q`` and integer literals; no decimal points."""

    name = "rational"

    def convert(self, value: Any, param: Optional[click.Parameter], ctx: Optional[click.Context]) -> Fraction:
        if isinstance(value, Fraction):
            return value
        try:
            return to_rational(value)
        except UsageError as exc:
            self.fail(str(exc), param, ctx)


RATIONAL = RationalParam()

FORMATS = ("plain", "csv", "json")


def _format_option(func):
    return click.option(
        "--format",
        "fmt",
        type=click.Choice(FORMATS),
        default=None,
        help="Output format (default from config: plain).",
    )(func)


def _resolve_format(ctx: click.Context, fmt: Optional[str]) -> str:
    return fmt or ctx.obj.output_format.value


def _csv_line(cells: Iterable[Any]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="").writerow(list(cells))
    return buf.getvalue()


def _json_line(kind: str, params: Sequence[str], values: Sequence[str], status: Optional[str] = None) -> str:
    record = {"kind": kind, "params": list(params), "values": list(values)}
    if status is not None:
        record["status"] = status
    return json.dumps(record)


def _verdict(passed: bool, yes: str = "PASS", no: str = "FAIL") -> str:
    return yes if passed else no


# ── Root ──────────────────────────────────────────────────────────────────────

@click.group()
@click.option("-v", "--verbose", is_flag=True, help="Log debug diagnostics to stderr.")
@click.pass_context
def cli(ctx: click.Context, verbose: bool) -> None:
    """lahlab: exact Lah, Stirling, Laguerre and exponential-polynomial lab."""
    from .config import load_config

    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        ctx.obj = load_config()
    except (ValidationError, json.JSONDecodeError) as exc:
        _fail(f"invalid configuration: {exc}")


# ── table ─────────────────────────────────────────────────────────────────────

@cli.command()
@click.argument("kind", type=click.Choice(["lah", "stirling1", "stirling2"]))
@click.option("--nmax", type=click.IntRange(min=0), default=None, help="Last row to print.")
@click.option("--unsigned", is_flag=True, help="Print |s(n,k)| for stirling1.")
@_format_option
@click.pass_context
def table(ctx: click.Context, kind: str, nmax: Optional[int], unsigned: bool, fmt: Optional[str]) -> None:
    """Print rows 0..NMAX of a Lah or Stirling triangle."""
    from .exact import format_rational
    from .sequences import triangle

    fmt = _resolve_format(ctx, fmt)
    nmax = ctx.obj.suite_nmax if nmax is None else nmax
    rows = triangle(kind).rows(nmax)
    if unsigned:
        rows = [tuple(abs(v) for v in row) for row in rows]

    if fmt == "plain":
        width = max(len(format_rational(v)) for row in rows for v in row)
        for row in rows:
            click.echo("  ".join(format_rational(v).rjust(width) for v in row))
    elif fmt == "csv":
        for row in rows:
            click.echo(_csv_line(format_rational(v) for v in row))
    else:
        for n, row in enumerate(rows):
            click.echo(_json_line(kind, [str(n)], [format_rational(v) for v in row]))


# ── poly ──────────────────────────────────────────────────────────────────────

@cli.command()
@click.argument("kind", type=click.Choice(["laguerre", "bell"]))
@click.option("--n", "n", type=click.IntRange(min=0), required=True, help="Degree index.")
@click.option("--alpha", type=RATIONAL, default=None, help="Laguerre order (e.g. -1 or 1/2).")
@_format_option
@click.pass_context
def poly(ctx: click.Context, kind: str, n: int, alpha: Optional[Fraction], fmt: Optional[str]) -> None:
    """Print the ascending coefficient list of L_n^(alpha) or phi_n."""
    from .exact import format_rational
    from .formatting import exact_values
    from .polynomials import bell_poly, laguerre

    fmt = _resolve_format(ctx, fmt)
    if kind == "laguerre":
        if alpha is None:
            raise click.UsageError("poly laguerre needs --alpha")
        result = laguerre(alpha, n)
        params = [format_rational(alpha), str(n)]
    else:
        if alpha is not None:
            raise click.UsageError("--alpha only applies to poly laguerre")
        result = bell_poly(n)
        params = [str(n)]

    values = exact_values(result)
    if fmt == "plain":
        click.echo(", ".join(values))
        click.echo(f"= {result.pretty()}")
    elif fmt == "csv":
        click.echo(_csv_line(values))
    else:
        click.echo(_json_line(kind, params, values))


# ── derive ────────────────────────────────────────────────────────────────────

METHOD_CHOICES = ["lah", "laguerre", "schwatt", "exppoly", "brychkov", "leibniz", "all"]


@cli.command()
@click.option("--n", "n", type=click.IntRange(min=0), required=True, help="Derivative order.")
@click.option("--c", "c", type=RATIONAL, default="1", show_default=True, help="Coefficient in exp(c x^p).")
@click.option("--p", "p", type=RATIONAL, default="-1", show_default=True, help="Power in exp(c x^p).")
@click.option("--lambda", "lam", type=RATIONAL, default="0", show_default=True, help="Prefactor power x^lambda.")
@click.option("--method", type=click.Choice(METHOD_CHOICES), default="all", show_default=True)
@click.option("--x0", type=RATIONAL, default=None, help="Also evaluate at x0 and compare with the Taylor oracle.")
@_format_option
@click.pass_context
def derive(
    ctx: click.Context,
    n: int,
    c: Fraction,
    p: Fraction,
    lam: Fraction,
    method: str,
    x0: Optional[Fraction],
    fmt: Optional[str],
) -> None:
    """Closed forms of D^n [x^lambda exp(c x^p)] in the shared normal form.

    Coefficients a_k are printed for exp(c x^p) x^(lambda-n) sum_k a_k x^(p k).
    """
    from .derivatives import Method, applicable_methods, derive as derive_form, evaluate_form, taylor_oracle
    from .formatting import format_exact
    from .models import DerivSpec

    fmt = _resolve_format(ctx, fmt)
    spec = DerivSpec(n=n, c=c, p=p, lam=lam)
    base_params = [format_exact(v) for v in (n, c, p, lam)]
    try:
        methods = applicable_methods(spec) if method == "all" else [Method(method)]
        forms = [(m, derive_form(spec, m)) for m in methods]
        oracle = taylor_oracle(spec, x0) if x0 is not None else None
        values = [evaluate_form(form, x0) for _, form in forms] if x0 is not None else []
    except (UsageError, DomainError) as exc:
        _fail(str(exc))

    verdicts: List[bool] = []
    for m, form in forms:
        coeffs = format_exact(form.coeffs)
        if fmt == "plain":
            click.echo(f"{m.value:<9} {coeffs}")
        elif fmt == "csv":
            click.echo(_csv_line([m.value, *[format_exact(a) for a in form.coeffs]]))
        else:
            click.echo(_json_line("derive", base_params + [m.value], [format_exact(a) for a in form.coeffs]))

    if method == "all":
        agree = all(form.coeffs == forms[0][1].coeffs for _, form in forms)
        verdicts.append(agree)
        word = _verdict(agree, "AGREE", "DISAGREE")
        if fmt == "json":
            click.echo(_json_line("verdict", base_params, [m.value for m, _ in forms], "pass" if agree else "fail"))
        else:
            click.echo(word)

    if x0 is not None:
        for (m, _), value in zip(forms, values):
            match = value == oracle
            verdicts.append(match)
            word = _verdict(match, "MATCH", "MISMATCH")
            if fmt == "plain":
                click.echo(f"{m.value:<9} value {format_exact(value)}  oracle {format_exact(oracle)}  {word}")
            elif fmt == "csv":
                click.echo(_csv_line([m.value, format_exact(x0), format_exact(value), format_exact(oracle), word]))
            else:
                click.echo(_json_line(
                    "evaluate",
                    base_params + [m.value, format_exact(x0)],
                    [format_exact(value), format_exact(oracle)],
                    "pass" if match else "fail",
                ))

    if not all(verdicts):
        sys.exit(1)


# ── verify ────────────────────────────────────────────────────────────────────

SUITE_CHOICES = ["all", "polynomials", "orthogonality", "todorov", "gould", "gf", "derivatives", "expbell"]


@cli.command()
@click.option("--suite", type=click.Choice(SUITE_CHOICES), default="all", show_default=True)
@click.option("--nmax", type=click.IntRange(min=1), default=None, help="Largest index checked (default 12).")
@click.option("--workers", type=click.IntRange(min=1), default=None, help="Threads for the runner.")
@click.option("--metrics-file", type=click.Path(dir_okay=False), default=None,
              help="Write Prometheus textfile metrics here after the run.")
@_format_option
@click.pass_context
def verify(
    ctx: click.Context,
    suite: str,
    nmax: Optional[int],
    workers: Optional[int],
    metrics_file: Optional[str],
    fmt: Optional[str],
) -> None:
    """Run the identity suites and print one line per check."""
    from .identities import Suite, all_passed, run_suite
    from .metrics import write_metrics

    config = ctx.obj
    fmt = _resolve_format(ctx, fmt)
    nmax = config.suite_nmax if nmax is None else nmax
    workers = config.workers if workers is None else workers
    metrics_file = metrics_file or config.metrics_file

    try:
        reports = run_suite(nmax, [Suite(suite)], workers=workers)
    except (UsageError, DomainError) as exc:
        _fail(str(exc))

    for report in reports:
        status = report.status.value
        if fmt == "plain":
            line = f"{status.upper()}  {report.identity}({', '.join(report.params)})"
            if not report.passed:
                line += f"  lhs={report.lhs}  rhs={report.rhs}"
            click.echo(line)
        elif fmt == "csv":
            click.echo(_csv_line([status, report.identity, ";".join(report.params), report.lhs, report.rhs]))
        else:
            click.echo(_json_line(report.identity, report.params, [report.lhs, report.rhs], status))

    if metrics_file:
        write_metrics(metrics_file)

    failed = sum(1 for r in reports if not r.passed)
    if all_passed(reports):
        _ok(f"{len(reports)} checks passed")
    else:
        _err(f"{failed} of {len(reports)} checks failed")
        sys.exit(1)


# ── series ────────────────────────────────────────────────────────────────────

@cli.command()
@click.argument("kind", type=click.Choice(["lahgf", "laguerregf", "bellgf", "todorovgf"]))
@click.option("--k", "k", type=click.IntRange(min=1), default=None, help="Lah column (lahgf).")
@click.option("--m", "m", type=click.IntRange(min=0), default=None, help="Power m (todorovgf).")
@click.option("--alpha", type=RATIONAL, default=None, help="Laguerre order (laguerregf, default -1).")
@click.option("--order", type=click.IntRange(min=1), default=None, help="Truncation order (default 12).")
@_format_option
@click.pass_context
def series(
    ctx: click.Context,
    kind: str,
    k: Optional[int],
    m: Optional[int],
    alpha: Optional[Fraction],
    order: Optional[int],
    fmt: Optional[str],
) -> None:
    """Extract generating-function coefficients and compare with the reference values."""
    from . import series as gf
    from .formatting import format_exact
    from .polynomials import Poly

    fmt = _resolve_format(ctx, fmt)
    order = ctx.obj.series_order if order is None else order

    if kind == "lahgf" and k is None:
        raise click.UsageError("series lahgf needs --k")
    if kind == "todorovgf" and m is None:
        raise click.UsageError("series todorovgf needs --m")

    try:
        if kind == "lahgf":
            check = gf.lah_column_gf_check(k, order)
        elif kind == "laguerregf":
            if alpha is None or alpha == -1:
                check = gf.laguerre_m1_gf_check(order)
            else:
                check = gf.laguerre_gf_check(alpha, order)
        elif kind == "bellgf":
            check = gf.bell_gf_check(order)
        else:
            check = gf.todorov_gf_check(m, order)
    except (UsageError, DomainError) as exc:
        _fail(str(exc))

    params = [format_exact(v) for v in check.params]

    def plain(value: Any) -> str:
        return value.pretty() if isinstance(value, Poly) else format_exact(value)

    for row in check.rows:
        word = _verdict(row.passed)
        if fmt == "plain":
            click.echo(f"t^{row.index}  {plain(row.extracted)}  {plain(row.expected)}  {word}")
        elif fmt == "csv":
            click.echo(_csv_line([row.index, format_exact(row.extracted), format_exact(row.expected), word]))
        else:
            click.echo(_json_line(
                kind,
                params + [str(row.index)],
                [format_exact(row.extracted), format_exact(row.expected)],
                word.lower(),
            ))

    if not check.passed:
        sys.exit(1)
