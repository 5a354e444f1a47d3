"""Command-line interface.

Usage:
    thermograv correction --y 1
    thermograv correction --r 1e-4 --T 2.7 --convention literal
    thermograv figure1 --ymin 0.01 --ymax 30 --points 300 --out fig1.csv
    thermograv force --m1 1 --m2 1 --r 1 --T 2.7
    thermograv range --T 2.7 --threshold 0.5
    thermograv validate --quick

Exit codes: 0 success, 1 validation or domain failure, 2 usage error.
"""
from __future__ import annotations

import csv
import io
import json
import sys

import click

from . import __version__
from .constants import CODATA_2018, PhysicalConstants, load_constants, reduced_y
from .correction import correction_factor, correction_table, reduce
from .errors import DomainError, NoCrossingError
from .physics import ParticlePair, force_finite_T, gravity_range
from .validation import run_checks

__all__ = ["OutputRecord", "cli", "main"]

SCHEMA_VERSION = "1"


def fmt(value):
    """Render numbers with 12 significant digits; pass other values through."""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.12g}"
    return str(value)


def _json_value(value):
    if isinstance(value, float):
        return float(f"{value:.12g}")
    return value


class OutputRecord:
    """Rows plus the metadata needed to reproduce them."""

    def __init__(self, command: str, columns: list, rows: list, consts: PhysicalConstants):
        self.command = command
        self.columns = list(columns)
        self.rows = [list(r) for r in rows]
        self.consts = consts

    @property
    def constants_fingerprint(self) -> str:
        return self.consts.fingerprint

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(self.columns)
        for row in self.rows:
            writer.writerow([fmt(v) for v in row])
        return buf.getvalue()

    def to_json(self) -> str:
        doc = {
            "schema_version": SCHEMA_VERSION,
            "command": self.command,
            "constants_fingerprint": self.constants_fingerprint,
            "constants": {k: _json_value(v) for k, v in self.consts.as_dict().items()},
            "columns": self.columns,
            "rows": [{c: _json_value(v) for c, v in zip(self.columns, row)} for row in self.rows],
        }
        return json.dumps(doc, indent=2) + "\n"


def _emit(record: OutputRecord, fmt_name: str, out: str | None):
    text = record.to_json() if fmt_name == "json" else record.to_csv()
    if out is None:
        click.echo(text, nl=False)
        return
    try:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        click.echo(f"error: cannot write {out}: {exc.strerror}", err=True)
        sys.exit(1)


def _positive(ctx, param, value):
    if value is not None and not value > 0.0:
        raise click.BadParameter("must be positive")
    return value


def _nonnegative(ctx, param, value):
    if value is not None and not value >= 0.0:
        raise click.BadParameter("must be non-negative")
    return value


format_option = click.option("--format", "fmt_name", type=click.Choice(["csv", "json"]), default="csv",
                             show_default=True, help="Output format.")
out_option = click.option("--out", type=click.Path(dir_okay=False), default=None,
                          help="Write to this file instead of stdout.")


@click.group()
@click.version_option(__version__, prog_name="thermograv")
@click.option("--constants", "constants_path", type=click.Path(exists=True, dir_okay=False), default=None,
              help="key = value file overriding hbar, c, k_boltzmann, gamma_grav.")
@click.pass_context
def cli(ctx, constants_path):
    """Finite-temperature dispersion model of gravitation."""
    try:
        ctx.obj = load_constants(constants_path)
    except DomainError as exc:
        click.echo(f"error: invalid constants: {exc}", err=True)
        sys.exit(1)


@cli.command()
@click.option("--y", type=float, default=None, callback=_positive, help="Reduced variable y > 0.")
@click.option("--r", type=float, default=None, callback=_positive, help="Distance in metres.")
@click.option("--T", "T", type=float, default=None, callback=_positive, help="Temperature in kelvin.")
@click.option("--convention", type=click.Choice(["ratio", "literal"]), default="ratio", show_default=True)
@format_option
@out_option
@click.pass_obj
def correction(consts, y, r, T, convention, fmt_name, out):
    """Correction factor G at one point, given y or (r, T)."""
    if y is not None and (r is not None or T is not None):
        raise click.UsageError("give either --y or both --r and --T, not both")
    if y is None:
        if r is None or T is None:
            raise click.UsageError("give either --y or both --r and --T")
        y = reduced_y(r, T, consts)
    result = correction_factor(y, convention)
    v = reduce(y)
    record = OutputRecord(
        "correction",
        ["y", "x", "z", "G", "convention", "method", "underflowed"],
        [[y, v.x, v.z, result.value, result.convention.value, result.method.value, result.underflowed]],
        consts,
    )
    _emit(record, fmt_name, out)


@cli.command()
@click.option("--ymin", type=float, default=0.01, show_default=True, callback=_positive)
@click.option("--ymax", type=float, default=30.0, show_default=True, callback=_positive)
@click.option("--points", type=click.IntRange(min=2), default=300, show_default=True)
@click.option("--spacing", type=click.Choice(["log", "linear"]), default="log", show_default=True)
@format_option
@out_option
@click.pass_obj
def figure1(consts, ymin, ymax, points, spacing, fmt_name, out):
    """Table of the ratio-convention correction factor G(y)."""
    if not ymin < ymax:
        raise click.UsageError("--ymin must be smaller than --ymax")
    rows = correction_table(ymin, ymax, points, spacing)
    _emit(OutputRecord("figure1", ["y", "G"], rows, consts), fmt_name, out)


@cli.command()
@click.option("--m1", type=float, required=True, callback=_positive, help="Mass in kg.")
@click.option("--m2", type=float, required=True, callback=_positive, help="Mass in kg.")
@click.option("--r", type=float, required=True, callback=_positive, help="Distance in metres.")
@click.option("--T", "T", type=float, default=0.0, show_default=True, callback=_nonnegative,
              help="Background temperature in kelvin.")
@format_option
@out_option
@click.pass_obj
def force(consts, m1, m2, r, T, fmt_name, out):
    """Radial force in newtons (negative = attractive)."""
    result = force_finite_T(ParticlePair(m1, m2), r, T, consts)
    record = OutputRecord(
        "force",
        ["F", "G", "y", "underflowed"],
        [[result.force, result.correction.value, result.y, result.underflowed]],
        consts,
    )
    _emit(record, fmt_name, out)


@cli.command(name="range")
@click.option("--T", "T", type=float, required=True, callback=_positive, help="Temperature in kelvin.")
@click.option("--threshold", type=click.FloatRange(0.0, 1.0, min_open=True, max_open=True), required=True,
              help="Value of G defining the cut-off, strictly between 0 and 1.")
@format_option
@out_option
@click.pass_obj
def range_(consts, T, threshold, fmt_name, out):
    """Cut-off distance where G last falls to the threshold."""
    try:
        sol = gravity_range(T, threshold, consts)
    except (NoCrossingError, DomainError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)
    record = OutputRecord(
        "range",
        ["T", "threshold", "y_star", "r_star", "crossings_found", "bracket_width"],
        [[sol.temperature, sol.threshold, sol.y_star, sol.r_star, sol.crossings_found, sol.bracket_width]],
        consts,
    )
    _emit(record, fmt_name, out)


@cli.command()
@click.option("--quick", is_flag=True, help="Thin the y-grids tenfold; same tolerances.")
@click.pass_obj
def validate(consts, quick):
    """Run the oracle suite; exit 0 iff every check passes."""
    results = run_checks(consts, quick=quick, report=lambda r: click.echo(r.line()))
    failed = [r for r in results if not r.passed]
    click.echo(f"{len(results) - len(failed)}/{len(results)} checks passed")
    sys.exit(1 if failed else 0)


def main(argv=None):
    try:
        cli.main(args=argv, prog_name="thermograv", standalone_mode=True)
    except DomainError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)


if __name__ == "__main__":
    main()
