"""
Command-line front end.

Usage:
    coxeter-elliptic verify                       # run the identity suite
    coxeter-elliptic verify --format json         # same, as a JSON array
    coxeter-elliptic eval --lambda 0.5 --rep all  # I and I' at one point
    coxeter-elliptic table --grid 0.1 1.9 10 --format csv --out grid.csv
    coxeter-elliptic special                      # A, B, C against their targets
    coxeter-elliptic asymptotics                  # endpoint behaviour of I'

Every subcommand takes ``--format``, ``--out``, ``--abs-tol``, ``--rel-tol``
and ``--config``. The config file holds ``key = value`` lines (keys
``abs_tol``, ``rel_tol``, ``max_subdivisions``, ``max_level``, ``format``,
``out``, ``seed``); its path may also come from ``$COXETER_ELLIPTIC_CONFIG``.
Flags win over the file, the file wins over the defaults.

Exit status: 0 on success, 1 when an identity fails or a computation raises,
2 on a usage or configuration error.
"""

from __future__ import annotations

import csv
import io
import json
import math
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Sequence

import click
import numpy as np

from . import coxeter
from .errors import DomainError, ConvergenceError, EvaluationError
from .quadrature import QuadratureOptions
from .verify import DEFAULT_SEED, C_CONVENTION, run_suite, suite_passed

__all__ = ["CliConfig", "cli", "main", "format_number", "load_config_file"]

CONFIG_ENV = "COXETER_ELLIPTIC_CONFIG"
FORMATS = ("text", "csv", "json")
TABLE_HEADER = ("lambda", "I", "Iprime_trig", "Iprime_quartic", "Iprime_closed", "max_dev")
REPORT_COLUMNS = ("identity_id", "status", "lhs", "rhs_exact", "abs_error", "tolerance",
                  "passed", "conditional", "evaluations", "note")

_CONFIG_KEYS = {
    "abs_tol": float,
    "rel_tol": float,
    "max_subdivisions": int,
    "max_level": int,
    "format": str,
    "out": str,
    "seed": int,
}


class ConfigError(click.UsageError):
    """Bad flag or config-file content; click maps it to exit status 2."""


@dataclass
class CliConfig:
    subcommand: str
    quadrature: QuadratureOptions = field(default_factory=QuadratureOptions)
    output_format: str = "text"
    output_path: Path | None = None
    lam: float | None = None
    lambda_grid: tuple[float, float, int] | None = None
    representation: str | None = None
    seed: int = DEFAULT_SEED

    def __post_init__(self):
        if self.output_format not in FORMATS:
            raise ConfigError(f"format must be one of {', '.join(FORMATS)}, "
                              f"got {self.output_format!r}")
        if self.lambda_grid is not None:
            start, stop, count = self.lambda_grid
            if count < 2:
                raise ConfigError("grid count must be >= 2")
            if not start < stop:
                raise ConfigError("grid start must be below grid stop")


def load_config_file(path) -> dict[str, Any]:
    """Parse a ``key = value`` file; blank lines and ``#`` comments are skipped."""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc.strerror}") from None
    values = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key, value = key.strip().replace("-", "_"), value.strip()
        if not sep or not key:
            raise ConfigError(f"{path}:{lineno}: expected key = value")
        if key not in _CONFIG_KEYS:
            raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
        try:
            values[key] = _CONFIG_KEYS[key](value)
        except ValueError:
            raise ConfigError(f"{path}:{lineno}: bad value {value!r} for {key}") from None
    return values


def build_config(subcommand, flags: dict, **extra) -> CliConfig:
    """Merge defaults, the config file and explicit flags, in that order."""
    file_values = load_config_file(flags["config"]) if flags.get("config") else {}

    def pick(key):
        value = flags.get(key)
        return file_values.get(key) if value is None else value

    quad = {}
    for key in ("abs_tol", "rel_tol", "max_subdivisions", "max_level"):
        value = pick(key)
        if value is not None:
            quad[key] = value
    try:
        options = QuadratureOptions(**quad)
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"invalid tolerance settings: {exc}") from None
    out = pick("out")
    seed = pick("seed")
    return CliConfig(
        subcommand=subcommand,
        quadrature=options,
        output_format=pick("format") or "text",
        output_path=Path(out) if out else None,
        seed=DEFAULT_SEED if seed is None else seed,
        **extra,
    )


# ---------------------------------------------------------------------------
# formatting


def format_number(x) -> str:
    """15 significant digits; scientific notation when ``0 < |x| < 1e-3``."""
    if x is None:
        return ""
    if isinstance(x, (bool, np.bool_)):
        return "true" if x else "false"
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    x = float(x)
    if not math.isfinite(x):
        return str(x)
    if x != 0 and abs(x) < 1e-3:
        return f"{x:.14e}"
    return f"{x:.15g}"


def _csv_cell(x) -> str:
    # full round-trip precision; repr of a float is deterministic
    if x is None:
        return ""
    if isinstance(x, (bool, np.bool_)):
        return "true" if x else "false"
    if isinstance(x, float):
        return repr(x)
    return str(x)


def _json_safe(obj):
    if isinstance(obj, dict):
        return {str(k): _json_safe(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_json_safe(v) for v in obj]
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        return float(obj) if math.isfinite(obj) else None
    return obj


def render(rows: Sequence[dict], columns: Sequence[str], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(_json_safe(list(rows)), indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\r\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([_csv_cell(row.get(c)) for c in columns])
        return buf.getvalue()
    cells = [[format_number(r.get(c)) if not isinstance(r.get(c), str) else r.get(c)
              for c in columns] for r in rows]
    widths = [max(len(c), *(len(row[i]) for row in cells)) if cells else len(c)
              for i, c in enumerate(columns)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(columns, widths)).rstrip()]
    lines += ["  ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip() for row in cells]
    return "\n".join(lines) + "\n"


def emit(config: CliConfig, text: str):
    if config.output_path is None:
        click.echo(text, nl=False)
        return
    try:
        config.output_path.write_text(text, newline="")
    except OSError as exc:
        click.echo(f"error: cannot write {config.output_path}: {exc.strerror}", err=True)
        sys.exit(1)


def _fail(message: str):
    click.echo(f"error: {message}", err=True)
    sys.exit(1)


# ---------------------------------------------------------------------------
# shared options


def common_options(fn):
    options = [
        click.option("--format", "format", type=click.Choice(FORMATS), default=None,
                     help="Output format (default text)."),
        click.option("--out", type=click.Path(dir_okay=False), default=None,
                     help="Write to this file instead of stdout."),
        click.option("--abs-tol", type=float, default=None, help="Absolute quadrature tolerance."),
        click.option("--rel-tol", type=float, default=None, help="Relative quadrature tolerance."),
        click.option("--config", type=click.Path(dir_okay=False), envvar=CONFIG_ENV,
                     default=None, help=f"key = value config file (or ${CONFIG_ENV})."),
    ]
    for option in reversed(options):
        fn = option(fn)
    return fn


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
def cli():
    """Coxeter integrals, the I(lambda) family and its elliptic closed form."""


# ---------------------------------------------------------------------------
# verify


@cli.command()
@common_options
@click.option("--seed", type=int, default=None, help="Seed for the sampled property checks.")
@click.option("--only", multiple=True, help="Run only this identity id (repeatable).")
def verify(only, **flags):
    """Run the identity suite; exit 1 if any non-conditional identity fails."""
    config = build_config("verify", flags)
    try:
        reports = run_suite(config.quadrature, config.seed, list(only) or None)
    except KeyError as exc:
        raise ConfigError(str(exc.args[0])) from None
    except (DomainError, ConvergenceError, EvaluationError) as exc:
        _fail(str(exc))
    if config.output_format == "json":
        rows = [r.to_dict() for r in reports]
    else:
        rows = [{c: r.to_dict()[c] for c in REPORT_COLUMNS} for r in reports]
    columns = REPORT_COLUMNS if config.output_format == "csv" else REPORT_COLUMNS[:6]
    emit(config, render(rows, columns, config.output_format))
    if config.output_format == "text":
        for r in reports:
            if r.note and not r.passed:
                click.echo(f"note [{r.identity_id}]: {r.note}", err=True)
    sys.exit(0 if suite_passed(reports) else 1)


# ---------------------------------------------------------------------------
# eval


EVAL_COLUMNS = ("quantity", "representation", "lambda", "value", "error_estimate", "note")
_REPS = ("trig", "quartic", "closed")


def _iprime_row(lam, rep, opts, tolerate_window):
    row = {"quantity": "Iprime", "representation": rep, "lambda": lam,
           "value": None, "error_estimate": None, "note": ""}
    if rep == "closed":
        if tolerate_window and not coxeter.closed_form_valid(lam):
            row["note"] = "outside the closed-form window"
            return row
        row["value"] = coxeter.iprime_closed(lam)
        return row
    fn = coxeter.iprime_trig if rep == "trig" else coxeter.iprime_quartic
    result = fn(lam, opts)
    row["value"], row["error_estimate"] = result.value, result.error_estimate
    if not result.converged:
        row["note"] = "tolerance not reached"
    return row


def evaluate_point(lam: float, rep: str, opts: QuadratureOptions) -> list[dict]:
    family = coxeter.eval_I(lam, opts)
    rows = [{"quantity": "I", "representation": "", "lambda": lam, "value": family.value,
             "error_estimate": family.error_estimate, "note": ""}]
    reps = _REPS if rep == "all" else (rep,)
    iprime_rows = [_iprime_row(lam, r, opts, rep == "all") for r in reps]
    rows += iprime_rows
    if rep == "all":
        have = [r for r in iprime_rows if r["value"] is not None]
        for i, a in enumerate(have):
            for b in have[i + 1:]:
                rows.append({"quantity": "deviation",
                             "representation": f"{a['representation']}-{b['representation']}",
                             "lambda": lam, "value": abs(a["value"] - b["value"]),
                             "error_estimate": None, "note": ""})
    return rows


@cli.command(name="eval")
@common_options
@click.option("--lambda", "lam", type=float, required=True, help="Parameter value.")
@click.option("--rep", type=click.Choice(_REPS + ("all",)), default="trig", show_default=True,
              help="Representation of I'.")
def eval_cmd(lam, rep, **flags):
    """I(lambda) and I'(lambda) under the chosen representation(s)."""
    config = build_config("eval", flags, lam=lam, representation=rep)
    try:
        rows = evaluate_point(lam, rep, config.quadrature)
    except (DomainError, ConvergenceError, EvaluationError) as exc:
        _fail(str(exc))
    emit(config, render(rows, EVAL_COLUMNS, config.output_format))


# ---------------------------------------------------------------------------
# table


def table_rows(grid: tuple[float, float, int], opts: QuadratureOptions) -> list[dict]:
    start, stop, count = grid
    rows = []
    for lam in np.linspace(start, stop, count).tolist():
        trig = coxeter.iprime_trig(lam, opts).value
        quartic = coxeter.iprime_quartic(lam, opts).value
        closed = coxeter.iprime_closed(lam) if coxeter.closed_form_valid(lam) else None
        values = [v for v in (trig, quartic, closed) if v is not None]
        rows.append({
            "lambda": lam,
            "I": coxeter.eval_I(lam, opts).value,
            "Iprime_trig": trig,
            "Iprime_quartic": quartic,
            "Iprime_closed": closed,
            "max_dev": max(values) - min(values),
        })
    return rows


@cli.command()
@common_options
@click.option("--grid", nargs=3, type=(float, float, int), required=True,
              metavar="START STOP COUNT", help="Evenly spaced lambda grid.")
def table(grid, **flags):
    """Tabulate I and the three forms of I' over a lambda grid."""
    config = build_config("table", flags, lambda_grid=grid)
    try:
        rows = table_rows(grid, config.quadrature)
    except (DomainError, ConvergenceError, EvaluationError) as exc:
        _fail(str(exc))
    emit(config, render(rows, TABLE_HEADER, config.output_format))
    column = [r["I"] for r in rows]
    if any(b <= a for a, b in zip(column, column[1:])):
        click.echo("warning: I column is not strictly increasing", err=True)


# ---------------------------------------------------------------------------
# special


SPECIAL_COLUMNS = ("name", "value", "target", "abs_error", "error_estimate", "note")


def special_rows(opts: QuadratureOptions) -> list[dict]:
    rows = []
    for name, fn, target, note in (
        ("A", coxeter.coxeter_A, coxeter.A_EXACT, "target 5 pi^2/24"),
        ("B", coxeter.coxeter_B, coxeter.B_EXACT, "target pi^2/8"),
        ("C", coxeter.coxeter_C, coxeter.C_EXACT, f"target 11 pi^2/72; {C_CONVENTION}"),
    ):
        result = fn(opts)
        rows.append({"name": name, "value": result.value, "target": target,
                     "abs_error": abs(result.value - target),
                     "error_estimate": result.error_estimate, "note": note})
    return rows


@cli.command()
@common_options
def special(**flags):
    """The integrals A, B and C against their stated values."""
    config = build_config("special", flags)
    try:
        rows = special_rows(config.quadrature)
    except (DomainError, ConvergenceError, EvaluationError) as exc:
        _fail(str(exc))
    emit(config, render(rows, SPECIAL_COLUMNS, config.output_format))


# ---------------------------------------------------------------------------
# asymptotics


ASYMPTOTIC_COLUMNS = ("endpoint", "model", "coefficient", "intercept", "fit_residual",
                      "residual_bounded", "residual_log_divergence", "residual_inverse_sqrt",
                      "stated_model", "stated_formula", "measured_formula", "agrees")

# the behaviour asserted for each endpoint, as a model name and a formula
STATED = {
    0.0: ("bounded", "lim_{lam->0+} I'(lam) finite"),
    2.0: ("inverse_sqrt", "I'(lam) ~ D/sqrt(2-lam) as lam->2-"),
}

_MEASURED = {
    "bounded": "I'(lam) -> {c:.6g} as lam->{e:g}",
    "log_divergence": "I'(lam) ~ {c:.6g} ln(1/|lam-{e:g}|) + {b:.6g}",
    "inverse_sqrt": "I'(lam) ~ {c:.6g}/sqrt(|lam-{e:g}|) + {b:.6g}",
}


def asymptotic_rows(opts: QuadratureOptions) -> list[dict]:
    rows = []
    for endpoint in (0.0, 2.0):
        fit = coxeter.endpoint_asymptotics(endpoint, opts)
        stated_model, stated_formula = STATED[endpoint]
        rows.append({
            "endpoint": endpoint,
            "model": fit.model,
            "coefficient": fit.coefficient,
            "intercept": fit.intercept,
            "fit_residual": fit.fit_residual,
            **{f"residual_{k}": v for k, v in fit.residuals.items()},
            "stated_model": stated_model,
            "stated_formula": stated_formula,
            "measured_formula": _MEASURED[fit.model].format(c=fit.coefficient, e=endpoint,
                                                            b=fit.intercept),
            "agrees": fit.model == stated_model,
        })
    return rows


@cli.command()
@common_options
def asymptotics(**flags):
    """Fit the behaviour of I' near lambda = 0 and lambda = 2."""
    config = build_config("asymptotics", flags)
    try:
        rows = asymptotic_rows(config.quadrature)
    except (DomainError, ConvergenceError, EvaluationError) as exc:
        _fail(str(exc))
    if config.output_format == "text":
        lines = []
        for r in rows:
            lines += [
                f"endpoint {format_number(r['endpoint'])}",
                f"  best model     {r['model']}  (rms residual {format_number(r['fit_residual'])})",
                f"  residuals      bounded {format_number(r['residual_bounded'])}, "
                f"log_divergence {format_number(r['residual_log_divergence'])}, "
                f"inverse_sqrt {format_number(r['residual_inverse_sqrt'])}",
                f"  measured       {r['measured_formula']}",
                f"  stated         {r['stated_formula']}",
                f"  agrees         {format_number(r['agrees'])}",
            ]
        emit(config, "\n".join(lines) + "\n")
    else:
        emit(config, render(rows, ASYMPTOTIC_COLUMNS, config.output_format))


def main(argv: Sequence[str] | None = None):
    cli.main(args=argv, prog_name="coxeter-elliptic")


if __name__ == "__main__":
    main()
