"""Command-line front end: validate, impacts, prioritize, relax.

Exit codes: 0 success, 1 validation/parse/domain failure, 2 I/O or usage.
"""

from __future__ import annotations

import sys

import click

from . import default_rules_text
from .fcl import FclError, parse_rulebase
from .impact import impact_matrix
from .model import validate_model
from .pipeline import prioritize, report_csv, report_json
from .relax import RenderError, relax_json, relax_srl, relax_text
from .srm import SrmError, parse_model


class _IOFailure(click.ClickException):
    exit_code = 2


def _read_text(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise _IOFailure(str(exc)) from exc


def _load_model(path: str):
    try:
        return parse_model(_read_text(path))
    except SrmError as exc:
        _fail(f"{path}: {exc}")


def _load_rules(path: str | None):
    text = default_rules_text() if path is None else _read_text(path)
    source = path or "<default rules>"
    try:
        return parse_rulebase(text)
    except FclError as exc:
        _fail(f"{source}: {exc}")


def _fail(message: str) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(1)


def _check_valid(model, risk) -> None:
    report = validate_model(model, risk)
    if not report.ok:
        for finding in report.errors:
            click.echo(str(finding), err=True)
        sys.exit(1)


def _emit(text: str, out: str | None) -> None:
    if out is None:
        click.echo(text, nl=False)
    else:
        try:
            with open(out, "w", encoding="utf-8") as handle:
                handle.write(text)
        except OSError as exc:
            raise _IOFailure(str(exc)) from exc


def _ascii_table(header: list[str], rows: list[list[str]]) -> str:
    widths = [max(len(header[i]), *(len(r[i]) for r in rows)) if rows
              else len(header[i]) for i in range(len(header))]
    def fmt(cells):
        return "  ".join(c.ljust(w) for c, w in zip(cells, widths)).rstrip()
    rule = "  ".join("-" * w for w in widths)
    return "\n".join([fmt(header), rule] + [fmt(r) for r in rows]) + "\n"


_model_arg = click.argument("model_path", type=click.Path(exists=True, dir_okay=False))
_goal_opt = click.option("--goal", "goal", default=None,
                         help="Restrict to one goal (default: all / the root).")
_rules_opt = click.option("--rules", "rules_path", default=None,
                          type=click.Path(exists=True, dir_okay=False),
                          help="Rule-base file (default: bundled rules).")
_format_opt = click.option("--format", "fmt",
                           type=click.Choice(["table", "csv", "json"]),
                           default="table", show_default=True)
_out_opt = click.option("--out", "out", default=None,
                        type=click.Path(dir_okay=False, writable=True),
                        help="Write output to a file instead of stdout.")


@click.group()
@click.version_option(package_name="paps")
def main() -> None:
    """Prioritize and partially select security requirements of a goal model."""


@main.command()
@_model_arg
def validate(model_path: str) -> None:
    """Check a model file against all structural invariants."""
    model, risk = _load_model(model_path)
    report = validate_model(model, risk)
    for finding in report.findings:
        click.echo(str(finding))
    if report.ok:
        click.echo(f"ok: {len(model.goals)} goals, "
                   f"{len(model.requirements)} requirements, "
                   f"{len(model.rules)} rules"
                   + (f", {len(report.warnings)} warning(s)"
                      if report.warnings else ""))
    sys.exit(0 if report.ok else 1)


@main.command()
@_model_arg
@_goal_opt
@_format_opt
@_out_opt
def impacts(model_path: str, goal: str | None, fmt: str, out: str | None) -> None:
    """Print the goal x requirement impact matrix."""
    model, risk = _load_model(model_path)
    _check_valid(model, risk)
    matrix = impact_matrix(model)
    if goal is not None and goal not in matrix.goals:
        _fail(f"unknown goal {goal!r}")
    goals = [goal] if goal is not None else list(matrix.goals)
    if fmt == "json":
        import json
        _emit(json.dumps({g: matrix.row(g) for g in goals}, indent=2) + "\n", out)
    elif fmt == "csv":
        lines = ["goal," + ",".join(matrix.requirements)]
        for g in goals:
            lines.append(g + "," + ",".join(
                f"{matrix.get(g, r):.2f}" for r in matrix.requirements))
        _emit("\n".join(lines) + "\n", out)
    else:
        rows = [[g] + [f"{matrix.get(g, r):.2f}" for r in matrix.requirements]
                for g in goals]
        _emit(_ascii_table(["goal"] + list(matrix.requirements), rows), out)


@main.command("prioritize")
@_model_arg
@_goal_opt
@_rules_opt
@_format_opt
@_out_opt
def prioritize_cmd(model_path: str, goal: str | None, rules_path: str | None,
                   fmt: str, out: str | None) -> None:
    """Rank the requirements contributing to a goal (default: the root)."""
    model, risk = _load_model(model_path)
    _check_valid(model, risk)
    config, rulebase = _load_rules(rules_path)
    target = goal or model.root
    if target not in model.goal_ids():
        _fail(f"unknown goal {target!r}")
    entries = prioritize(model, risk, target, config, rulebase)
    if fmt == "json":
        _emit(report_json(entries), out)
    elif fmt == "csv":
        _emit(report_csv(entries), out)
    else:
        rows = [[e.goal, e.requirement, f"{e.impact:.2f}", f"{e.cost:.2f}",
                 f"{e.tech:.2f}", f"{e.rds:.4f}", e.label] for e in entries]
        _emit(_ascii_table(["goal", "requirement", "impact", "cost", "tech",
                            "rds", "label"], rows), out)


@main.command("relax")
@_model_arg
@_goal_opt
@_rules_opt
@click.option("--format", "fmt", type=click.Choice(["table", "json"]),
              default="table", show_default=True)
@_out_opt
def relax_cmd(model_path: str, goal: str | None, rules_path: str | None,
              fmt: str, out: str | None) -> None:
    """Emit relaxed requirement statements for a goal (default: the root)."""
    model, risk = _load_model(model_path)
    _check_valid(model, risk)
    config, rulebase = _load_rules(rules_path)
    target = goal or model.root
    if target not in model.goal_ids():
        _fail(f"unknown goal {target!r}")
    try:
        statements = relax_srl(model, risk, target, config, rulebase)
    except RenderError as exc:
        _fail(str(exc))
    _emit(relax_json(statements) if fmt == "json" else relax_text(statements),
          out)


if __name__ == "__main__":
    main()
