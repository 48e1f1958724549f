"""Helpers shared by the subcommands."""
from fractions import Fraction
from pathlib import Path
from typing import Optional

import typer
from rich.console import Console

from wozencraft_codes.config import Config
from wozencraft_codes.core.codec import parse_rate, puncture_plan
from wozencraft_codes.core.errors import ParamFileError, RateOutOfRangeError
from wozencraft_codes.core.param_file import load_params
from wozencraft_codes.core.params import CodeParams

# exit statuses
EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def get_config(ctx: typer.Context) -> Config:
    """Config installed by the root callback, or the default lookup."""
    obj = ctx.find_root().obj if ctx is not None else None
    if isinstance(obj, Config):
        return obj
    return Config()


def option_rate(text: Optional[str], flag: str = "--rate") -> Optional[Fraction]:
    if text is None:
        return None
    try:
        return parse_rate(text)
    except ValueError as exc:
        raise typer.BadParameter(str(exc), param_hint=f"'{flag}'") from exc


def load_params_or_exit(path: Path, console: Console, rate: Optional[Fraction] = None) -> CodeParams:
    """Load and validate a parameter file; a rate override replaces its kept count."""
    try:
        params = load_params(path)
    except FileNotFoundError as exc:
        raise typer.BadParameter(str(exc), param_hint="'--params'") from exc
    except ParamFileError as exc:
        console.print(f"[red]Error loading parameter file: {exc}[/red]")
        raise typer.Exit(EXIT_USAGE)
    if rate is None:
        return params
    if rate == Fraction(1, 2):
        return params.with_kept(params.k)
    try:
        plan = puncture_plan(rate, params.k)
    except RateOutOfRangeError as exc:
        raise typer.BadParameter(str(exc), param_hint="'--rate'") from exc
    if not plan.exact:
        console.print(
            f"[yellow]Rate {rate} is not exact at k={params.k}; keeping {plan.kept} checks "
            f"(rate {plan.achieved_rate}).[/yellow]"
        )
    return params.with_kept(plan.kept)
