"""Encoding command."""
from pathlib import Path
from typing import Optional

import typer
from rich.console import Console

from wozencraft_codes.commands.common import load_params_or_exit, option_rate
from wozencraft_codes.core.codec import encode as encode_message
from wozencraft_codes.core.codec import parse_message

console = Console()


def encode(
    params_file: Path = typer.Option(..., "--params", help="Parameter file"),
    message: str = typer.Option(..., "--message", help="Comma-separated message symbols y_0..y_{k-1}"),
    rate: Optional[str] = typer.Option(None, "--rate", help="Override the stored rate (a/b)"),
):
    """Print the codeword of a message as space-separated symbols."""
    code = load_params_or_exit(params_file, console, option_rate(rate))
    try:
        codeword = encode_message(parse_message(message), code)
    except ValueError as exc:
        raise typer.BadParameter(str(exc), param_hint="'--message'") from exc
    typer.echo(" ".join(str(c) for c in codeword))
