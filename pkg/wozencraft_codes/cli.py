"""Main CLI entry point."""
from pathlib import Path
from typing import Optional

import typer
from rich.console import Console

from wozencraft_codes import __version__
from wozencraft_codes.commands import (
    distance_cmd,
    encode_cmd,
    ensemble_cmd,
    genmat_cmd,
    params_cmd,
    sidon_cmd,
    verify_cmd,
)
from wozencraft_codes.config import CLI_CONTEXT_SETTINGS, Config
from wozencraft_codes.utils.logging_utils import setup_logging

app = typer.Typer(
    name="wozencraft",
    help="Explicit Wozencraft ensemble codes: construct, encode and verify distance guarantees.",
    add_completion=False,
    context_settings=CLI_CONTEXT_SETTINGS,
)
console = Console()


@app.callback()
def main(
    ctx: typer.Context,
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Show debug logging"),
    config: Optional[Path] = typer.Option(None, "--config", "-c", help="YAML settings file"),
):
    setup_logging(verbose)
    if config is not None and not config.exists():
        raise typer.BadParameter(f"Config file not found: {config}", param_hint="'--config'")
    ctx.obj = Config(config)


app.command("params", help="Find k', d and the Sidon set; emit a parameter file")(params_cmd.params)
app.command("sidon", help="Print and verify a Bose-Chowla Sidon set")(sidon_cmd.sidon)
app.command("genmat", help="Export the generator matrix")(genmat_cmd.genmat)
app.command("encode", help="Encode one message")(encode_cmd.encode)
app.command("distance", help="Guaranteed, certified and exact distance")(distance_cmd.distance)
app.command("verify", help="Run the property suite")(verify_cmd.verify)
app.command("ensemble", help="Random alphas versus alpha* and the GV baseline")(ensemble_cmd.ensemble)


@app.command()
def version():
    """Show version information."""
    console.print(f"wozencraft-codes v{__version__}")


if __name__ == "__main__":
    app()
