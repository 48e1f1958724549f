"""Generator matrix export command."""
from pathlib import Path
from typing import Optional

import typer
from rich.console import Console

from wozencraft_codes.commands.common import load_params_or_exit, option_rate
from wozencraft_codes.core.codec import format_rate, generator_matrix

console = Console()


def genmat(
    params_file: Path = typer.Option(..., "--params", help="Parameter file"),
    rate: Optional[str] = typer.Option(None, "--rate", help="Override the stored rate (a/b)"),
    out: Path = typer.Option(..., "--out", "-o", help="Output matrix file"),
):
    """Write the systematic generator matrix as text: 'q k n' then k rows."""
    code = load_params_or_exit(params_file, console, option_rate(rate))
    matrix = generator_matrix(code)
    matrix.write(out)
    console.print(
        f"[green]✓ Wrote {matrix.k}x{matrix.n} generator matrix over F_{code.q} "
        f"(rate {format_rate(code.rate)}) to {out}[/green]"
    )
