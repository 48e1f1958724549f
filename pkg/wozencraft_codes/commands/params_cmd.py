"""Parameter search command."""
from pathlib import Path
from typing import Optional

import typer
from rich.console import Console

from wozencraft_codes.commands.common import EXIT_FAILED, get_config, option_rate
from wozencraft_codes.core.codec import construct_code, format_rate
from wozencraft_codes.core.errors import RateOutOfRangeError, WozencraftError
from wozencraft_codes.core.param_file import ParamFile
from wozencraft_codes.core.params import skipped_candidates
from wozencraft_codes.utils.report_utils import format_vector, key_value_table

console = Console()


def params(
    ctx: typer.Context,
    q: int = typer.Option(..., "--q", help="Field size (a prime power)"),
    min_k: int = typer.Option(..., "--min-k", help="Search for an Artin prime k' > min-k"),
    rate: Optional[str] = typer.Option(None, "--rate", help="Punctured rate a/b in (1/2, 1)"),
    out: Optional[Path] = typer.Option(None, "--out", "-o", help="Write the parameter file here"),
):
    """Find k', d and the Sidon set, build alpha*, and emit a parameter file."""
    config = get_config(ctx)
    target_rate = option_rate(rate)
    try:
        code = construct_code(q, min_k, target_rate, cap_factor=config.get("search.artin_cap_factor"))
    except RateOutOfRangeError as exc:
        raise typer.BadParameter(str(exc), param_hint="'--rate'") from exc
    except ValueError as exc:
        raise typer.BadParameter(str(exc), param_hint="'--q' / '--min-k'") from exc
    except WozencraftError as exc:
        console.print(f"[red]Error: {exc}[/red]")
        raise typer.Exit(EXIT_FAILED)

    document = ParamFile(code)
    if out is None:
        typer.echo(document.dumps(), nl=False)
        return

    document.save(out)
    skipped = skipped_candidates(q, min_k, code.kprime)
    console.print(f"[green]✓ Wrote {out}[/green]")
    console.print(
        key_value_table(
            "Construction",
            [
                ("k'", str(code.kprime)),
                ("k", str(code.k)),
                ("d", str(code.d)),
                ("Sidon set", ",".join(str(a) for a in code.sidon.elements)),
                ("alpha*", format_vector(code.alpha_coeffs)),
                ("rate", format_rate(code.rate)),
                ("kept", str(code.kept)),
            ],
        )
    )
    if skipped:
        console.print(f"[dim]Skipped candidates: {', '.join(str(c) for c in skipped)}[/dim]")
