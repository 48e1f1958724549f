"""Ensemble comparison command."""
from pathlib import Path
from statistics import mean
from typing import Optional

import typer
from rich.console import Console
from rich.progress import Progress

from wozencraft_codes.commands.common import EXIT_USAGE, get_config, load_params_or_exit, option_rate
from wozencraft_codes.core.analysis import run_ensemble
from wozencraft_codes.core.errors import BudgetExceededError
from wozencraft_codes.utils.report_utils import emit_key_values, emit_rows, format_float, format_vector

console = Console()


def ensemble(
    ctx: typer.Context,
    params_file: Path = typer.Option(..., "--params", help="Parameter file"),
    samples: int = typer.Option(..., "--samples", min=0, help="Number of random alphas"),
    seed: int = typer.Option(..., "--seed", help="Seed for the alpha sampler"),
    rate: Optional[str] = typer.Option(None, "--rate", help="Override the stored rate (a/b)"),
    workers: Optional[int] = typer.Option(None, "--workers", min=1, help="Parallel search processes"),
    csv: bool = typer.Option(False, "--csv", help="Machine-readable output"),
):
    """Exact distance of seeded random alphas next to alpha* and the GV baseline."""
    config = get_config(ctx)
    code = load_params_or_exit(params_file, console, option_rate(rate))
    try:
        if csv:
            result = run_ensemble(
                code, samples, seed, config.get("search.budget"), workers or config.get("search.workers")
            )
        else:
            with Progress(console=console, transient=True) as progress:
                task = progress.add_task("Sampling", total=samples)
                result = run_ensemble(
                    code,
                    samples,
                    seed,
                    config.get("search.budget"),
                    workers or config.get("search.workers"),
                    progress=lambda done: progress.update(task, completed=done),
                )
    except BudgetExceededError as exc:
        console.print(f"[red]Error: {exc}[/red]")
        raise typer.Exit(EXIT_USAGE)

    emit_rows(
        ("sample", "distance", "alpha"),
        ((str(s.index), str(s.distance), format_vector(s.alpha)) for s in result.samples),
        csv,
        console,
        title=f"Random alphas (seed {seed})",
    )
    distances = result.distances
    summary = [
        ("samples", str(len(distances))),
        ("alpha_star_distance", str(result.alpha_star_distance)),
        ("alpha_star_rank", str(result.alpha_star_rank)),
        ("min_distance", str(min(distances)) if distances else "-"),
        ("max_distance", str(max(distances)) if distances else "-"),
        ("mean_distance", format_float(mean(distances)) if distances else "-"),
        ("gv_relative_distance", format_float(result.gv.relative_distance)),
        ("gv_distance", format_float(result.gv.absolute_distance)),
        ("meeting_gv", str(result.meeting_gv)),
    ]
    emit_key_values(summary, csv, console, title="Ensemble summary")
