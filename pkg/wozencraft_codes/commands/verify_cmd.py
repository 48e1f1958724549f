"""Property suite command."""
from pathlib import Path
from typing import Optional

import typer
from rich.console import Console
from rich.table import Table

from wozencraft_codes.commands.common import EXIT_FAILED, get_config, load_params_or_exit
from wozencraft_codes.core.analysis import VerificationSuite
from wozencraft_codes.utils.report_utils import emit_rows

console = Console()


def verify(
    ctx: typer.Context,
    params_file: Path = typer.Option(..., "--params", help="Parameter file"),
    trials: Optional[int] = typer.Option(None, "--trials", min=0, help="Random trials per randomized check"),
    seed: int = typer.Option(0, "--seed", help="Seed for the random corpora"),
    workers: Optional[int] = typer.Option(None, "--workers", min=1, help="Parallel search processes"),
    ensemble_check: bool = typer.Option(
        False, "--ensemble-check", help="Also check that every nonzero word lies in exactly one member"
    ),
    csv: bool = typer.Option(False, "--csv", help="Machine-readable check,status,detail output"),
):
    """Run the full property suite against a parameter file."""
    config = get_config(ctx)
    code = load_params_or_exit(params_file, console)
    suite = VerificationSuite(
        code,
        trials=trials if trials is not None else config.get("verify.trials"),
        seed=seed,
        lemma_samples=config.get("verify.lemma_samples"),
        budget=config.get("search.budget"),
        certify_budget=config.get("certify.budget"),
        workers=workers or config.get("search.workers"),
        ensemble_check=ensemble_check,
        exact_limit=config.get("verify.exact_limit"),
        slack=config.get("bounds.float_slack"),
    )
    report = suite.run()

    def status(check) -> str:
        if check.passed:
            return "pass"
        return "flagged" if check.flagged else "FAIL"

    if csv:
        emit_rows(
            ("check", "status", "detail"),
            ((c.name, status(c), c.detail) for c in report.checks),
            csv=True,
            console=console,
        )
    else:
        table = Table(title=f"Verification q={code.q} k'={code.kprime}", show_header=True, header_style="bold")
        table.add_column("Check", style="cyan", no_wrap=True)
        table.add_column("Status")
        table.add_column("Detail", style="dim")
        for check in report.checks:
            mark = {"pass": "[green]✓ pass[/green]", "flagged": "[yellow]! flagged[/yellow]"}.get(
                status(check), "[red]✗ FAIL[/red]"
            )
            table.add_row(check.name, mark, check.detail)
        console.print(table)

    if not report.passed:
        for failure in report.failures:
            console.print(f"[red]✗ {failure.name}: {failure.detail}[/red]")
        raise typer.Exit(EXIT_FAILED)
    if not csv:
        console.print(f"[green]✓ All {len(report.checks)} checks passed[/green]")
