"""Distance analysis command."""
from dataclasses import replace
from pathlib import Path
from typing import List, Optional, Tuple

import typer
from rich.console import Console

from wozencraft_codes.commands.common import EXIT_FAILED, EXIT_USAGE, get_config, load_params_or_exit, option_rate
from wozencraft_codes.core.analysis import certify_distance, exact_min_distance, theoretical_bounds
from wozencraft_codes.core.analysis.claims import claims_cover, wraparound_free
from wozencraft_codes.core.analysis.models import Certificate, DistanceReport
from wozencraft_codes.core.codec import format_rate
from wozencraft_codes.core.errors import BudgetExceededError
from wozencraft_codes.utils.report_utils import emit_histogram, emit_key_values, format_float, format_vector

console = Console()


def distance(
    ctx: typer.Context,
    params_file: Path = typer.Option(..., "--params", help="Parameter file"),
    exact: bool = typer.Option(False, "--exact", help="Exhaustive minimum distance over all messages"),
    certify: Optional[int] = typer.Option(None, "--certify", min=1, help="Certify distance >= C by enumeration"),
    budget: Optional[int] = typer.Option(None, "--budget", min=1, help="Maximum messages for exhaustive search"),
    prove_at_least: Optional[int] = typer.Option(
        None, "--prove-at-least", min=1, help="Stop at the first codeword lighter than C"
    ),
    rate: Optional[str] = typer.Option(None, "--rate", help="Analyse the punctured code of rate a/b"),
    workers: Optional[int] = typer.Option(None, "--workers", min=1, help="Parallel search processes"),
    distribution: bool = typer.Option(False, "--distribution", help="Also print the weight distribution"),
    csv: bool = typer.Option(False, "--csv", help="Machine-readable key,value output"),
):
    """Report guaranteed, certified and exact minimum distance of a code."""
    config = get_config(ctx)
    code = load_params_or_exit(params_file, console, option_rate(rate))
    budget = budget or config.get("search.budget")
    workers = workers or config.get("search.workers")
    bounds = theoretical_bounds(code, config.get("bounds.float_slack"))

    covered = claims_cover(code)
    target = certify
    implicit = False
    if target is None and not bounds.vacuous:
        if not (exact or prove_at_least or distribution):
            target = bounds.guarantee
        elif code.is_alpha_star and not covered:
            # claims do not apply when the Sidon differences wrap modulo k'
            target, implicit = bounds.guarantee, True

    certificate: Optional[Certificate] = None
    report: Optional[DistanceReport] = None
    try:
        if target is not None:
            try:
                certificate = certify_distance(code.alpha_coeffs, target, code, budget=config.get("certify.budget"))
            except BudgetExceededError as exc:
                if not implicit:
                    raise
                console.print(f"[yellow]Guarantee left uncertified: {exc}[/yellow]")
        if exact or prove_at_least or distribution:
            report = exact_min_distance(
                code,
                budget=budget,
                workers=workers,
                prove_at_least=prove_at_least,
                chunk_bits=config.get("search.chunk_bits"),
            )
    except BudgetExceededError as exc:
        console.print(f"[red]Error: {exc}. Raise --budget or the configured limit.[/red]")
        raise typer.Exit(EXIT_USAGE)

    if certificate is not None and certificate.passed:
        certified, method = certificate.c, "enumeration"
    elif certificate is None and covered and not bounds.vacuous and not implicit:
        certified, method = bounds.guarantee, "claims"
    else:
        certified, method = None, None
    if report is not None:
        report = replace(report, certified_lower_bound=certified, certified_method=method)

    rows: List[Tuple[str, str]] = [
        ("q", str(code.q)),
        ("k", str(code.k)),
        ("n", str(code.n)),
        ("rate", format_rate(code.rate)),
        ("kept", str(code.kept)),
        ("d", str(code.d)),
        ("guarantee", str(bounds.guarantee)),
        ("guarantee_vacuous", "yes" if bounds.vacuous else "no"),
        ("wraparound_free", "yes" if wraparound_free(code.sidon.elements, code.kprime) else "no"),
        ("sidon_restriction", format_float(bounds.restriction_sidon)),
        ("window_restriction", format_float(bounds.restriction_window)),
        ("asymptotic_factor", format_float(bounds.asymptotic_factor)),
    ]
    if certificate is not None:
        rows += [
            ("certify_target", str(certificate.c)),
            ("certificate", "pass" if certificate.passed else "fail"),
            ("certificate_examined", str(certificate.examined)),
        ]
        if certificate.witness is not None:
            rows.append(("certificate_witness", format_vector(certificate.witness)))
    if certified is not None:
        rows += [("certified_lower_bound", str(certified)), ("certified_method", method)]
    if report is not None:
        rows.append(("search_space", str(report.search_space)))
        if report.disproved:
            rows += [
                ("disproved_at_least", str(report.disproved_threshold)),
                ("witness", format_vector(report.witness)),
                ("witness_code", str(report.witness_code)),
            ]
        else:
            rows += [
                ("exact_distance", str(report.exact_distance)),
                ("witness", format_vector(report.witness)),
                ("witness_code", str(report.witness_code)),
                ("consistent", "yes" if report.consistent else "no"),
            ]

    emit_key_values(rows, csv, console, title="Distance report")
    if distribution and report is not None and report.histogram is not None:
        emit_histogram(report.histogram, csv, console)

    failed = False
    if certificate is not None and not certificate.passed:
        console.print(f"[red]✗ Certificate for distance >= {certificate.c} failed at y = {certificate.witness}[/red]")
        failed = True
    if report is not None and report.disproved:
        console.print(
            f"[red]✗ Codeword of message {report.witness} is lighter than {report.disproved_threshold}[/red]"
        )
        failed = True
    if report is not None and not report.consistent:
        console.print("[red]✗ Certified bound exceeds the exact distance[/red]")
        failed = True
    if failed:
        raise typer.Exit(EXIT_FAILED)
