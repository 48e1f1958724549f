"""Bose-Chowla Sidon set command."""
import typer
from rich.console import Console

from wozencraft_codes.commands.common import EXIT_FAILED
from wozencraft_codes.core.errors import NotPrimeError
from wozencraft_codes.core.galois import field_make, format_poly
from wozencraft_codes.core.sidon import bose_chowla, lindstrom_bound, trivial_order_bound, verify_sidon
from wozencraft_codes.utils.report_utils import emit_key_values, format_float

console = Console()


def sidon(
    p: int = typer.Option(..., "--p", help="Prime order of the Sidon set"),
    csv: bool = typer.Option(False, "--csv", help="Machine-readable key,value output"),
):
    """Print the Bose-Chowla Sidon set of order p with its verification verdict."""
    try:
        result = bose_chowla(p)
    except NotPrimeError as exc:
        raise typer.BadParameter(str(exc), param_hint="'--p'") from exc

    modular = verify_sidon(result.elements, result.modulus)
    integer = verify_sidon(result.elements)
    field = field_make(p, 2)
    rows = [
        ("p", str(p)),
        ("modulus", str(result.modulus)),
        ("field_modulus", format_poly(field.modulus, "t")),
        ("generator_code", str(result.generator_code)),
        ("elements", ",".join(str(a) for a in result.elements)),
        ("length", str(result.length)),
        ("sidon_mod_modulus", "pass" if modular else f"fail {modular.witness}"),
        ("sidon_over_integers", "pass" if integer else f"fail {integer.witness}"),
        ("lindstrom_bound", format_float(lindstrom_bound(result.length + 1))),
        ("trivial_bound", format_float(trivial_order_bound(result.length))),
    ]
    emit_key_values(rows, csv, console, title=f"Bose-Chowla set, p = {p}")
    if not (modular and integer):
        console.print("[red]✗ Sidon verification failed[/red]")
        raise typer.Exit(EXIT_FAILED)
