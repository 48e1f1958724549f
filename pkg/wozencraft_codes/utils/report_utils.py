"""Report emission: rich tables for people, plain CSV for machines."""
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import typer
from rich.console import Console
from rich.table import Table

Row = Tuple[str, str]


def format_vector(values: Sequence[int]) -> str:
    """Compact form for single-digit symbols, comma-separated otherwise."""
    if all(0 <= v < 10 for v in values):
        return "".join(str(v) for v in values)
    return ",".join(str(v) for v in values)


def format_float(value: float, digits: int = 4) -> str:
    return f"{value:.{digits}f}"


def key_value_table(title: str, rows: Iterable[Row]) -> Table:
    table = Table(title=title, show_header=True, header_style="bold")
    table.add_column("Key", style="cyan", no_wrap=True)
    table.add_column("Value")
    for key, value in rows:
        table.add_row(key, value)
    return table


def emit_key_values(rows: List[Row], csv: bool, console: Console, title: str = "") -> None:
    if csv:
        typer.echo("key,value")
        for key, value in rows:
            typer.echo(f"{key},{_csv_cell(value)}")
        return
    console.print(key_value_table(title, rows))


def emit_histogram(histogram: Dict[int, int], csv: bool, console: Console, title: str = "Weight distribution") -> None:
    if csv:
        typer.echo("weight,count")
        for weight in sorted(histogram):
            typer.echo(f"{weight},{histogram[weight]}")
        return
    table = Table(title=title, show_header=True, header_style="bold")
    table.add_column("Weight", justify="right")
    table.add_column("Count", justify="right")
    for weight in sorted(histogram):
        table.add_row(str(weight), str(histogram[weight]))
    console.print(table)


def emit_rows(
    header: Sequence[str],
    rows: Iterable[Sequence[str]],
    csv: bool,
    console: Console,
    title: Optional[str] = None,
) -> None:
    if csv:
        typer.echo(",".join(header))
        for row in rows:
            typer.echo(",".join(_csv_cell(cell) for cell in row))
        return
    table = Table(title=title, show_header=True, header_style="bold")
    for name in header:
        table.add_column(name)
    for row in rows:
        table.add_row(*row)
    console.print(table)


def _csv_cell(value: str) -> str:
    if "," in value or '"' in value:
        return '"' + value.replace('"', '""') + '"'
    return value
