from typing import Dict, List

from rich.console import Console
from rich.table import Table
from rich.text import Text

# Summaries go to standard output; console_handler messages go to standard error.
console = Console(highlight=False)


def _print_key_values(title: str, rows: Dict[str, object]):
    # Title on its own line; a table title wraps to the table width.
    console.print(Text(title, style="bold"))
    table = Table(show_lines=False, expand=False)
    table.add_column("Item", style="cyan")
    table.add_column("Value", style="magenta")
    for key, value in rows.items():
        table.add_row(Text(key), Text(str(value)))
    console.print(table)


def print_extract_summary(stats: Dict[str, object]):
    """Pages, candidates, positives, base URL, templates, endpoints."""
    _print_key_values("Extraction summary", stats)


def print_metrics(title: str, accuracy: float, f1: float):
    _print_key_values(title, {"accuracy": f"{accuracy:.3f}", "F1": f"{f1:.3f}"})


def print_diff_summary(lines: List[str]):
    for line in lines:
        console.print(line, markup=False)
