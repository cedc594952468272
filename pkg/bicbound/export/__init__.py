"""
Tabular output for bicbound.

Writes evaluation grids and kernel tables as CSV, JSON, or JSON Lines.
"""

from .table import GRID_COLUMNS, KERNEL_COLUMNS, TableFormat, TableRow, TableWriter, grid_rows, kernel_rows, polar_grid

__all__ = [
    "TableFormat",
    "TableRow",
    "TableWriter",
    "grid_rows",
    "kernel_rows",
    "polar_grid",
    "GRID_COLUMNS",
    "KERNEL_COLUMNS",
]
