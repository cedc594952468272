"""
Table writer for solution grids and kernel tables.

Floats are written with repr(), the shortest text that reads back to the
same double, so repeated runs produce byte-identical files.
"""

import json
import logging
import math
import sys
from dataclasses import dataclass, field
from enum import Enum
from typing import IO, Any, Dict, List, Optional, Sequence

import numpy as np

from ..quadrature import conj_poisson, poisson, schwarz_kernel

logger = logging.getLogger(__name__)

GRID_COLUMNS = (
    "r", "theta", "re_z1", "im_z1", "re_z2", "im_z2",
    "re_wplus", "im_wplus", "re_wminus", "im_wminus",
)
KERNEL_COLUMNS = ("r", "theta", "poisson", "conj_poisson", "re_schwarz", "im_schwarz")


class TableFormat(Enum):
    """Supported table formats."""
    CSV = "csv"
    JSON = "json"
    JSONL = "jsonl"


@dataclass
class TableRow:
    """A single table row, columns in insertion order."""
    values: Dict[str, float] = field(default_factory=dict)

    def to_csv(self, separator: str = ",") -> str:
        return separator.join(repr(float(v)) for v in self.values.values())

    def to_dict(self) -> Dict[str, Any]:
        return {k: float(v) for k, v in self.values.items()}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


class TableWriter:
    """
    Write rows to a file or stdout.

    Example:
        from bicbound.export import TableWriter, TableFormat

        with TableWriter("grid.csv", GRID_COLUMNS) as writer:
            for row in grid_rows(field, radii, angles):
                writer.write(row)
    """

    def __init__(
        self,
        path: Optional[str],
        columns: Sequence[str],
        format: Optional[TableFormat] = None,
    ):
        """
        Args:
            path: Output path; None or "-" writes to stdout
            columns: Column names, also the CSV header
            format: Output format (default from the file extension, else CSV)
        """
        self._path = None if path in (None, "-") else path
        self._columns = tuple(columns)
        self._format = format or self._guess_format(self._path)
        self._rows: List[TableRow] = []
        self._stream: Optional[IO[str]] = None
        self._header_written = False

    @staticmethod
    def _guess_format(path: Optional[str]) -> TableFormat:
        if path and path.endswith(".jsonl"):
            return TableFormat.JSONL
        if path and path.endswith(".json"):
            return TableFormat.JSON
        return TableFormat.CSV

    def _open(self) -> IO[str]:
        if self._stream is None:
            self._stream = open(self._path, "w", newline="") if self._path else sys.stdout
        return self._stream

    def write(self, row: TableRow) -> None:
        if tuple(row.values) != self._columns:
            raise ValueError(f"Row columns {list(row.values)} do not match {list(self._columns)}")
        self._rows.append(row)
        stream = self._open()
        if self._format == TableFormat.CSV:
            if not self._header_written:
                stream.write(",".join(self._columns) + "\n")
                self._header_written = True
            stream.write(row.to_csv() + "\n")
        elif self._format == TableFormat.JSONL:
            stream.write(row.to_json() + "\n")

    def write_all(self, rows: Sequence[TableRow]) -> int:
        for row in rows:
            self.write(row)
        return len(rows)

    def close(self) -> None:
        stream = self._open()
        if self._format == TableFormat.JSON:
            stream.write(json.dumps([r.to_dict() for r in self._rows], indent=2) + "\n")
        elif self._format == TableFormat.CSV and not self._header_written:
            stream.write(",".join(self._columns) + "\n")
        stream.flush()
        if self._path:
            stream.close()
            logger.info("Wrote %d rows to %s", len(self._rows), self._path)
        self._stream = None

    @property
    def row_count(self) -> int:
        return len(self._rows)

    def __enter__(self):
        return self

    def __exit__(self, *args):
        self.close()

    def __repr__(self) -> str:
        return f"<TableWriter {self._path or 'stdout'} format={self._format.value} rows={len(self._rows)}>"


def polar_grid(nr: int, ntheta: int, r_max: float):
    """Radii linspace(0, r_max, nr) and angles 2 pi j / ntheta."""
    radii = np.linspace(0.0, r_max, nr)
    angles = 2 * math.pi * np.arange(ntheta) / ntheta
    return radii, angles


def grid_rows(field, radii: Sequence[float], angles: Sequence[float]) -> List[TableRow]:
    """Cartesian and idempotent components of a solution field, radius-major."""
    radii = np.asarray(radii, dtype=float)
    angles = np.asarray(angles, dtype=float)
    points = radii[:, None] * np.exp(1j * angles)[None, :]
    plus, minus = field.components(points)
    z1, z2 = (plus + minus) / 2, 1j * (plus - minus) / 2
    rows = []
    for i, r in enumerate(radii):
        for j, theta in enumerate(angles):
            values = (z1[i, j], z2[i, j], plus[i, j], minus[i, j])
            parts = [p for v in values for p in (v.real, v.imag)]
            rows.append(TableRow(dict(zip(GRID_COLUMNS, (r, theta, *parts)))))
    return rows


def kernel_rows(radii: Sequence[float], angles: Sequence[float]) -> List[TableRow]:
    """Poisson, conjugate Poisson and Schwarz kernel values with zeta = 1."""
    rows = []
    for r in radii:
        for theta in angles:
            p = poisson(r, theta)
            q = conj_poisson(r, theta)
            s = schwarz_kernel(1.0, r * np.exp(1j * theta))
            rows.append(TableRow(dict(zip(KERNEL_COLUMNS, (r, theta, p, q, s.real, s.imag)))))
    return rows
