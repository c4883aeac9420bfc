"""Reproduction of the second adjoint cohomology table of ``cga_ell(2)``."""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import astuple, dataclass

from .catalog import build_cga
from .cochains import cohomology, derivation_space

__all__ = ["EXPECTED_TABLE", "TableRow", "compute_row", "diff_table", "reproduce_table", "worker_count"]


@dataclass(frozen=True)
class TableRow:
    algebra: str
    dim_g: int
    dim_Der: int
    dim_B2: int
    dim_Z2: int
    dim_H2: int

    def values(self) -> tuple[int, ...]:
        return astuple(self)[1:]


def _label(two_ell: int) -> str:
    return f"cga(d=2,two_ell={two_ell})"


# Published values, rows two_ell = 0..5.
EXPECTED_TABLE = {
    0: TableRow(_label(0), 6, 7, 29, 31, 2),
    1: TableRow(_label(1), 8, 9, 54, 56, 2),
    2: TableRow(_label(2), 10, 11, 89, 91, 2),
    3: TableRow(_label(3), 12, 13, 131, 132, 1),
    4: TableRow(_label(4), 14, 15, 181, 182, 1),
    5: TableRow(_label(5), 16, 17, 239, 240, 1),
}


def compute_row(two_ell: int) -> tuple[TableRow, float]:
    """One table row computed from scratch, with its wall time in seconds."""
    start = time.perf_counter()
    L, _ = build_cga(2, two_ell)
    der = derivation_space(L).dim
    deg2 = cohomology(L, None, [2])[2]
    row = TableRow(_label(two_ell), L.dim, der, deg2.dim_B, deg2.dim_Z, deg2.dim_H)
    return row, time.perf_counter() - start


def worker_count() -> int:
    """Worker cap from ``LIECOH_THREADS`` (unset or 0 means one per CPU)."""
    raw = os.environ.get("LIECOH_THREADS", "0").strip() or "0"
    n = int(raw)
    if n < 0:
        raise ValueError("LIECOH_THREADS must be >= 0")
    return n or (os.cpu_count() or 1)


def reproduce_table(two_ells=tuple(EXPECTED_TABLE), workers: int | None = None):
    """Compute rows (ordered by ``two_ell`` whatever the completion order).

    Returns ``[(two_ell, row, seconds), ...]``.
    """
    two_ells = list(two_ells)
    workers = min(worker_count() if workers is None else workers, len(two_ells)) or 1
    if workers == 1:
        results = [compute_row(t) for t in two_ells]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(compute_row, two_ells))
    return [(t, row, secs) for t, (row, secs) in zip(two_ells, results)]


def diff_table(rows) -> list[str]:
    """Human-readable mismatches against :data:`EXPECTED_TABLE`."""
    fields = ("dim_g", "dim_Der", "dim_B2", "dim_Z2", "dim_H2")
    out = []
    for two_ell, row, _ in rows:
        want = EXPECTED_TABLE[two_ell]
        for name, got, exp in zip(fields, row.values(), want.values()):
            if got != exp:
                out.append(f"{row.algebra}: {name} computed {got}, expected {exp}")
    return out
