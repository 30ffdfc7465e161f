"""Aggregate boundary-offset statistics over prime ranges.

The distribution buckets every solution of every prime in range by its
boundary offset i (x minus the floor of the y-side boundary).  Buckets 1-4
are exact; bucket 5 is the terminal row and absorbs every offset >= 5, which
is how the published distribution for primes <= 4000 tallies (its final row
aggregates the tail).  The overflow slot therefore only counts entries the
bucketing cannot place at all and stays empty by construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import IO

from .enumeration import iter_solutions_fast
from .parallel import pmap
from .sieve import PrimeRange, primes_in

BUCKETS = (1, 2, 3, 4, 5)
OVERFLOW = "overflow"


@dataclass(frozen=True)
class PerPrimeProportion:
    """Solution count and type-II count for one prime."""

    p: int
    n_solutions: int
    n_type_ii: int

    def __post_init__(self) -> None:
        if self.n_solutions < 1:
            raise ValueError(
                f"p = {self.p} has no solutions, which would falsify solvability"
            )
        if not 0 <= self.n_type_ii <= self.n_solutions:
            raise ValueError(f"bad type-II count for p = {self.p}")

    @property
    def proportion_ii(self) -> float:
        return self.n_type_ii / self.n_solutions


@dataclass(frozen=True)
class DistTable:
    """Offset-bucket counts over a prime range; proportions always derived."""

    prime_range: PrimeRange
    counts: dict[int, int]
    overflow: int
    total: int

    def __post_init__(self) -> None:
        if sorted(self.counts) != list(BUCKETS):
            raise ValueError(f"expected buckets {BUCKETS}, got {sorted(self.counts)}")
        if self.total != sum(self.counts.values()) + self.overflow:
            raise ValueError("bucket counts do not sum to total")

    def proportion(self, i: int) -> float:
        return self.counts[i] / self.total


def _summarize_prime(p: int) -> tuple[int, tuple[int, int, int, int, int], int]:
    """(p, per-bucket counts, type-II count) from one enumeration pass."""
    buckets = [0, 0, 0, 0, 0]
    n_type_ii = 0
    for t in iter_solutions_fast(p):
        off = t.x - (p * t.y) // (4 * t.y - p)
        buckets[min(off, 5) - 1] += 1
        if off != 1:
            n_type_ii += 1
    return p, tuple(buckets), n_type_ii


def range_summary(
    r: PrimeRange, workers: int = 1
) -> tuple[DistTable, list[PerPrimeProportion]]:
    """Distribution table and per-prime series from a single sweep."""
    rows = pmap(_summarize_prime, primes_in(r), workers)
    counts = dict.fromkeys(BUCKETS, 0)
    series = []
    for p, buckets, n_type_ii in rows:
        for i, c in zip(BUCKETS, buckets):
            counts[i] += c
        series.append(PerPrimeProportion(p, sum(buckets), n_type_ii))
    table = DistTable(r, counts, overflow=0, total=sum(counts.values()))
    return table, series


def distribution(r: PrimeRange, workers: int = 1) -> DistTable:
    """Bucket every solution of every prime in r by boundary offset."""
    return range_summary(r, workers)[0]


def typeII_series(r: PrimeRange, workers: int = 1) -> list[PerPrimeProportion]:
    """One record per prime in r, ascending."""
    return range_summary(r, workers)[1]


def emit_csv(obj: DistTable | list[PerPrimeProportion], dest: str | Path | IO[str]) -> None:
    """Write a distribution table (`i,count,proportion`) or a per-prime series
    (`p,n_solutions,n_typeII,proportion_II`) as CSV."""
    if isinstance(obj, DistTable):
        lines = ["i,count,proportion"]
        if obj.total > 0:
            for i in BUCKETS:
                lines.append(f"{i},{obj.counts[i]},{obj.proportion(i):.4f}")
            lines.append(f"{OVERFLOW},{obj.overflow},{obj.overflow / obj.total:.4f}")
    else:
        lines = ["p,n_solutions,n_typeII,proportion_II"]
        for row in obj:
            lines.append(
                f"{row.p},{row.n_solutions},{row.n_type_ii},{row.proportion_ii:.4f}"
            )
    text = "\n".join(lines) + "\n"
    if hasattr(dest, "write"):
        dest.write(text)
    else:
        Path(dest).write_text(text)


def emit_gnuplot(table: DistTable, dest: str | Path | IO[str]) -> None:
    """Two-column `i proportion` variant for line plots."""
    lines = [f"{i} {table.proportion(i):.4f}" for i in BUCKETS] if table.total else []
    text = "\n".join(lines) + ("\n" if lines else "")
    if hasattr(dest, "write"):
        dest.write(text)
    else:
        Path(dest).write_text(text)
