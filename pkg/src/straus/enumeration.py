"""Complete per-prime solution sets, two ways.

enumerate_oracle sweeps the whole (x, y) search region and is deliberately
naive; enumerate_fast reformulates each x-column as a divisor-pair problem
and must return the identical set.  The oracle exists so the fast path can be
checked against it wholesale.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from pathlib import Path
from typing import IO, Iterable, Iterator

from .core import Triple, next_boundary
from .sieve import is_prime

ORACLE_LIMIT = 10_000

# Smallest-prime-factor table, grown on demand; x never exceeds 3p/4 so this
# stays desk-sized.  Divisors of x**2 are memoized because the same x recurs
# across every prime of a range sweep.
_spf: list[int] = []
_div_sq_cache: dict[int, tuple[int, ...]] = {}


def _ensure_spf(limit: int) -> None:
    global _spf
    if limit < len(_spf):
        return
    limit = max(limit, 2 * len(_spf), 1 << 10)
    spf = list(range(limit + 1))
    for i in range(2, isqrt(limit) + 1):
        if spf[i] == i:
            for j in range(i * i, limit + 1, i):
                if spf[j] == j:
                    spf[j] = i
    _spf = spf


def _divisors_of_square(x: int) -> tuple[int, ...]:
    """All divisors of x**2, from the factorization of x (unsorted)."""
    cached = _div_sq_cache.get(x)
    if cached is not None:
        return cached
    _ensure_spf(x)
    divs = [1]
    n = x
    while n > 1:
        q = _spf[n]
        e = 0
        while n % q == 0:
            n //= q
            e += 1
        qk = [q**k for k in range(1, 2 * e + 1)]
        divs += [d * f for d in divs for f in qk]
    result = tuple(divs)
    _div_sq_cache[x] = result
    return result


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise ValueError(f"p = {p} is not prime")


@dataclass(frozen=True)
class SolutionSet:
    """All solutions for one prime, strictly ordered by (x, y)."""

    p: int
    triples: tuple[Triple, ...]

    def __post_init__(self) -> None:
        prev = None
        for t in self.triples:
            if t.p != self.p:
                raise ValueError(f"triple for p = {t.p} in set for p = {self.p}")
            key = (t.x, t.y)
            if prev is not None and key <= prev:
                raise ValueError(f"triples not in strict (x, y) order at {key}")
            prev = key

    def __iter__(self) -> Iterator[Triple]:
        return iter(self.triples)

    def __len__(self) -> int:
        return len(self.triples)

    def as_tuples(self) -> list[tuple[int, int, int]]:
        return [t.as_tuple() for t in self.triples]

    def pairs(self) -> set[tuple[int, int]]:
        """The (x, y) cells occupied by solutions."""
        return {(t.x, t.y) for t in self.triples}


def enumerate_oracle(p: int) -> SolutionSet:
    """Exhaustive reference enumeration over the full search region.

    For each x in (p/4, 3p/4], y runs from the first integer above the
    boundary while y <= z still holds (y*(4x-p) <= 2px); a cell is a solution
    iff D = 4xy - p(x+y) divides pxy, giving z = pxy/D.
    """
    _require_prime(p)
    if p > ORACLE_LIMIT:
        raise ValueError(
            f"p = {p} exceeds the oracle limit {ORACLE_LIMIT}; use enumerate_fast"
        )
    triples = []
    for x in range(p // 4 + 1, (3 * p) // 4 + 1):
        r = 4 * x - p
        top = 2 * p * x
        y = max(x, next_boundary(p, x))
        while y * r <= top:
            d = 4 * x * y - p * (x + y)
            assert d > 0, "y starts strictly above the boundary"
            pxy = p * x * y
            if pxy % d == 0:
                z = pxy // d
                assert z >= y
                triples.append(Triple(p, x, y, z))
            y += 1
    return SolutionSet(p, tuple(triples))


def iter_solutions_fast(p: int) -> Iterator[Triple]:
    """Yield all solutions for p in (x, y) lexicographic order.

    Per x-column 1/y + 1/z = r/N with r = 4x - p and N = px, so solutions
    correspond to divisor pairs d*e = N**2 with d <= N and r | (N + d),
    via y = (N+d)/r, z = (N+e)/r.  Divisors of N**2 = p**2 * x**2 that are
    <= N are exactly the divisors of x**2 (all below N since x < p) plus
    p*d0 for divisors d0 of x**2 with d0 <= x.
    """
    _require_prime(p)
    for x in range(p // 4 + 1, (3 * p) // 4 + 1):
        r = 4 * x - p
        n = p * x
        dmin = 2 * x * (2 * x - p)  # d >= dmin <=> y >= x
        hits = []
        for d in _divisors_of_square(x):
            if d >= dmin and (n + d) % r == 0:
                hits.append(d)
            dp = d * p
            if d <= x and dp >= dmin and (n + dp) % r == 0:
                hits.append(dp)
        if hits:
            n2 = n * n
            cols = sorted(((n + d) // r, (n + n2 // d) // r) for d in hits)
            for y, z in cols:
                yield Triple(p, x, y, z)


def enumerate_fast(p: int) -> SolutionSet:
    """Divisor-pair enumeration; identical set to enumerate_oracle."""
    return SolutionSet(p, tuple(iter_solutions_fast(p)))


def write_solutions_csv(sets: Iterable[SolutionSet], dest: str | Path | IO[str]) -> None:
    """Dump solution sets as CSV rows `p,x,y,z`, ascending by (p, x, y)."""
    rows = sorted((s.p, t.x, t.y, t.z) for s in sets for t in s)
    lines = ["p,x,y,z"] + [f"{p},{x},{y},{z}" for (p, x, y, z) in rows]
    text = "\n".join(lines) + "\n"
    if hasattr(dest, "write"):
        dest.write(text)
    else:
        Path(dest).write_text(text)
