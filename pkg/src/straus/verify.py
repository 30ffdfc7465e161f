"""Range verifiers for the boundary and lcm-pattern claims.

Four claims are sweepable:

  conj1         some solution is boundary-adjacent in y (type I(a))
  conj2         some solution is boundary-adjacent in x (type I(b))
  conj3-pattern some solution has x = floor(py/(4y-p)) + 1, gcd(p, y) = 1
                and z = p*lcm(x, y)
  conj5-pattern the same shape found through the x-side witness scan

A sweep returns an exception ledger: the primes in range for which the claim
fails, plus (optionally) the first witness per passing prime.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import partial
from math import gcd, lcm
from pathlib import Path
from typing import IO

from .core import Triple, next_boundary
from .enumeration import iter_solutions_fast
from .parallel import pmap
from .sieve import PrimeRange, is_prime, primes_in

# Pattern threshold: the claims are framed for primes above some p* >= 2521,
# so exceptions at or below it are expected and only annotated, never fatal.
DEFAULT_THRESHOLD_PRIME = 2521

CLAIMS = ("conj1", "conj2", "conj3-pattern", "conj5-pattern")

# Desk-scale ceilings: refuse sweeps whose worst case would blow the time
# budget instead of silently grinding.
CLAIM_CEILINGS = {
    "conj1": 100_000,
    "conj2": 100_000,
    "conj3-pattern": 1_000_000,
    "conj5-pattern": 10_000_000,
}


def conj3_window(p: int) -> tuple[int, int]:
    """Inclusive y-scan window [ceil(p/2), floor(p(p+3)/6)]."""
    return (p + 1) // 2, p * (p + 3) // 6

def conj5_window(p: int) -> tuple[int, int]:
    """Inclusive x-scan window [ceil(p/4), floor(p/2)]."""
    return (p + 3) // 4, p // 2


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise ValueError(f"p = {p} is not prime")


@dataclass(frozen=True)
class WitnessReport:
    """A y- or x-side witness with its residue arithmetic and derived triple.

    q = 4*witness - p and m = p*witness mod q; the witness property is that
    q - m divides the witness, which forces the lcm-shaped solution stored in
    `derived`.  early_exit_scans counts candidates examined before the hit.
    """

    p: int
    kind: str  # "conj3-y" | "conj5-x"
    witness: int
    m: int
    derived: Triple
    gcd_ok: bool
    early_exit_scans: int

    def __post_init__(self) -> None:
        if self.kind not in ("conj3-y", "conj5-x"):
            raise ValueError(f"unknown witness kind {self.kind!r}")
        q = 4 * self.witness - self.p
        if not (0 <= self.m < q):
            raise ValueError(f"m = {self.m} outside [0, {q})")
        t = self.derived
        if t.z != self.p * lcm(t.x, t.y):
            raise ValueError(f"derived triple {t} is not lcm-shaped")
        if self.early_exit_scans < 1:
            raise ValueError("a found witness was scanned at least once")


def witness_divisibility_y(p: int, y: int) -> bool:
    """Core y-side witness predicate: gcd(p,y)=1, m != 0, (q - m) | y.

    q - m equals 4xy - p(x+y) for x = ceil(py/q), so together with the gcd
    condition it says exactly that (x, y, p*lcm(x, y)) solves the identity.
    """
    q = 4 * y - p
    if q <= 0 or gcd(p, y) != 1:
        return False
    m = (p * y) % q
    return m != 0 and y % (q - m) == 0


def witness_divisibility_x(p: int, x: int) -> bool:
    """Core x-side witness predicate: gcd(p, ceil(px/q))=1, m != 0, (q-m) | x."""
    q = 4 * x - p
    if q <= 0:
        return False
    m = (p * x) % q
    if m == 0 or x % (q - m) != 0:
        return False
    return gcd(p, (p * x + q - 1) // q) == 1


def check_conj3_witness(p: int, y: int) -> bool:
    """Witness predicate for y restricted to the conjectured scan window."""
    lo, hi = conj3_window(p)
    if not lo <= y <= hi:
        raise ValueError(f"y = {y} outside the witness window [{lo}, {hi}] for p = {p}")
    return witness_divisibility_y(p, y)


def check_conj5_witness(p: int, x: int) -> bool:
    """Witness predicate for x restricted to the conjectured scan window."""
    lo, hi = conj5_window(p)
    if not lo <= x <= hi:
        raise ValueError(f"x = {x} outside the witness window [{lo}, {hi}] for p = {p}")
    if 4 * x - p <= 0:
        raise ValueError(f"x = {x} at or below the pole for p = {p}")
    return witness_divisibility_x(p, x)


def find_conj3_witness(p: int) -> WitnessReport | None:
    """First y in the window passing the witness predicate, with its triple."""
    _require_prime(p)
    lo, hi = conj3_window(p)
    scans = 0
    for y in range(lo, hi + 1):
        scans += 1
        q = 4 * y - p
        m = (p * y) % q
        if m and y % (q - m) == 0 and gcd(p, y) == 1:
            x = (p * y + q - 1) // q
            derived = Triple(p, x, y, p * lcm(x, y))
            return WitnessReport(p, "conj3-y", y, m, derived, True, scans)
    return None


def find_conj5_witness(p: int) -> WitnessReport | None:
    """First x in the window passing the witness predicate, with its triple."""
    _require_prime(p)
    lo, hi = conj5_window(p)
    scans = 0
    for x in range(lo, hi + 1):
        scans += 1
        q = 4 * x - p
        m = (p * x) % q
        if m and x % (q - m) == 0:
            y = (p * x + q - 1) // q
            if gcd(p, y) == 1:
                derived = Triple(p, x, y, p * lcm(x, y))
                return WitnessReport(p, "conj5-x", x, m, derived, True, scans)
    return None


def verify_type_Ia_exists(p: int) -> bool:
    """Does some solution sit one step above the boundary in y?

    Scans each x-column's single candidate y = floor(px/(4x-p)) + 1; that cell
    is the only place a type I(a) solution can live, so this is equivalent to
    enumerating and classifying but exits early.
    """
    _require_prime(p)
    for x in range(p // 4 + 1, (3 * p) // 4 + 1):
        y = next_boundary(p, x)
        if y < x:
            continue
        d = 4 * x * y - p * (x + y)
        pxy = p * x * y
        if pxy % d == 0 and pxy // d >= y:
            return True
    return False


def verify_type_Ib_exists(p: int) -> bool:
    """Does some solution sit one step above the boundary in x?"""
    _require_prime(p)
    for t in iter_solutions_fast(p):
        if t.x - (p * t.y) // (4 * t.y - p) == 1:
            return True
    return False


def _pattern_y_report(p: int) -> WitnessReport | None:
    """First enumerated solution with the lcm pattern on the y side.

    Unlike find_conj3_witness this is not window-bounded: it quantifies over
    actual solutions, which is the form the whole-range claim takes.
    """
    scans = 0
    for t in iter_solutions_fast(p):
        scans += 1
        if (
            t.x - (p * t.y) // (4 * t.y - p) == 1
            and gcd(p, t.y) == 1
            and t.z == p * lcm(t.x, t.y)
        ):
            m = (p * t.y) % (4 * t.y - p)
            return WitnessReport(p, "conj3-y", t.y, m, t, True, scans)
    return None


# Per-prime checkers, top level so sweeps can fork.

def _check_conj1(p: int, store: bool) -> tuple[int, bool, WitnessReport | None]:
    return p, verify_type_Ia_exists(p), None

def _check_conj2(p: int, store: bool) -> tuple[int, bool, WitnessReport | None]:
    return p, verify_type_Ib_exists(p), None

def _check_conj3_pattern(p: int, store: bool) -> tuple[int, bool, WitnessReport | None]:
    report = _pattern_y_report(p)
    return p, report is not None, report if store else None

def _check_conj5_pattern(p: int, store: bool) -> tuple[int, bool, WitnessReport | None]:
    report = find_conj5_witness(p)
    return p, report is not None, report if store else None


_CLAIM_CHECKS = {
    "conj1": _check_conj1,
    "conj2": _check_conj2,
    "conj3-pattern": _check_conj3_pattern,
    "conj5-pattern": _check_conj5_pattern,
}


@dataclass(frozen=True)
class ExceptionLedger:
    """Outcome of a sweep: which primes in range fail the claim."""

    claim: str
    prime_range: PrimeRange
    exceptions: tuple[int, ...]
    witnesses: tuple[WitnessReport, ...] = ()

    def unexpected(self, threshold: int = DEFAULT_THRESHOLD_PRIME) -> tuple[int, ...]:
        """Exceptions above the pattern threshold p*."""
        return tuple(p for p in self.exceptions if p > threshold)

    def recheck(self) -> bool:
        """Re-verify on demand that every listed exception still fails."""
        check = _CLAIM_CHECKS[self.claim]
        return all(not check(p, False)[1] for p in self.exceptions)


def sweep(
    claim: str,
    r: PrimeRange,
    workers: int = 1,
    store_witnesses: bool = False,
) -> ExceptionLedger:
    """Run the claim's per-prime verifier over every prime in r.

    Partitioning across workers never changes the result; the ledger merge is
    a plain ordered concatenation.
    """
    if claim not in _CLAIM_CHECKS:
        raise ValueError(f"unknown claim {claim!r}; expected one of {CLAIMS}")
    ceiling = CLAIM_CEILINGS[claim]
    if r.hi > ceiling:
        raise ValueError(
            f"range [{r.lo}, {r.hi}] exceeds the {claim} desk-scale ceiling "
            f"{ceiling}; try [{r.lo}, {ceiling}] and sweep the rest separately"
        )
    check = partial(_CLAIM_CHECKS[claim], store=store_witnesses)
    results = pmap(check, primes_in(r), workers)
    exceptions = tuple(p for (p, ok, _w) in results if not ok)
    witnesses = tuple(w for (_p, _ok, w) in results if w is not None)
    return ExceptionLedger(claim, r, exceptions, witnesses)


def write_ledger_csv(ledger: ExceptionLedger, dest: str | Path | IO[str]) -> None:
    """CSV rows `claim,p,status,witness,m` plus a trailing summary line."""
    lines = ["claim,p,status,witness,m"]
    by_p = {w.p: w for w in ledger.witnesses}
    rows = sorted(set(ledger.exceptions) | set(by_p))
    for p in rows:
        if p in by_p and p not in ledger.exceptions:
            w = by_p[p]
            lines.append(f"{ledger.claim},{p},ok,{w.witness},{w.m}")
        else:
            lines.append(f"{ledger.claim},{p},exception,,")
    lines.append(
        f"# claim={ledger.claim} range=[{ledger.prime_range.lo},{ledger.prime_range.hi}] "
        f"exceptions={len(ledger.exceptions)} witnesses={len(ledger.witnesses)}"
    )
    text = "\n".join(lines) + "\n"
    if hasattr(dest, "write"):
        dest.write(text)
    else:
        Path(dest).write_text(text)
