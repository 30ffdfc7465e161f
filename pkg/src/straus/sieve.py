"""Prime generation (segmented sieve) and deterministic primality testing."""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

PRIME_CEILING = 2**40
DEFAULT_SEGMENT_SIZE = 1 << 20

# Strong-pseudoprime bases proven deterministic for all n < 3.3 * 10**24,
# comfortably covering the 64-bit range this module promises to test fast.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_LIMIT = 3_317_044_064_679_887_385_961_981
_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


@dataclass(frozen=True)
class PrimeRange:
    """Closed range [lo, hi] of candidate primes, bounded by PRIME_CEILING."""

    lo: int
    hi: int

    def __post_init__(self) -> None:
        if self.lo < 2:
            raise ValueError(f"range must start at 2 or above, got lo = {self.lo}")
        if self.hi < self.lo:
            raise ValueError(f"empty-ordered range [{self.lo}, {self.hi}]")
        if self.hi > PRIME_CEILING:
            raise ValueError(
                f"hi = {self.hi} exceeds the configured ceiling {PRIME_CEILING}"
            )


def _simple_sieve(limit: int) -> list[int]:
    """All primes <= limit by a plain byte sieve (used for base primes)."""
    if limit < 2:
        return []
    flags = bytearray([1]) * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for p in range(2, isqrt(limit) + 1):
        if flags[p]:
            start = p * p
            flags[start :: p] = b"\x00" * len(range(start, limit + 1, p))
    return [i for i in range(2, limit + 1) if flags[i]]


def primes_in(r: PrimeRange, segment_size: int = DEFAULT_SEGMENT_SIZE) -> list[int]:
    """Exactly the primes in [r.lo, r.hi], ascending.

    Works in fixed-size segments so memory stays bounded by segment_size
    regardless of the range width.
    """
    if segment_size < 2:
        raise ValueError(f"segment_size must be >= 2, got {segment_size}")
    base = _simple_sieve(isqrt(r.hi))
    out: list[int] = []
    lo = r.lo
    while lo <= r.hi:
        hi = min(lo + segment_size - 1, r.hi)
        flags = bytearray([1]) * (hi - lo + 1)
        for p in base:
            start = max(p * p, ((lo + p - 1) // p) * p)
            if start > hi:
                continue
            flags[start - lo :: p] = b"\x00" * len(range(start, hi + 1, p))
        out.extend(n for n in range(max(lo, 2), hi + 1) if flags[n - lo])
        lo = hi + 1
    return out


def _miller_rabin(n: int, bases: tuple[int, ...]) -> bool:
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    for a in bases:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def is_prime(n: int) -> bool:
    """Deterministic primality test.

    Strong-pseudoprime test with a proven base set below _MR_LIMIT (well past
    64 bits); plain trial division above, so the answer is never probabilistic.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    if n < _MR_LIMIT:
        return _miller_rabin(n, _MR_BASES)
    for d in range(41, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True
