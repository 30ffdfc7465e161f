"""Search-free solution construction from residue-class rule tables.

The tables live as plain-text data files (one rule per line, checksummed) so
every row can be audited against its formula instead of being buried in code.
Loading a table re-derives the divisibility promise of every rule on sampled
primes before the set is accepted.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path

from .core import Triple, classify, next_boundary
from .sieve import is_prime

RULE_FILES = {
    "theorem5": "theorem5.rules",
    "conjecture3-table": "conjecture3_table.rules",
}

RULE_CHECKSUMS = {
    "theorem5.rules": "ad2c107244fcf0ee54d5b66ea2de55fbf7d18277f3065ac44dce7152e8c86abe",
    "conjecture3_table.rules": "8b5778370c9067b20f1b937c82c5441ab2eecc2dd1f6f0a798bb50f5173b6ef9",
}

_VALIDATION_SAMPLES = 50
_VALIDATION_SCAN = 5_000  # progression steps to scan for sample primes


class RuleViolationError(Exception):
    """A rule table row broke its promise (bad divisibility, non-integral z)."""


@dataclass(frozen=True)
class ResidueRule:
    """y(p) = (c2*p**2 + c1*p + c0)/den for primes p = residue (mod modulus)."""

    modulus: int
    residue: int
    c2: int
    c1: int
    c0: int
    den: int

    def __post_init__(self) -> None:
        if self.modulus < 1 or not (0 <= self.residue < self.modulus):
            raise ValueError(f"bad residue class {self.residue} mod {self.modulus}")
        if self.den < 1:
            raise ValueError(f"rule denominator must be positive, got {self.den}")

    def matches(self, p: int) -> bool:
        return p % self.modulus == self.residue

    def evaluate(self, p: int) -> int:
        """The y this rule assigns to p; must divide exactly."""
        num = self.c2 * p * p + self.c1 * p + self.c0
        if num % self.den != 0:
            raise RuleViolationError(
                f"{self.den} does not divide {num} for p = {p} (rule {self.label()})"
            )
        return num // self.den

    def label(self) -> str:
        return f"{self.residue} mod {self.modulus}"

    def formula(self) -> str:
        terms = []
        if self.c2:
            terms.append(f"{self.c2}p^2" if self.c2 != 1 else "p^2")
        if self.c1:
            terms.append(f"{self.c1}p" if self.c1 != 1 else "p")
        if self.c0:
            terms.append(str(self.c0))
        poly = " + ".join(terms) or "0"
        return f"({poly})/{self.den}" if self.den != 1 else poly


@dataclass(frozen=True)
class RuleSet:
    """An ordered, duplicate-free collection of rules with a provenance tag."""

    provenance: str
    rules: tuple[ResidueRule, ...]

    def __post_init__(self) -> None:
        seen = set()
        for rule in self.rules:
            key = (rule.modulus, rule.residue)
            if key in seen:
                raise ValueError(f"duplicate rule class {rule.label()}")
            seen.add(key)


def _sample_primes(modulus: int, residue: int, count: int) -> list[int]:
    """Up to `count` primes in the class, scanning a bounded progression."""
    out = []
    n = residue if residue >= 2 else residue + modulus
    for _ in range(_VALIDATION_SCAN):
        if is_prime(n):
            out.append(n)
            if len(out) >= count:
                break
        n += modulus
    return out


def _validate_rule(rule: ResidueRule) -> None:
    """Check the rule's divisibility and domain promises on sampled primes."""
    samples = _sample_primes(rule.modulus, rule.residue, _VALIDATION_SAMPLES)
    if not samples:
        raise RuleViolationError(f"no primes found in class {rule.label()}")
    for p in samples:
        y = rule.evaluate(p)  # raises on broken divisibility
        if 4 * y - p <= 0:
            raise RuleViolationError(
                f"rule {rule.label()} puts y = {y} at or below the pole for p = {p}"
            )


def _parse_rules(text: str, provenance: str) -> RuleSet:
    rules = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) != 6:
            raise ValueError(f"line {lineno}: expected 'M r c2 c1 c0 d', got {raw!r}")
        m, r, c2, c1, c0, d = (int(f) for f in fields)
        rules.append(ResidueRule(m, r, c2, c1, c0, d))
    return RuleSet(provenance, tuple(rules))


@lru_cache(maxsize=None)
def load_rules(provenance: str) -> RuleSet:
    """Load, checksum and validate one of the bundled rule tables."""
    if provenance not in RULE_FILES:
        raise ValueError(
            f"unknown rule set {provenance!r}; expected one of {sorted(RULE_FILES)}"
        )
    filename = RULE_FILES[provenance]
    data = resources.files("straus.data").joinpath(filename).read_bytes()
    digest = hashlib.sha256(data).hexdigest()
    if digest != RULE_CHECKSUMS[filename]:
        raise RuleViolationError(
            f"{filename} checksum mismatch: table was edited without re-pinning"
        )
    ruleset = _parse_rules(data.decode(), provenance)
    for rule in ruleset.rules:
        _validate_rule(rule)
    return ruleset


def load_rules_from_path(path: str | Path, provenance: str = "custom") -> RuleSet:
    """Parse and validate a rule table from an arbitrary file (no checksum)."""
    ruleset = _parse_rules(Path(path).read_text(), provenance)
    for rule in ruleset.rules:
        _validate_rule(rule)
    return ruleset


def match_rule(rs: RuleSet, p: int) -> ResidueRule | None:
    """The matching rule with the largest modulus, or None.

    Larger moduli win so that finer residue classes refine coarser ones when
    classes nest.
    """
    best = None
    for rule in rs.rules:
        if rule.matches(p) and (best is None or rule.modulus > best.modulus):
            best = rule
    return best


def construct_solution(rule: ResidueRule, p: int) -> Triple:
    """Build the solution a rule promises for p, verifying every step.

    y comes from the rule, x is the first integer above the boundary for that
    y, and z is solved from the identity.  Any failure along the way is a
    transcription error in the table, never an expected outcome.
    """
    if not is_prime(p):
        raise ValueError(f"p = {p} is not prime")
    if not rule.matches(p):
        raise ValueError(f"p = {p} is not in class {rule.label()}")
    y = rule.evaluate(p)
    if 4 * y - p <= 0:
        raise RuleViolationError(f"y = {y} at or below the pole for p = {p}")
    x = next_boundary(p, y)
    d = 4 * x * y - p * (x + y)
    pxy = p * x * y
    if d <= 0 or pxy % d != 0:
        raise RuleViolationError(
            f"rule {rule.label()} gives non-integral z for p = {p} (y = {y})"
        )
    t = Triple(p, x, y, pxy // d)
    if not classify(t).is_ib:
        raise RuleViolationError(
            f"rule {rule.label()} built a non-boundary-adjacent triple for p = {p}"
        )
    return t
