"""Exact arithmetic over the rationals and their localized subrings.

Every subring of the rationals is obtained by picking a set F of primes and
allowing exactly those primes in reduced denominators (F empty gives the
integers, F everything gives all of the rationals, F = {2} gives the dyadic
rationals).  This module provides the membership tests, p-adic valuations,
the constructive residue pigeonhole, and finite subset sums that the rest
of the package builds on.

Rationals are plain :class:`fractions.Fraction` values, which already
maintain the canonical reduced form (gcd 1, positive denominator, zero as
0/1).  ``Rat`` is an alias for that type.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Rat = Fraction

# Trial division stays tractable below this; bigger inputs are refused
# rather than left to grind.
FACTOR_LIMIT = 2**64

_RAT_RE = re.compile(r"^(-?\d+)(?:/(\d+))?$")


def make_rat(num: int, den: int = 1) -> Rat:
    """Canonical rational num/den; a zero denominator raises ZeroDivisionError."""
    return Fraction(num, den)


def parse_rat(text: str) -> Rat:
    """Parse ``a`` or ``a/b`` with an optional leading minus sign."""
    m = _RAT_RE.match(text.strip())
    if m is None:
        raise ValueError(f"not a rational: {text!r}")
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return Fraction(int(m.group(1)), den)


def format_rat(x: Rat) -> str:
    """Render as ``a/b``, omitting the denominator when it is 1."""
    return str(x)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def factorize(n: int) -> list[int]:
    """Prime factors of n with multiplicity, sorted; empty for n = 1."""
    if n < 1:
        raise ValueError(f"factorize needs a positive integer, got {n}")
    if n >= FACTOR_LIMIT:
        raise ValueError(f"refusing trial division for n >= 2**64 (got {n})")
    out: list[int] = []
    while n % 2 == 0:
        out.append(2)
        n //= 2
    d = 3
    while d * d <= n:
        while n % d == 0:
            out.append(d)
            n //= d
        d += 2
    if n > 1:
        out.append(n)
    return out


@dataclass(frozen=True)
class PrimeSet:
    """Decidable set of primes: empty, all, a finite set, or a cofinite one.

    ``primes`` holds the listed primes for the finite kind and the excluded
    primes for the cofinite kind (empty otherwise).  Membership is a
    predicate, never an enumeration, so infinite sets are first-class.
    """

    kind: str
    primes: frozenset[int] = frozenset()

    def __post_init__(self) -> None:
        if self.kind not in ("empty", "all", "finite", "cofinite"):
            raise ValueError(f"unknown prime-set kind: {self.kind!r}")
        if self.kind in ("empty", "all") and self.primes:
            raise ValueError(f"a prime list makes no sense for kind {self.kind!r}")
        for p in self.primes:
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")

    @classmethod
    def empty(cls) -> "PrimeSet":
        return cls("empty")

    @classmethod
    def all_primes(cls) -> "PrimeSet":
        return cls("all")

    @classmethod
    def finite(cls, primes: Iterable[int]) -> "PrimeSet":
        return cls("finite", frozenset(primes))

    @classmethod
    def cofinite(cls, excluded: Iterable[int]) -> "PrimeSet":
        return cls("cofinite", frozenset(excluded))

    def __contains__(self, p: int) -> bool:
        """Membership of the prime p (the argument is assumed prime)."""
        if self.kind == "empty":
            return False
        if self.kind == "all":
            return True
        if self.kind == "finite":
            return p in self.primes
        return p not in self.primes

    def describe(self) -> str:
        """Inverse of :func:`parse_prime_set`."""
        if self.kind == "empty":
            return ""
        if self.kind == "all":
            return "all"
        listed = ",".join(str(p) for p in sorted(self.primes))
        return listed if self.kind == "finite" else f"all-except:{listed}"


def parse_prime_set(text: str) -> PrimeSet:
    """Parse ``''`` (empty), ``all``, ``p1,p2,...``, or ``all-except:p1,...``."""
    t = text.strip()
    if t == "":
        return PrimeSet.empty()
    if t == "all":
        return PrimeSet.all_primes()
    if t.startswith("all-except:"):
        return PrimeSet.cofinite(_parse_prime_list(t[len("all-except:"):]))
    return PrimeSet.finite(_parse_prime_list(t))


def _parse_prime_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip() != ""]
    except ValueError:
        raise ValueError(f"not a comma-separated prime list: {text!r}") from None


def in_subring(x: Rat, primes: PrimeSet) -> bool:
    """Is x in the subring of the rationals localized at the given primes?

    True exactly when every prime factor of x's reduced denominator lies in
    the set.  Integers belong to every such subring.
    """
    den = x.denominator
    if den == 1 or primes.kind == "all":
        return True
    if primes.kind == "empty":
        return False
    if primes.kind == "finite":
        for p in sorted(primes.primes):
            while den % p == 0:
                den //= p
        return den == 1
    # cofinite: membership fails only if an excluded prime divides den
    return all(den % p != 0 for p in primes.primes)


def in_scaled_subring(x: Rat, m: int, primes: PrimeSet) -> bool:
    """Is x an m-multiple of a subring element, i.e. is x/m in the subring?"""
    if m < 1:
        raise ValueError(f"scale must be a positive integer, got {m}")
    return in_subring(x / m, primes)


def padic_valuation(x: Rat, p: int) -> int | float:
    """Signed multiplicity of the prime p in x; ``math.inf`` for x = 0.

    Negative exactly when p divides the reduced denominator.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if x == 0:
        return math.inf
    v = 0
    num = abs(x.numerator)
    while num % p == 0:
        num //= p
        v += 1
    den = x.denominator
    while den % p == 0:
        den //= p
        v -= 1
    return v


def pigeonhole_subset(m: int, primes: PrimeSet, xs: Sequence[Rat]) -> list[int]:
    """Indices of a nonempty subset whose sum is m times a subring element.

    Follows the residue construction: write the xs over the lcm of their
    denominators, giving integer numerators, then take m indices whose
    numerators share a residue mod m (smallest residue with enough members,
    then smallest indices).  When no residue class reaches m members, some
    numerator is itself divisible by m -- the input is long enough to force
    that -- and its index alone serves.

    Needs at least (m-1)**2 + 1 elements, all inside the subring.
    """
    if m < 1:
        raise ValueError(f"modulus must be a positive integer, got {m}")
    need = (m - 1) ** 2 + 1
    if len(xs) < need:
        raise ValueError(f"need at least {need} elements for m = {m}, got {len(xs)}")
    for n, x in enumerate(xs):
        if not in_subring(x, primes):
            raise ValueError(f"element {n} ({format_rat(x)}) is outside the subring")
    s = math.lcm(*(x.denominator for x in xs))
    numerators = [x.numerator * (s // x.denominator) for x in xs]
    by_residue: dict[int, list[int]] = {}
    for n, y in enumerate(numerators):
        by_residue.setdefault(y % m, []).append(n)
    for r in sorted(by_residue):
        if len(by_residue[r]) >= m:
            return by_residue[r][:m]
    # The m-1 nonzero classes hold at most (m-1)**2 < len(xs) elements, so
    # residue 0 is nonempty here.
    return [by_residue[0][0]]


def finite_sums(xs: Sequence[Rat]) -> set[Rat]:
    """All sums over nonempty subsets of xs (at most 20 elements)."""
    if not 1 <= len(xs) <= 20:
        raise ValueError(f"finite_sums takes 1..20 elements, got {len(xs)}")
    sums: set[Rat] = set()
    for x in xs:
        sums |= {s + x for s in sums} | {x}
    return sums
