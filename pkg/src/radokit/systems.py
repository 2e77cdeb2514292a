"""Builders for truncated instances of the equation family

    x_{n,1} + ... + x_{n,n} + d_{n,1} y_1 + ... + d_{n,alpha} y_alpha = z_n

for 2 <= n <= k, together with the stacked (I; A; B) matrix whose
first-entries structure drives the partition-regularity argument, the
built-in coefficient schedules, and the denominator obstruction that
refutes solvability over a localized subring.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from pathlib import Path

from .linalg import RatMatrix, parse_matrix
from .rings import PrimeSet, Rat, format_rat, in_subring, is_prime
from .search import SolutionAssignment

_SCHEDULE_KINDS = ("qpow", "allprimes", "qpowpair", "allprimespair", "explicit")

_primes_cache: list[int] = [2]


def _first_primes(n: int) -> list[int]:
    """The n smallest primes, in increasing order."""
    candidate = _primes_cache[-1]
    while len(_primes_cache) < n:
        candidate += 1
        if is_prime(candidate):
            _primes_cache.append(candidate)
    return _primes_cache[:n]


@dataclass(frozen=True)
class CoefficientSchedule:
    """Rule producing the coefficients d_{n,i} for every equation index n >= 2.

    Built-in kinds:
      qpow(q)        d_{n,1} = 1/q^n
      allprimes      d_{n,1} = 1/(p_1 ... p_n)^n over the increasing primes
      qpowpair(q)    (d_{n,1}, d_{n,2}) = (-1/q^n, 2/q^n)
      allprimespair  (d_{n,1}, d_{n,2}) = (-1/P^n, 2/P^n), P = p_1 ... p_n
      explicit       a finite table, row n-2 listing d_{n,1..alpha}

    The pair kinds are tuned so that d_{n,1}*2 + d_{n,2}*1 = 0 for every n.
    """

    kind: str
    q: int | None = None
    table: tuple[tuple[Rat, ...], ...] | None = None

    def __post_init__(self) -> None:
        if self.kind not in _SCHEDULE_KINDS:
            raise ValueError(f"unknown schedule kind: {self.kind!r}")
        if self.kind in ("qpow", "qpowpair"):
            if self.q is None or not is_prime(self.q):
                raise ValueError(f"schedule {self.kind} needs a prime q, got {self.q}")
        elif self.q is not None:
            raise ValueError(f"schedule {self.kind} takes no q")
        if self.kind == "explicit":
            if not self.table or not self.table[0]:
                raise ValueError("explicit schedule needs a nonempty table")
            width = len(self.table[0])
            if any(len(row) != width for row in self.table):
                raise ValueError("explicit schedule table must be rectangular")
        elif self.table is not None:
            raise ValueError(f"schedule {self.kind} takes no table")

    @classmethod
    def qpow(cls, q: int) -> "CoefficientSchedule":
        return cls("qpow", q=q)

    @classmethod
    def allprimes(cls) -> "CoefficientSchedule":
        return cls("allprimes")

    @classmethod
    def qpowpair(cls, q: int) -> "CoefficientSchedule":
        return cls("qpowpair", q=q)

    @classmethod
    def allprimespair(cls) -> "CoefficientSchedule":
        return cls("allprimespair")

    @classmethod
    def explicit(cls, rows) -> "CoefficientSchedule":
        table = tuple(tuple(Fraction(x) for x in row) for row in rows)
        return cls("explicit", table=table)

    @property
    def arity(self) -> int:
        if self.kind in ("qpow", "allprimes"):
            return 1
        if self.kind in ("qpowpair", "allprimespair"):
            return 2
        return len(self.table[0])

    @property
    def max_depth(self) -> int | None:
        """Largest usable equation index n, or None when unbounded."""
        return None if self.table is None else len(self.table) + 1


def schedule_value(s: CoefficientSchedule, n: int, i: int) -> Rat:
    """The coefficient d_{n,i}; n is the equation index (>= 2), i the slot
    (1 <= i <= arity)."""
    if n < 2:
        raise ValueError(f"equation index starts at 2, got {n}")
    if not 1 <= i <= s.arity:
        raise ValueError(f"slot {i} outside 1..{s.arity}")
    if s.kind == "qpow":
        return Fraction(1, s.q**n)
    if s.kind == "qpowpair":
        return Fraction(-1, s.q**n) if i == 1 else Fraction(2, s.q**n)
    if s.kind in ("allprimes", "allprimespair"):
        base = math.prod(_first_primes(n)) ** n
        if s.kind == "allprimes":
            return Fraction(1, base)
        return Fraction(-1, base) if i == 1 else Fraction(2, base)
    if n - 2 >= len(s.table):
        raise ValueError(f"explicit schedule defines n up to {s.max_depth}, got {n}")
    return s.table[n - 2][i - 1]


@dataclass(frozen=True)
class SystemSpec:
    """A truncation depth k >= 2, the y-arity, and a coefficient schedule.

    Fixes the variable order used by every builder: the x-block in
    lexicographic (n, j) order, then y_1..y_alpha, then z_2..z_k.
    """

    alpha: int
    depth: int
    schedule: CoefficientSchedule

    def __post_init__(self) -> None:
        if self.alpha < 1:
            raise ValueError(f"alpha must be positive, got {self.alpha}")
        if self.depth < 2:
            raise ValueError(f"depth must be at least 2, got {self.depth}")
        if self.schedule.arity != self.alpha:
            raise ValueError(
                f"schedule arity {self.schedule.arity} != alpha {self.alpha}"
            )
        limit = self.schedule.max_depth
        if limit is not None and self.depth > limit:
            raise ValueError(f"explicit schedule covers n up to {limit} only")

    @property
    def x_count(self) -> int:
        return self.depth * (self.depth + 1) // 2 - 1

    @property
    def var_count(self) -> int:
        return self.x_count + self.alpha + (self.depth - 1)

    def x_index(self, n: int, j: int) -> int:
        """Column of x_{n,j} (2 <= n <= depth, 1 <= j <= n)."""
        return n * (n - 1) // 2 - 1 + (j - 1)

    def y_index(self, i: int) -> int:
        return self.x_count + (i - 1)

    def z_index(self, n: int) -> int:
        return self.x_count + self.alpha + (n - 2)

    def variable_names(self) -> list[str]:
        names = [
            f"x_{n}_{j}"
            for n in range(2, self.depth + 1)
            for j in range(1, n + 1)
        ]
        names += [f"y_{i}" for i in range(1, self.alpha + 1)]
        names += [f"z_{n}" for n in range(2, self.depth + 1)]
        return names


def build_truncated_system(spec: SystemSpec) -> RatMatrix:
    """The (k-1) x V homogeneous coefficient matrix of the truncation: row
    n-2 encodes x_{n,1}+...+x_{n,n} + sum_i d_{n,i} y_i - z_n = 0."""
    rows = []
    for n in range(2, spec.depth + 1):
        row = [Fraction(0)] * spec.var_count
        for j in range(1, n + 1):
            row[spec.x_index(n, j)] = Fraction(1)
        for i in range(1, spec.alpha + 1):
            row[spec.y_index(i)] = schedule_value(spec.schedule, n, i)
        row[spec.z_index(n)] = Fraction(-1)
        rows.append(row)
    return RatMatrix.from_rows(rows)


def block_offsets(k: int) -> list[int]:
    """Offsets b_1..b_k with b_1 = 0 and b_j = b_{j-1} + j, as a list
    indexed 1..k (slot 0 unused)."""
    b = [0, 0]
    for j in range(2, k + 1):
        b.append(b[-1] + j)
    return b


def build_stacked_matrix(spec: SystemSpec) -> RatMatrix:
    """The (I; A; B) stack over v = b_k + alpha columns.

    I is the v x v identity.  A has k-1 rows: row i carries ones on columns
    b_i+1 .. b_{i+1} (1-based) and d_{i+1,t} on column b_k + t.  B carries
    one difference row per pair b_k < i < j <= v, a 1 at i and a -1 at j,
    pairs in lexicographic order; alpha = 1 means no B rows.  Columns read
    as x_{2,1}..x_{k,k} then y_1..y_alpha.
    """
    k, alpha = spec.depth, spec.alpha
    b = block_offsets(k)
    v = b[k] + alpha
    rows = [
        [Fraction(1) if c == r else Fraction(0) for c in range(v)] for r in range(v)
    ]
    for i in range(1, k):
        row = [Fraction(0)] * v
        for c in range(b[i], b[i + 1]):
            row[c] = Fraction(1)
        for t in range(1, alpha + 1):
            row[b[k] + t - 1] = schedule_value(spec.schedule, i + 1, t)
        rows.append(row)
    for i, j in combinations(range(b[k], v), 2):
        row = [Fraction(0)] * v
        row[i] = Fraction(1)
        row[j] = Fraction(-1)
        rows.append(row)
    return RatMatrix.from_rows(rows)


def natural_solution_witness(spec: SystemSpec) -> SolutionAssignment:
    """A positive-integer solution of the truncated system for the pair
    schedules: y = (2, 1) kills every d-combination, all x_{n,j} = 1, and
    z_n = n.  Other schedule kinds are rejected."""
    if spec.schedule.kind not in ("qpowpair", "allprimespair"):
        raise ValueError(
            f"integer witness needs a pair schedule, got {spec.schedule.kind!r}"
        )
    values = [Fraction(0)] * spec.var_count
    for n in range(2, spec.depth + 1):
        for j in range(1, n + 1):
            values[spec.x_index(n, j)] = Fraction(1)
        values[spec.z_index(n)] = Fraction(n)
    values[spec.y_index(1)] = Fraction(2)
    values[spec.y_index(2)] = Fraction(1)
    return SolutionAssignment(tuple(values))


def refute_over_subring(
    spec: SystemSpec, primes: PrimeSet, y: tuple[Rat, ...], n_max: int
) -> int | None:
    """Least n <= n_max whose d-combination sum_i d_{n,i} y_i falls outside
    the subring, or None.

    Any subring solution extending the given y values must absorb that
    combination into z_n - x_{n,1} - ... - x_{n,n}, which stays inside the
    subring; so a returned n certifies that no truncation of depth >= n has
    a subring solution with these y values.
    """
    if len(y) != spec.alpha:
        raise ValueError(f"expected {spec.alpha} y-values, got {len(y)}")
    for i, value in enumerate(y, start=1):
        if not in_subring(value, primes):
            raise ValueError(f"y_{i} = {format_rat(value)} is outside the subring")
    for n in range(2, n_max + 1):
        combo = sum(
            (schedule_value(spec.schedule, n, i) * y[i - 1]
             for i in range(1, spec.alpha + 1)),
            start=Fraction(0),
        )
        if not in_subring(combo, primes):
            return n
    return None


def parse_schedule(text: str) -> CoefficientSchedule:
    """Parse a schedule flag: qpow:Q, allprimes, qpowpair:Q, allprimespair,
    or file:PATH where the file holds an explicit d-table in the matrix
    text format (row n-2 lists d_{n,1..alpha})."""
    t = text.strip()
    if t == "allprimes":
        return CoefficientSchedule.allprimes()
    if t == "allprimespair":
        return CoefficientSchedule.allprimespair()
    if t.startswith("qpow:"):
        return CoefficientSchedule.qpow(_parse_prime_arg(t[len("qpow:"):]))
    if t.startswith("qpowpair:"):
        return CoefficientSchedule.qpowpair(_parse_prime_arg(t[len("qpowpair:"):]))
    if t.startswith("file:"):
        table = parse_matrix(Path(t[len("file:"):]).read_text())
        return CoefficientSchedule.explicit(table.to_lists())
    raise ValueError(f"unknown schedule: {text!r}")


def _parse_prime_arg(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise ValueError(f"not an integer prime: {text!r}") from None
