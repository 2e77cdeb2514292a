"""Finite colouring machinery: the log2-parity colouring, exhaustive
monochromatic-solution search over finite ground sets, and Rado numbers by
backtracking over colourings.

A "solution" of a u x v matrix is an assignment to its v columns making
every row's dot product exactly zero.  Searches are exhaustive within
stated budgets; a None result is a covered-search claim, never a timeout.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Sequence

from .linalg import RatMatrix
from .rings import Rat


class BudgetExceededError(RuntimeError):
    """Search space larger than the configured budget; no answer claimed."""


@dataclass(frozen=True)
class SolutionAssignment:
    """Values for the columns of a coefficient matrix, in column order."""

    values: tuple[Rat, ...]

    def residuals(self, M: RatMatrix) -> tuple[Rat, ...]:
        if len(self.values) != M.cols:
            raise ValueError(f"expected {M.cols} values, got {len(self.values)}")
        return tuple(
            sum((M.at(i, j) * self.values[j] for j in range(M.cols)),
                start=Fraction(0))
            for i in range(M.rows)
        )

    def solves(self, M: RatMatrix) -> bool:
        return all(r == 0 for r in self.residuals(M))


def log2_parity_colour(x: Rat) -> int:
    """Parity of floor(log2(|x|)), computed by exact bracketing.

    The candidate exponent from bit lengths is off by at most one; a single
    shifted comparison settles it.  Doubling any nonzero rational always
    flips this colour.
    """
    if x == 0:
        raise ValueError("log2-parity colour is undefined at 0")
    a, b = abs(x.numerator), x.denominator
    e = a.bit_length() - b.bit_length()
    if e >= 0:
        if a < (b << e):
            e -= 1
    else:
        if (a << -e) < b:
            e -= 1
    return e & 1


@dataclass(frozen=True)
class Colouring:
    """Finite table colouring or the log2-parity rule; colours are 0..r-1."""

    kind: str
    r: int
    assignments: tuple[tuple[Rat, int], ...] = ()
    _map: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.kind not in ("table", "log2parity"):
            raise ValueError(f"unknown colouring kind: {self.kind!r}")
        if self.r < 1:
            raise ValueError(f"colour count must be positive, got {self.r}")
        mapping: dict[Rat, int] = {}
        for x, c in self.assignments:
            if x == 0:
                raise ValueError("0 cannot be coloured")
            if x in mapping:
                raise ValueError(f"{x} coloured twice")
            if not 0 <= c < self.r:
                raise ValueError(f"colour {c} outside 0..{self.r - 1}")
            mapping[x] = c
        object.__setattr__(self, "_map", mapping)

    @classmethod
    def table(cls, elements: Sequence[Rat | int], colours: Sequence[int],
              r: int | None = None) -> "Colouring":
        if len(elements) != len(colours):
            raise ValueError("need one colour per element")
        if r is None:
            r = max(colours, default=0) + 1
        pairs = tuple((Fraction(x), c) for x, c in zip(elements, colours))
        return cls("table", r, pairs)

    @classmethod
    def log2_parity(cls) -> "Colouring":
        return cls("log2parity", 2)

    def covers(self, x: Rat) -> bool:
        if self.kind == "table":
            return x in self._map
        return x != 0

    def colour_of(self, x: Rat) -> int:
        if self.kind == "log2parity":
            return log2_parity_colour(x)
        try:
            return self._map[x]
        except KeyError:
            raise ValueError(f"{x} is not coloured") from None


@dataclass(frozen=True)
class GroundSet:
    """Finite set of distinct nonzero rationals, searched in listed order."""

    elements: tuple[Rat, ...]

    def __post_init__(self) -> None:
        if any(x == 0 for x in self.elements):
            raise ValueError("ground sets exclude 0")
        if len(set(self.elements)) != len(self.elements):
            raise ValueError("ground-set elements must be distinct")

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    @classmethod
    def integers(cls, n: int) -> "GroundSet":
        """The ground set {1, ..., n}."""
        return cls(tuple(Fraction(i) for i in range(1, n + 1)))

    @classmethod
    def slice(cls, num_bound: int, denominator: int = 1) -> "GroundSet":
        """{a/s : 1 <= a <= num_bound} for a fixed denominator s: a finite
        slice of the subring whose primes cover s."""
        if num_bound < 1 or denominator < 1:
            raise ValueError("slice needs positive numerator bound and denominator")
        return cls(tuple(Fraction(a, denominator) for a in range(1, num_bound + 1)))


def doubling_distinct(c: Colouring, g: GroundSet) -> bool:
    """Does x and 2x always get different colours?  Pairs where 2x is not
    in the colouring's scope are skipped."""
    for x in g:
        if c.covers(x) and c.covers(2 * x):
            if c.colour_of(2 * x) == c.colour_of(x):
                return False
    return True


def monochromatic_solution(
    A: RatMatrix,
    c: Colouring,
    g: GroundSet,
    distinct: bool = False,
    budget: int = 10**8,
) -> SolutionAssignment | None:
    """Exhaustive search for a one-colour-class solution of A with values
    drawn from g; optionally all values pairwise distinct.

    Deterministic: colour classes in colour order, candidates in ground-set
    order, first witness wins.  Raises BudgetExceededError instead of
    searching more than `budget` candidate tuples.
    """
    v = A.cols
    if v == 0:
        raise ValueError("matrix has no columns to solve for")
    classes = []
    for colour in range(c.r):
        members = [x for x in g if c.covers(x) and c.colour_of(x) == colour]
        if members:
            classes.append(members)
    if sum(len(cls) ** v for cls in classes) > budget:
        raise BudgetExceededError(
            f"search space exceeds budget of {budget} candidate tuples"
        )

    # rows checked as soon as their last-involved variable is assigned
    finishing: list[list[int]] = [[] for _ in range(v)]
    for i in range(A.rows):
        last = max((j for j in range(v) if A.at(i, j) != 0), default=None)
        if last is not None:
            finishing[last].append(i)

    for members in classes:
        chosen: list[Rat] = []
        residual = [Fraction(0)] * A.rows

        def extend() -> SolutionAssignment | None:
            depth = len(chosen)
            if depth == v:
                return SolutionAssignment(tuple(chosen))
            for x in members:
                if distinct and x in chosen:
                    continue
                for i in range(A.rows):
                    residual[i] += A.at(i, depth) * x
                chosen.append(x)
                if all(residual[i] == 0 for i in finishing[depth]):
                    found = extend()
                    if found is not None:
                        return found
                chosen.pop()
                for i in range(A.rows):
                    residual[i] -= A.at(i, depth) * x
            return None

        found = extend()
        if found is not None:
            return found
    return None


@dataclass(frozen=True)
class RadoNumberResult:
    """Outcome of a Rado-number search.

    number is the least N such that every colouring of {1..N} admits a
    monochromatic solution, or None when some colouring of the whole range
    survives.  witness is always a solution-free colouring: of {1..N-1}
    when number is found (colour of 1, colour of 2, ...), of the full range
    otherwise.
    """

    number: int | None
    witness: tuple[int, ...]


def min_rado_number(A: RatMatrix, r: int, n_max: int) -> RadoNumberResult:
    """Least N <= n_max forcing a monochromatic solution under every
    r-colouring of {1..N}, by backtracking with solution pruning.

    Colour classes are interchangeable, so colour(1) is pinned to 0.  The
    search is exhaustive at desk scale only; hence the caps r <= 4 and
    n_max <= 64.
    """
    if not 1 <= r <= 4:
        raise ValueError(f"colour count must be 1..4, got {r}")
    if not 1 <= n_max <= 64:
        raise ValueError(f"n_max must be 1..64, got {n_max}")
    v = A.cols
    if v == 0:
        raise ValueError("matrix has no columns to solve for")

    # integer fast path: scale each row to integer coefficients
    int_rows: list[tuple[int, ...]] = []
    for i in range(A.rows):
        row = A.row(i)
        if all(x == 0 for x in row):
            continue
        s = lcm(*(x.denominator for x in row))
        int_rows.append(tuple(int(x * s) for x in row))

    def completes_solution(t: int, colours: list[int]) -> bool:
        """Does colouring t create a monochromatic solution inside {1..t}?

        Only tuples containing the newest value t need checking; older
        tuples were vetted when their maximum was coloured.
        """
        cls = [s for s in range(1, t + 1) if colours[s - 1] == colours[t - 1]]

        def fill(pos: int, partial: list[int], has_t: bool) -> bool:
            if pos == v:
                return has_t and all(
                    sum(row[j] * partial[j] for j in range(v)) == 0
                    for row in int_rows
                )
            candidates = cls if (has_t or pos < v - 1) else (t,)
            for value in candidates:
                partial.append(value)
                if fill(pos + 1, partial, has_t or value == t):
                    return True
                partial.pop()
            return False

        return fill(0, [], False)

    best_depth = 0
    best_witness: tuple[int, ...] = ()
    colours: list[int] = []

    def search() -> tuple[int, ...] | None:
        nonlocal best_depth, best_witness
        t = len(colours) + 1
        choices = range(1) if t == 1 else range(r)
        for colour in choices:
            colours.append(colour)
            if not completes_solution(t, colours):
                if t > best_depth:
                    best_depth = t
                    best_witness = tuple(colours)
                if t == n_max:
                    return tuple(colours)
                survivor = search()
                if survivor is not None:
                    return survivor
            colours.pop()
        return None

    survivor = search()
    if survivor is not None:
        return RadoNumberResult(None, survivor)
    return RadoNumberResult(best_depth + 1, best_witness)
