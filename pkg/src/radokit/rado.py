"""Columns condition and first-entries checks for rational matrices.

A matrix satisfies the columns condition when its columns admit an ordered
partition whose first block sums to the zero vector and each later block
sums to a rational combination of the columns already used.  That ordered
partition, together with the combination coefficients, is a checkable
certificate; this module finds certificates and re-verifies them.

Column indices are 0-based throughout the API (the CLI renders them
1-based).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .linalg import RatMatrix, in_span
from .rings import Rat

# Hard cap on column count: the partition search is exponential in v.
MAX_COLUMNS = 20


@dataclass(frozen=True)
class CCCertificate:
    """Ordered column partition with span witnesses.

    blocks[0] sums to zero; for t >= 1, witnesses[t-1] lists coefficients
    over the earlier columns (the union of blocks[0..t-1], in ascending
    column order) reproducing the sum of block t's columns.
    """

    blocks: tuple[tuple[int, ...], ...]
    witnesses: tuple[tuple[Rat, ...], ...]


@dataclass(frozen=True)
class FirstEntryReport:
    """Leftmost nonzero entry of every row.

    entries holds (row, column, value) triples for the nonzero rows;
    zero_rows lists the rest.  all_equal says whether first entries agree
    within each column; common_value is the single shared value when all
    first entries across the whole matrix coincide, else None.
    """

    entries: tuple[tuple[int, int, Rat], ...]
    zero_rows: tuple[int, ...]
    all_equal: bool
    common_value: Rat | None


def _mask_bits(mask: int) -> list[int]:
    out = []
    j = 0
    while mask:
        if mask & 1:
            out.append(j)
        mask >>= 1
        j += 1
    return out


def _ascending_submasks(mask: int) -> list[int]:
    """Nonempty submasks of mask in increasing numeric order."""
    subs = []
    sub = mask
    while sub:
        subs.append(sub)
        sub = (sub - 1) & mask
    subs.reverse()
    return subs


def columns_condition(A: RatMatrix) -> CCCertificate | None:
    """Search for a columns-condition certificate, or None if there is none.

    Depth-first over ordered partitions: the first block ranges over
    nonempty zero-sum column subsets in ascending bitmask order, and each
    later block over unused subsets whose column sum lies in the span of
    the columns used so far.  Dead used-column masks are memoized, which is
    sound because admissibility of the next block depends only on the span
    of the used columns.  The certificate returned is the canonical one:
    lexicographically least sequence of used-column masks.
    """
    if A.cols > MAX_COLUMNS:
        raise ValueError(
            f"columns_condition handles at most {MAX_COLUMNS} columns, got {A.cols}"
        )
    cols = [A.column(j) for j in range(A.cols)]
    zero = tuple(Fraction(0) for _ in range(A.rows))
    full = (1 << A.cols) - 1
    if full == 0:
        return None

    sums: dict[int, tuple[Rat, ...]] = {0: zero}

    def mask_sum(mask: int) -> tuple[Rat, ...]:
        cached = sums.get(mask)
        if cached is None:
            low = mask & -mask
            rest = mask_sum(mask ^ low)
            col = cols[low.bit_length() - 1]
            cached = tuple(a + b for a, b in zip(rest, col))
            sums[mask] = cached
        return cached

    dead: set[int] = set()

    def extend(
        used: int, blocks: list[tuple[int, ...]], witnesses: list[tuple[Rat, ...]]
    ) -> CCCertificate | None:
        if used == full:
            return CCCertificate(tuple(blocks), tuple(witnesses))
        if used in dead:
            return None
        used_cols = [cols[j] for j in _mask_bits(used)]
        for sub in _ascending_submasks(full & ~used):
            w = in_span(used_cols, mask_sum(sub))
            if w is None:
                continue
            blocks.append(tuple(_mask_bits(sub)))
            witnesses.append(tuple(w))
            found = extend(used | sub, blocks, witnesses)
            if found is not None:
                return found
            blocks.pop()
            witnesses.pop()
        dead.add(used)
        return None

    for first in _ascending_submasks(full):
        if mask_sum(first) != zero:
            continue
        found = extend(first, [tuple(_mask_bits(first))], [])
        if found is not None:
            return found
    return None


def verify_cc_certificate(A: RatMatrix, cert: CCCertificate) -> bool:
    """Recompute every certificate invariant against A.

    Out-of-range column indices are a malformed input and raise; a
    certificate that is well-formed but wrong returns False.
    """
    for block in cert.blocks:
        for j in block:
            if not 0 <= j < A.cols:
                raise ValueError(f"column index {j} outside 0..{A.cols - 1}")
    if not cert.blocks or any(not b for b in cert.blocks):
        return False
    flat = [j for block in cert.blocks for j in block]
    if sorted(flat) != list(range(A.cols)):
        return False
    if len(cert.witnesses) != len(cert.blocks) - 1:
        return False

    def block_sum(block: tuple[int, ...]) -> tuple[Rat, ...]:
        return tuple(sum(A.at(i, j) for j in block) for i in range(A.rows))

    if any(x != 0 for x in block_sum(cert.blocks[0])):
        return False
    earlier: list[int] = sorted(cert.blocks[0])
    for block, witness in zip(cert.blocks[1:], cert.witnesses):
        if len(witness) != len(earlier):
            return False
        target = block_sum(block)
        combo = tuple(
            sum(w * A.at(i, j) for w, j in zip(witness, earlier))
            for i in range(A.rows)
        )
        if combo != target:
            return False
        earlier = sorted(earlier + list(block))
    return True


def first_entries(A: RatMatrix) -> FirstEntryReport:
    """Locate the first (leftmost nonzero) entry of each row."""
    entries: list[tuple[int, int, Rat]] = []
    zero_rows: list[int] = []
    for i in range(A.rows):
        j = next((j for j in range(A.cols) if A.at(i, j) != 0), None)
        if j is None:
            zero_rows.append(i)
        else:
            entries.append((i, j, A.at(i, j)))
    by_column: dict[int, set[Rat]] = {}
    for _, j, v in entries:
        by_column.setdefault(j, set()).add(v)
    all_equal = all(len(vals) == 1 for vals in by_column.values())
    values = {v for _, _, v in entries}
    common = next(iter(values)) if len(values) == 1 else None
    return FirstEntryReport(tuple(entries), tuple(zero_rows), all_equal, common)


def weak_first_entries_condition(A: RatMatrix, strict: bool = False) -> bool:
    """No zero rows, and first entries sharing a column are equal.

    strict=True demands the classical stronger form: one constant shared
    by every first entry regardless of column.
    """
    report = first_entries(A)
    if report.zero_rows:
        return False
    if strict:
        return report.common_value is not None
    return report.all_equal
