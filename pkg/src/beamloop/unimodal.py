"""Feedback-loop unimodality, child-loop construction, and max cardinality loops.

A loop of feedback columns is (b,d)-unimodal when, for every packet ``i``
and every realized prefix of length ``max(i - d, 0)``, the loop of i-th
bits over the columns carrying that prefix is unimodal, and no two
cyclically adjacent columns are equal.  A single-column loop counts as
valid: it has no adjacent pair to violate.

Child loops extend a valid (b-1,d) loop by one row: the parent's columns
are grouped by their length-``max(b-d, 0)`` prefixes, each group is
repeated three times column-wise, a unimodal row is attached per group,
the groups are interleaved back in parent order, and adjacent duplicate
columns are collapsed.  ``build_mcl`` iterates this with rows chosen to
maximize the column and unique-column counts, reaching the closed-form
maxima returned by ``mcl_cardinality``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import _kernels
from .loops import (
    Bits,
    FeedbackLoop,
    is_unimodal,
    prefix_groups,
    remove_consecutive_repetitions,
)


@dataclass(frozen=True)
class MclCardinality:
    """Maximum column count and unique-column count of a (b,d) loop."""

    n_star: int
    m_star: int


@lru_cache(maxsize=None)
def _m_star(b: int, d: int) -> int:
    if d == 1:
        return 2**b
    if b <= d:
        return 2 * b
    return _m_star(b - 1, d) + 2 * _m_star(b - d, d)


def mcl_cardinality(b: int, d: int) -> MclCardinality:
    """Closed-form maxima for the number of columns and unique columns."""
    if b < 1 or d < 1:
        raise ValueError("b and d must be at least 1")
    if d == 1:
        return MclCardinality(2 ** (b + 1) - 2, 2**b)
    m = _m_star(b, d)
    return MclCardinality(m, m)


def is_bd_unimodal(fl: FeedbackLoop) -> bool:
    """Check per-prefix row unimodality and the no-adjacent-repeat rule."""
    cols = fl.columns
    n = len(cols)
    if n > 1:
        for k in range(n):
            if cols[k] == cols[(k + 1) % n]:
                return False
    for i in range(1, fl.b + 1):
        plen = max(i - fl.d, 0)
        for _, idx in prefix_groups(fl, plen):
            if not is_unimodal([cols[j][i - 1] for j in idx]):
                return False
    return True


@dataclass(frozen=True)
class ConcatRow:
    """A unimodal row to attach to one column-tripled sub-loop.

    ``bits`` are aligned positionally with the tripled sub-loop, the
    sub-loop itself being extracted in the parent's representative order.
    ``target_subloop`` is the 0-based index of the sub-loop (in order of
    first prefix occurrence) that the row extends.
    """

    bits: Bits
    target_subloop: int

    def __init__(self, bits, target_subloop: int):
        bits = tuple(bits)
        if not is_unimodal(bits):
            raise ValueError("concatenation row is not unimodal")
        object.__setattr__(self, "bits", bits)
        object.__setattr__(self, "target_subloop", int(target_subloop))


def triple_columns(fl: FeedbackLoop) -> FeedbackLoop:
    """Repeat every column three times consecutively."""
    cols = []
    for c in fl.columns:
        cols.extend([c, c, c])
    return FeedbackLoop(cols, fl.b, fl.d)


def construct_child(parent: FeedbackLoop, rows: list[ConcatRow]) -> FeedbackLoop:
    """Extend ``parent`` by one row, one :class:`ConcatRow` per sub-loop.

    Sub-loops are the parent's length-``max(b - d, 0)`` prefix groups for
    the child packet count ``b = parent.b + 1``.  Row bits attach to the
    tripled copies of each group's columns; the combined loop keeps the
    parent's cyclic column order and is collapsed of adjacent duplicates.
    The result is validated to be (b,d)-unimodal.
    """
    b = parent.b + 1
    plen = max(b - parent.d, 0)
    groups = prefix_groups(parent, plen)
    if len(rows) != len(groups):
        raise ValueError(f"expected {len(groups)} rows, got {len(rows)}")
    by_target: dict[int, ConcatRow] = {}
    for r in rows:
        if r.target_subloop in by_target:
            raise ValueError(f"duplicate row for sub-loop {r.target_subloop}")
        by_target[r.target_subloop] = r
    if sorted(by_target) != list(range(len(groups))):
        raise ValueError("rows do not cover the sub-loops exactly")
    for gi, (_, idx) in enumerate(groups):
        if len(by_target[gi].bits) != 3 * len(idx):
            raise ValueError(
                f"row for sub-loop {gi} has {len(by_target[gi].bits)} bits, "
                f"expected {3 * len(idx)}"
            )

    # Occurrence index of each parent column within its group.
    where: dict[int, tuple[int, int]] = {}
    for gi, (_, idx) in enumerate(groups):
        for j, k in enumerate(idx):
            where[k] = (gi, j)

    new_cols = []
    for k, col in enumerate(parent.columns):
        gi, j = where[k]
        bits = by_target[gi].bits
        for t in range(3):
            new_cols.append(col + (bits[3 * j + t],))
    child = remove_consecutive_repetitions(FeedbackLoop(new_cols, b, parent.d))
    if not is_bd_unimodal(child):
        raise ValueError("invalid concatenation")
    return child


def max_addition_row(
    subloop: FeedbackLoop, i: int, d: int, target: int = 0
) -> ConcatRow:
    """Row maximizing the column gain of one tripled sub-loop.

    ``subloop`` must already be column-tripled.  If all its columns are
    identical (always the case for d=1 groups) the row is a single one at
    position 2.  Otherwise the run of ones starts and ends at positions
    congruent to 2 mod 3, placed on two columns with different prefixes of
    length ``i - d + 1`` when such a pair exists, else on any two
    different columns; ties resolve to the smallest start, then the
    smallest end.
    """
    n = len(subloop.columns)
    if n % 3 != 0:
        raise ValueError("sub-loop is not column-tripled")
    base = subloop.columns[0::3]
    for t, c in enumerate(subloop.columns):
        if c != base[t // 3]:
            raise ValueError("sub-loop is not column-tripled")
    k = len(base)

    if all(c == base[0] for c in base):
        bits = [0] * n
        bits[1] = 1
        return ConcatRow(bits, target)

    plen = max(i - d + 1, 0)
    prefixes = [c[:plen] for c in base]
    if len(set(prefixes)) > 1:
        qualifies = lambda u, v: prefixes[u] != prefixes[v]
    else:
        qualifies = lambda u, v: base[u] != base[v]
    for u in range(k):
        for v in range(u + 1, k):
            if qualifies(u, v):
                bits = [1 if 3 * u + 1 <= p <= 3 * v + 1 else 0 for p in range(n)]
                return ConcatRow(bits, target)
    raise AssertionError("no valid flip positions in sub-loop")


def build_mcl(b: int, d: int) -> FeedbackLoop:
    """Deterministic max cardinality (b,d)-unimodal loop.

    Starts from the two one-bit columns and grows one row at a time with
    :func:`max_addition_row`; the result has exactly
    ``mcl_cardinality(b, d)`` columns and unique columns.
    """
    if b < 1 or d < 1:
        raise ValueError("b and d must be at least 1")
    loop = FeedbackLoop([(0,), (1,)], 1, d)
    for i in range(2, b + 1):
        plen = max(i - d, 0)
        rows = []
        for gi, (_, idx) in enumerate(prefix_groups(loop, plen)):
            sub = FeedbackLoop([loop.columns[j] for j in idx], loop.b, d)
            rows.append(max_addition_row(triple_columns(sub), i, d, target=gi))
        loop = construct_child(loop, rows)
    return loop


def search_max_cardinality(b: int, d: int, max_cols: int) -> tuple[int, int]:
    """Exhaustive maxima over all (b,d)-unimodal loops of up to ``max_cols`` columns.

    Depth-first enumeration of column sequences with per-prefix
    unimodality pruning; independent of the constructive path, so it
    serves as a maximality oracle for small instances.
    """
    if b < 1 or d < 1 or max_cols < 1:
        raise ValueError("b, d and max_cols must be at least 1")
    return _kernels.search_max_cardinality(b, d, max_cols)
