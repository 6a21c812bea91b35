"""Cyclic sequences with rotation-invariant equality.

The basic value here is :class:`Loop`: a non-empty sequence read cyclically,
so two loops compare equal when one is a rotation of the other.  The
canonical representative of a loop is its lexicographically minimal
rotation, which requires loop elements to support ``<``.

:class:`FeedbackLoop` specializes this to loops of fixed-length binary
columns (feedback sequences), tagged with the number of probing packets
``b`` and the feedback delay ``d``.  Columns compare big-endian: the first
row is the most significant bit.

Flip positions returned by :func:`flip_positions` are 1-based, mirroring
the usual notation for positions inside a loop; serialized forms (JSON)
are 0-based.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any, Iterable, Iterator, Sequence

Bits = tuple[int, ...]


def _least_rotation(seq: Sequence) -> int:
    """Index of the lexicographically minimal rotation (Booth's algorithm)."""
    s = tuple(seq) + tuple(seq)
    n = len(seq)
    f = [-1] * len(s)
    k = 0
    for j in range(1, len(s)):
        sj = s[j]
        i = f[j - k - 1]
        while i != -1 and sj != s[k + i + 1]:
            if sj < s[k + i + 1]:
                k = j - i - 1
            i = f[i]
        if sj != s[k + i + 1]:
            if sj < s[k]:
                k = j
            f[j - k] = -1
        else:
            f[j - k] = i + 1
    return k % n


@dataclass(frozen=True, eq=False)
class Loop:
    """A non-empty cyclic sequence; equality ignores rotation."""

    elements: tuple

    def __init__(self, elements: Iterable):
        elements = tuple(elements)
        if not elements:
            raise ValueError("empty loop")
        object.__setattr__(self, "elements", elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator:
        return iter(self.elements)

    def __getitem__(self, i: int):
        # Cyclic indexing: any integer index is valid.
        return self.elements[i % len(self.elements)]

    def rotate(self, k: int) -> "Loop":
        """Rotation moving element ``k`` to the front."""
        k %= len(self.elements)
        return type(self)(self.elements[k:] + self.elements[:k])

    def canonical(self) -> "Loop":
        return self.rotate(_least_rotation(self.elements))

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, Loop):
            return NotImplemented
        if len(self.elements) != len(other.elements):
            return False
        return self.canonical().elements == other.canonical().elements

    def __hash__(self) -> int:
        return hash(self.canonical().elements)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({list(self.elements)!r})"


class BinaryLoop(Loop):
    """A loop whose elements are the bits 0 and 1."""

    def __init__(self, elements: Iterable[int]):
        elements = tuple(elements)
        if any(e not in (0, 1) for e in elements):
            raise ValueError("binary loop elements must be 0 or 1")
        super().__init__(elements)


@dataclass(frozen=True)
class FlipPositions:
    """First and last flip positions of a unimodal binary loop (1-based).

    ``i_f`` is the position where the run of ones starts and ``i_l`` the
    position where it ends.  An all-zeros or all-ones loop has
    ``i_f == i_l == inf``.
    """

    i_f: float
    i_l: float

    @property
    def is_constant(self) -> bool:
        return math.isinf(self.i_f)


def canonicalize(loop: Loop) -> Loop:
    """Lexicographically minimal rotation of ``loop``.

    Idempotent, and identical for every rotation of the same loop.
    """
    return loop.canonical()


def _as_bits(bl) -> Bits:
    if isinstance(bl, Loop):
        bits = tuple(bl.elements)
    else:
        bits = tuple(bl)
    if not bits:
        raise ValueError("empty loop")
    if any(b not in (0, 1) for b in bits):
        raise ValueError("binary loop elements must be 0 or 1")
    return bits


def _cyclic_transitions(bits: Bits) -> int:
    n = len(bits)
    return sum(bits[i] != bits[(i + 1) % n] for i in range(n))


def is_unimodal(bl) -> bool:
    """True iff the ones of the binary loop form one contiguous cyclic run.

    All-zeros and all-ones loops count as unimodal.  Accepts a
    :class:`BinaryLoop` or any sequence of bits.
    """
    return _cyclic_transitions(_as_bits(bl)) <= 2


def flip_positions(bl) -> FlipPositions:
    """Start and end positions (1-based) of the cyclic run of ones."""
    bits = _as_bits(bl)
    if not is_unimodal(bits):
        raise ValueError("not unimodal")
    n = len(bits)
    if all(b == bits[0] for b in bits):
        return FlipPositions(math.inf, math.inf)
    start = next(i for i in range(n) if bits[i] == 1 and bits[i - 1] == 0)
    end = next(i for i in range(n) if bits[i] == 1 and bits[(i + 1) % n] == 0)
    return FlipPositions(start + 1, end + 1)


@dataclass(frozen=True, eq=False)
class FeedbackLoop:
    """A loop of feedback-sequence columns for ``b`` packets and delay ``d``.

    Each column is a tuple of ``b`` bits, the bit for packet ``i`` at index
    ``i - 1``.  Equality is rotation-invariant on the columns and requires
    matching ``b`` and ``d``.
    """

    columns: tuple[Bits, ...]
    b: int
    d: int

    def __init__(self, columns: Iterable[Sequence[int]], b: int, d: int):
        columns = tuple(tuple(c) for c in columns)
        if not columns:
            raise ValueError("empty loop")
        if b < 1 or d < 1:
            raise ValueError("b and d must be at least 1")
        for c in columns:
            if len(c) != b:
                raise ValueError(f"column {c} does not have {b} rows")
            if any(bit not in (0, 1) for bit in c):
                raise ValueError("column bits must be 0 or 1")
        object.__setattr__(self, "columns", columns)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "d", d)

    def __len__(self) -> int:
        return len(self.columns)

    def __getitem__(self, j: int) -> Bits:
        return self.columns[j % len(self.columns)]

    @property
    def n_columns(self) -> int:
        return len(self.columns)

    @property
    def n_unique(self) -> int:
        return len(set(self.columns))

    def row(self, i: int) -> Bits:
        """Bits of packet ``i`` (1-based) across all columns."""
        if not 1 <= i <= self.b:
            raise ValueError(f"row {i} out of range for b={self.b}")
        return tuple(c[i - 1] for c in self.columns)

    def rotate(self, k: int) -> "FeedbackLoop":
        k %= len(self.columns)
        return FeedbackLoop(self.columns[k:] + self.columns[:k], self.b, self.d)

    def canonical(self) -> "FeedbackLoop":
        return self.rotate(_least_rotation(self.columns))

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, FeedbackLoop):
            return NotImplemented
        return (
            self.b == other.b
            and self.d == other.d
            and len(self.columns) == len(other.columns)
            and self.canonical().columns == other.canonical().columns
        )

    def __hash__(self) -> int:
        return hash((self.b, self.d, self.canonical().columns))

    def __repr__(self) -> str:
        rows = [" ".join(str(c[i]) for c in self.columns) for i in range(self.b)]
        body = "; ".join(rows)
        return f"FeedbackLoop(b={self.b}, d={self.d}, rows=[{body}])"

    def to_json_dict(self) -> dict:
        canon = self.canonical()
        return {"b": self.b, "d": self.d, "columns": [list(c) for c in canon.columns]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "FeedbackLoop":
        return cls(data["columns"], data["b"], data["d"])


def prefix_groups(fl: FeedbackLoop, prefix_len: int) -> list[tuple[Bits, list[int]]]:
    """Column indices grouped by prefix, ordered by first occurrence.

    A prefix of length 0 puts every column in a single group.
    """
    if not 0 <= prefix_len <= fl.b:
        raise ValueError(f"prefix length {prefix_len} out of range for b={fl.b}")
    groups: dict[Bits, list[int]] = {}
    for j, col in enumerate(fl.columns):
        groups.setdefault(col[:prefix_len], []).append(j)
    return list(groups.items())


def subloops_by_prefix(
    fl: FeedbackLoop, prefix_len: int
) -> list[tuple[Bits, FeedbackLoop]]:
    """Sub-loops of columns sharing a prefix, cyclic order preserved."""
    return [
        (prefix, FeedbackLoop([fl.columns[j] for j in idx], fl.b, fl.d))
        for prefix, idx in prefix_groups(fl, prefix_len)
    ]


def remove_consecutive_repetitions(fl: FeedbackLoop) -> FeedbackLoop:
    """Collapse maximal runs of cyclically adjacent identical columns.

    One representative survives per run, including the run that wraps
    around the end of the representative sequence, so the result never has
    two cyclically adjacent equal columns.  Non-adjacent repetitions are
    kept.
    """
    kept = [fl.columns[0]]
    for col in fl.columns[1:]:
        if col != kept[-1]:
            kept.append(col)
    while len(kept) > 1 and kept[-1] == kept[0]:
        kept.pop()
    return FeedbackLoop(kept, fl.b, fl.d)


def parent_loop(fl: FeedbackLoop, order: int) -> FeedbackLoop:
    """Drop the last ``order`` rows, then collapse adjacent repetitions."""
    if not 1 <= order < fl.b:
        raise ValueError(f"order {order} out of range for b={fl.b}")
    trimmed = FeedbackLoop([c[: fl.b - order] for c in fl.columns], fl.b - order, fl.d)
    return remove_consecutive_repetitions(trimmed)
