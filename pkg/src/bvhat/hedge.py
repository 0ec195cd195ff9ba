"""Hedges: leaf-count sequences of forests, and their interval partitions."""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass

from .rewrite import HEDGE_INVERSE_RULES, HEDGE_RULES, normalize


class Hedge:
    """A sequence ``N -> N>=1`` that is 1 off a finite set.  Immutable."""

    def __init__(self, values: Mapping[int, int] | None = None):
        clean = {}
        for i, v in (values or {}).items():
            if i < 0 or v < 1:
                raise ValueError(f"bad hedge entry {i}: {v}")
            if v > 1:
                clean[int(i)] = int(v)
        self._values = dict(sorted(clean.items()))

    @property
    def values(self) -> Mapping[int, int]:
        return self._values

    def __call__(self, i: int) -> int:
        return self._values.get(i, 1)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Hedge) and self._values == other._values

    def __hash__(self) -> int:
        return hash(tuple(self._values.items()))

    def __repr__(self) -> str:
        return f"Hedge({self._values})"

    def __mul__(self, other: Hedge) -> Hedge:
        return hedge_mul(self, other)

    @property
    def support_end(self) -> int:
        return max(self._values, default=-1) + 1


IDENTITY = Hedge()


def nu(i: int) -> Hedge:
    return Hedge({i: 2})


def hedge_mul(H: Hedge, K: Hedge) -> Hedge:
    """Product via composition of leaf-root surjections.

    Block ``i`` of ``H`` covers ``H(i)`` consecutive indices ``j``; the
    product at ``i`` is the sum of ``K(j)`` over that block.
    """
    out = {}
    extra = 0
    for i in range(max(H.support_end, K.support_end) + 1):
        start = i + extra
        size = H(i)
        out[i] = sum(K(j) for j in range(start, start + size))
        extra += size - 1
    return Hedge(out)


def word_to_hedge(word: Iterable[int]) -> Hedge:
    H = IDENTITY
    for i in word:
        H = hedge_mul(H, nu(i))
    return H


def ascending_nf(word: Iterable[int], fuel: int | None = None) -> tuple[int, ...]:
    return normalize(tuple(word), HEDGE_RULES, fuel=fuel).result


def descending_nf(word: Iterable[int], fuel: int | None = None) -> tuple[int, ...]:
    return normalize(tuple(word), HEDGE_INVERSE_RULES, fuel=fuel).result


def runs(word: Sequence[int]) -> tuple[tuple[int, int], ...]:
    """Run-length form ``((i1, n1), (i2, n2), ...)`` of a word."""
    out: list[list[int]] = []
    for i in word:
        if out and out[-1][0] == i:
            out[-1][1] += 1
        else:
            out.append([i, 1])
    return tuple((i, n) for i, n in out)


def hedge_from_descending(runs_: Sequence[tuple[int, int]]) -> Hedge:
    """Read a hedge straight off its descending run-length form."""
    prev = None
    values = {}
    for i, n in runs_:
        if n < 1 or (prev is not None and i >= prev):
            raise ValueError("not a descending run-length word")
        values[i] = n + 1
        prev = i
    return Hedge(values)


def descending_runs(H: Hedge) -> tuple[tuple[int, int], ...]:
    return tuple((i, v - 1) for i, v in sorted(H.values.items(), reverse=True))


def ascending_word(H: Hedge) -> tuple[int, ...]:
    word = [i for i, n in descending_runs(H) for _ in range(n)]
    return ascending_nf(word)


@dataclass(frozen=True)
class IntervalPartition:
    """Partition of ``N`` into intervals; only blocks ``(a, b)`` with ``b > a`` are listed."""

    blocks: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        prev = -1
        for a, b in self.blocks:
            if not (b > a > prev):
                raise ValueError(f"bad block list {self.blocks}")
            prev = b

    def block_of(self, x: int) -> tuple[int, int]:
        for a, b in self.blocks:
            if a <= x <= b:
                return a, b
        return x, x


def to_partition(H: Hedge) -> IntervalPartition:
    blocks = []
    extra = 0
    for i in range(H.support_end):
        size = H(i)
        if size > 1:
            blocks.append((i + extra, i + extra + size - 1))
        extra += size - 1
    return IntervalPartition(tuple(blocks))


def from_partition(P: IntervalPartition) -> Hedge:
    values = {}
    extra = 0
    for a, b in P.blocks:
        values[a - extra] = b - a + 1
        extra += b - a
    return Hedge(values)


def partition_join(P: IntervalPartition, Q: IntervalPartition) -> IntervalPartition:
    merged: list[list[int]] = []
    for a, b in sorted(P.blocks + Q.blocks):
        if merged and a <= merged[-1][1]:
            merged[-1][1] = max(merged[-1][1], b)
        else:
            merged.append([a, b])
    return IntervalPartition(tuple((a, b) for a, b in merged))


def partition_meet(P: IntervalPartition, Q: IntervalPartition) -> IntervalPartition:
    out = []
    for a, b in P.blocks:
        for c, d in Q.blocks:
            lo, hi = max(a, c), min(b, d)
            if hi > lo:
                out.append((lo, hi))
    return IntervalPartition(tuple(sorted(out)))


def refines(P: IntervalPartition, Q: IntervalPartition) -> bool:
    """Every block of ``P`` lies inside a block of ``Q``."""
    return all(Q.block_of(a) == Q.block_of(b) for a, b in P.blocks)


def hedge_min(H: Hedge, K: Hedge) -> Hedge:
    keys = set(H.values) & set(K.values)
    return Hedge({i: min(H(i), K(i)) for i in keys})


def hedge_max(H: Hedge, K: Hedge) -> Hedge:
    keys = set(H.values) | set(K.values)
    return Hedge({i: max(H(i), K(i)) for i in keys})


def hedge_gclf(H: Hedge, K: Hedge) -> Hedge:
    return hedge_min(H, K)


def hedge_lcrm(H: Hedge, K: Hedge) -> Hedge:
    return hedge_max(H, K)


def hedge_gcrf(H: Hedge, K: Hedge) -> Hedge:
    return from_partition(partition_meet(to_partition(H), to_partition(K)))


def hedge_lclm(H: Hedge, K: Hedge) -> Hedge:
    return from_partition(partition_join(to_partition(H), to_partition(K)))


def divides_left(H: Hedge, K: Hedge) -> bool:
    """``H`` is a left factor of ``K``."""
    return all(v <= K(i) for i, v in H.values.items())


def divides_right(H: Hedge, K: Hedge) -> bool:
    """``H`` is a right factor of ``K``."""
    return refines(to_partition(H), to_partition(K))


def format_hedge(H: Hedge) -> str:
    parts = [f"n{i}" + (f"^{n}" if n > 1 else "") for i, n in descending_runs(H)]
    return " ".join(parts) or "1"


def hedge_to_json(H: Hedge) -> dict:
    return {"values": {str(i): v for i, v in H.values.items()}}


def hedge_from_json(data: Mapping) -> Hedge:
    return Hedge({int(i): int(v) for i, v in data.get("values", {}).items()})
