"""Uniform-frequency words and the distance-verified arrays built from them.

A lambda-permutation over m symbols is a word of length n = m * lambda in
which every symbol 0..m-1 occurs exactly lambda times.  An array of such
words whose rows are pairwise at Hamming distance >= d is the package's
central object.  Constructions elsewhere in the package only ever *claim*
parameters; `verify` re-derives all of them from the raw rows.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Sequence, Union

import numpy as np

RowLike = Union["MultiPermutation", Sequence[int]]


class WorkLimitExceeded(RuntimeError):
    """An exhaustive computation would exceed its declared work budget."""


def _symbols_of(row: RowLike) -> tuple[int, ...]:
    if isinstance(row, MultiPermutation):
        return row.symbols
    return tuple(row)


def is_lambda_permutation(symbols: Sequence[int], m: int, lam: int) -> bool:
    """True iff `symbols` uses each of 0..m-1 exactly lam times."""
    if m < 1 or lam < 1 or len(symbols) != m * lam:
        return False
    counts = [0] * m
    for s in symbols:
        if not 0 <= s < m:
            return False
        counts[s] += 1
    return all(c == lam for c in counts)


def hamming_distance(a: RowLike, b: RowLike) -> int:
    """Number of positions where the two words differ."""
    xs, ys = _symbols_of(a), _symbols_of(b)
    if len(xs) != len(ys):
        raise ValueError(f"length mismatch: {len(xs)} vs {len(ys)}")
    return sum(x != y for x, y in zip(xs, ys))


@dataclass(frozen=True)
class MultiPermutation:
    """One word, together with the (m, lam) parameters it is meant to satisfy.

    Construction is permissive so that broken rows can still be held and
    reported on; `is_valid` performs the composition check.
    """

    symbols: tuple[int, ...]
    m: int
    lam: int

    @property
    def n(self) -> int:
        return len(self.symbols)

    def is_valid(self) -> bool:
        return is_lambda_permutation(self.symbols, self.m, self.lam)

    def distance(self, other: RowLike) -> int:
        return hamming_distance(self, other)


@dataclass(frozen=True)
class FrequencyPermutationArray:
    """Rows of lambda-permutations with a claimed pairwise minimum distance."""

    n: int
    m: int
    lam: int
    rows: tuple[MultiPermutation, ...]
    min_distance_claim: int

    @classmethod
    def from_rows(
        cls,
        rows: Sequence[Sequence[int]],
        m: int,
        lam: int,
        min_distance_claim: int,
    ) -> "FrequencyPermutationArray":
        wrapped = tuple(
            MultiPermutation(tuple(int(s) for s in row), m, lam) for row in rows
        )
        return cls(m * lam, m, lam, wrapped, min_distance_claim)

    @property
    def size(self) -> int:
        return len(self.rows)

    def row_symbols(self) -> tuple[tuple[int, ...], ...]:
        return tuple(row.symbols for row in self.rows)

    def summary(self) -> str:
        return (
            f"FPA(n={self.n}, m={self.m}, lambda={self.lam}, "
            f"d={self.min_distance_claim}, size={self.size})"
        )


@dataclass(frozen=True)
class VerificationReport:
    """Everything `verify` re-derived from the raw rows."""

    valid: bool
    actual_min_distance: int
    size: int
    equidistant: bool
    pair_profile: dict[tuple[int, int], int] | None
    reasons: tuple[str, ...]


def count_all(n: int, lam: int) -> int:
    """Number of lambda-permutations of length n, exactly."""
    if n < 1 or lam < 1 or n % lam:
        raise ValueError(f"need lam >= 1 dividing n >= 1, got n={n} lam={lam}")
    m = n // lam
    return math.factorial(n) // math.factorial(lam) ** m


def all_lambda_permutations(m: int, lam: int) -> Iterator[tuple[int, ...]]:
    """All lambda-permutations over m symbols in lexicographic order."""
    if m < 1 or lam < 1:
        raise ValueError(f"need m >= 1 and lam >= 1, got m={m} lam={lam}")
    n = m * lam
    counts = [lam] * m
    word = [0] * n

    def rec(pos: int) -> Iterator[tuple[int, ...]]:
        if pos == n:
            yield tuple(word)
            return
        for s in range(m):
            if counts[s]:
                counts[s] -= 1
                word[pos] = s
                yield from rec(pos + 1)
                counts[s] += 1

    yield from rec(0)


def canonical_max_distance_fpa(m: int, lam: int) -> FrequencyPermutationArray:
    """m rows at full distance n: row k is the blocks k, k+1, ... mod m."""
    if m < 1 or lam < 1:
        raise ValueError(f"need m >= 1 and lam >= 1, got m={m} lam={lam}")
    n = m * lam
    rows = [
        [((k + j) % m) for j in range(m) for _ in range(lam)] for k in range(m)
    ]
    return FrequencyPermutationArray.from_rows(rows, m, lam, n)


def _distance_scan(
    mat: np.ndarray, max_pairs: int
) -> tuple[int, int]:
    """(min, max) Hamming distance over all row pairs, streaming in blocks."""
    size, n = mat.shape
    block = max(1, max_pairs // max(1, n))
    lo, hi = n, 0
    for i in range(size - 1):
        j = i + 1
        while j < size:
            stop = min(size, j + block)
            diffs = (mat[j:stop] != mat[i]).sum(axis=1)
            lo = min(lo, int(diffs.min()))
            hi = max(hi, int(diffs.max()))
            j = stop
    return lo, hi


def min_distance(array: FrequencyPermutationArray) -> int:
    """Smallest pairwise Hamming distance; needs at least two rows."""
    if array.size < 2:
        raise ValueError("min_distance needs at least two rows")
    mat = np.array(array.row_symbols(), dtype=np.int64)
    lo, _ = _distance_scan(mat, 10_000_000)
    return lo


def _pair_profile(
    mat: np.ndarray, m: int, limit: int
) -> dict[tuple[int, int], int] | None:
    """Ordered symbol-pair counts, if identical across every row pair.

    For rows x, y the profile counts positions where x holds symbol a and y
    holds symbol b.  Returned only when the same m*m table arises for every
    ordered pair of distinct rows (so it must also equal its own transpose),
    and the m*m*pairs work stays within `limit`.
    """
    size, n = mat.shape
    npairs = size * (size - 1) // 2
    if npairs < 1 or m * m * npairs > limit:
        return None
    ref = None
    for i in range(size - 1):
        rest = mat[i + 1 :]
        codes = mat[i] * m + rest  # (size-i-1, n) pair codes
        counts = np.zeros((rest.shape[0], m * m), dtype=np.int64)
        rows_idx = np.repeat(np.arange(rest.shape[0]), n)
        np.add.at(counts, (rows_idx, codes.ravel()), 1)
        if ref is None:
            ref = counts[0].copy()
        if not (counts == ref).all():
            return None
    table = ref.reshape(m, m)
    if not (table == table.T).all():
        return None
    return {(a, b): int(table[a, b]) for a in range(m) for b in range(m)}


def verify(
    array: FrequencyPermutationArray,
    *,
    max_pairs: int = 10_000_000,
    profile_limit: int = 10_000_000,
) -> VerificationReport:
    """Re-derive composition, distinctness, and distances from the raw rows.

    Never raises on bad input; problems come back as `reasons` with
    valid=False.  For arrays with fewer than two rows the distance claim is
    vacuous: actual_min_distance reports n and equidistant is True.
    """
    reasons: list[str] = []
    if array.m < 1 or array.lam < 1 or array.n != array.m * array.lam:
        reasons.append(
            f"parameters inconsistent: n={array.n}, m={array.m}, lam={array.lam}"
        )
    rows = array.row_symbols()
    shapes_ok = True
    for idx, row in enumerate(array.rows):
        if (row.m, row.lam) != (array.m, array.lam):
            reasons.append(f"row {idx} declares ({row.m}, {row.lam})")
        if len(row.symbols) != array.n:
            reasons.append(f"row {idx} has length {len(row.symbols)}")
            shapes_ok = False
        elif not row.is_valid():
            reasons.append(
                f"row {idx} is not a {array.lam}-uniform word over {array.m} symbols"
            )
    if len(set(rows)) != len(rows):
        reasons.append("rows are not pairwise distinct")

    actual = array.n
    equidistant = True
    profile: dict[tuple[int, int], int] | None = None
    if array.size >= 2 and shapes_ok:
        mat = np.array(rows, dtype=np.int64)
        lo, hi = _distance_scan(mat, max_pairs)
        actual, equidistant = lo, lo == hi
        if not reasons:
            profile = _pair_profile(mat, array.m, profile_limit)

    if actual < array.min_distance_claim:
        reasons.append(
            f"minimum distance {actual} below claim {array.min_distance_claim}"
        )
    return VerificationReport(
        valid=not reasons,
        actual_min_distance=actual,
        size=array.size,
        equidistant=equidistant,
        pair_profile=profile,
        reasons=tuple(reasons),
    )
