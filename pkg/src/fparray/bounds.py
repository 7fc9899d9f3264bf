"""Counting formulas, volume bounds, and exact maximum sizes at desk scale.

Everything here is exact integer or rational arithmetic; floating point is
never used.  Sphere volumes come from a partition sum whose inner counts
are multiset derangements, themselves computed from a Laguerre-polynomial
integral with rational coefficients.  `exact_max_size` is the independent
oracle: a deterministic branch-and-bound maximum-clique search over the
whole word space.
"""

from __future__ import annotations

import functools
import math
import sys
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

import numpy as np

from .core import WorkLimitExceeded, all_lambda_permutations, count_all


# ---------------------------------------------------------------------------
# rational polynomials and multiset derangements


@dataclass(frozen=True)
class RationalPolynomial:
    """Exact-coefficient polynomial, low-to-high, trailing zeros trimmed."""

    coeffs: tuple[Fraction, ...]

    @classmethod
    def of(cls, values: Sequence[Fraction | int]) -> "RationalPolynomial":
        vals = [Fraction(v) for v in values]
        while vals and not vals[-1]:
            vals.pop()
        return cls(tuple(vals))

    def __mul__(self, other: "RationalPolynomial") -> "RationalPolynomial":
        if not self.coeffs or not other.coeffs:
            return RationalPolynomial(())
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return RationalPolynomial.of(out)

    def exp_integral(self) -> Fraction:
        """Integral of P(x) e^(-x) over x >= 0: sum of coeff_a * a!."""
        return sum(
            (c * math.factorial(a) for a, c in enumerate(self.coeffs)),
            Fraction(0),
        )


@functools.lru_cache(maxsize=None)
def laguerre(k: int) -> RationalPolynomial:
    """Coefficient j is (-1)^j C(k, j) / j!."""
    if k < 0:
        raise ValueError(f"degree must be >= 0, got {k}")
    return RationalPolynomial.of(
        [Fraction((-1) ** j * math.comb(k, j), math.factorial(j)) for j in range(k + 1)]
    )


@functools.lru_cache(maxsize=None)
def _derangements_formula(counts: tuple[int, ...]) -> int:
    poly = RationalPolynomial.of([1])
    for c in counts:
        poly = poly * laguerre(c)
    value = (-1) ** sum(counts) * poly.exp_integral()
    if value.denominator != 1 or value < 0:
        raise RuntimeError(f"integral gave non-count {value} for {counts}")
    return int(value)


def _derangements_bruteforce(counts: tuple[int, ...], max_work: int) -> int:
    total = math.factorial(sum(counts))
    for c in counts:
        total //= math.factorial(c)
    if total > max_work:
        raise WorkLimitExceeded(f"{total} rearrangements exceed max_work {max_work}")
    original = [t for t, c in enumerate(counts) for _ in range(c)]
    remaining = list(counts)
    n = len(original)

    def rec(i: int) -> int:
        if i == n:
            return 1
        acc = 0
        for t in range(len(remaining)):
            if remaining[t] and t != original[i]:
                remaining[t] -= 1
                acc += rec(i + 1)
                remaining[t] += 1
        return acc

    return rec(0)


def multiset_derangements(
    counts: Sequence[int], method: str = "formula", max_work: int = 1_000_000
) -> int:
    """Rearrangements of a typed multiset with no position keeping its type.

    `counts` gives the copies of each type; the layout being deranged is
    the sorted word (type 0 first).  formula = Laguerre integral;
    bruteforce = direct backtracking, budgeted by the rearrangement count.
    """
    tup = tuple(int(c) for c in counts)
    if not tup or any(c < 1 for c in tup):
        raise ValueError(f"counts must be positive, got {counts}")
    if method == "formula":
        return _derangements_formula(tuple(sorted(tup)))
    if method == "bruteforce":
        return _derangements_bruteforce(tup, max_work)
    raise ValueError(f"unknown method {method!r}")


# ---------------------------------------------------------------------------
# sphere volumes


def _partitions(k: int, max_part: int) -> Iterator[tuple[int, ...]]:
    if k == 0:
        yield ()
        return
    for first in range(min(k, max_part), 0, -1):
        for rest in _partitions(k - first, first):
            yield (first,) + rest


@dataclass(frozen=True)
class PartitionTerm:
    """One descending partition, as used in the volume sum."""

    parts: tuple[int, ...]

    @property
    def t(self) -> int:
        return len(self.parts)

    @property
    def s(self) -> int:
        return len(set(self.parts))

    @property
    def multiplicities(self) -> tuple[int, ...]:
        counter = Counter(self.parts)
        return tuple(counter[v] for v in sorted(counter, reverse=True))

    @property
    def weight(self) -> int:
        return sum(self.parts)


def partition_terms(k: int, max_part: int) -> list[PartitionTerm]:
    """All descending partitions of k with parts capped at max_part."""
    if k < 0 or max_part < 1:
        raise ValueError(f"need k >= 0 and max_part >= 1, got {k}, {max_part}")
    return [PartitionTerm(p) for p in _partitions(k, max_part)]


def sphere_volume(
    n: int,
    lam: int,
    r: int,
    method: str = "formula",
    max_work: int = 1_000_000,
) -> int:
    """Words within Hamming distance r of any fixed word, counted exactly.

    The space is vertex-transitive under position permutations, so the
    centre does not matter.  formula: partition sum over displaced symbol
    types, weighted by multiset derangements.  bruteforce: enumerate the
    whole space against the canonical centre (budgeted).
    """
    if n < 1 or lam < 1 or n % lam:
        raise ValueError(f"need lam >= 1 dividing n, got n={n} lam={lam}")
    if not 0 <= r <= n:
        raise ValueError(f"radius must lie in 0..{n}, got {r}")
    m = n // lam
    if method == "bruteforce":
        if count_all(n, lam) > max_work:
            raise WorkLimitExceeded(
                f"{count_all(n, lam)} words exceed max_work {max_work}"
            )
        centre = tuple(s for s in range(m) for _ in range(lam))
        return sum(
            1
            for w in all_lambda_permutations(m, lam)
            if sum(a != b for a, b in zip(w, centre)) <= r
        )
    if method != "formula":
        raise ValueError(f"unknown method {method!r}")
    total = 1
    for k in range(1, r + 1):
        for term in partition_terms(k, lam):
            if term.t > m:
                continue
            ways = math.factorial(m) // math.factorial(m - term.t)
            for mult in term.multiplicities:
                ways //= math.factorial(mult)
            picks = 1
            for part in term.parts:
                picks *= math.comb(lam, part)
            total += ways * picks * multiset_derangements(term.parts)
    return total


# ---------------------------------------------------------------------------
# closed-form bounds


def gv_lower(n: int, lam: int, d: int) -> int:
    """Greedy covering guarantee: ceil(space / volume at radius d-1)."""
    _check_nd(n, lam, d)
    vol = sphere_volume(n, lam, d - 1)
    return -(-count_all(n, lam) // vol)


def hamming_upper(n: int, lam: int, d: int) -> int:
    """Packing bound: floor(space / volume at radius floor((d-1)/2))."""
    _check_nd(n, lam, d)
    return count_all(n, lam) // sphere_volume(n, lam, (d - 1) // 2)


def plotkin_upper(n: int, lam: int, d: int) -> int | None:
    """floor(d / (d - n + lam)), defined only when d exceeds n - lam."""
    _check_nd(n, lam, d)
    if d <= n - lam:
        return None
    return d // (d - n + lam)


def trivial_upper(n: int, lam: int, d: int) -> int:
    """floor(n! / (lam * (d-1)!))."""
    _check_nd(n, lam, d)
    return math.factorial(n) // math.factorial(d - 1) // lam


def mofs_max(n: int, m: int) -> int:
    """Cap on mutually orthogonal frequency squares: (n-1)^2/(m-1)."""
    if m < 2 or n < 2 or n % m:
        raise ValueError(f"need m >= 2 dividing n >= 2, got n={n} m={m}")
    return (n - 1) ** 2 // (m - 1)


def _check_nd(n: int, lam: int, d: int) -> None:
    if n < 1 or lam < 1 or n % lam:
        raise ValueError(f"need lam >= 1 dividing n, got n={n} lam={lam}")
    if not 1 <= d <= n:
        raise ValueError(f"distance must lie in 1..{n}, got {d}")


# ---------------------------------------------------------------------------
# exact maximum sizes by branch-and-bound clique search


@dataclass(frozen=True)
class ExactResult:
    """Outcome of the clique search; rows witness the reported value."""

    value: int
    proven: bool
    rows: tuple[tuple[int, ...], ...]


def exact_max_size(
    n: int,
    lam: int,
    d: int,
    vertex_budget: int = 2000,
    node_budget: int = 200_000,
) -> ExactResult:
    """Maximum array size, proven by exhausting the word space.

    Vertices are all lambda-permutations (lex order), edges join words at
    distance >= d; the answer is the maximum clique.  Branching order is
    descending degree with lexicographic ties; the bound is a greedy
    colouring, plus a take-all shortcut when the remaining candidates are
    pairwise adjacent.  Exceeding vertex_budget raises; exceeding
    node_budget returns the best clique found with proven=False.
    """
    _check_nd(n, lam, d)
    m = n // lam
    total = count_all(n, lam)
    if total > vertex_budget:
        raise WorkLimitExceeded(
            f"{total} vertices exceed vertex_budget {vertex_budget}"
        )
    words = list(all_lambda_permutations(m, lam))
    v_count = len(words)
    if v_count == 1:
        return ExactResult(1, True, (words[0],))

    mat = np.array(words, dtype=np.int16)
    adj_bool = np.zeros((v_count, v_count), dtype=bool)
    for i in range(v_count - 1):
        hits = (mat[i + 1 :] != mat[i]).sum(axis=1) >= d
        adj_bool[i, i + 1 :] = hits
        adj_bool[i + 1 :, i] = hits
    degrees = adj_bool.sum(axis=1)
    order = sorted(range(v_count), key=lambda v: (-int(degrees[v]), v))
    rank = {v: idx for idx, v in enumerate(order)}
    adj: list[int] = []
    for idx in range(v_count):
        row = adj_bool[order[idx]][order]
        adj.append(int.from_bytes(np.packbits(row, bitorder="little").tobytes(), "little"))

    # greedy incumbent along the branching order
    best: list[int] = []
    for v in range(v_count):
        if all(adj[v] >> u & 1 for u in best):
            best.append(v)
    best_size = len(best)

    full = (1 << v_count) - 1
    state = {"nodes": 0, "aborted": False, "best": best, "best_size": best_size}

    def candidates_complete(p: int) -> bool:
        probe = p
        while probe:
            v = (probe & -probe).bit_length() - 1
            if p & ~adj[v] != 1 << v:
                return False
            probe &= probe - 1
        return True

    def bits(p: int) -> list[int]:
        out = []
        while p:
            v = (p & -p).bit_length() - 1
            out.append(v)
            p &= p - 1
        return out

    def expand(r_stack: list[int], p: int) -> None:
        state["nodes"] += 1
        if state["nodes"] > node_budget:
            state["aborted"] = True
            return
        if not p:
            if len(r_stack) > state["best_size"]:
                state["best_size"] = len(r_stack)
                state["best"] = list(r_stack)
            return
        if len(r_stack) + p.bit_count() <= state["best_size"]:
            return
        if candidates_complete(p):
            clique = r_stack + bits(p)
            if len(clique) > state["best_size"]:
                state["best_size"] = len(clique)
                state["best"] = clique
            return
        # greedy colouring of the candidates, in mask order
        coloured: list[tuple[int, int]] = []
        rest = p
        colour = 0
        while rest:
            colour += 1
            avail = rest
            while avail:
                v = (avail & -avail).bit_length() - 1
                coloured.append((v, colour))
                avail &= ~adj[v]
                avail &= ~(1 << v)
                rest &= ~(1 << v)
        for v, colour in reversed(coloured):
            if state["aborted"]:
                return
            if len(r_stack) + colour <= state["best_size"]:
                return
            r_stack.append(v)
            expand(r_stack, p & adj[v])
            r_stack.pop()
            p &= ~(1 << v)

    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, v_count + 100))
    try:
        expand([], full)
    finally:
        sys.setrecursionlimit(limit)

    rows = tuple(sorted(words[order[v]] for v in state["best"]))
    return ExactResult(state["best_size"], not state["aborted"], rows)


# ---------------------------------------------------------------------------
# aggregate report


@dataclass(frozen=True)
class BoundsReport:
    """All bounds for one (n, lam, d), with optional exact search results."""

    n: int
    m: int
    lam: int
    d: int
    total: int
    gv_lower: int
    hamming_upper: int
    plotkin_upper: int | None
    trivial_upper: int
    exact_value: int | None = None
    exact_proven: bool | None = None
    pa_chain_upper: int | None = None

    def best_upper(self) -> int:
        options = [self.hamming_upper, self.trivial_upper]
        if self.plotkin_upper is not None:
            options.append(self.plotkin_upper)
        if self.pa_chain_upper is not None:
            options.append(self.pa_chain_upper)
        return min(options)


def bounds_report(
    n: int,
    lam: int,
    d: int,
    with_exact: bool = False,
    vertex_budget: int = 2000,
    node_budget: int = 200_000,
) -> BoundsReport:
    """Assemble every bound; exact search only on request and in budget.

    The chain bound via single-frequency arrays (value M_1/lam rounded
    down) is reported only when that search also completes proven.
    """
    _check_nd(n, lam, d)
    exact_value = exact_proven = pa_chain = None
    if d <= 2:
        # Two distinct words over the same symbol multiset always differ in
        # at least two positions, so the whole space is an optimal array.
        exact_value, exact_proven = count_all(n, lam), True
    elif with_exact:
        try:
            result = exact_max_size(n, lam, d, vertex_budget, node_budget)
            exact_value, exact_proven = result.value, result.proven
        except WorkLimitExceeded:
            pass
        if lam > 1:
            try:
                single = exact_max_size(n, 1, d, vertex_budget, node_budget)
                if single.proven:
                    pa_chain = single.value // lam
            except WorkLimitExceeded:
                pass
    return BoundsReport(
        n=n,
        m=n // lam,
        lam=lam,
        d=d,
        total=count_all(n, lam),
        gv_lower=gv_lower(n, lam, d),
        hamming_upper=hamming_upper(n, lam, d),
        plotkin_upper=plotkin_upper(n, lam, d),
        trivial_upper=trivial_upper(n, lam, d),
        exact_value=exact_value,
        exact_proven=exact_proven,
        pa_chain_upper=pa_chain,
    )
