"""Array-to-array operations: padding, products, substitutions, quotients.

Substitution operators work on occurrence indices: the j-th appearance of
a symbol (left to right) is what gets remapped, so distances never drop
below the source array's and usually grow.  Quotient and product
operators re-verify what they claim instead of trusting the algebra.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from . import core
from .core import FrequencyPermutationArray
from .constructions import FrequencySquare, fpa_from_mofs


def pad(a: FrequencyPermutationArray) -> FrequencyPermutationArray:
    """Append lam copies of a brand-new symbol to every row."""
    tail = [a.m] * a.lam
    rows = [list(row.symbols) + tail for row in a.rows]
    return FrequencyPermutationArray.from_rows(
        rows, a.m + 1, a.lam, a.min_distance_claim
    )


def juxtapose(
    a: FrequencyPermutationArray, b: FrequencyPermutationArray
) -> FrequencyPermutationArray:
    """Concatenate rows pairwise by index, up to the shorter array."""
    if a.m != b.m:
        raise ValueError(f"symbol counts differ: {a.m} vs {b.m}")
    size = min(a.size, b.size)
    rows = [
        list(a.rows[i].symbols) + list(b.rows[i].symbols) for i in range(size)
    ]
    return FrequencyPermutationArray.from_rows(
        rows, a.m, a.lam + b.lam, a.min_distance_claim + b.min_distance_claim
    )


def _occurrence_indices(symbols: Sequence[int], m: int) -> list[int]:
    seen = [0] * m
    out = []
    for s in symbols:
        out.append(seen[s])
        seen[s] += 1
    return out


def expand_to_pa(a: FrequencyPermutationArray) -> FrequencyPermutationArray:
    """Split every symbol into lam singletons, in lam cyclic variants.

    Occurrence j of symbol s becomes s*lam + ((j + shift) mod lam); each
    source row yields lam permutation rows (shift = 0..lam-1), emitted
    source-row-major.  Distance claims carry over unchanged.
    """
    lam = a.lam
    rows = []
    for row in a.rows:
        occ = _occurrence_indices(row.symbols, a.m)
        for shift in range(lam):
            rows.append(
                [
                    s * lam + (j + shift) % lam
                    for s, j in zip(row.symbols, occ)
                ]
            )
    return FrequencyPermutationArray.from_rows(
        rows, a.n, 1, a.min_distance_claim
    )


def refine(a: FrequencyPermutationArray, l: int) -> FrequencyPermutationArray:
    """Split every symbol into lam/l symbols of frequency l.

    The substitution pattern on occurrence indices is the canonical
    max-distance array over lam/l symbols, one output row per pattern row,
    so refine(a, lam) is the identity and refine(a, 1) matches
    expand_to_pa up to row order.
    """
    if l < 1 or a.lam % l:
        raise ValueError(f"new frequency {l} must divide {a.lam}")
    per_symbol = a.lam // l
    patterns = core.canonical_max_distance_fpa(per_symbol, l).row_symbols()
    rows = []
    for row in a.rows:
        occ = _occurrence_indices(row.symbols, a.m)
        for pattern in patterns:
            rows.append(
                [
                    s * per_symbol + pattern[j]
                    for s, j in zip(row.symbols, occ)
                ]
            )
    return FrequencyPermutationArray.from_rows(
        rows, a.m * per_symbol, l, a.min_distance_claim
    )


def reduce_mod(a: FrequencyPermutationArray, r: int) -> FrequencyPermutationArray:
    """Take every symbol mod r, for arrays with a constant pair profile.

    Requires verify(a) to report a pair profile whose m*m counts all equal
    one value t; the result is equidistant at n - t*m^2/r.
    """
    if r < 1 or a.m % r:
        raise ValueError(f"modulus {r} must divide the symbol count {a.m}")
    if r == 1 and a.size > 1:
        raise ValueError("modulus 1 collapses all rows together")
    report = core.verify(a)
    if not report.valid:
        raise ValueError(f"input fails verification: {report.reasons}")
    if report.pair_profile is None:
        raise ValueError("input has no constant pair profile")
    values = set(report.pair_profile.values())
    if len(values) != 1:
        raise ValueError("pair profile is not a single constant")
    t = values.pop()
    claim = a.n - t * a.m * a.m // r
    rows = [[s % r for s in row.symbols] for row in a.rows]
    out = FrequencyPermutationArray.from_rows(rows, r, a.n // r, claim)
    check = core.verify(out)
    if not check.valid:
        raise RuntimeError(f"reduction self-check failed: {check.reasons}")
    return out


def compose_columns(
    fpas: Sequence[FrequencyPermutationArray],
    c: FrequencyPermutationArray,
) -> FrequencyPermutationArray:
    """Substitute ingredient rows for the symbol occurrences of a coarse row.

    c must be an array of b symbols, each at frequency n; its symbol-i
    occurrences receive, in order, the entries of the i-th ingredient's
    row j (relabeled onto disjoint symbol blocks).  One output row per
    (c row, shared row index j) pair; needs c's distance claim >= b*d.
    """
    if not fpas:
        raise ValueError("need at least one ingredient array")
    n, m, lam = fpas[0].n, fpas[0].m, fpas[0].lam
    for f in fpas[1:]:
        if (f.n, f.m, f.lam) != (n, m, lam):
            raise ValueError("ingredient arrays must share (n, m, lam)")
    b = len(fpas)
    d = min(f.min_distance_claim for f in fpas)
    if (c.m, c.lam) != (b, n):
        raise ValueError(
            f"coarse array must use {b} symbols at frequency {n}, has "
            f"m={c.m}, lam={c.lam}"
        )
    if c.min_distance_claim < b * d:
        raise ValueError(
            f"coarse distance {c.min_distance_claim} below required {b * d}"
        )
    depth = min(f.size for f in fpas)
    rows = []
    for crow in c.rows:
        occ = _occurrence_indices(crow.symbols, b)
        for j in range(depth):
            rows.append(
                [
                    fpas[i].rows[j].symbols[t] + i * m
                    for i, t in zip(crow.symbols, occ)
                ]
            )
    return FrequencyPermutationArray.from_rows(rows, b * m, lam, b * d)


def direct_product(
    a: FrequencyPermutationArray, b: FrequencyPermutationArray
) -> FrequencyPermutationArray:
    """All concatenations over disjoint symbol sets, at the weaker distance."""
    if a.lam != b.lam:
        raise ValueError(f"frequencies differ: {a.lam} vs {b.lam}")
    rows = []
    for ra in a.rows:
        left = list(ra.symbols)
        for rb in b.rows:
            rows.append(left + [s + a.m for s in rb.symbols])
    return FrequencyPermutationArray.from_rows(
        rows,
        a.m + b.m,
        a.lam,
        min(a.min_distance_claim, b.min_distance_claim),
    )


# ---------------------------------------------------------------------------
# separable arrays and their products


@dataclass(frozen=True)
class SeparableArray:
    """An array split into classes with a stronger within-class distance.

    delta is the declared within-class minimum, d the declared minimum over
    the whole union.  Both are re-verified, as is row disjointness.
    """

    n: int
    m: int
    lam: int
    classes: tuple[FrequencyPermutationArray, ...]
    delta: int
    d: int

    def __post_init__(self) -> None:
        if not self.classes:
            raise ValueError("need at least one class")
        all_rows: list[Sequence[int]] = []
        for idx, cls in enumerate(self.classes):
            if (cls.n, cls.m, cls.lam) != (self.n, self.m, self.lam):
                raise ValueError(f"class {idx} has mismatched parameters")
            reclaimed = FrequencyPermutationArray.from_rows(
                cls.row_symbols(), self.m, self.lam, self.delta
            )
            report = core.verify(reclaimed)
            if not report.valid:
                raise ValueError(f"class {idx} fails at delta={self.delta}: {report.reasons}")
            all_rows.extend(cls.row_symbols())
        union = FrequencyPermutationArray.from_rows(
            all_rows, self.m, self.lam, self.d
        )
        report = core.verify(union)
        if not report.valid:
            raise ValueError(f"class union fails at d={self.d}: {report.reasons}")

    @property
    def num_classes(self) -> int:
        return len(self.classes)

    @classmethod
    def from_fpa(
        cls, fpa: FrequencyPermutationArray, num_classes: int
    ) -> "SeparableArray":
        """Split rows into consecutive equal classes; distances are measured."""
        if num_classes < 1 or fpa.size % num_classes:
            raise ValueError(
                f"{num_classes} classes do not evenly split {fpa.size} rows"
            )
        chunk = fpa.size // num_classes
        groups = [
            fpa.rows[i * chunk : (i + 1) * chunk] for i in range(num_classes)
        ]
        delta = fpa.n
        for group in groups:
            if len(group) > 1:
                probe = FrequencyPermutationArray(
                    fpa.n, fpa.m, fpa.lam, tuple(group), 0
                )
                delta = min(delta, core.min_distance(probe))
        d = core.min_distance(fpa) if fpa.size > 1 else fpa.n
        classes = tuple(
            FrequencyPermutationArray(fpa.n, fpa.m, fpa.lam, tuple(g), delta)
            for g in groups
        )
        return cls(fpa.n, fpa.m, fpa.lam, classes, delta, d)


def separable_from_mols(squares: Sequence[FrequencySquare]) -> SeparableArray:
    """r latin squares give r classes of n full-distance permutation rows.

    Each class lists, per symbol, the column positions of that symbol (the
    single-square case of fpa_from_mofs); orthogonality keeps rows from
    different squares at distance n-1.
    """
    if not squares:
        raise ValueError("need at least one square")
    n = squares[0].n
    for sq in squares:
        if sq.lam != 1 or sq.n != n:
            raise ValueError("need latin squares of one common order")
    classes = []
    for sq in squares:
        block = fpa_from_mofs([sq])
        classes.append(
            FrequencyPermutationArray.from_rows(block.row_symbols(), n, 1, n)
        )
    return SeparableArray(n, n, 1, tuple(classes), n, n - 1)


def sep_product(inputs: Sequence[SeparableArray]) -> FrequencyPermutationArray:
    """Concatenate one row from each input, staying inside one class index.

    For each class index j (truncated to the smallest class count), take
    all combinations of a class-j row from every input; the union over j
    keeps the within-class distance delta = min over inputs.  Requires the
    across-class distances to add up to at least delta.
    """
    if not inputs:
        raise ValueError("need at least one separable array")
    n, m, lam = inputs[0].n, inputs[0].m, inputs[0].lam
    for s in inputs[1:]:
        if (s.n, s.m, s.lam) != (n, m, lam):
            raise ValueError("inputs must share (n, m, lam)")
    delta = min(s.delta for s in inputs)
    if sum(s.d for s in inputs) < delta:
        raise ValueError(
            f"across-class distances sum to {sum(s.d for s in inputs)} < delta {delta}"
        )
    r = min(s.num_classes for s in inputs)
    rows = []
    for j in range(r):
        pools = [s.classes[j].row_symbols() for s in inputs]
        for combo in itertools.product(*pools):
            rows.append([sym for part in combo for sym in part])
    out = FrequencyPermutationArray.from_rows(
        rows, m, lam * len(inputs), delta
    )
    report = core.verify(out)
    if not report.valid:
        raise RuntimeError(f"product self-check failed: {report.reasons}")
    return out
