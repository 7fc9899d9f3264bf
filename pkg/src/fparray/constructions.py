"""Direct constructions of frequency permutation arrays.

Ingredient objects (frequency squares, orthogonal arrays, resolvable
designs, Hadamard matrices) validate their own defining properties at
construction time; the fpa_from_* converters then only have to claim the
distance each classical argument guarantees.  Orderings are pinned
everywhere: field elements by their integer encoding, tuples
odometer-style with the first coordinate most significant, grids
row-major.
"""

from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass
from typing import Sequence

from .core import FrequencyPermutationArray, WorkLimitExceeded
from .gf import (
    FieldElement,
    FiniteField,
    LinearizedPolynomial,
    associate_matrix,
    census_permutation_polynomials,
    field_of_order,
    linearized_monomial,
    linearized_subfield_kernel,
    linearized_trace,
    matrix_rank,
)

# ---------------------------------------------------------------------------
# frequency squares


@dataclass(frozen=True)
class FrequencySquare:
    """n x n grid where every row and column holds each symbol lam times."""

    n: int
    m: int
    lam: int
    cells: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.m < 1 or self.lam < 1 or self.n != self.m * self.lam:
            raise ValueError(
                f"parameters inconsistent: n={self.n}, m={self.m}, lam={self.lam}"
            )
        if len(self.cells) != self.n or any(len(r) != self.n for r in self.cells):
            raise ValueError("cells must form an n x n grid")
        target = {s: self.lam for s in range(self.m)}
        for r, row in enumerate(self.cells):
            counts: dict[int, int] = {}
            for v in row:
                counts[v] = counts.get(v, 0) + 1
            if counts != target:
                raise ValueError(f"row {r} is not {self.lam}-uniform")
        for c in range(self.n):
            counts = {}
            for row in self.cells:
                counts[row[c]] = counts.get(row[c], 0) + 1
            if counts != target:
                raise ValueError(f"column {c} is not {self.lam}-uniform")

    @classmethod
    def from_cells(cls, cells: Sequence[Sequence[int]]) -> "FrequencySquare":
        grid = tuple(tuple(int(v) for v in row) for row in cells)
        n = len(grid)
        m = max(max(row) for row in grid) + 1 if n else 0
        if m < 1 or n % m:
            raise ValueError("cell values do not determine a symbol count dividing n")
        return cls(n, m, n // m, grid)


def are_orthogonal(a: FrequencySquare, b: FrequencySquare) -> bool:
    """Superimposing must show every ordered symbol pair lam_a*lam_b times."""
    if a.n != b.n:
        raise ValueError(f"order mismatch: {a.n} vs {b.n}")
    counts: dict[tuple[int, int], int] = {}
    for ra, rb in zip(a.cells, b.cells):
        for va, vb in zip(ra, rb):
            counts[(va, vb)] = counts.get((va, vb), 0) + 1
    want = a.lam * b.lam
    return len(counts) == a.m * b.m and all(c == want for c in counts.values())


def mols_from_field(q: int) -> list[FrequencySquare]:
    """The q-1 pairwise orthogonal latin squares x, y -> a*x + y, a != 0."""
    if q < 3:
        raise ValueError(f"need a prime power q >= 3, got {q}")
    field = field_of_order(q)
    squares = []
    for a in range(1, q):
        cells = []
        for x in range(q):
            ax = field.mul_val(a, x)
            cells.append(tuple(field.add_val(ax, y) for y in range(q)))
        squares.append(FrequencySquare(q, q, 1, tuple(cells)))
    return squares


def mofs_complete(q: int, i: int, max_work: int = 1_000_000) -> list[FrequencySquare]:
    """The complete set of (q^i - 1)^2 / (q - 1) orthogonal frequency squares.

    Linear forms in 2i variables over GF(q) whose first i and last i
    coefficients are both nonzero somewhere, deduplicated by scaling the
    first nonzero coefficient of the *last* block to 1 (this convention
    makes mofs_complete(3, 1) return the classical pair x+y, 2x+y rather
    than their transposes).  Rows are indexed by the first variable block,
    columns by the second, both odometer-ordered.
    """
    if i < 1:
        raise ValueError(f"need i >= 1, got {i}")
    field = field_of_order(q)
    if q ** (2 * i) > max_work:
        raise WorkLimitExceeded(f"{q ** (2 * i)} forms exceed max_work {max_work}")
    n = q**i
    points = list(itertools.product(range(q), repeat=i))
    squares = []
    for coeffs in itertools.product(range(q), repeat=2 * i):
        left, right = coeffs[:i], coeffs[i:]
        if not any(left) or not any(right):
            continue
        lead = next(v for v in right if v)
        if lead != 1:
            continue
        lvals = [
            _dot(field, left, x) for x in points
        ]
        rvals = [_dot(field, right, y) for y in points]
        cells = tuple(
            tuple(field.add_val(lv, rv) for rv in rvals) for lv in lvals
        )
        squares.append(FrequencySquare(n, q, n // q, cells))
    expected = (q**i - 1) ** 2 // (q - 1)
    if len(squares) != expected:
        raise RuntimeError(f"built {len(squares)} squares, expected {expected}")
    return squares


def _dot(field: FiniteField, coeffs: Sequence[int], xs: Sequence[int]) -> int:
    acc = 0
    for c, x in zip(coeffs, xs):
        if c and x:
            acc = field.add_val(acc, field.mul_val(c, x))
    return acc


def fpa_from_mofs(squares: Sequence[FrequencySquare]) -> FrequencyPermutationArray:
    """List, per square and symbol, the columns holding that symbol.

    E mutually orthogonal F(n; lam) squares over m symbols give m*E rows of
    length n*lam over n column-symbols: distance is exactly n*lam within a
    square and at least n*lam - lam^2 across squares.
    """
    if not squares:
        raise ValueError("need at least one square")
    first = squares[0]
    for s in squares[1:]:
        if (s.n, s.m, s.lam) != (first.n, first.m, first.lam):
            raise ValueError("squares must share (n, m, lam)")
    for a, b in itertools.combinations(range(len(squares)), 2):
        if not are_orthogonal(squares[a], squares[b]):
            raise ValueError(f"squares {a} and {b} are not orthogonal")
    n, lam = first.n, first.lam
    rows = []
    for sq in squares:
        for symbol in range(sq.m):
            row = [
                c for r in range(n) for c in range(n) if sq.cells[r][c] == symbol
            ]
            rows.append(row)
    return FrequencyPermutationArray.from_rows(rows, n, lam, n * lam - lam * lam)


# ---------------------------------------------------------------------------
# linearized-polynomial images


def fpa_from_linearized(
    L: LinearizedPolynomial, d: int, max_work: int = 10_000_000
) -> FrequencyPermutationArray:
    """Rows L(f(x)) over all permutation polynomials f of degree <= d.

    Adding a kernel constant to f reproduces the same row, so distinct
    rows number (sum of the census counts) / kernel size; the construction
    deduplicates and checks that count.  Symbols are relabeled to
    0..q^rank - 1 by first appearance, scanning rows left to right.
    """
    field = L.field
    l = L.top_exponent
    q, i = L.q, L.i
    if not 0 < d < q ** (i - l):
        raise ValueError(f"need 0 < d < {q ** (i - l)} for this map, got {d}")
    _, rank, kernel_size = associate_matrix(L)
    census = census_permutation_polynomials(field, d, max_work)
    table = L.value_table()
    raw_rows: list[tuple[int, ...]] = []
    seen: set[tuple[int, ...]] = set()
    order = field.q
    for f in census.witnesses:
        cvals = [c.val for c in f.coeffs]
        row = []
        for x in range(order):
            acc = 0
            for c in reversed(cvals):
                acc = field.add_val(field.mul_val(acc, x), c)
            row.append(table[acc])
        key = tuple(row)
        if key not in seen:
            seen.add(key)
            raw_rows.append(key)
    expected, rem = divmod(census.total, kernel_size)
    if rem or len(raw_rows) != expected:
        raise RuntimeError(
            f"row dedup gave {len(raw_rows)} rows, expected {expected}"
        )
    labels: dict[int, int] = {}
    rows = []
    for raw in raw_rows:
        rows.append([labels.setdefault(v, len(labels)) for v in raw])
    m = q**rank
    if len(labels) != m:
        raise RuntimeError(f"image used {len(labels)} symbols, expected {m}")
    return FrequencyPermutationArray.from_rows(
        rows, m, q ** (i - rank), order - d * q**l
    )


def fpa_from_trace(
    field: FiniteField, q: int, h: int, d: int, max_work: int = 10_000_000
) -> FrequencyPermutationArray:
    """Convenience: the relative-trace instance of fpa_from_linearized."""
    return fpa_from_linearized(linearized_trace(field, q, h), d, max_work)


def fpa_from_subfield_kernel(
    field: FiniteField, q: int, n: int, d: int, max_work: int = 10_000_000
) -> FrequencyPermutationArray:
    """Convenience: the x^(q^n) - x instance of fpa_from_linearized."""
    return fpa_from_linearized(linearized_subfield_kernel(field, q, n), d, max_work)


def fpa_from_monomial(
    field: FiniteField, q: int, d: int, max_work: int = 10_000_000
) -> FrequencyPermutationArray:
    """Convenience: the full-rank x^(q^(i-1)) instance (lam = 1)."""
    return fpa_from_linearized(linearized_monomial(field, q), d, max_work)


# ---------------------------------------------------------------------------
# orthogonal arrays


@dataclass(frozen=True)
class OrthogonalArray:
    """r x v array over s symbols; strength-2 uniformity is validated."""

    v: int
    r: int
    s: int
    t: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.t != 2:
            raise ValueError("only strength 2 is supported")
        if self.v % self.s**2:
            raise ValueError(f"index v/s^t = {self.v}/{self.s ** 2} is not integral")
        if len(self.rows) != self.r or any(len(row) != self.v for row in self.rows):
            raise ValueError("rows must form an r x v grid")
        index = self.v // self.s**2
        for a, b in itertools.combinations(range(self.r), 2):
            counts: dict[tuple[int, int], int] = {}
            for va, vb in zip(self.rows[a], self.rows[b]):
                if not (0 <= va < self.s and 0 <= vb < self.s):
                    raise ValueError("symbol outside 0..s-1")
                counts[(va, vb)] = counts.get((va, vb), 0) + 1
            if len(counts) != self.s**2 or any(c != index for c in counts.values()):
                raise ValueError(f"rows {a}, {b} break strength-2 uniformity")


def oa_from_mols(squares: Sequence[FrequencySquare]) -> OrthogonalArray:
    """OA[n^2, m+2, n, 2]: cell row index, cell column index, one row per square."""
    if not squares:
        raise ValueError("need at least one square")
    n = squares[0].n
    for sq in squares:
        if sq.lam != 1 or sq.n != n:
            raise ValueError("need latin squares of one common order")
    cells = [(r, c) for r in range(n) for c in range(n)]
    rows = [
        tuple(r for r, _ in cells),
        tuple(c for _, c in cells),
    ]
    for sq in squares:
        rows.append(tuple(sq.cells[r][c] for r, c in cells))
    return OrthogonalArray(n * n, len(squares) + 2, n, 2, tuple(rows))


def fpa_from_oa(oa: OrthogonalArray) -> FrequencyPermutationArray:
    """Read the r OA rows as an equidistant array at distance v - v/s."""
    lam = oa.v // oa.s
    return FrequencyPermutationArray.from_rows(oa.rows, oa.s, lam, oa.v - lam)


# ---------------------------------------------------------------------------
# resolvable designs


@dataclass(frozen=True)
class ResolvableDesign:
    """Parallel classes of k-subsets of 0..v-1; pair balance optional.

    `lambda_d` may be None for class systems (nets) that are resolvable and
    carry the affine intersection property without being a 2-design; when a
    value is declared, the every-pair count is validated against it.
    """

    v: int
    k: int
    classes: tuple[tuple[tuple[int, ...], ...], ...]
    lambda_d: int | None = None

    def __post_init__(self) -> None:
        if self.k < 1 or self.v % self.k:
            raise ValueError(f"block size {self.k} must divide {self.v}")
        per_class = self.v // self.k
        for idx, cls in enumerate(self.classes):
            if len(cls) != per_class:
                raise ValueError(f"class {idx} has {len(cls)} blocks, expected {per_class}")
            seen: set[int] = set()
            for block in cls:
                if len(block) != self.k or not all(0 <= x < self.v for x in block):
                    raise ValueError(f"class {idx} has a malformed block")
                seen.update(block)
            if len(seen) != self.v:
                raise ValueError(f"class {idx} does not partition the points")
        if self.lambda_d is not None:
            pair_counts: dict[tuple[int, int], int] = {}
            for cls in self.classes:
                for block in cls:
                    for x, y in itertools.combinations(sorted(block), 2):
                        pair_counts[(x, y)] = pair_counts.get((x, y), 0) + 1
            total_pairs = self.v * (self.v - 1) // 2
            if len(pair_counts) != total_pairs or any(
                c != self.lambda_d for c in pair_counts.values()
            ):
                raise ValueError(f"point pairs are not covered exactly {self.lambda_d} times")

    def is_affine(self) -> bool:
        """k^2/v integral and non-parallel blocks always meet in k^2/v points."""
        if (self.k * self.k) % self.v:
            return False
        mu = self.k * self.k // self.v
        for (i, ci), (j, cj) in itertools.combinations(enumerate(self.classes), 2):
            for ba in ci:
                sa = set(ba)
                for bb in cj:
                    if len(sa.intersection(bb)) != mu:
                        return False
        return True


def affine_classes_from_mols(squares: Sequence[FrequencySquare]) -> ResolvableDesign:
    """Row class, column class, and one class per latin square, on n^2 points."""
    if not squares:
        raise ValueError("need at least one square")
    n = squares[0].n
    for sq in squares:
        if sq.lam != 1 or sq.n != n:
            raise ValueError("need latin squares of one common order")
    classes = [
        tuple(tuple(range(r * n, r * n + n)) for r in range(n)),
        tuple(tuple(range(c, n * n, n)) for c in range(n)),
    ]
    for sq in squares:
        blocks = []
        for symbol in range(n):
            blocks.append(
                tuple(
                    r * n + c
                    for r in range(n)
                    for c in range(n)
                    if sq.cells[r][c] == symbol
                )
            )
        classes.append(tuple(blocks))
    lambda_d = 1 if len(squares) == n - 1 else None
    return ResolvableDesign(n * n, n, tuple(classes), lambda_d)


def fpa_from_ard(design: ResolvableDesign) -> FrequencyPermutationArray:
    """One row per parallel class: point p maps to the index of its block.

    The v - k distance guarantee needs the affine intersection property,
    which is checked here.
    """
    if not design.is_affine():
        raise ValueError("design is not affine; the v - k distance claim needs k^2/v-point intersections")
    rows = []
    for cls in design.classes:
        row = [0] * design.v
        for b_idx, block in enumerate(cls):
            for p in block:
                row[p] = b_idx
        rows.append(row)
    m = design.v // design.k
    return FrequencyPermutationArray.from_rows(
        rows, m, design.k, design.v - design.k
    )


# ---------------------------------------------------------------------------
# MDS codes


def reed_solomon_generator(
    q: int, k: int, n: int
) -> tuple[FiniteField, tuple[tuple[FieldElement, ...], ...]]:
    """Vandermonde generator on the first n evaluation points; n = q+1 adds
    the column (0, ..., 0, 1)."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    if n > q + 1:
        raise ValueError(f"need n <= q+1 = {q + 1}, got {n}")
    field = field_of_order(q)
    cols = []
    for j in range(min(n, q)):
        alpha = j
        col, cur = [], 1
        for _ in range(k):
            col.append(cur)
            cur = field.mul_val(cur, alpha)
        cols.append(col)
    if n == q + 1:
        cols.append([0] * (k - 1) + [1])
    rows = tuple(
        tuple(field.element(cols[j][t]) for j in range(n)) for t in range(k)
    )
    return field, rows


def fpa_from_mds(
    field: FiniteField,
    generator: Sequence[Sequence[FieldElement | int]],
    max_subsets: int = 1_000_000,
) -> FrequencyPermutationArray:
    """One row per generator column: entries col . x over all x, odometer order.

    Column pairs must be linearly independent (always checked); full MDS
    (every k columns independent) is checked exhaustively when the subset
    count is affordable, otherwise only pairwise with a warning.
    """
    rows_in = [
        [e.val if isinstance(e, FieldElement) else int(e) for e in row]
        for row in generator
    ]
    if not rows_in or len({len(r) for r in rows_in}) != 1:
        raise ValueError("generator must be a nonempty rectangular matrix")
    k, n = len(rows_in), len(rows_in[0])
    cols = [[rows_in[t][j] for t in range(k)] for j in range(n)]
    for a, b in itertools.combinations(range(n), 2):
        if matrix_rank(field, [cols[a], cols[b]]) != 2:
            raise ValueError(f"columns {a} and {b} are linearly dependent")
    n_subsets = 1
    for t in range(k):
        n_subsets = n_subsets * (n - t) // (t + 1)
    if n_subsets * k**3 <= max_subsets:
        for subset in itertools.combinations(range(n), k):
            if matrix_rank(field, [cols[j] for j in subset]) != k:
                raise ValueError(f"columns {subset} are dependent; not MDS")
    else:
        warnings.warn("generator too wide for the full MDS check; columns only checked pairwise")
    q = field.q
    rows = []
    for col in cols:
        row = []
        for x in itertools.product(range(q), repeat=k):
            acc = 0
            for c, xv in zip(col, x):
                if c and xv:
                    acc = field.add_val(acc, field.mul_val(c, xv))
            row.append(acc)
        rows.append(row)
    return FrequencyPermutationArray.from_rows(
        rows, q, q ** (k - 1), q ** (k - 1) * (q - 1)
    )


# ---------------------------------------------------------------------------
# Hadamard matrices


@dataclass(frozen=True)
class HadamardMatrix:
    """Rows of +-1 with pairwise orthogonal rows (H H^T = n I)."""

    n: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if len(self.rows) != self.n or any(len(r) != self.n for r in self.rows):
            raise ValueError("matrix must be square")
        for row in self.rows:
            if any(e not in (1, -1) for e in row):
                raise ValueError("entries must be +1 or -1")
        for a, b in itertools.combinations(range(self.n), 2):
            if sum(x * y for x, y in zip(self.rows[a], self.rows[b])):
                raise ValueError(f"rows {a} and {b} are not orthogonal")

    @property
    def is_normalized(self) -> bool:
        return all(e == 1 for e in self.rows[0])


def _is_prime_power(x: int) -> bool:
    if x < 2:
        return False
    p = min(f for f in range(2, x + 1) if x % f == 0)
    while x % p == 0:
        x //= p
    return x == 1


def _hadamard_constructible(n: int, memo: dict[int, bool]) -> bool:
    if n in memo:
        return memo[n]
    if n in (1, 2):
        result = True
    elif n % 4:
        result = False
    else:
        result = (
            (n % 2 == 0 and _hadamard_constructible(n // 2, memo))
            or (n - 1) % 4 == 3
            and _is_prime_power(n - 1)
            or any(
                _hadamard_constructible(a, memo)
                and _hadamard_constructible(n // a, memo)
                for a in range(2, n)
                if n % a == 0 and a <= n // a
            )
        )
    memo[n] = result
    return result


def _paley_rows(q: int) -> list[list[int]]:
    field = field_of_order(q)
    squares = {field.mul_val(v, v) for v in range(1, q)}

    def chi(v: int) -> int:
        return 0 if v == 0 else (1 if v in squares else -1)

    size = q + 1
    rows = [[0] * size for _ in range(size)]
    rows[0][0] = 0
    for j in range(1, size):
        rows[0][j] = 1
        rows[j][0] = -1
    for a in range(q):
        for b in range(q):
            rows[a + 1][b + 1] = chi(field.sub_val(a, b))
    for idx in range(size):
        rows[idx][idx] += 1
    # rows with a leading -1 flip so the matrix comes out normalized
    return [[-e for e in row] if row[0] == -1 else row for row in rows]


def _build_hadamard(n: int, memo: dict[int, bool]) -> list[list[int]]:
    if n == 1:
        return [[1]]
    if n == 2:
        return [[1, 1], [1, -1]]
    if n % 2 == 0 and _hadamard_constructible(n // 2, memo):
        half = _build_hadamard(n // 2, memo)
        top = [row + row for row in half]
        bottom = [row + [-e for e in row] for row in half]
        return top + bottom
    if (n - 1) % 4 == 3 and _is_prime_power(n - 1):
        return _paley_rows(n - 1)
    for a in range(2, n):
        if n % a == 0 and a <= n // a:
            if _hadamard_constructible(a, memo) and _hadamard_constructible(n // a, memo):
                left = _build_hadamard(a, memo)
                right = _build_hadamard(n // a, memo)
                out = []
                for la in left:
                    for rb in right:
                        out.append([x * y for x in la for y in rb])
                return out
    raise ValueError(f"no doubling/quadratic-residue/product route to order {n}")


def hadamard_matrix(n: int) -> HadamardMatrix:
    """Deterministic construction preferring doubling, then the quadratic
    residue route, then Kronecker products of smaller orders."""
    if n < 1 or (n > 2 and n % 4):
        raise ValueError(f"order {n} impossible (must be 1, 2, or a multiple of 4)")
    memo: dict[int, bool] = {}
    if not _hadamard_constructible(n, memo):
        raise ValueError(f"no construction route implemented for order {n}")
    rows = _build_hadamard(n, memo)
    return HadamardMatrix(n, tuple(tuple(r) for r in rows))


def fpa_from_hadamard(H: HadamardMatrix) -> FrequencyPermutationArray:
    """Non-leading rows of H and -H under +1 -> 0, -1 -> 1.

    After column-normalizing against the first row, the remaining rows are
    balanced words; orthogonality puts any two of the 2n-2 rows at distance
    exactly n/2 or n.
    """
    if H.n < 2 or H.n % 2:
        raise ValueError(f"order {H.n} has no balanced rows")
    signs = H.rows[0]
    grid = [[e * s for e, s in zip(row, signs)] for row in H.rows[1:]]
    rows = [[0 if e == 1 else 1 for e in row] for row in grid]
    rows += [[1 - e for e in row] for row in rows[: H.n - 1]]
    return FrequencyPermutationArray.from_rows(rows, 2, H.n // 2, H.n // 2)


# ---------------------------------------------------------------------------
# the 14-row length-8 block listing


def fpa_steiner_848() -> FrequencyPermutationArray:
    """Fourteen words from the cyclic development of two base blocks.

    Seven shifts of 1011000 with 1 appended, then seven shifts of 0100111
    with 0 appended; rows are pairwise at distance >= 4 because any two of
    the underlying 4-sets share at most two points.
    """
    rows = []
    for base, tail in (((1, 0, 1, 1, 0, 0, 0), 1), ((0, 1, 0, 0, 1, 1, 1), 0)):
        for t in range(7):
            rows.append([base[(idx - t) % 7] for idx in range(7)] + [tail])
    return FrequencyPermutationArray.from_rows(rows, 2, 4, 4)
