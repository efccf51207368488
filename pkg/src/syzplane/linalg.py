"""Exact linear algebra over the rationals for medium-size dense matrices.

Certified values come from fraction-free (Bareiss) elimination over the
integers after clearing row denominators.  A modular pre-pass reduces the
matrix modulo three deterministic pseudo-random 31-bit primes chosen away
from all entry denominators; for an integer matrix the rank mod p never
exceeds the rational rank, so a modular rank that reaches min(rows, cols)
certifies full rank outright and short-circuits the exact elimination.
Every nullspace basis vector is verified against the original matrix by
exact substitution before it is returned.

Pivoting is deterministic: within the pivot column the nonzero candidate
with the smallest bit length wins, ties broken by lowest row index, so
repeated runs produce bit-identical results.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy

SCREEN_PRIME_COUNT = 3
_SCREEN_SEED = 0x5359_5A50
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


class DimensionMismatchError(ValueError):
    """Raised when vectors of different lengths are mixed."""


@dataclass(frozen=True)
class RationalMatrix:
    """Dense matrix of Fractions, entries stored row-major."""

    rows: int
    cols: int
    entries: Tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                "expected %d entries, got %d" % (self.rows * self.cols, len(self.entries))
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[object]]) -> "RationalMatrix":
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        flat: List[Fraction] = []
        for row in rows:
            if len(row) != ncols:
                raise DimensionMismatchError("ragged rows: %d vs %d" % (len(row), ncols))
            flat.extend(Fraction(v) for v in row)
        return cls(nrows, ncols, tuple(flat))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RationalMatrix":
        return cls(rows, cols, tuple([Fraction(0)] * (rows * cols)))

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        flat = [Fraction(0)] * (n * n)
        for i in range(n):
            flat[i * n + i] = Fraction(1)
        return cls(n, n, tuple(flat))

    def at(self, i: int, j: int) -> Fraction:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Tuple[Fraction, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def row_lists(self) -> List[List[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "RationalMatrix":
        flat = [self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)]
        return RationalMatrix(self.cols, self.rows, tuple(flat))


@dataclass(frozen=True)
class NullspaceBasis:
    """Exact basis of a matrix kernel; dimension == len(vectors)."""

    dimension: int
    vectors: Tuple[Tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        if self.dimension != len(self.vectors):
            raise ValueError("dimension does not match vector count")


# ---------------------------------------------------------------------------
# primes for the modular screen

def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def screen_primes(avoid: int = 1, count: int = SCREEN_PRIME_COUNT, seed: int = _SCREEN_SEED) -> Tuple[int, ...]:
    """Deterministic pseudo-random 31-bit primes, none dividing `avoid`.

    `avoid` is typically the product of all entry denominators so that
    reduction mod p is faithful on the cleared integer matrix.
    """
    rng = random.Random(seed)
    found: List[int] = []
    while len(found) < count:
        candidate = rng.randrange(1 << 30, 1 << 31) | 1
        if candidate in found or not _is_prime(candidate):
            continue
        if avoid % candidate == 0:
            continue
        found.append(candidate)
    return tuple(found)


# ---------------------------------------------------------------------------
# integer clearing

def integer_rows(matrix: RationalMatrix) -> Tuple[List[List[int]], int]:
    """Scale each row by the lcm of its denominators.

    Returns the integer rows and the product of all distinct denominators
    seen (for prime avoidance).  Row scaling changes neither rank nor
    kernel.
    """
    out: List[List[int]] = []
    denom_product = 1
    for i in range(matrix.rows):
        row = matrix.row(i)
        scale = 1
        for v in row:
            d = v.denominator
            if d != 1:
                scale = scale * d // gcd(scale, d)
        if scale != 1:
            denom_product *= scale
        out.append([int(v * scale) for v in row])
    return out, denom_product


# ---------------------------------------------------------------------------
# modular rank (numpy int64; p < 2^31 keeps products inside int64)

def rank_mod(int_rows: Sequence[Sequence[int]], ncols: int, p: int) -> int:
    """Rank of an integer matrix over GF(p).

    For an integer matrix this is always a certified lower bound for the
    rational rank: a nonvanishing minor mod p is nonzero over the integers.
    """
    nrows = len(int_rows)
    if nrows == 0 or ncols == 0:
        return 0
    a = numpy.empty((nrows, ncols), dtype=numpy.int64)
    for i, row in enumerate(int_rows):
        a[i] = [v % p for v in row]
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        col = a[r:, c]
        nz = numpy.nonzero(col)[0]
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            a[[r, pr]] = a[[pr, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        a[r, c:] = (a[r, c:] * inv) % p
        below = a[r + 1:, c:]
        factors = a[r + 1:, c].copy()
        if factors.size:
            below -= numpy.outer(factors, a[r, c:])
            below %= p
        r += 1
    return r


def rref_mod(int_rows: Sequence[Sequence[int]], ncols: int, p: int) -> Tuple[List[int], numpy.ndarray]:
    """Reduced row echelon form over GF(p): (pivot columns, reduced array)."""
    nrows = len(int_rows)
    if nrows == 0 or ncols == 0:
        return [], numpy.zeros((0, ncols), dtype=numpy.int64)
    a = numpy.empty((nrows, ncols), dtype=numpy.int64)
    for i, row in enumerate(int_rows):
        a[i] = [v % p for v in row]
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = numpy.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            a[[r, pr]] = a[[pr, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        a[r, c:] = (a[r, c:] * inv) % p
        others = numpy.nonzero(a[:, c])[0]
        for i in others:
            if i == r:
                continue
            a[i, c:] = (a[i, c:] - a[i, c] * a[r, c:]) % p
        pivots.append(c)
        r += 1
    return pivots, a[:r]


# ---------------------------------------------------------------------------
# fraction-free elimination

def _pick_pivot(active: List[List[int]]) -> int:
    best = -1
    best_bits = -1
    for i, row in enumerate(active):
        v = row[0]
        if v:
            bits = v.bit_length() if v > 0 else (-v).bit_length()
            if best < 0 or bits < best_bits:
                best = i
                best_bits = bits
    return best


def bareiss_echelon(int_rows: Sequence[Sequence[int]], ncols: int) -> Tuple[int, List[Tuple[int, int, List[int]]]]:
    """Fraction-free row echelon form of an integer matrix.

    Returns (rank, pivots) where pivots is a list of (pivot_column,
    previous_pivot, row_suffix); row_suffix covers columns pivot_column
    through ncols - 1.  All divisions are exact by the Bareiss identity;
    intermediate entries are minors of the input matrix.
    """
    active = [list(r) for r in int_rows if any(r)]
    pivots: List[Tuple[int, int, List[int]]] = []
    prev = 1
    c = 0
    while c < ncols and active:
        best = _pick_pivot(active)
        if best < 0:
            for row in active:
                del row[0]
            c += 1
            continue
        pivrow = active.pop(best)
        piv = pivrow[0]
        pivots.append((c, prev, pivrow))
        tail = pivrow[1:]
        updated: List[List[int]] = []
        for row in active:
            v = row[0]
            if v:
                new = [(piv * a - v * b) // prev for a, b in zip(row[1:], tail)]
            else:
                new = [(piv * a) // prev for a in row[1:]]
            if any(new):
                updated.append(new)
        active = updated
        prev = piv
        c += 1
    return len(pivots), pivots


def _kernel_from_echelon(
    pivots: List[Tuple[int, int, List[int]]], ncols: int
) -> List[Tuple[Fraction, ...]]:
    """Kernel basis by back substitution over the echelon rows.

    One vector per free column, entries scaled to coprime integers with
    the first nonzero entry positive; ordered by free column index.
    """
    pivot_cols = [c for c, _, _ in pivots]
    pivot_set = set(pivot_cols)
    vectors: List[Tuple[Fraction, ...]] = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        partial = {free: Fraction(1)}
        for c, _, row in reversed(pivots):
            if c > free:
                continue
            acc = Fraction(0)
            for j, vj in partial.items():
                if j > c:
                    acc += Fraction(row[j - c]) * vj
            if acc:
                partial[c] = -acc / row[0]
        scale = 1
        for v in partial.values():
            d = v.denominator
            scale = scale * d // gcd(scale, d)
        ints = {j: int(v * scale) for j, v in partial.items()}
        g = 0
        for v in ints.values():
            g = gcd(g, v)
        if g > 1:
            ints = {j: v // g for j, v in ints.items()}
        lead_col = min(ints)
        if ints[lead_col] < 0:
            ints = {j: -v for j, v in ints.items()}
        full = [Fraction(0)] * ncols
        for j, v in ints.items():
            full[j] = Fraction(v)
        vectors.append(tuple(full))
    return vectors


def _verify_kernel(int_rows: Sequence[Sequence[int]], vectors: Iterable[Tuple[Fraction, ...]]) -> None:
    for v in vectors:
        iv = [f.numerator if f.denominator == 1 else f for f in v]
        for row in int_rows:
            acc = 0
            for a, b in zip(row, iv):
                if a and b:
                    acc += a * b
            if acc != 0:
                raise RuntimeError("nullspace verification failed: M v != 0")


# ---------------------------------------------------------------------------
# public operations

def rank(matrix: RationalMatrix) -> int:
    """Exact rank.  The modular screen certifies full-rank matrices
    without elimination; otherwise fraction-free elimination decides."""
    if matrix.rows == 0 or matrix.cols == 0:
        return 0
    rows, denom_product = integer_rows(matrix)
    return rank_int_rows(rows, matrix.cols, denom_product)


def rank_int_rows(rows: Sequence[Sequence[int]], ncols: int, denom_product: int = 1) -> int:
    """Exact rank of an integer matrix given as row lists."""
    if not rows or ncols == 0:
        return 0
    bound = min(len(rows), ncols)
    p = screen_primes(denom_product)[0]
    if rank_mod(rows, ncols, p) == bound:
        return bound
    r, _ = bareiss_echelon(rows, ncols)
    return r


def nullspace(matrix: RationalMatrix) -> NullspaceBasis:
    """Exact kernel basis; every vector is checked against the matrix."""
    if matrix.cols == 0:
        return NullspaceBasis(0, ())
    if matrix.rows == 0:
        return NullspaceBasis(
            matrix.cols,
            tuple(
                tuple(Fraction(1) if j == i else Fraction(0) for j in range(matrix.cols))
                for i in range(matrix.cols)
            ),
        )
    rows, denom_product = integer_rows(matrix)
    return nullspace_int_rows(rows, matrix.cols, denom_product)


def nullspace_int_rows(rows: Sequence[Sequence[int]], ncols: int, denom_product: int = 1) -> NullspaceBasis:
    """Exact kernel of an integer matrix given as row lists."""
    p = screen_primes(denom_product)[0]
    if rows and rank_mod(rows, ncols, p) == ncols:
        return NullspaceBasis(0, ())  # full column rank mod p pins an empty kernel
    _, pivots = bareiss_echelon(rows, ncols)
    vectors = _kernel_from_echelon(pivots, ncols)
    _verify_kernel(rows, vectors)
    return NullspaceBasis(len(vectors), tuple(vectors))


def span_rank(vectors: Sequence[Sequence[object]]) -> int:
    """Dimension of the span of exact rational vectors of equal length."""
    if not vectors:
        return 0
    length = len(vectors[0])
    for v in vectors:
        if len(v) != length:
            raise DimensionMismatchError(
                "vector of length %d in a span of length-%d vectors" % (len(v), length)
            )
    return rank(RationalMatrix.from_rows(vectors))


class IntRankTracker:
    """Incremental exact rank over the integers.

    Holds a reduced set of integer rows (content 1, deterministic pivot
    positions).  add() reports whether the vector enlarged the span.
    Cross-multiplication keeps everything integral; each reduced row is
    divided by its content to limit growth.
    """

    def __init__(self, length: int) -> None:
        self.length = length
        self._rows: List[Tuple[int, List[int]]] = []  # (pivot index, row)

    @property
    def rank(self) -> int:
        return len(self._rows)

    @staticmethod
    def _content_reduce(row: List[int]) -> None:
        g = 0
        for v in row:
            if v:
                g = gcd(g, v)
                if g == 1:
                    break
        if g > 1:
            for i, v in enumerate(row):
                row[i] = v // g

    def _to_int_row(self, vector: Sequence[object]) -> List[int]:
        if len(vector) != self.length:
            raise DimensionMismatchError(
                "vector of length %d, tracker expects %d" % (len(vector), self.length)
            )
        fracs = [Fraction(v) for v in vector]
        scale = 1
        for f in fracs:
            d = f.denominator
            scale = scale * d // gcd(scale, d)
        return [int(f * scale) for f in fracs]

    def add(self, vector: Sequence[object]) -> bool:
        row = self._to_int_row(vector)
        for pivot_idx, base in self._rows:
            v = row[pivot_idx]
            if v:
                b = base[pivot_idx]
                row = [b * a - v * c for a, c in zip(row, base)]
                self._content_reduce(row)
        pivot = next((i for i, v in enumerate(row) if v), -1)
        if pivot < 0:
            return False
        if row[pivot] < 0:
            row = [-v for v in row]
        self._content_reduce(row)
        self._rows.append((pivot, row))
        self._rows.sort(key=lambda t: t[0])
        return True

    def contains(self, vector: Sequence[object]) -> bool:
        row = self._to_int_row(vector)
        for pivot_idx, base in self._rows:
            v = row[pivot_idx]
            if v:
                b = base[pivot_idx]
                row = [b * a - v * c for a, c in zip(row, base)]
        return not any(row)
