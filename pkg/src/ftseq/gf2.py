"""Dense linear algebra over GF(2) on Python-int bitsets.

Entry ``i`` of a vector (1-based) lives at bit ``i - 1`` of an int; a matrix
is a tuple of such row ints.  All objects are immutable.  Public accessors
take 1-based indices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence


def _mask(width: int) -> int:
    return (1 << width) - 1


@dataclass(frozen=True)
class BitVector:
    length: int
    bits: int = 0

    def __post_init__(self):
        if self.length < 0:
            raise ValueError(f"negative length {self.length}")
        if self.bits < 0 or self.bits >> self.length:
            raise ValueError(f"bits set beyond length {self.length}")

    @classmethod
    def from_list(cls, values: Iterable[int]) -> BitVector:
        values = list(values)
        bits = 0
        for i, v in enumerate(values):
            if v not in (0, 1):
                raise ValueError(f"entry {i + 1} is {v!r}, expected 0 or 1")
            bits |= v << i
        return cls(len(values), bits)

    @classmethod
    def from_string(cls, text: str) -> BitVector:
        return cls.from_list(int(c) for c in text.replace(" ", ""))

    @classmethod
    def unit(cls, length: int, i: int) -> BitVector:
        if not 1 <= i <= length:
            raise IndexError(f"unit index {i} outside 1..{length}")
        return cls(length, 1 << (i - 1))

    @classmethod
    def zeros(cls, length: int) -> BitVector:
        return cls(length, 0)

    def bit(self, i: int) -> int:
        if not 1 <= i <= self.length:
            raise IndexError(f"index {i} outside 1..{self.length}")
        return (self.bits >> (i - 1)) & 1

    def weight(self) -> int:
        return bin(self.bits).count("1")

    def first_nonzero(self) -> Optional[int]:
        """1-based position of the first 1, or None for the zero vector."""
        if not self.bits:
            return None
        return (self.bits & -self.bits).bit_length()

    def dot(self, other: BitVector) -> int:
        _check_len(self, other)
        return bin(self.bits & other.bits).count("1") & 1

    def __xor__(self, other: BitVector) -> BitVector:
        _check_len(self, other)
        return BitVector(self.length, self.bits ^ other.bits)

    def __iter__(self) -> Iterator[int]:
        return ((self.bits >> i) & 1 for i in range(self.length))

    def __len__(self) -> int:
        return self.length

    def to_list(self) -> list[int]:
        return list(self)

    def __str__(self) -> str:
        return "".join(str(b) for b in self)


def _check_len(a: BitVector, b: BitVector) -> None:
    if a.length != b.length:
        raise ValueError(f"length mismatch: {a.length} vs {b.length}")


@dataclass(frozen=True)
class BitMatrix:
    rows: int
    cols: int
    data: tuple[int, ...]

    def __post_init__(self):
        if len(self.data) != self.rows:
            raise ValueError(f"expected {self.rows} rows, got {len(self.data)}")
        limit = 1 << self.cols
        for i, row in enumerate(self.data):
            if row < 0 or row >= limit:
                raise ValueError(f"row {i + 1} has bits beyond column {self.cols}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: Optional[int] = None) -> BitMatrix:
        vecs = [BitVector.from_list(r) for r in rows]
        if cols is None:
            if not vecs:
                raise ValueError("cannot infer column count of an empty matrix")
            cols = vecs[0].length
        for i, v in enumerate(vecs):
            if v.length != cols:
                raise ValueError(f"row {i + 1} has length {v.length}, expected {cols}")
        return cls(len(vecs), cols, tuple(v.bits for v in vecs))

    @classmethod
    def from_vectors(cls, vectors: Sequence[BitVector], cols: Optional[int] = None) -> BitMatrix:
        if cols is None:
            cols = vectors[0].length if vectors else 0
        for i, v in enumerate(vectors):
            if v.length != cols:
                raise ValueError(f"row {i + 1} has length {v.length}, expected {cols}")
        return cls(len(vectors), cols, tuple(v.bits for v in vectors))

    @classmethod
    def identity(cls, size: int) -> BitMatrix:
        return cls(size, size, tuple(1 << i for i in range(size)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> BitMatrix:
        return cls(rows, cols, (0,) * rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def entry(self, i: int, j: int) -> int:
        if not (1 <= i <= self.rows and 1 <= j <= self.cols):
            raise IndexError(f"entry ({i}, {j}) outside {self.rows}x{self.cols}")
        return (self.data[i - 1] >> (j - 1)) & 1

    def row(self, i: int) -> BitVector:
        if not 1 <= i <= self.rows:
            raise IndexError(f"row {i} outside 1..{self.rows}")
        return BitVector(self.cols, self.data[i - 1])

    def column(self, j: int) -> BitVector:
        if not 1 <= j <= self.cols:
            raise IndexError(f"column {j} outside 1..{self.cols}")
        shift = j - 1
        bits = 0
        for i, row in enumerate(self.data):
            bits |= ((row >> shift) & 1) << i
        return BitVector(self.rows, bits)

    def column_ints(self) -> list[int]:
        """All columns as ints (bit ``i - 1`` holds row ``i``)."""
        cols = [0] * self.cols
        for i, row in enumerate(self.data):
            bit = 1 << i
            while row:
                low = row & -row
                cols[low.bit_length() - 1] |= bit
                row ^= low
        return cols

    def transpose(self) -> BitMatrix:
        return BitMatrix(self.cols, self.rows, tuple(self.column_ints()))

    def submatrix(self, row_start: int, row_stop: int, col_start: int, col_stop: int) -> BitMatrix:
        """Rows ``row_start..row_stop`` and columns ``col_start..col_stop``, inclusive, 1-based."""
        if not (1 <= row_start <= row_stop + 1 and row_stop <= self.rows):
            raise IndexError(f"row range {row_start}..{row_stop} outside 1..{self.rows}")
        if not (1 <= col_start <= col_stop + 1 and col_stop <= self.cols):
            raise IndexError(f"column range {col_start}..{col_stop} outside 1..{self.cols}")
        width = col_stop - col_start + 1
        m = _mask(width)
        data = tuple((row >> (col_start - 1)) & m for row in self.data[row_start - 1:row_stop])
        return BitMatrix(len(data), width, data)

    def __add__(self, other: BitMatrix) -> BitMatrix:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch: {self.shape} vs {other.shape}")
        return BitMatrix(self.rows, self.cols, tuple(a ^ b for a, b in zip(self.data, other.data)))

    def __matmul__(self, other: BitMatrix) -> BitMatrix:
        return mat_mul(self, other)

    def vstack(self, other: BitMatrix) -> BitMatrix:
        if self.cols != other.cols:
            raise ValueError(f"column mismatch: {self.cols} vs {other.cols}")
        return BitMatrix(self.rows + other.rows, self.cols, self.data + other.data)

    def to_lists(self) -> list[list[int]]:
        return [BitVector(self.cols, row).to_list() for row in self.data]

    def __str__(self) -> str:
        return format_matrix(self)


def mat_mul(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    if a.cols != b.rows:
        raise ValueError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    out = []
    for row in a.data:
        acc = 0
        k = 0
        while row:
            if row & 1:
                acc ^= b.data[k]
            row >>= 1
            k += 1
        out.append(acc)
    return BitMatrix(a.rows, b.cols, tuple(out))


def mat_vec(m: BitMatrix, v: BitVector) -> BitVector:
    if m.cols != v.length:
        raise ValueError(f"cannot apply {m.rows}x{m.cols} matrix to length-{v.length} vector")
    bits = 0
    for i, row in enumerate(m.data):
        bits |= (bin(row & v.bits).count("1") & 1) << i
    return BitVector(m.rows, bits)


def _echelon(rows: Sequence[int], track: bool = False):
    """Reduced row echelon form with leftmost pivots.

    Returns ``(pivots, reduced, combos)`` where ``pivots[p]`` is the pivot bit
    of ``reduced[p]`` and ``combos[p]`` records which input rows were summed.
    """
    reduced: list[int] = []
    pivots: list[int] = []
    combos: list[int] = []
    for idx, row in enumerate(rows):
        combo = 1 << idx if track else 0
        for p, piv in enumerate(pivots):
            if row & piv:
                row ^= reduced[p]
                combo ^= combos[p]
        if not row:
            continue
        piv = row & -row
        for p in range(len(reduced)):
            if reduced[p] & piv:
                reduced[p] ^= row
                combos[p] ^= combo
        reduced.append(row)
        pivots.append(piv)
        combos.append(combo)
    return pivots, reduced, combos


def mat_rank(m: BitMatrix) -> int:
    return len(_echelon(m.data)[0])


def rank_of_ints(rows: Iterable[int]) -> int:
    return len(_echelon(list(rows))[0])


def solve_in_rowspace(m: BitMatrix, v: BitVector) -> Optional[BitVector]:
    """Find ``c`` with ``c @ m == v``, or return None if ``v`` is not in the row space."""
    if v.length != m.cols:
        raise ValueError(f"vector length {v.length} does not match {m.cols} columns")
    pivots, reduced, combos = _echelon(m.data, track=True)
    target = v.bits
    coeff = 0
    for piv, row, combo in zip(pivots, reduced, combos):
        if target & piv:
            target ^= row
            coeff ^= combo
    if target:
        return None
    return BitVector(m.rows, coeff)


def kernel(m: BitMatrix) -> list[BitVector]:
    """Basis of ``{v : m v = 0}``, one vector per free column, in column order."""
    pivots, reduced, _ = _echelon(m.data)
    pivot_cols = {piv.bit_length() - 1: row for piv, row in zip(pivots, reduced)}
    basis = []
    for free in range(m.cols):
        if free in pivot_cols:
            continue
        bits = 1 << free
        for col, row in pivot_cols.items():
            if (row >> free) & 1:
                bits |= 1 << col
        basis.append(BitVector(m.cols, bits))
    return basis


def span(vectors: Sequence[BitVector]) -> set[int]:
    """All elements of the span, as ints; only for small bases."""
    out = {0}
    for v in vectors:
        out |= {x ^ v.bits for x in out}
    return out


@dataclass(frozen=True)
class Gf2Polynomial:
    """Polynomial over GF(2); bit ``e`` of ``coeffs`` is the coefficient of ``x**e``."""

    coeffs: int

    @classmethod
    def from_exponents(cls, exponents: Iterable[int]) -> Gf2Polynomial:
        bits = 0
        for e in exponents:
            if e < 0:
                raise ValueError(f"negative exponent {e}")
            bits ^= 1 << e
        return cls(bits)

    @property
    def degree(self) -> int:
        return self.coeffs.bit_length() - 1

    def exponents(self) -> list[int]:
        return [e for e in range(self.coeffs.bit_length()) if (self.coeffs >> e) & 1]

    def coefficients(self, length: int) -> BitVector:
        return BitVector(length, self.coeffs)

    def reduce_cyclic(self, size: int) -> Gf2Polynomial:
        """Reduce modulo ``x**size - 1``."""
        bits = 0
        for e in self.exponents():
            bits ^= 1 << (e % size)
        return Gf2Polynomial(bits)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for e in self.exponents():
            terms.append("1" if e == 0 else ("x" if e == 1 else f"x^{e}"))
        return " + ".join(terms)


def circulant_from_poly(g: Gf2Polynomial, size: int, extra_rows: int = 0) -> BitMatrix:
    """Rows are ``x**(i-1) * g(x) mod x**size - 1``; then the first ``extra_rows`` rows repeat."""
    if size < 1:
        raise ValueError(f"size must be >= 1, got {size}")
    if extra_rows < 0:
        raise ValueError(f"extra_rows must be >= 0, got {extra_rows}")
    if extra_rows > size:
        raise ValueError(f"extra_rows {extra_rows} exceeds size {size}")
    if g.degree >= size:
        raise ValueError(f"polynomial of degree {g.degree} is not reduced modulo x^{size} - 1")
    full = _mask(size)
    rows = []
    cur = g.coeffs
    for _ in range(size):
        rows.append(cur)
        cur = ((cur << 1) | (cur >> (size - 1))) & full
    rows.extend(rows[:extra_rows])
    return BitMatrix(len(rows), size, tuple(rows))


def format_matrix(m: BitMatrix, group: Optional[int] = None) -> str:
    lines = []
    for row in m.data:
        s = "".join(str((row >> j) & 1) for j in range(m.cols))
        if group:
            s = " ".join(s[k:k + group] for k in range(0, len(s), group))
        lines.append(s)
    return "\n".join(lines)


def parse_matrix(text: str) -> BitMatrix:
    """Parse one row per line of '0'/'1' characters; spaces are ignored."""
    rows = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line:
            continue
        cleaned = line.replace(" ", "")
        bad = set(cleaned) - {"0", "1"}
        if bad:
            raise ValueError(f"line {lineno}: unexpected characters {sorted(bad)}")
        rows.append([int(c) for c in cleaned])
    if not rows:
        raise ValueError("no matrix rows found")
    width = len(rows[0])
    for i, r in enumerate(rows, 1):
        if len(r) != width:
            raise ValueError(f"row {i} has {len(r)} columns, expected {width}")
    return BitMatrix.from_rows(rows)
