"""Syndrome matrices, cyclic transforms and the measurement sequences they induce."""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .codes import PauliOperator, StabilizerCode, css_groups, symplectic_anticommute
from .gf2 import BitMatrix, BitVector, Gf2Polynomial, circulant_from_poly, mat_mul

PAULI_ORDER = ("X", "Z", "Y")


def column_index(qubit: int, pauli: str) -> int:
    """1-based syndrome-matrix column of a weight-one error."""
    return 3 * (qubit - 1) + PAULI_ORDER.index(pauli) + 1


def column_error(j: int) -> tuple[int, str]:
    """Inverse of :func:`column_index`: ``(qubit, pauli)`` for column ``j``."""
    return (j - 1) // 3 + 1, PAULI_ORDER[(j - 1) % 3]


def column_label(j: int) -> str:
    q, p = column_error(j)
    return f"{p}{q}"


@dataclass(frozen=True)
class SyndromeMatrix:
    """An ``L x 3n`` matrix whose column ``3(q-1)+p`` is the syndrome of error p on qubit q."""

    matrix: BitMatrix
    n: int
    _columns: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.matrix.cols != 3 * self.n:
            raise ValueError(f"syndrome matrix needs {3 * self.n} columns, has {self.matrix.cols}")
        cols = tuple(self.matrix.column_ints())
        for q in range(self.n):
            cx, cz, cy = cols[3 * q:3 * q + 3]
            if cy != cx ^ cz:
                raise ValueError(f"qubit {q + 1}: Y column is not X xor Z")
        object.__setattr__(self, "_columns", cols)

    @property
    def rows(self) -> int:
        return self.matrix.rows

    @property
    def num_columns(self) -> int:
        return self.matrix.cols

    def column_ints(self) -> tuple[int, ...]:
        """Columns as ints; bit ``i - 1`` is row ``i``.  Index 0 is column 1."""
        return self._columns

    def column(self, j: int) -> BitVector:
        return BitVector(self.rows, self._columns[j - 1])

    @staticmethod
    def block_of(j: int) -> int:
        return (j - 1) // 3

    def format(self) -> str:
        from .gf2 import format_matrix

        return format_matrix(self.matrix, group=3)


@dataclass(frozen=True)
class MeasurementSequence:
    n: int
    rows: tuple[PauliOperator, ...]
    r: Optional[int] = None

    def __post_init__(self):
        rows = tuple(self.rows)
        object.__setattr__(self, "rows", rows)
        for i, p in enumerate(rows, 1):
            if p.n != self.n:
                raise ValueError(f"row {i} acts on {p.n} qubits, expected {self.n}")

    @classmethod
    def from_strings(cls, strings: Sequence[str], r: Optional[int] = None, check_commute: bool = True) -> MeasurementSequence:
        rows = [PauliOperator.from_string(s) for s in strings]
        if not rows:
            raise ValueError("empty measurement sequence")
        seq = cls(rows[0].n, tuple(rows), r=r)
        if check_commute:
            bad = seq.anticommuting_pairs()
            if bad:
                warnings.warn(f"sequence rows do not all commute, e.g. rows {bad[0]}", stacklevel=2)
        return seq

    def __len__(self) -> int:
        return len(self.rows)

    def anticommuting_pairs(self) -> list[tuple[int, int]]:
        out = []
        for i in range(len(self.rows)):
            for j in range(i + 1, len(self.rows)):
                if symplectic_anticommute(self.rows[i], self.rows[j]):
                    out.append((i + 1, j + 1))
        return out

    def strings(self) -> list[str]:
        return [str(p) for p in self.rows]

    def to_dict(self) -> dict:
        out: dict = {"n": self.n}
        if self.r is not None:
            out["r"] = self.r
        out["length"] = len(self.rows)
        out["paulis"] = self.strings()
        return out

    @classmethod
    def from_dict(cls, data: dict) -> MeasurementSequence:
        seq = cls.from_strings(data["paulis"], r=data.get("r"))
        if "n" in data and data["n"] != seq.n:
            raise ValueError(f"declared n={data['n']} but rows act on {seq.n} qubits")
        if "length" in data and data["length"] != len(seq):
            raise ValueError(f"declared length={data['length']} but {len(seq)} rows given")
        return seq

    def to_text(self) -> str:
        return "\n".join(self.strings()) + "\n"

    @classmethod
    def from_text(cls, text: str, r: Optional[int] = None) -> MeasurementSequence:
        """One Pauli string per line; blank lines and ``#`` comments are skipped."""
        rows = []
        width = None
        for lineno, line in enumerate(text.splitlines(), 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            try:
                p = PauliOperator.from_string(line)
            except ValueError as exc:
                raise ValueError(f"line {lineno}: {exc}") from None
            if width is None:
                width = p.n
            elif p.n != width:
                raise ValueError(f"line {lineno}: row has {p.n} qubits, expected {width}")
            rows.append(p)
        if not rows:
            raise ValueError("no Pauli rows found")
        return cls(width, tuple(rows), r=r)


def _syndrome_row(p: PauliOperator) -> int:
    # X error on q anticommutes iff z_q; Z error iff x_q; Y iff x_q ^ z_q
    bits = 0
    x, z = p.x, p.z
    both = x | z
    q = 0
    while both >> q:
        xb = (x >> q) & 1
        zb = (z >> q) & 1
        if xb or zb:
            bits |= (zb | (xb << 1) | ((xb ^ zb) << 2)) << (3 * q)
        q += 1
    return bits


def syndrome_matrix(seq: MeasurementSequence | Sequence[PauliOperator]) -> SyndromeMatrix:
    rows = seq.rows if isinstance(seq, MeasurementSequence) else tuple(seq)
    if not rows:
        raise ValueError("empty measurement sequence")
    n = rows[0].n
    return SyndromeMatrix(BitMatrix(len(rows), 3 * n, tuple(_syndrome_row(p) for p in rows)), n)


def transform_polynomial(r: int) -> Gf2Polynomial:
    """``1 + x^(r+1) + x^(2r-1)``."""
    return Gf2Polynomial.from_exponents([0, r + 1, 2 * r - 1])


def build_transform_C(r: int) -> BitMatrix:
    """The ``(2r+1) x 2r`` cyclic transform; its last row repeats the first."""
    if r < 3:
        raise ValueError(f"transform needs r >= 3, got {r}")
    if r % 3 != 1:
        warnings.warn(f"r={r} is not 1 mod 3; fault tolerance of the cyclic transform is not guaranteed", stacklevel=2)
    return circulant_from_poly(transform_polynomial(r), 2 * r, extra_rows=1)


def apply_transform(c: BitMatrix, a: SyndromeMatrix) -> SyndromeMatrix:
    if c.cols != a.rows:
        raise ValueError(f"transform has {c.cols} columns but syndrome matrix has {a.rows} rows")
    return SyndromeMatrix(mat_mul(c, a.matrix), a.n)


def sequence_from_transform(c: BitMatrix, code: StabilizerCode) -> MeasurementSequence:
    """Row i is the product of the generators picked out by row i of ``c``."""
    if c.cols != code.num_generators:
        raise ValueError(f"transform has {c.cols} columns but code has {code.num_generators} generators")
    rows = tuple(code.combination(label) for label in c.data)
    return MeasurementSequence(code.n, rows, r=code.r)


def generator_sequence(code: StabilizerCode) -> MeasurementSequence:
    return MeasurementSequence(code.n, code.generators, r=code.r)


def baseline_css_sequence(code: StabilizerCode) -> MeasurementSequence:
    """Measure g1..g_rZ, then g1..g_(rZ-1), and the same pattern for the X-type generators."""
    zs, xs = css_groups(code)
    if not zs or not xs:
        raise ValueError("baseline protocol needs both Z-type and X-type generators")
    if len(zs) == 1 or len(xs) == 1:
        warnings.warn("a generator group of size 1 gets no repeated measurements", stacklevel=2)
    rows = zs + zs[:-1] + xs + xs[:-1]
    return MeasurementSequence(code.n, tuple(rows), r=code.r)


def check_self_dual_symmetry(seq: MeasurementSequence, r: int) -> tuple[bool, list[int]]:
    """Check rows r+1..2r are X/Z-swapped copies of rows 1..r and row 2r+1 repeats row 1.

    Returns ``(ok, mismatches)`` with 1-based indices of offending rows.
    """
    if len(seq) != 2 * r + 1:
        raise ValueError(f"self-dual check needs {2 * r + 1} rows, got {len(seq)}")
    rows = seq.rows
    bad = [r + i + 1 for i in range(r) if rows[r + i] != rows[i].xz_swap()]
    if rows[2 * r] != rows[0]:
        bad.append(2 * r + 1)
    return not bad, bad
