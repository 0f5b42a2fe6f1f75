"""Fault-tolerance criteria for syndrome matrices.

The operational criterion is the ground truth: a data fault after ``t``
measurements produces the column with its first ``t`` bits zeroed (the
delayed syndrome), and a collision is a delayed syndrome that equals some
input-error column.  The literal suffix test and the three structural
conditions for ``(2r+1)``-row matrices are implemented separately so they
can be cross-checked against it.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Optional

from .gf2 import BitMatrix, BitVector, kernel, mat_rank, mat_vec
from .syndromes import SyndromeMatrix, column_label

MODES = ("weak", "strict")


def _check_mode(mode: str) -> None:
    if mode not in MODES:
        raise ValueError(f"mode must be 'weak' or 'strict', got {mode!r}")


def _low_mask(t: int) -> int:
    return (1 << t) - 1


@dataclass(frozen=True)
class Collision:
    fault_column: int
    fault_time: int
    confused_with: int
    observed: BitVector

    def to_dict(self) -> dict:
        return {
            "j": self.fault_column,
            "t": self.fault_time,
            "k": self.confused_with,
            "fault": column_label(self.fault_column),
            "confused_with": column_label(self.confused_with),
            "observed": str(self.observed),
        }


@dataclass
class FtReport:
    mode: str
    distinct_columns: bool
    collisions: list[Collision]
    rank: int
    zero_columns: list[int] = field(default_factory=list)
    duplicate_columns: list[tuple[int, int]] = field(default_factory=list)

    @property
    def verdict(self) -> bool:
        return self.distinct_columns and not self.collisions

    def to_dict(self) -> dict:
        return {
            "mode": self.mode,
            "verdict": self.verdict,
            "rank": self.rank,
            "distinct_columns": self.distinct_columns,
            "zero_columns": self.zero_columns,
            "duplicate_columns": [list(p) for p in self.duplicate_columns],
            "collisions": [c.to_dict() for c in self.collisions],
        }


def delayed_syndrome(b: SyndromeMatrix, j: int, t: int) -> BitVector:
    """Column ``j`` with entries ``1..t`` cleared."""
    if not 0 <= t <= b.rows:
        raise ValueError(f"fault time {t} outside 0..{b.rows}")
    if not 1 <= j <= b.num_columns:
        raise IndexError(f"column {j} outside 1..{b.num_columns}")
    return BitVector(b.rows, b.column_ints()[j - 1] & ~_low_mask(t))


def _distinctness(cols) -> tuple[list[int], list[tuple[int, int]], dict[int, list[int]]]:
    index: dict[int, list[int]] = defaultdict(list)
    zeros = []
    for j, c in enumerate(cols, 1):
        if c == 0:
            zeros.append(j)
        index[c].append(j)
    dups = []
    for c, js in index.items():
        if c and len(js) > 1:
            dups.extend((js[a], js[b]) for a in range(len(js)) for b in range(a + 1, len(js)))
    return zeros, sorted(dups), index


def check_operational(b: SyndromeMatrix, mode: str = "weak") -> FtReport:
    _check_mode(mode)
    cols = b.column_ints()
    L = b.rows
    zeros, dups, index = _distinctness(cols)
    strict = mode == "strict"
    collisions = []
    for j, col in enumerate(cols, 1):
        block = (j - 1) // 3
        for t in range(1, L):
            delayed = col & ~_low_mask(t)
            if not delayed:
                break
            if delayed == col:
                continue
            for k in index.get(delayed, ()):
                if strict or (k - 1) // 3 != block:
                    collisions.append(Collision(j, t, k, BitVector(L, delayed)))
    return FtReport(
        mode=mode,
        distinct_columns=not zeros and not dups,
        collisions=collisions,
        rank=mat_rank(b.matrix),
        zero_columns=zeros,
        duplicate_columns=dups,
    )


@dataclass
class LiteralReport:
    """Suffix matches ``(j, k, start)``: column k equals column j from row ``start`` on."""

    mode: str
    distinct_columns: bool
    matches: list[tuple[int, int, int]]

    @property
    def verdict(self) -> bool:
        return self.distinct_columns and not self.matches

    def to_dict(self) -> dict:
        return {
            "mode": self.mode,
            "verdict": self.verdict,
            "distinct_columns": self.distinct_columns,
            "matches": [{"j": j, "k": k, "from_row": s} for j, k, s in self.matches],
        }


def _suffix_groups(cols, starts):
    """For each start row, map suffix value -> list of columns."""
    groups = {}
    for s in starts:
        keep = ~_low_mask(s - 1)
        g: dict[int, list[int]] = defaultdict(list)
        for k, c in enumerate(cols, 1):
            g[c & keep].append(k)
        groups[s] = g
    return groups


def check_theorem1_literal(b: SyndromeMatrix, mode: str = "weak") -> LiteralReport:
    """Compare each column's suffix (from its first 1) with the same rows of other columns."""
    _check_mode(mode)
    cols = b.column_ints()
    zeros, dups, _ = _distinctness(cols)
    firsts = {j: (c & -c).bit_length() for j, c in enumerate(cols, 1) if c}
    groups = _suffix_groups(cols, set(firsts.values()))
    strict = mode == "strict"
    matches = []
    for j, s in sorted(firsts.items()):
        keep = ~_low_mask(s - 1)
        for k in groups[s][cols[j - 1] & keep]:
            if k == j:
                continue
            if strict or (k - 1) // 3 != (j - 1) // 3:
                matches.append((j, k, s))
    return LiteralReport(mode, not zeros and not dups, matches)


@dataclass
class Theorem2Report:
    r: int
    rank: int
    cond1: bool
    cond2: bool
    cond3: bool
    witnesses: dict = field(default_factory=dict)

    @property
    def verdict(self) -> bool:
        return self.cond1 and self.cond2 and self.cond3

    def to_dict(self) -> dict:
        return {
            "r": self.r,
            "rank": self.rank,
            "cond1": self.cond1,
            "cond2": self.cond2,
            "cond3": self.cond3,
            "witnesses": self.witnesses,
        }


def check_theorem2(b: SyndromeMatrix, r: int) -> Theorem2Report:
    """Rank, forward consistency and backward consistency for a ``(2r+1)``-row matrix."""
    if b.rows != 2 * r + 1:
        raise ValueError(f"expected {2 * r + 1} rows for r={r}, got {b.rows}")
    cols = b.column_ints()
    rank = mat_rank(b.matrix)
    cond1 = rank == 2 * r
    upper = _low_mask(r - 1)  # rows 1..r-1
    lower = ~_low_mask(r - 1)  # rows r..2r+1

    forward_bad = []
    backward_bad = []
    firsts = {j: (c & -c).bit_length() for j, c in enumerate(cols, 1) if c}
    fwd_starts = {s for j, s in firsts.items() if s >= r}
    groups = _suffix_groups(cols, fwd_starts)
    by_lower: dict[int, list[int]] = defaultdict(list)
    for k, c in enumerate(cols, 1):
        by_lower[c & lower].append(k)

    for j, s in sorted(firsts.items()):
        col = cols[j - 1]
        block = (j - 1) // 3
        if s >= r:
            keep = ~_low_mask(s - 1)
            for k in groups[s][col & keep]:
                if (k - 1) // 3 != block:
                    forward_bad.append({"j": j, "k": k, "from_row": s})
        else:
            head = col & upper & ~_low_mask(s - 1)
            for k in by_lower[col & lower]:
                if (k - 1) // 3 == block:
                    continue
                if cols[k - 1] & upper & ~_low_mask(s - 1) == head:
                    backward_bad.append({"j": j, "k": k, "from_row": s})
    witnesses = {}
    if not cond1:
        witnesses["cond1"] = {"rank": rank, "required": 2 * r}
    if forward_bad:
        witnesses["cond2"] = forward_bad
    if backward_bad:
        witnesses["cond3"] = backward_bad
    return Theorem2Report(r, rank, cond1, not forward_bad, not backward_bad, witnesses)


@dataclass
class BlockSplitReport:
    r: int
    k: int
    rank_C: int
    ker_C11: list[BitVector]
    ker_C12: list[BitVector]
    ker_C11_plus_C12: list[BitVector]
    v_l: BitVector
    C21_e_r: BitVector
    C22_e_1: BitVector
    sum_v_l: BitVector
    full_rank: bool
    ker_C11_ok: bool
    ker_C12_ok: bool
    ker_sum_ok: bool
    C21_e_r_ok: bool
    sum_v_l_ok: bool
    rows_repeat_ok: bool
    lower_ranks: dict[str, int]
    lower_full_rank_ok: bool

    @property
    def verdict(self) -> bool:
        return all(
            (
                self.full_rank,
                self.ker_C11_ok,
                self.ker_C12_ok,
                self.ker_sum_ok,
                self.C21_e_r_ok,
                self.sum_v_l_ok,
                self.rows_repeat_ok,
                self.lower_full_rank_ok,
            )
        )

    def to_dict(self) -> dict:
        return {
            "r": self.r,
            "rank_C": self.rank_C,
            "ker_C11": [str(v) for v in self.ker_C11],
            "ker_C12": [str(v) for v in self.ker_C12],
            "ker_C11_plus_C12": [str(v) for v in self.ker_C11_plus_C12],
            "C21_e_r": str(self.C21_e_r),
            "C22_e_1": str(self.C22_e_1),
            "sum_v_l": str(self.sum_v_l),
            "lower_ranks": self.lower_ranks,
            "verdict": self.verdict,
        }


def split_blocks(c: BitMatrix, r: int) -> tuple[BitMatrix, BitMatrix, BitMatrix, BitMatrix]:
    """Upper ``r-1`` / lower ``r+2`` rows times left / right ``r`` columns."""
    if c.shape != (2 * r + 1, 2 * r):
        raise ValueError(f"expected a {2 * r + 1}x{2 * r} matrix, got {c.rows}x{c.cols}")
    return (
        c.submatrix(1, r - 1, 1, r),
        c.submatrix(1, r - 1, r + 1, 2 * r),
        c.submatrix(r, 2 * r + 1, 1, r),
        c.submatrix(r, 2 * r + 1, r + 1, 2 * r),
    )


def _bits(values) -> BitVector:
    return BitVector.from_list(values)


def expected_v_l(r: int) -> BitVector:
    k = (r - 1) // 3
    return _bits([1, 0, 1] * k + [1])


def check_block_split_properties(c: BitMatrix, r: int) -> BlockSplitReport:
    if r % 3 != 1 or r < 4:
        raise ValueError(f"block split properties are stated for r = 3k+1 >= 4, got r={r}")
    c11, c12, c21, c22 = split_blocks(c, r)
    k = (r - 1) // 3
    s1 = c11 + c12
    s2 = c21 + c22
    rank_c = mat_rank(c)
    e_r = BitVector.unit(r, r)
    e_1 = BitVector.unit(r, 1)
    v_l = expected_v_l(r)
    ker11, ker12, kers = kernel(c11), kernel(c12), kernel(s1)

    c21_e_r = mat_vec(c21, e_r)
    want_c21 = _bits([1, 1] + [0] * (r - 3) + [1, 0, 0])
    sum_v_l = mat_vec(s2, v_l)
    want_sum = _bits([1, 0] + [0] * (2 + 3 * (k - 1)) + [1, 0])
    ranks = {"C21": mat_rank(c21), "C22": mat_rank(c22), "C21+C22": mat_rank(s2)}
    return BlockSplitReport(
        r=r,
        k=k,
        rank_C=rank_c,
        ker_C11=ker11,
        ker_C12=ker12,
        ker_C11_plus_C12=kers,
        v_l=v_l,
        C21_e_r=c21_e_r,
        C22_e_1=mat_vec(c22, e_1),
        sum_v_l=sum_v_l,
        full_rank=rank_c == 2 * r,
        ker_C11_ok=ker11 == [e_r],
        ker_C12_ok=ker12 == [e_1],
        ker_sum_ok=kers == [v_l],
        C21_e_r_ok=c21_e_r == want_c21,
        sum_v_l_ok=sum_v_l == want_sum,
        rows_repeat_ok=s2.data[:2] == s2.data[-2:],
        lower_ranks=ranks,
        lower_full_rank_ok=all(v == r for v in ranks.values()),
    )


def theorem2_summary(b: SyndromeMatrix, r: Optional[int]) -> Optional[Theorem2Report]:
    """Rank and consistency report when ``b`` has ``2r+1`` rows, else None."""
    if r is None or b.rows != 2 * r + 1:
        return None
    return check_theorem2(b, r)
