"""Brute-force single-fault injection against a measurement sequence.

Every weight-one Pauli is injected at every time slot (0 = before the first
measurement, ``t`` = after measurement ``t``).  The observed syndrome is
computed row by row from commutation with the sequence, decoded with a
lookup table built from the input-error columns, and the residual is
classified up to stabilizers.

Violations are this module's operational rendering of weak/strict
distinguishability: a strict violation is an internal fault whose observed
syndrome equals a *different* input-error column; it is weak when that
column sits on another qubit.
"""

from __future__ import annotations

import warnings
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional

from .codes import PauliOperator, StabilizerCode, pauli_weight, symplectic_anticommute
from .gf2 import BitVector, solve_in_rowspace
from .syndromes import PAULI_ORDER, MeasurementSequence, SyndromeMatrix, column_error, syndrome_matrix

RESIDUAL_CLASSES = ("identity", "stabilizer", "weight1", "logical_or_worse")
CRITERION_NOTE = (
    "operational criterion: an internal fault violates distinguishability when its delayed "
    "syndrome equals a different input-error column (weak: on another qubit)"
)


@dataclass(frozen=True, order=True)
class FaultScenario:
    qubit: int
    pauli: str
    time: int

    def __post_init__(self):
        if self.pauli not in PAULI_ORDER:
            raise ValueError(f"pauli must be one of X, Z, Y; got {self.pauli!r}")
        if self.qubit < 1 or self.time < 0:
            raise ValueError(f"invalid scenario {self}")

    def operator(self, n: int) -> PauliOperator:
        return PauliOperator.single(n, self.qubit, self.pauli)

    def to_dict(self) -> dict:
        return {"qubit": self.qubit, "pauli": self.pauli, "time": self.time}


def observed_syndrome(seq: MeasurementSequence, s: FaultScenario) -> BitVector:
    if s.qubit > seq.n or s.time > len(seq):
        raise ValueError(f"scenario {s} does not fit a {len(seq)}-row sequence on {seq.n} qubits")
    err = s.operator(seq.n)
    bits = 0
    for i, row in enumerate(seq.rows[s.time:], s.time):
        bits |= symplectic_anticommute(row, err) << i
    return BitVector(len(seq), bits)


@dataclass(frozen=True)
class DecodeOutcome:
    kind: str  # clean, corrected, deferred
    correction: Optional[tuple[int, str]] = None
    candidates: tuple[tuple[int, str], ...] = ()
    residual_class: Optional[str] = None


class LookupDecoder:
    """Syndrome -> weight-one correction table."""

    def __init__(self, table: dict[int, tuple[tuple[int, str], ...]], length: int):
        self.table = table
        self.length = length

    def __len__(self) -> int:
        return len(self.table)

    @property
    def ambiguous(self) -> bool:
        return any(len(v) > 1 for v in self.table.values())

    def decode(self, syndrome: BitVector) -> DecodeOutcome:
        if syndrome.length != self.length:
            raise ValueError(f"syndrome length {syndrome.length}, decoder expects {self.length}")
        if not syndrome.bits:
            return DecodeOutcome("clean")
        cands = self.table.get(syndrome.bits)
        if cands is None:
            return DecodeOutcome("deferred")
        return DecodeOutcome("corrected", cands[0], cands)


def build_lookup_decoder(b: SyndromeMatrix, allow_ambiguous: bool = False) -> LookupDecoder:
    """Map every nonzero input-error column to its error.

    Duplicate columns make lookup decoding ill-defined and are rejected unless
    ``allow_ambiguous``, in which case every candidate is kept in column order.
    """
    table: dict[int, list[tuple[int, str]]] = {}
    for j, col in enumerate(b.column_ints(), 1):
        if not col:
            continue
        table.setdefault(col, []).append(column_error(j))
    if not allow_ambiguous:
        for col, errs in table.items():
            if len(errs) > 1:
                raise ValueError(f"columns for {errs} coincide; lookup decoding is ambiguous")
    return LookupDecoder({k: tuple(v) for k, v in table.items()}, b.rows)


class _StabilizerReducer:
    """Canonical remainders modulo the stabilizer row space."""

    def __init__(self, code: StabilizerCode):
        self.n = code.n
        rows = list(code.symplectic_matrix().data)
        pivots: list[int] = []
        reduced: list[int] = []
        for row in rows:
            for piv, red in zip(pivots, reduced):
                if row & piv:
                    row ^= red
            if row:
                piv = row & -row
                for i in range(len(reduced)):
                    if reduced[i] & piv:
                        reduced[i] ^= row
                pivots.append(piv)
                reduced.append(row)
        self._basis = list(zip(pivots, reduced))
        self._weight1: dict[int, PauliOperator] = {}
        for q in range(1, code.n + 1):
            for p in PAULI_ORDER:
                op = PauliOperator.single(code.n, q, p)
                self._weight1.setdefault(self.reduce(op.symplectic), op)

    def reduce(self, bits: int) -> int:
        for piv, red in self._basis:
            if bits & piv:
                bits ^= red
        return bits

    def weight1_equivalent(self, bits: int) -> Optional[PauliOperator]:
        return self._weight1.get(self.reduce(bits))


@lru_cache(maxsize=32)
def _reducer(code: StabilizerCode) -> _StabilizerReducer:
    return _StabilizerReducer(code)


def classify_residual(code: StabilizerCode, s: FaultScenario, correction: Optional[PauliOperator]) -> str:
    err = s.operator(code.n)
    if correction is not None:
        if correction.n != code.n:
            raise ValueError(f"correction acts on {correction.n} qubits, code has {code.n}")
        residual = err * correction
    else:
        residual = err
    if residual.is_identity():
        return "identity"
    sym = code.symplectic_matrix()
    if solve_in_rowspace(sym, BitVector(2 * code.n, residual.symplectic)) is not None:
        return "stabilizer"
    if pauli_weight(residual) <= 1:
        return "weight1"
    if _reducer(code).weight1_equivalent(residual.symplectic) is not None:
        return "weight1"
    return "logical_or_worse"


@dataclass(frozen=True)
class Violation:
    scenario: FaultScenario
    confused_with: tuple[int, str]
    observed: str

    def to_dict(self) -> dict:
        q, p = self.confused_with
        return {**self.scenario.to_dict(), "confused_with": {"qubit": q, "pauli": p}, "observed": self.observed}


@dataclass
class ScenarioRecord:
    scenario: FaultScenario
    observed: str
    outcome: DecodeOutcome


@dataclass
class CampaignReport:
    scenarios: int
    clean: int
    corrected_ok: int
    corrected_other: int
    deferred: int
    weak_violations: list[Violation]
    strict_violations: list[Violation]
    residual_histogram: dict[str, int]
    ambiguous_decoder: bool = False
    table: list[ScenarioRecord] = field(default_factory=list, repr=False)

    def to_dict(self) -> dict:
        return {
            "scenarios": self.scenarios,
            "clean": self.clean,
            "corrected_ok": self.corrected_ok,
            "corrected_other": self.corrected_other,
            "deferred": self.deferred,
            "weak_violations": [v.to_dict() for v in self.weak_violations],
            "strict_violations": [v.to_dict() for v in self.strict_violations],
            "residual_histogram": self.residual_histogram,
            "ambiguous_decoder": self.ambiguous_decoder,
            "criterion": CRITERION_NOTE,
        }


def sequence_in_stabilizer_group(seq: MeasurementSequence, code: StabilizerCode) -> list[int]:
    """1-based indices of rows that are not stabilizer-group elements."""
    sym = code.symplectic_matrix()
    return [
        i
        for i, row in enumerate(seq.rows, 1)
        if solve_in_rowspace(sym, BitVector(2 * code.n, row.symplectic)) is None
    ]


def run_campaign(seq: MeasurementSequence, code: StabilizerCode, keep_table: bool = False) -> CampaignReport:
    if seq.n != code.n:
        raise ValueError(f"sequence acts on {seq.n} qubits, code on {code.n}")
    outside = sequence_in_stabilizer_group(seq, code)
    if outside:
        warnings.warn(f"sequence rows {outside} are not in the stabilizer group", stacklevel=2)
    L = len(seq)
    n = code.n
    decoder = build_lookup_decoder(syndrome_matrix(seq), allow_ambiguous=True)
    full_cols = {}
    counts = Counter()
    hist = Counter({c: 0 for c in RESIDUAL_CLASSES})
    weak, strict, table = [], [], []
    for q in range(1, n + 1):
        for p in PAULI_ORDER:
            for t in range(L + 1):
                s = FaultScenario(q, p, t)
                obs = observed_syndrome(seq, s)
                if t == 0:
                    full_cols[(q, p)] = obs.bits
                out = decoder.decode(obs)
                corr_op = None
                if out.kind == "corrected":
                    cq, cp = out.correction
                    corr_op = PauliOperator.single(n, cq, cp)
                    if out.correction == (q, p):
                        counts["corrected_ok"] += 1
                    else:
                        counts["corrected_other"] += 1
                    if t >= 1 and obs.bits != full_cols[(q, p)]:
                        for cand in out.candidates:
                            if cand == (q, p):
                                continue
                            v = Violation(s, cand, str(obs))
                            strict.append(v)
                            if cand[0] != q:
                                weak.append(v)
                else:
                    counts[out.kind] += 1
                cls = classify_residual(code, s, corr_op)
                hist[cls] += 1
                if keep_table:
                    table.append(ScenarioRecord(s, str(obs), DecodeOutcome(out.kind, out.correction, out.candidates, cls)))
    return CampaignReport(
        scenarios=3 * n * (L + 1),
        clean=counts["clean"],
        corrected_ok=counts["corrected_ok"],
        corrected_other=counts["corrected_other"],
        deferred=counts["deferred"],
        weak_violations=weak,
        strict_violations=strict,
        residual_histogram=dict(hist),
        ambiguous_decoder=decoder.ambiguous,
        table=table,
    )
