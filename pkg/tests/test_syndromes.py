import warnings

import pytest

from ftseq.codes import PauliOperator, five_qubit_code, quantum_hamming_code
from ftseq.gf2 import BitMatrix, mat_mul
from ftseq.syndromes import (
    MeasurementSequence,
    SyndromeMatrix,
    apply_transform,
    baseline_css_sequence,
    build_transform_C,
    check_self_dual_symmetry,
    column_error,
    column_index,
    generator_sequence,
    sequence_from_transform,
    syndrome_matrix,
)

from . import oracles
from .golden import (
    FIVE_QUBIT_B,
    FIVE_QUBIT_SEQUENCE,
    HAMMING15_A,
    HAMMING15_B,
    HAMMING15_SEQUENCE,
    STEANE_A,
    bits,
)


def test_column_layout():
    assert column_index(1, "X") == 1
    assert column_index(5, "Y") == 15
    assert [column_error(j) for j in (1, 2, 3, 4)] == [(1, "X"), (1, "Z"), (1, "Y"), (2, "X")]


def test_steane_syndrome_golden():
    a = syndrome_matrix(quantum_hamming_code(3).generators)
    assert a.matrix.to_lists() == bits(STEANE_A)


def test_hamming15_syndrome_golden():
    a = syndrome_matrix(generator_sequence(quantum_hamming_code(4)))
    assert a.matrix.to_lists() == bits(HAMMING15_A)


def test_transformed_matrix_golden():
    code = quantum_hamming_code(4)
    b = apply_transform(build_transform_C(4), syndrome_matrix(code.generators))
    assert b.matrix.to_lists() == bits(HAMMING15_B)


def test_sequence_golden():
    seq = sequence_from_transform(build_transform_C(4), quantum_hamming_code(4))
    assert seq.strings() == HAMMING15_SEQUENCE
    assert seq.strings()[0] == "XIXXIXIZYZYYZYZ"


def test_five_qubit_syndrome_golden():
    b = syndrome_matrix(MeasurementSequence.from_strings(FIVE_QUBIT_SEQUENCE))
    assert b.matrix.to_lists() == bits(FIVE_QUBIT_B)


@pytest.mark.parametrize("r", [3, 4, 5, 7])
def test_transform_commutes_with_sequence(r):
    # syndrome of the derived sequence == C times the generator syndrome matrix
    code = quantum_hamming_code(r)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        c = build_transform_C(r)
    seq = sequence_from_transform(c, code)
    assert syndrome_matrix(seq) == apply_transform(c, syndrome_matrix(code.generators))
    assert not seq.anticommuting_pairs()


def test_syndrome_matrix_matches_oracle():
    strings = FIVE_QUBIT_SEQUENCE + ["YYIZX"]
    assert syndrome_matrix([PauliOperator.from_string(s) for s in strings]).matrix.to_lists() == \
        oracles.syndrome_table(strings)


def test_y_identity_enforced():
    good = syndrome_matrix(five_qubit_code().generators).matrix
    tampered = BitMatrix(good.rows, good.cols, (good.data[0] ^ 0b100,) + good.data[1:])
    with pytest.raises(ValueError, match="Y column"):
        SyndromeMatrix(tampered, 5)


@pytest.mark.parametrize("r", [3, 4, 5])
def test_hamming_syndromes_are_perfect(r):
    # X-error columns restricted to the Z-generator rows hit every nonzero r-bit vector once
    a = syndrome_matrix(quantum_hamming_code(r).generators)
    cols = a.column_ints()
    low = (1 << r) - 1
    x_cols = [cols[3 * q] for q in range((1 << r) - 1)]
    assert all(c >> r == 0 for c in x_cols)
    assert sorted(c & low for c in x_cols) == list(range(1, 1 << r))
    assert len(set(cols)) == len(cols) and 0 not in cols


def test_transform_validation():
    with pytest.raises(ValueError):
        build_transform_C(2)
    with pytest.warns(UserWarning, match="1 mod 3"):
        build_transform_C(5)
    c = build_transform_C(4)
    with pytest.raises(ValueError):
        apply_transform(c, syndrome_matrix(quantum_hamming_code(3).generators))
    with pytest.raises(ValueError):
        sequence_from_transform(c, quantum_hamming_code(3))


@pytest.mark.parametrize("r", [3, 4])
def test_baseline_length(r):
    seq = baseline_css_sequence(quantum_hamming_code(r))
    assert len(seq) == 4 * r - 2
    strings = seq.strings()
    assert strings[r:2 * r - 1] == strings[:r - 1]


def test_baseline_rejects_non_css():
    with pytest.raises(ValueError):
        baseline_css_sequence(five_qubit_code())


@pytest.mark.parametrize("r", [4, 7])
def test_self_dual_symmetry_holds(r):
    seq = sequence_from_transform(build_transform_C(r), quantum_hamming_code(r))
    assert check_self_dual_symmetry(seq, r) == (True, [])


def test_self_dual_symmetry_reports_rows():
    rows = list(sequence_from_transform(build_transform_C(4), quantum_hamming_code(4)).rows)
    rows[4] = rows[0]
    assert check_self_dual_symmetry(MeasurementSequence(15, tuple(rows)), 4) == (False, [5])
    rows = list(rows)
    rows[8] = rows[1]
    ok, bad = check_self_dual_symmetry(MeasurementSequence(15, tuple(rows)), 4)
    assert not ok and bad == [5, 9]
    with pytest.raises(ValueError):
        check_self_dual_symmetry(MeasurementSequence(15, tuple(rows[:8])), 4)


def test_sequence_io_roundtrip():
    seq = MeasurementSequence.from_strings(HAMMING15_SEQUENCE, r=4)
    assert MeasurementSequence.from_dict(seq.to_dict()) == seq
    assert MeasurementSequence.from_text(seq.to_text(), r=4) == seq


def test_sequence_text_errors():
    with pytest.raises(ValueError, match="line 3"):
        MeasurementSequence.from_text("XZ\n# comment\nXZZ\n")
    with pytest.raises(ValueError, match="line 1"):
        MeasurementSequence.from_text("XQ\n")
    with pytest.raises(ValueError):
        MeasurementSequence.from_dict({"paulis": ["XX"], "length": 2})


def test_noncommuting_rows_warn():
    with pytest.warns(UserWarning, match="commute"):
        MeasurementSequence.from_strings(["XI", "ZI"])


def test_mul_of_transform_is_plain_matrix_product():
    c = build_transform_C(4)
    a = syndrome_matrix(quantum_hamming_code(4).generators)
    assert apply_transform(c, a).matrix == mat_mul(c, a.matrix)
