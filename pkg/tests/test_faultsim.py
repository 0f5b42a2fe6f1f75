import random

import pytest

from ftseq.codes import PauliOperator, StabilizerCode, five_qubit_code, quantum_hamming_code
from ftseq.faultsim import (
    FaultScenario,
    build_lookup_decoder,
    classify_residual,
    observed_syndrome,
    run_campaign,
    sequence_in_stabilizer_group,
)
from ftseq.ftcheck import check_operational
from ftseq.gf2 import BitVector
from ftseq.syndromes import MeasurementSequence, baseline_css_sequence, column_index, syndrome_matrix

from . import oracles
from .golden import FIVE_QUBIT_SEQUENCE, HAMMING15_SEQUENCE

FIVE = MeasurementSequence.from_strings(FIVE_QUBIT_SEQUENCE)
H15 = MeasurementSequence.from_strings(HAMMING15_SEQUENCE, r=4)


def _viol_set(vs):
    return {(column_index(v.scenario.qubit, v.scenario.pauli), v.scenario.time, column_index(*v.confused_with)) for v in vs}


def _coll_set(report):
    return {(c.fault_column, c.fault_time, c.confused_with) for c in report.collisions}


def test_observed_syndrome_five_qubit():
    assert str(observed_syndrome(FIVE, FaultScenario(5, "Y", 3))) == "000100"
    assert str(observed_syndrome(FIVE, FaultScenario(5, "X", 0))) == "000100"
    assert str(observed_syndrome(FIVE, FaultScenario(1, "Z", 6))) == "000000"


def test_observed_matches_letter_oracle():
    rng = random.Random(3)
    for _ in range(50):
        q, p, t = rng.randint(1, 15), rng.choice("XZY"), rng.randint(0, 9)
        want = [0 if i < t else oracles.letters_anticommute(row, oracles.single(15, q, p))
                for i, row in enumerate(HAMMING15_SEQUENCE)]
        assert observed_syndrome(H15, FaultScenario(q, p, t)).to_list() == want


def test_scenario_validation():
    with pytest.raises(ValueError):
        FaultScenario(1, "W", 0)
    with pytest.raises(ValueError):
        FaultScenario(0, "X", 0)
    with pytest.raises(ValueError):
        observed_syndrome(FIVE, FaultScenario(1, "X", 7))


def test_decoder_table():
    dec = build_lookup_decoder(syndrome_matrix(H15))
    assert len(dec) == 45 and not dec.ambiguous
    out = dec.decode(observed_syndrome(H15, FaultScenario(7, "Y", 0)))
    assert out.kind == "corrected" and out.correction == (7, "Y")
    assert dec.decode(BitVector.zeros(9)).kind == "clean"
    with pytest.raises(ValueError):
        dec.decode(BitVector.zeros(8))


def test_decoder_duplicates():
    b = syndrome_matrix(MeasurementSequence.from_strings(["ZZ", "XX"]))
    with pytest.raises(ValueError, match="ambiguous"):
        build_lookup_decoder(b)
    dec = build_lookup_decoder(b, allow_ambiguous=True)
    assert dec.ambiguous
    out = dec.decode(observed_syndrome(MeasurementSequence.from_strings(["ZZ", "XX"]), FaultScenario(2, "X", 0)))
    assert out.candidates == ((1, "X"), (2, "X"))


def test_classify_examples():
    toy = StabilizerCode.from_strings(["XX", "ZZ"])
    assert classify_residual(toy, FaultScenario(1, "X", 0), PauliOperator.single(2, 1, "X")) == "identity"
    assert classify_residual(toy, FaultScenario(1, "X", 0), PauliOperator.single(2, 2, "X")) == "stabilizer"
    steane = quantum_hamming_code(3)
    assert classify_residual(steane, FaultScenario(1, "X", 0), None) == "weight1"
    # X1 X2 = X3 times the logical X1 X2 X3
    assert classify_residual(steane, FaultScenario(1, "X", 0), PauliOperator.single(7, 2, "X")) == "logical_or_worse"
    five = five_qubit_code()
    with pytest.raises(ValueError):
        classify_residual(five, FaultScenario(1, "X", 0), PauliOperator.single(7, 1, "X"))


@pytest.mark.parametrize("name", ["steane", "five"])
def test_classify_against_group_enumeration(name):
    code = quantum_hamming_code(3) if name == "steane" else five_qubit_code()
    gens = [str(g) for g in code.generators]
    group = list(oracles.group_elements(gens).values())
    n = code.n
    rng = random.Random(11)
    for _ in range(60):
        q1, q2 = rng.randint(1, n), rng.randint(1, n)
        p1, p2 = rng.choice("XZY"), rng.choice("XZY")
        residual = oracles.multiply(oracles.single(n, q1, p1), oracles.single(n, q2, p2))
        best = min(sum(c != "I" for c in oracles.multiply(residual, s)) for s in group)
        if set(residual) == {"I"}:
            want = "identity"
        elif best == 0:
            want = "stabilizer"
        elif best == 1:
            want = "weight1"
        else:
            want = "logical_or_worse"
        got = classify_residual(code, FaultScenario(q1, p1, 0), PauliOperator.single(n, q2, p2))
        assert got == want, (residual, got, want)


def test_campaign_hamming15():
    rep = run_campaign(H15, quantum_hamming_code(4), keep_table=True)
    assert rep.scenarios == 450 == len(rep.table)
    assert not rep.weak_violations and not rep.strict_violations
    assert rep.corrected_other == 0
    assert rep.clean + rep.corrected_ok + rep.corrected_other + rep.deferred == 450
    assert sum(rep.residual_histogram.values()) == 450
    assert rep.residual_histogram["logical_or_worse"] == 0
    d = rep.to_dict()
    assert "criterion" in d and d["scenarios"] == 450


def test_campaign_five_qubit_strict_only():
    rep = run_campaign(FIVE, five_qubit_code())
    assert not rep.weak_violations
    assert [(v.scenario.qubit, v.scenario.pauli, v.scenario.time, v.confused_with, v.observed)
            for v in rep.strict_violations] == [(5, "Y", 3, (5, "X"), "000100")]


def test_campaign_baseline_steane():
    code = quantum_hamming_code(3)
    rep = run_campaign(baseline_css_sequence(code), code)
    assert rep.scenarios == 3 * 7 * 11
    assert not rep.weak_violations


def test_campaign_warns_outside_group():
    code = quantum_hamming_code(3)
    seq = MeasurementSequence.from_strings(["ZZZIIII", "IIIZZZZ"])
    assert sequence_in_stabilizer_group(seq, code) == [1]
    with pytest.warns(UserWarning, match="stabilizer group"):
        run_campaign(seq, code)
    with pytest.raises(ValueError):
        run_campaign(FIVE, code)


@pytest.mark.parametrize("which", ["h15", "five", "baseline3", "baseline4"])
def test_campaign_matches_checker_on_fixed_sequences(which):
    if which == "h15":
        seq, code = H15, quantum_hamming_code(4)
    elif which == "five":
        seq, code = FIVE, five_qubit_code()
    else:
        code = quantum_hamming_code(int(which[-1]))
        seq = baseline_css_sequence(code)
    rep = run_campaign(seq, code)
    b = syndrome_matrix(seq)
    assert _viol_set(rep.strict_violations) == _coll_set(check_operational(b, "strict"))
    assert _viol_set(rep.weak_violations) == _coll_set(check_operational(b, "weak"))


@pytest.mark.parametrize("seed", range(120))
def test_campaign_matches_checker_on_random_codes(seed):
    rng = random.Random(20000 + seed)
    n = rng.randint(2, 6)
    gens, strings = oracles.random_code_sequence(rng, n, rng.randint(2, 4), rng.randint(2, 7))
    code = StabilizerCode.from_strings(gens)
    seq = MeasurementSequence.from_strings(strings)
    rep = run_campaign(seq, code)
    b = syndrome_matrix(seq)
    assert _viol_set(rep.strict_violations) == _coll_set(check_operational(b, "strict"))
    assert _viol_set(rep.weak_violations) == _coll_set(check_operational(b, "weak"))
    assert _viol_set(rep.strict_violations) == oracles.simulated_collisions(strings, "strict")
