"""Command-line entry point.

Exit codes: 0 pass, 1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
import warnings
from pathlib import Path

from .codes import StabilizerCode, five_qubit_code, hamming_parity_check, quantum_hamming_code
from .faultsim import run_campaign
from .ftcheck import check_operational, check_theorem1_literal, theorem2_summary
from .gf2 import format_matrix
from .search import (
    InfeasibleLength,
    SearchConfig,
    load_checkpoint,
    save_checkpoint,
    search_min_sequence,
)
from .syndromes import (
    MeasurementSequence,
    apply_transform,
    baseline_css_sequence,
    build_transform_C,
    check_self_dual_symmetry,
    generator_sequence,
    sequence_from_transform,
    syndrome_matrix,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def load_code(spec: str) -> StabilizerCode:
    """``hamming:r=4``, ``steane``, ``five_qubit`` or a path to a code JSON file."""
    m = re.fullmatch(r"hamming:r=(\d+)", spec)
    if m:
        return quantum_hamming_code(int(m.group(1)))
    if spec == "steane":
        return quantum_hamming_code(3)
    if spec in ("five_qubit", "five-qubit"):
        return five_qubit_code()
    path = Path(spec)
    if not path.exists():
        raise UsageError(f"unknown code spec {spec!r} (expected hamming:r=N, steane, five_qubit or a JSON file)")
    try:
        data = json.loads(path.read_text())
        return StabilizerCode.from_dict(data)
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"{spec}: {exc}") from None


def load_sequence(path: str, r=None) -> MeasurementSequence:
    p = Path(path)
    if not p.exists():
        raise UsageError(f"no such file: {path}")
    text = p.read_text()
    try:
        if text.lstrip().startswith("{"):
            return MeasurementSequence.from_dict(json.loads(text))
        return MeasurementSequence.from_text(text, r=r)
    except (ValueError, KeyError) as exc:
        raise UsageError(f"{path}: {exc}") from None


def _write_json(path: Path, data: dict) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(data, indent=2) + "\n")


def _matrix_lines(m, group=None) -> list[str]:
    return format_matrix(m, group).splitlines()


def cmd_generate(args) -> int:
    r = args.r
    if r is None:
        raise UsageError("generate needs --r")
    if r < 3:
        raise UsageError(f"r must be >= 3, got {r}")
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        c = build_transform_C(r)
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    code = quantum_hamming_code(r)
    a = syndrome_matrix(generator_sequence(code))
    b = apply_transform(c, a)
    seq = sequence_from_transform(c, code)
    t2 = theorem2_summary(b, r)
    op = check_operational(b, "strict")
    sym_ok, sym_bad = check_self_dual_symmetry(seq, r)

    out = Path(args.out or f"generated_r{r}")
    out.mkdir(parents=True, exist_ok=True)
    (out / "C.txt").write_text(format_matrix(c) + "\n")
    (out / "A.txt").write_text(a.format() + "\n")
    (out / "B.txt").write_text(b.format() + "\n")
    (out / "sequence.txt").write_text(seq.to_text())
    _write_json(out / "sequence.json", seq.to_dict())
    ok = t2.verdict and op.verdict and sym_ok
    report = {
        "r": r,
        "n": code.n,
        "length": len(seq),
        "verdict": ok,
        "theorem2": t2.to_dict(),
        "operational_strict": op.to_dict(),
        "self_dual": {"ok": sym_ok, "mismatches": sym_bad},
        "warnings": [str(w.message) for w in caught],
    }
    _write_json(out / "report.json", report)
    print(f"r={r}: [[{code.n}, {code.n - 2 * r}, 3]] sequence of length {len(seq)} written to {out}/")
    print(f"  rank/forward/backward conditions: {t2.cond1}/{t2.cond2}/{t2.cond3}")
    print(f"  strict collisions: {len(op.collisions)}  self-dual symmetry: {sym_ok}")
    print(f"  verdict: {'PASS' if ok else 'FAIL'}")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_verify(args) -> int:
    code = load_code(args.code) if args.code else None
    r = code.r if code is not None else None
    seq = load_sequence(args.sequence, r=r)
    if code is not None and code.n != seq.n:
        raise UsageError(f"sequence acts on {seq.n} qubits but code has {code.n}")
    b = syndrome_matrix(seq)
    op = check_operational(b, args.mode)
    lit = check_theorem1_literal(b, args.mode)
    report = op.to_dict()
    report["literal"] = lit.to_dict()
    t2 = theorem2_summary(b, r if r is not None else seq.r)
    report["theorem2"] = t2.to_dict() if t2 else None
    _write_json(Path(args.out), report)
    print(f"{len(seq)} rows on {seq.n} qubits, mode={args.mode}, rank={op.rank}")
    if not op.distinct_columns:
        print(f"  zero columns: {op.zero_columns}  duplicate pairs: {len(op.duplicate_columns)}")
    for col in op.collisions[:20]:
        d = col.to_dict()
        print(f"  collision: {d['fault']} after t={d['t']} looks like input {d['confused_with']} (syndrome {d['observed']})")
    if len(op.collisions) > 20:
        print(f"  ... {len(op.collisions) - 20} more")
    print(f"  verdict: {'PASS' if op.verdict else 'FAIL'}")
    return EXIT_OK if op.verdict else EXIT_FAIL


def cmd_simulate(args) -> int:
    code = load_code(args.code)
    seq = load_sequence(args.sequence, r=code.r)
    if code.n != seq.n:
        raise UsageError(f"sequence acts on {seq.n} qubits but code has {code.n}")
    rep = run_campaign(seq, code)
    _write_json(Path(args.out), rep.to_dict())
    print(f"{rep.scenarios} scenarios: clean={rep.clean} corrected_ok={rep.corrected_ok} "
          f"corrected_other={rep.corrected_other} deferred={rep.deferred}")
    print(f"  weak violations: {len(rep.weak_violations)}  strict violations: {len(rep.strict_violations)}")
    print(f"  residuals: {rep.residual_histogram}")
    return EXIT_OK if not rep.weak_violations else EXIT_FAIL


def cmd_search(args) -> int:
    code = load_code(args.code)
    data = {}
    if args.config:
        try:
            data = json.loads(Path(args.config).read_text())
        except (OSError, ValueError) as exc:
            raise UsageError(f"{args.config}: {exc}") from None
    overrides = {
        "target_length": args.length,
        "mode": args.strategy,
        "seed": args.seed,
        "node_budget": args.budget_nodes,
        "time_budget": args.budget_seconds,
        "checkpoint_interval": args.checkpoint_interval,
        "workers": args.workers,
    }
    data.update({k: v for k, v in overrides.items() if v is not None})
    if "target_length" not in data:
        raise UsageError("search needs --length or target_length in the config file")
    data.setdefault("workers", os.cpu_count() or 1)
    try:
        cfg = SearchConfig.from_dict(data)
    except (TypeError, ValueError) as exc:
        raise UsageError(f"invalid search config: {exc}") from None

    resume = load_checkpoint(args.resume) if args.resume else None
    on_ckpt = None
    if args.checkpoint:
        ckpt_path = args.checkpoint

        def on_ckpt(ckpt):
            save_checkpoint(ckpt_path, ckpt)

        if not cfg.checkpoint_interval:
            cfg.checkpoint_interval = 100_000
    if resume is not None or on_ckpt is not None:
        cfg.workers = 1
    try:
        res = search_min_sequence(code, cfg, resume=resume, on_checkpoint=on_ckpt)
    except InfeasibleLength as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        _write_json(Path(args.out), {"status": "infeasible", "reason": str(exc), "config": cfg.to_dict()})
        return EXIT_USAGE
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    out = res.to_dict()
    out["config"] = cfg.to_dict()
    _write_json(Path(args.out), out)
    print(f"status={res.status} nodes={res.nodes_visited} restarts={res.restarts} "
          f"certificate_verified={res.certificate_verified}")
    if res.sequence is not None:
        for row in res.sequence.strings():
            print(f"  {row}")
    return EXIT_OK if res.status == "found" and res.certificate_verified else EXIT_FAIL


def cmd_dump(args) -> int:
    if args.sequence:
        seq = load_sequence(args.sequence)
        mat = syndrome_matrix(seq).matrix
        name, group = "syndrome", 3
    else:
        if args.r is None:
            raise UsageError("dump needs --r or --sequence")
        r = args.r
        code = quantum_hamming_code(r)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            c = build_transform_C(r)
        a = syndrome_matrix(generator_sequence(code))
        name = args.matrix
        mats = {
            "C": (lambda: c, None),
            "A": (lambda: a.matrix, 3),
            "B": (lambda: apply_transform(c, a).matrix, 3),
            "H": (lambda: hamming_parity_check(r), None),
        }
        build, group = mats[name]
        mat = build()
    text = format_matrix(mat, group)
    print(text)
    _write_json(Path(args.out), {"name": name, "rows": mat.rows, "cols": mat.cols, "matrix": text.splitlines()})
    return EXIT_OK


def cmd_baseline(args) -> int:
    code = load_code(args.code)
    try:
        seq = baseline_css_sequence(code)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    rep = run_campaign(seq, code)
    out = {"sequence": seq.to_dict(), "campaign": rep.to_dict()}
    _write_json(Path(args.out), out)
    print(f"baseline length {len(seq)}; weak violations: {len(rep.weak_violations)}")
    for row in seq.strings():
        print(f"  {row}")
    return EXIT_OK if not rep.weak_violations else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ftseq", description="Fault-tolerant measurement sequences for stabilizer codes")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="build C, A, B and the cyclic sequence for a quantum Hamming code")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--out", help="output directory (default generated_r<R>)")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("verify", help="check a sequence's syndrome matrix")
    p.add_argument("sequence")
    p.add_argument("--code", help="code spec; enables the (2r+1)-row conditions")
    p.add_argument("--mode", choices=("weak", "strict"), default="weak")
    p.add_argument("--out", default="verify_report.json")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("simulate", help="inject every single fault and decode")
    p.add_argument("sequence")
    p.add_argument("--code", required=True)
    p.add_argument("--out", default="campaign_report.json")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("search", help="search for a weak-FT sequence of a given length")
    p.add_argument("--code", required=True)
    p.add_argument("--config", help="JSON file with SearchConfig fields")
    p.add_argument("--length", type=int)
    p.add_argument("--strategy", choices=("exhaustive", "randomized"))
    p.add_argument("--seed", type=int)
    p.add_argument("--workers", type=int)
    p.add_argument("--budget-nodes", type=int)
    p.add_argument("--budget-seconds", type=float)
    p.add_argument("--checkpoint", help="write checkpoints to this file")
    p.add_argument("--checkpoint-interval", type=int)
    p.add_argument("--resume", help="resume from a checkpoint file")
    p.add_argument("--out", default="search_result.json")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("dump", help="print a matrix in 0/1 text form")
    p.add_argument("--r", type=int)
    p.add_argument("--matrix", choices=("C", "A", "B", "H"), default="B")
    p.add_argument("--sequence", help="dump this sequence's syndrome matrix instead")
    p.add_argument("--out", default="matrix.json")
    p.set_defaults(func=cmd_dump)

    p = sub.add_parser("baseline", help="repeated-generator CSS protocol and its fault campaign")
    p.add_argument("--code", required=True)
    p.add_argument("--out", default="baseline_report.json")
    p.set_defaults(func=cmd_baseline)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
