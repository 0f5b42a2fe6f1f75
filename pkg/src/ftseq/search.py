"""Backtracking search for weak fault-tolerant measurement sequences.

Rows are drawn from the nonzero generator combinations ("labels"; bit ``i-1``
selects generator ``i``).  The search state at a node is a handful of
bitmasks over ordered error pairs ``(j, k)`` on different qubits:

* ``K``  pairs whose k-column is still all zero,
* ``J``  pairs whose j-column already has a 1,
* ``AA`` pairs still agreeing since some admissible fault time,
* ``AN`` the subset of ``AA`` whose agreeing suffix already contains a 1,

plus ``U``, the error pairs (and error-vs-nothing) no row has separated yet.
A row that separates ``j`` from ``k`` kills the pair for every fault time at
once, so tracking the union over fault times is exact.  A leaf is accepted
only when ``AN`` and ``U`` are empty, and is then re-checked with the full
operational checker and the fault-injection campaign.
"""

from __future__ import annotations

import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Callable, Optional, Sequence

from .codes import PauliOperator, StabilizerCode, symplectic_anticommute
from .faultsim import run_campaign
from .ftcheck import check_operational
from .syndromes import PAULI_ORDER, MeasurementSequence, syndrome_matrix

CHECKPOINT_VERSION = 1
STATUSES = ("found", "exhausted_none", "budget_exceeded")


class InfeasibleLength(ValueError):
    """The requested sequence length cannot possibly be fault tolerant."""


@dataclass
class SearchConfig:
    target_length: int
    mode: str = "randomized"
    node_budget: int = 20_000_000
    time_budget: Optional[float] = None
    seed: int = 0
    canonical_first_row: bool = False
    checkpoint_interval: int = 0
    restart_base: int = 256
    workers: int = 1

    def __post_init__(self):
        if self.mode not in ("exhaustive", "randomized"):
            raise ValueError(f"mode must be 'exhaustive' or 'randomized', got {self.mode!r}")
        if self.target_length < 1:
            raise ValueError(f"target_length must be positive, got {self.target_length}")
        if self.node_budget < 1:
            raise ValueError("node_budget must be positive")
        if self.checkpoint_interval < 0 or self.restart_base < 1 or self.workers < 1:
            raise ValueError("checkpoint_interval, restart_base and workers must be non-negative / positive")

    @classmethod
    def from_dict(cls, data: dict) -> SearchConfig:
        known = set(cls.__dataclass_fields__)
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown config fields: {sorted(unknown)}")
        return cls(**data)

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass
class SearchResult:
    status: str
    sequence: Optional[MeasurementSequence] = None
    nodes_visited: int = 0
    certificate_verified: bool = False
    labels: Optional[list[int]] = None
    restarts: int = 0
    elapsed: float = field(default=0.0, compare=False)
    note: str = ""

    def to_dict(self) -> dict:
        return {
            "status": self.status,
            "nodes_visited": self.nodes_visited,
            "certificate_verified": self.certificate_verified,
            "labels": self.labels,
            "restarts": self.restarts,
            "elapsed": round(self.elapsed, 3),
            "note": self.note,
            "sequence": self.sequence.to_dict() if self.sequence else None,
        }


def luby(i: int) -> int:
    """The Luby restart sequence 1, 1, 2, 1, 1, 2, 4, 1, ... (1-based)."""
    k = 1
    while (1 << k) - 1 < i:
        k += 1
    while True:
        if i == (1 << k) - 1:
            return 1 << (k - 1)
        i -= (1 << (k - 1)) - 1
        k = 1
        while (1 << k) - 1 < i:
            k += 1


def _parity(x: int) -> int:
    return bin(x).count("1") & 1


class SearchSpace:
    """Precomputed per-label masks for one code and target length."""

    def __init__(self, code: StabilizerCode, length: int):
        self.code = code
        self.length = length
        self.g = code.num_generators
        n = code.n
        self.labels = list(range(1, 1 << self.g))
        # generator syndrome of every weight-one error, column order
        self.error_syndromes = []
        for q in range(1, n + 1):
            for p in PAULI_ORDER:
                e = PauliOperator.single(n, q, p)
                s = 0
                for i, gen in enumerate(code.generators):
                    s |= symplectic_anticommute(gen, e) << i
                self.error_syndromes.append(s)
        m = len(self.error_syndromes)
        self.pairs = [(j, k) for j in range(m) for k in range(m) if j // 3 != k // 3]
        self.items = [(e, None) for e in range(m)] + [(e, f) for e in range(m) for f in range(e + 1, m)]

        self.masks = {}
        for lab in self.labels:
            bits = [_parity(lab & s) for s in self.error_syndromes]
            jone = kone = diff = 0
            for idx, (j, k) in enumerate(self.pairs):
                if bits[j]:
                    jone |= 1 << idx
                if bits[k]:
                    kone |= 1 << idx
            diff = jone ^ kone
            hit = 0
            for idx, (e, f) in enumerate(self.items):
                if bits[e] ^ (bits[f] if f is not None else 0):
                    hit |= 1 << idx
            self.masks[lab] = (diff, jone & kone, kone, jone, hit, sum(bits))

        distinct = set(self.error_syndromes)
        diffs = set(distinct)
        if len(distinct) <= 512:
            diffs |= {a ^ b for a in distinct for b in distinct}
        diffs.discard(0)
        # every nonzero vector must be separated: rank bound is then sound
        self.rank_bound = len(diffs) == (1 << self.g) - 1
        self.required_rank = self.g if self.rank_bound else 0
        self.root = (0, (1 << len(self.pairs)) - 1, 0, 0, 0, (1 << len(self.items)) - 1, ())

    def canonical_first_label(self) -> int:
        best = max(self.masks[lab][5] for lab in self.labels)
        return min(lab for lab in self.labels if self.masks[lab][5] == best)

    def apply(self, state, label: int, depth: int):
        _, K, J, AA, AN, U, basis = state
        diff, both, kone, jone, hit, _ = self.masks[label]
        AN = (AN & ~diff) | (AA & both)
        AA &= ~diff
        K &= ~kone
        J |= jone
        if depth < self.length:
            AA |= K & J
        U &= ~hit
        red = label
        for b in basis:
            if red & (b & -b):
                red ^= b
        if red:
            basis = basis + (red,)
        return (depth, K, J, AA, AN, U, basis)

    def verdict(self, state) -> str:
        """'prune', 'reject', 'accept' (leaf passed masks) or 'expand'."""
        depth, _, _, _, AN, U, basis = state
        remaining = self.length - depth
        if len(basis) + remaining < self.required_rank:
            return "prune"
        if remaining == 0:
            return "accept" if not (AN or U) else "reject"
        return "expand"

    def sequence(self, labels) -> MeasurementSequence:
        return MeasurementSequence(self.code.n, tuple(self.code.combination(l) for l in labels), r=self.code.r)

    def leaf_ok(self, labels) -> bool:
        return check_operational(syndrome_matrix(self.sequence(labels)), "weak").verdict


def feasibility_problem(code: StabilizerCode, length: int) -> Optional[str]:
    """Reason why ``length`` rows can never work, or None."""
    space_rank = _syndrome_rank(code)
    if length < space_rank:
        return (
            f"length {length} is below the rank {space_rank} needed to separate all "
            f"{3 * code.n} weight-one errors"
        )
    m = 3 * code.n
    if m > (1 << length) - 1:
        return f"{m} distinct nonzero syndromes do not fit in {length} bits"
    if m == (1 << length) - 1 and length >= 3:
        return (
            f"{m} errors fill all {m} nonzero {length}-bit syndromes; the column 0..01 then "
            "matches a delayed syndrome of another qubit's error (perfect packing, no room to separate faults)"
        )
    return None


def _syndrome_rank(code: StabilizerCode) -> int:
    from .gf2 import rank_of_ints

    sy = []
    for q in range(1, code.n + 1):
        for p in PAULI_ORDER:
            e = PauliOperator.single(code.n, q, p)
            sy.append(sum(symplectic_anticommute(g, e) << i for i, g in enumerate(code.generators)))
    return rank_of_ints(sy)


class _Interrupted(Exception):
    pass


class _Searcher:
    def __init__(self, space: SearchSpace, cfg: SearchConfig, on_checkpoint=None, first_labels=None):
        self.space = space
        self.cfg = cfg
        self.on_checkpoint = on_checkpoint
        self.t0 = time.monotonic()
        if first_labels is not None:
            self.first_labels = list(first_labels)
        elif cfg.canonical_first_row:
            self.first_labels = [space.canonical_first_label()]
        else:
            self.first_labels = list(space.labels)

    def children(self, restart: int, path: list[int]) -> list[int]:
        base = self.first_labels if not path else self.space.labels
        if self.cfg.mode == "exhaustive":
            return base
        out = list(base)
        random.Random(f"{self.cfg.seed}/{restart}/{','.join(map(str, path))}").shuffle(out)
        return out

    def restart_limit(self, restart: int) -> Optional[int]:
        if self.cfg.mode == "exhaustive":
            return None
        return self.cfg.restart_base * luby(restart + 1)

    def checkpoint(self, restart, restart_nodes, nodes, path) -> dict:
        return {
            "version": CHECKPOINT_VERSION,
            "mode": self.cfg.mode,
            "seed": self.cfg.seed,
            "target_length": self.cfg.target_length,
            "restart": restart,
            "restart_nodes": restart_nodes,
            "nodes_visited": nodes,
            "path": list(path),
        }

    def run(self, resume: Optional[dict] = None) -> tuple[str, Optional[list[int]], int, int]:
        restart, nodes, restart_nodes, start_path = 0, 0, 0, None
        if resume is not None:
            restart = resume["restart"]
            nodes = resume["nodes_visited"]
            restart_nodes = resume["restart_nodes"]
            start_path = resume["path"]
        while True:
            status, labels, nodes = self._dfs(restart, nodes, restart_nodes, start_path)
            if status != "restart":
                return status, labels, nodes, restart
            restart += 1
            restart_nodes = 0
            start_path = None

    def _dfs(self, restart, nodes, restart_nodes, start_path):
        sp = self.space
        cfg = self.cfg
        limit = self.restart_limit(restart)
        frames: list[list] = []
        states = [sp.root]
        path: list[int] = []
        if start_path:
            for lab in start_path:
                ch = self.children(restart, path)
                frames.append([ch, ch.index(lab) + 1])
                path.append(lab)
                states.append(sp.apply(states[-1], lab, len(path)))
            pending = True
        else:
            frames.append([self.children(restart, path), 0])
            pending = False
        interval = cfg.checkpoint_interval
        while True:
            if not pending:
                if not frames:
                    return "exhausted_none", None, nodes
                ch, pos = frames[-1]
                if pos >= len(ch):
                    frames.pop()
                    if path:
                        path.pop()
                        states.pop()
                    continue
                frames[-1][1] = pos + 1
                lab = ch[pos]
                nodes += 1
                restart_nodes += 1
                path.append(lab)
                states.append(sp.apply(states[-1], lab, len(path)))
                if interval and nodes % interval == 0 and self.on_checkpoint is not None:
                    self.on_checkpoint(self.checkpoint(restart, restart_nodes, nodes, path))
            pending = False
            if nodes > cfg.node_budget:
                return "budget_exceeded", None, nodes
            if cfg.time_budget is not None and (nodes & 255) == 0 and time.monotonic() - self.t0 > cfg.time_budget:
                return "budget_exceeded", None, nodes
            if limit is not None and restart_nodes >= limit:
                return "restart", None, nodes
            v = sp.verdict(states[-1])
            if v == "expand":
                frames.append([self.children(restart, path), 0])
                continue
            if v == "accept" and sp.leaf_ok(path):
                return "found", list(path), nodes
            path.pop()
            states.pop()


def _subtree(args):
    code, cfg, first = args
    space = SearchSpace(code, cfg.target_length)
    status, labels, nodes, restarts = _Searcher(space, cfg, first_labels=[first]).run()
    return status, labels, nodes


def search_min_sequence(
    code: StabilizerCode,
    cfg: SearchConfig,
    resume: Optional[dict] = None,
    on_checkpoint: Optional[Callable[[dict], None]] = None,
) -> SearchResult:
    """Look for a weak-FT sequence of ``cfg.target_length`` rows.

    Raises :class:`InfeasibleLength` when a counting or rank argument rules the
    length out.  ``resume`` is a checkpoint dict previously handed to
    ``on_checkpoint``.
    """
    problem = feasibility_problem(code, cfg.target_length)
    if problem:
        raise InfeasibleLength(problem)
    t0 = time.monotonic()
    space = SearchSpace(code, cfg.target_length)
    note = ""
    if cfg.mode == "exhaustive" and cfg.canonical_first_row:
        note = "first row fixed by asserted symmetry; exhaustion is relative to that assumption"
    if resume is not None:
        _check_resume(resume, cfg)

    if cfg.workers > 1 and cfg.mode == "exhaustive" and not cfg.canonical_first_row:
        if resume is not None or on_checkpoint is not None:
            raise ValueError("checkpointing is only supported with a single worker")
        status, labels, nodes, restarts = _parallel_exhaustive(code, cfg, space)
    else:
        status, labels, nodes, restarts = _Searcher(space, cfg, on_checkpoint=on_checkpoint).run(resume)

    result = SearchResult(status=status, nodes_visited=nodes, labels=labels, restarts=restarts, note=note)
    if status == "found":
        result.sequence = space.sequence(labels)
        result.certificate_verified = verify_certificate(code, result)
    result.elapsed = time.monotonic() - t0
    return result


def _parallel_exhaustive(code, cfg, space):
    jobs = [(code, cfg, lab) for lab in space.labels]
    with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
        results = list(pool.map(_subtree, jobs))
    nodes = sum(r[2] for r in results)
    for status, labels, _ in results:
        if status == "found":
            return status, labels, nodes, 0
    if any(r[0] == "budget_exceeded" for r in results):
        return "budget_exceeded", None, nodes, 0
    return "exhausted_none", None, nodes, 0


def _check_resume(ckpt: dict, cfg: SearchConfig) -> None:
    if ckpt.get("version") != CHECKPOINT_VERSION:
        raise ValueError(f"unsupported checkpoint version {ckpt.get('version')!r}")
    for key, want in (("mode", cfg.mode), ("seed", cfg.seed), ("target_length", cfg.target_length)):
        if ckpt.get(key) != want:
            raise ValueError(f"checkpoint {key}={ckpt.get(key)!r} does not match config {want!r}")


def verify_certificate(code: StabilizerCode, result: SearchResult) -> bool:
    """Independent re-check: operational weak verdict and a clean fault campaign."""
    if result.status != "found" or result.sequence is None:
        raise ValueError("only found results carry a certificate")
    seq = result.sequence
    if seq.n != code.n:
        return False
    if not check_operational(syndrome_matrix(seq), "weak").verdict:
        return False
    campaign = run_campaign(seq, code)
    return not campaign.weak_violations


def enumerate_solutions(code: StabilizerCode, length: int, prefix: Sequence[int] = ()):
    """Yield every accepted label tuple starting with ``prefix``, in lexicographic order."""
    space = SearchSpace(code, length)
    if len(prefix) > length:
        raise ValueError(f"prefix of {len(prefix)} labels is longer than {length}")
    state = space.root
    path = []
    for depth, lab in enumerate(prefix, 1):
        if lab not in space.masks:
            raise ValueError(f"label {lab} outside 1..{(1 << space.g) - 1}")
        state = space.apply(state, lab, depth)
        path.append(lab)
        v = space.verdict(state)
        if v in ("prune", "reject"):
            return
        if v == "accept":
            if space.leaf_ok(path):
                yield tuple(path)
            return

    def rec(state, path):
        for lab in space.labels:
            st = space.apply(state, lab, len(path) + 1)
            v = space.verdict(st)
            path.append(lab)
            if v == "expand":
                yield from rec(st, path)
            elif v == "accept" and space.leaf_ok(path):
                yield tuple(path)
            path.pop()

    yield from rec(state, path)


def save_checkpoint(path: str | Path, ckpt: dict) -> None:
    tmp = Path(str(path) + ".tmp")
    tmp.write_text(json.dumps(ckpt))
    tmp.replace(path)


def load_checkpoint(path: str | Path) -> dict:
    return json.loads(Path(path).read_text())
