"""Phase-free Pauli operators and the stabilizer codes used throughout.

A Pauli on ``n`` qubits is a pair of bitsets ``(x, z)``; qubit ``q`` (1-based)
is bit ``q - 1``.  Letters decode as (0,0)->I, (1,0)->X, (0,1)->Z, (1,1)->Y.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .gf2 import BitMatrix, BitVector, mat_rank

_LETTER = {(0, 0): "I", (1, 0): "X", (0, 1): "Z", (1, 1): "Y"}
_BITS = {v: k for k, v in _LETTER.items()}


@dataclass(frozen=True)
class PauliOperator:
    n: int
    x: int = 0
    z: int = 0

    def __post_init__(self):
        if self.x >> self.n or self.z >> self.n or self.x < 0 or self.z < 0:
            raise ValueError(f"Pauli bits exceed {self.n} qubits")

    @classmethod
    def from_string(cls, text: str) -> PauliOperator:
        x = z = 0
        for i, ch in enumerate(text):
            try:
                bx, bz = _BITS[ch]
            except KeyError:
                raise ValueError(f"invalid Pauli letter {ch!r} at position {i + 1} in {text!r}") from None
            x |= bx << i
            z |= bz << i
        return cls(len(text), x, z)

    @classmethod
    def single(cls, n: int, qubit: int, letter: str) -> PauliOperator:
        if not 1 <= qubit <= n:
            raise ValueError(f"qubit {qubit} outside 1..{n}")
        bx, bz = _BITS[letter]
        return cls(n, bx << (qubit - 1), bz << (qubit - 1))

    @classmethod
    def identity(cls, n: int) -> PauliOperator:
        return cls(n)

    @classmethod
    def from_symplectic(cls, n: int, bits: int) -> PauliOperator:
        mask = (1 << n) - 1
        return cls(n, bits & mask, bits >> n)

    @property
    def x_part(self) -> BitVector:
        return BitVector(self.n, self.x)

    @property
    def z_part(self) -> BitVector:
        return BitVector(self.n, self.z)

    @property
    def symplectic(self) -> int:
        """``x | z << n`` as one 2n-bit int."""
        return self.x | (self.z << self.n)

    def letter(self, qubit: int) -> str:
        q = qubit - 1
        return _LETTER[((self.x >> q) & 1, (self.z >> q) & 1)]

    def is_identity(self) -> bool:
        return not (self.x or self.z)

    def xz_swap(self) -> PauliOperator:
        return PauliOperator(self.n, self.z, self.x)

    def __mul__(self, other: PauliOperator) -> PauliOperator:
        """Product up to phase, i.e. the symplectic sum."""
        _check_n(self, other)
        return PauliOperator(self.n, self.x ^ other.x, self.z ^ other.z)

    def __str__(self) -> str:
        return "".join(self.letter(q) for q in range(1, self.n + 1))


def _check_n(p: PauliOperator, q: PauliOperator) -> None:
    if p.n != q.n:
        raise ValueError(f"qubit count mismatch: {p.n} vs {q.n}")


def symplectic_anticommute(p: PauliOperator, q: PauliOperator) -> int:
    """1 if ``p`` and ``q`` anticommute, else 0."""
    _check_n(p, q)
    return bin((p.x & q.z) ^ (p.z & q.x)).count("1") & 1


def pauli_weight(p: PauliOperator) -> int:
    return bin(p.x | p.z).count("1")


@dataclass(frozen=True)
class StabilizerCode:
    n: int
    generators: tuple[PauliOperator, ...]
    r: Optional[int] = None
    name: str = ""
    _symplectic: BitMatrix = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        gens = tuple(self.generators)
        object.__setattr__(self, "generators", gens)
        if not gens:
            raise ValueError("a stabilizer code needs at least one generator")
        for i, g in enumerate(gens, 1):
            if g.n != self.n:
                raise ValueError(f"generator {i} acts on {g.n} qubits, expected {self.n}")
        for i in range(len(gens)):
            for j in range(i + 1, len(gens)):
                if symplectic_anticommute(gens[i], gens[j]):
                    raise ValueError(f"generators {i + 1} and {j + 1} anticommute")
        sym = BitMatrix(len(gens), 2 * self.n, tuple(g.symplectic for g in gens))
        if mat_rank(sym) != len(gens):
            raise ValueError("generators are not independent")
        object.__setattr__(self, "_symplectic", sym)

    @classmethod
    def from_strings(cls, strings: Sequence[str], r: Optional[int] = None, name: str = "") -> StabilizerCode:
        gens = tuple(PauliOperator.from_string(s) for s in strings)
        if not gens:
            raise ValueError("no generators given")
        return cls(gens[0].n, gens, r=r, name=name)

    @property
    def num_generators(self) -> int:
        return len(self.generators)

    def symplectic_matrix(self) -> BitMatrix:
        """Generators as rows of ``(x | z)`` bits, width ``2n``."""
        return self._symplectic

    def combination(self, label: int) -> PauliOperator:
        """Product of the generators selected by bit ``i - 1`` of ``label``."""
        x = z = 0
        i = 0
        while label:
            if label & 1:
                g = self.generators[i]
                x ^= g.x
                z ^= g.z
            label >>= 1
            i += 1
        return PauliOperator(self.n, x, z)

    def to_dict(self) -> dict:
        out: dict = {"n": self.n}
        if self.r is not None:
            out["r"] = self.r
        out["generators"] = [str(g) for g in self.generators]
        return out

    @classmethod
    def from_dict(cls, data: dict) -> StabilizerCode:
        code = cls.from_strings(data["generators"], r=data.get("r"), name=data.get("name", ""))
        if "n" in data and data["n"] != code.n:
            raise ValueError(f"declared n={data['n']} but generators act on {code.n} qubits")
        return code


def hamming_parity_check(r: int) -> BitMatrix:
    """``r x (2**r - 1)`` matrix; column q is q in binary, most significant bit in row 1."""
    if r < 2:
        raise ValueError(f"Hamming parity check needs r >= 2, got {r}")
    n = (1 << r) - 1
    rows = []
    for i in range(r):
        shift = r - 1 - i
        bits = 0
        for q in range(1, n + 1):
            if (q >> shift) & 1:
                bits |= 1 << (q - 1)
        rows.append(bits)
    return BitMatrix(r, n, tuple(rows))


def quantum_hamming_code(r: int) -> StabilizerCode:
    """The CSS code ``[[2^r - 1, 2^r - 1 - 2r, 3]]``: r Z-type generators then r X-type ones."""
    if r < 3:
        raise ValueError(f"quantum Hamming code needs r >= 3, got {r}")
    h = hamming_parity_check(r)
    n = h.cols
    gens = [PauliOperator(n, 0, row) for row in h.data]
    gens += [PauliOperator(n, row, 0) for row in h.data]
    name = "steane" if r == 3 else f"hamming:r={r}"
    return StabilizerCode(n, tuple(gens), r=r, name=name)


FIVE_QUBIT_GENERATORS = ("XZZXI", "ZZXIX", "ZXIXZ", "XIXZZ")


def five_qubit_code() -> StabilizerCode:
    return StabilizerCode.from_strings(FIVE_QUBIT_GENERATORS, name="five_qubit")


def css_groups(code: StabilizerCode) -> tuple[list[PauliOperator], list[PauliOperator]]:
    """Split generators into (Z-type, X-type) lists; raises for non-CSS generators."""
    zs, xs = [], []
    for i, g in enumerate(code.generators, 1):
        if g.x and g.z:
            raise ValueError(f"generator {i} ({g}) mixes X and Z; code is not in CSS form")
        (xs if g.x else zs).append(g)
    return zs, xs
