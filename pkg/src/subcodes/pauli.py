"""Phase-free Pauli operators in the symplectic bit representation.

An N-qubit operator is a pair of N-bit masks.  Bit ``i`` of ``x`` marks an X
factor on qubit ``i``, bit ``i`` of ``z`` a Z factor; both bits set means Y.
Masks are Python integers, so products, commutators and weights run on whole
machine words at a time regardless of N.  :func:`pack_words` converts a batch
of operators to ``uint64`` arrays for the compiled kernels.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from os import PathLike

import numpy as np

__all__ = [
    "PauliOperator",
    "PauliParseError",
    "multiply",
    "anti",
    "weight",
    "single_qubit",
    "identity",
    "parse_pauli",
    "format_pauli",
    "parse_operator_list",
    "read_operator_list",
    "pack_words",
    "num_words",
    "unpack_words",
]

_LETTER_BITS = {"I": (0, 0), "X": (1, 0), "Y": (1, 1), "Z": (0, 1)}
_BITS_LETTER = {bits: letter for letter, bits in _LETTER_BITS.items()}


class PauliParseError(ValueError):
    """Raised for malformed operator text; ``position`` is the offending column."""

    def __init__(self, message: str, position: int, line: int | None = None):
        where = f"position {position}" if line is None else f"line {line}, position {position}"
        super().__init__(f"{message} at {where}")
        self.position = position
        self.line = line


class PauliOperator:
    """Immutable phase-free Pauli product on ``num_qubits`` qubits."""

    __slots__ = ("num_qubits", "x", "z")

    def __init__(self, num_qubits: int, x: int = 0, z: int = 0):
        if num_qubits < 1:
            raise ValueError("num_qubits must be positive")
        full = (1 << num_qubits) - 1
        if x < 0 or z < 0 or x & ~full or z & ~full:
            raise ValueError(f"mask wider than {num_qubits} qubits")
        object.__setattr__(self, "num_qubits", num_qubits)
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "z", z)

    @classmethod
    def _raw(cls, num_qubits: int, x: int, z: int) -> PauliOperator:
        # unchecked constructor for internal hot paths
        op = object.__new__(cls)
        object.__setattr__(op, "num_qubits", num_qubits)
        object.__setattr__(op, "x", x)
        object.__setattr__(op, "z", z)
        return op

    def __setattr__(self, name, value):
        raise AttributeError("PauliOperator is immutable")

    def __delattr__(self, name):
        raise AttributeError("PauliOperator is immutable")

    @property
    def x_mask(self) -> int:
        return self.x

    @property
    def z_mask(self) -> int:
        return self.z

    @classmethod
    def from_string(cls, text: str) -> PauliOperator:
        return parse_pauli(text)

    def __mul__(self, other: PauliOperator) -> PauliOperator:
        return multiply(self, other)

    def anticommutes(self, other: PauliOperator) -> bool:
        return anti(self, other)

    def commutes(self, other: PauliOperator) -> bool:
        return not anti(self, other)

    @property
    def weight(self) -> int:
        return (self.x | self.z).bit_count()

    @property
    def support(self) -> tuple[int, ...]:
        m = self.x | self.z
        return tuple(i for i in range(self.num_qubits) if m >> i & 1)

    def is_identity(self) -> bool:
        return not (self.x or self.z)

    def letter(self, qubit: int) -> str:
        return _BITS_LETTER[(self.x >> qubit & 1, self.z >> qubit & 1)]

    def __eq__(self, other) -> bool:
        if not isinstance(other, PauliOperator):
            return NotImplemented
        return self.num_qubits == other.num_qubits and self.x == other.x and self.z == other.z

    def __hash__(self) -> int:
        return hash((self.num_qubits, self.x, self.z))

    def __str__(self) -> str:
        return format_pauli(self)

    def __repr__(self) -> str:
        return f"PauliOperator('{format_pauli(self)}')"

    def __reduce__(self):
        return (PauliOperator, (self.num_qubits, self.x, self.z))


def _check_sizes(a: PauliOperator, b: PauliOperator) -> None:
    if a.num_qubits != b.num_qubits:
        raise ValueError(f"size mismatch: {a.num_qubits} vs {b.num_qubits} qubits")


def multiply(a: PauliOperator, b: PauliOperator) -> PauliOperator:
    """Group product modulo phase (bitwise xor of both masks)."""
    _check_sizes(a, b)
    return PauliOperator._raw(a.num_qubits, a.x ^ b.x, a.z ^ b.z)


def anti(a: PauliOperator, b: PauliOperator) -> bool:
    """True iff ``a`` and ``b`` anti-commute (odd symplectic inner product)."""
    _check_sizes(a, b)
    return bool(((a.x & b.z) ^ (a.z & b.x)).bit_count() & 1)


def weight(a: PauliOperator) -> int:
    return (a.x | a.z).bit_count()


def single_qubit(letter: str, index: int, num_qubits: int) -> PauliOperator:
    """``letter`` (X, Y or Z) on qubit ``index``, identity elsewhere."""
    if not 0 <= index < num_qubits:
        raise IndexError(f"qubit index {index} out of range for {num_qubits} qubits")
    try:
        bx, bz = _LETTER_BITS[letter]
    except KeyError:
        raise ValueError(f"letter must be one of X, Y, Z, got {letter!r}") from None
    if letter == "I":
        raise ValueError("letter must be one of X, Y, Z, got 'I'")
    return PauliOperator._raw(num_qubits, bx << index, bz << index)


def identity(num_qubits: int) -> PauliOperator:
    return PauliOperator(num_qubits)


def parse_pauli(text: str) -> PauliOperator:
    """Parse a string over I/X/Y/Z; character ``i`` is the letter on qubit ``i``."""
    if not text:
        raise PauliParseError("empty operator", 0)
    x = z = 0
    for i, ch in enumerate(text):
        bits = _LETTER_BITS.get(ch)
        if bits is None:
            raise PauliParseError(f"illegal character {ch!r}", i)
        x |= bits[0] << i
        z |= bits[1] << i
    return PauliOperator._raw(len(text), x, z)


def format_pauli(op: PauliOperator) -> str:
    return "".join(
        _BITS_LETTER[(op.x >> i & 1, op.z >> i & 1)] for i in range(op.num_qubits)
    )


def parse_operator_list(text: str) -> list[PauliOperator]:
    """Parse the operator-list format.

    One operator per line.  Blank lines and anything after ``#`` are ignored.
    All operators must have the same length.
    """
    ops: list[PauliOperator] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        try:
            op = parse_pauli(body)
        except PauliParseError as exc:
            raise PauliParseError(
                str(exc).rsplit(" at ", 1)[0], exc.position, line=lineno
            ) from None
        if ops and op.num_qubits != ops[0].num_qubits:
            raise ValueError(
                f"line {lineno}: operator has {op.num_qubits} qubits, "
                f"expected {ops[0].num_qubits}"
            )
        ops.append(op)
    return ops


def read_operator_list(path: str | PathLike) -> list[PauliOperator]:
    with open(path, encoding="utf-8") as fh:
        return parse_operator_list(fh.read())


def num_words(num_qubits: int) -> int:
    return (num_qubits + 63) // 64


def pack_words(ops: Sequence[PauliOperator] | Iterable[PauliOperator], num_qubits: int) -> np.ndarray:
    """Pack operators into a ``(len(ops), 2, W)`` uint64 array (x words, z words).

    Word ``k`` holds qubits ``64k .. 64k+63``, least significant bit first.
    """
    ops = list(ops)
    w = num_words(num_qubits)
    out = np.zeros((len(ops), 2, w), dtype=np.uint64)
    mask = (1 << 64) - 1
    for i, op in enumerate(ops):
        if op.num_qubits != num_qubits:
            raise ValueError("size mismatch while packing")
        x, z = op.x, op.z
        for k in range(w):
            out[i, 0, k] = (x >> (64 * k)) & mask
            out[i, 1, k] = (z >> (64 * k)) & mask
    return out


def unpack_words(words: np.ndarray, num_qubits: int) -> PauliOperator:
    """Inverse of :func:`pack_words` for a single ``(2, W)`` row."""
    x = z = 0
    for k in range(words.shape[-1]):
        x |= int(words[0, k]) << (64 * k)
        z |= int(words[1, k]) << (64 * k)
    return PauliOperator(num_qubits, x, z)
