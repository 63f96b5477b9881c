"""Subsystem code construction from an arbitrary list of measurements.

The construction is incremental.  Each incoming measurement is first cleaned
against the gauge pairs found so far.  If it then anti-commutes with a current
stabilizer, that stabilizer and the measurement become a new gauge pair and
the remaining stabilizers are patched to commute with it.  Otherwise the
measurement joins the stabilizers.  A Gaussian-style elimination then gives
every stabilizer and gauge operator a private single-qubit pivot, and the
unused qubits yield the logical pairs.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field

from .pauli import PauliOperator, anti

__all__ = [
    "ConjugalPair",
    "SubsystemCode",
    "EliminationTrace",
    "gaussian_eliminate",
    "compute_subsystem_code",
    "pivot_operator",
]


@dataclass(frozen=True, slots=True)
class ConjugalPair:
    first: PauliOperator
    second: PauliOperator

    def __post_init__(self):
        if not anti(self.first, self.second):
            raise ValueError("members of a conjugal pair must anti-commute")

    def __iter__(self):
        yield self.first
        yield self.second

    def swapped(self) -> ConjugalPair:
        return ConjugalPair(self.second, self.first)


@dataclass(frozen=True, slots=True)
class SubsystemCode:
    num_qubits: int
    stabilizers: tuple[PauliOperator, ...]
    gauge_pairs: tuple[ConjugalPair, ...]
    logical_pairs: tuple[ConjugalPair, ...]

    @property
    def n_stab(self) -> int:
        return len(self.stabilizers)

    @property
    def n_gauge(self) -> int:
        return len(self.gauge_pairs)

    @property
    def n_logical(self) -> int:
        return len(self.logical_pairs)

    def gauge_members(self) -> list[PauliOperator]:
        return [op for pair in self.gauge_pairs for op in pair]

    def logical_members(self) -> list[PauliOperator]:
        return [op for pair in self.logical_pairs for op in pair]

    def all_operators(self) -> list[PauliOperator]:
        return [*self.stabilizers, *self.gauge_members(), *self.logical_members()]

    def with_logical_pairs(self, pairs: Sequence[ConjugalPair]) -> SubsystemCode:
        return SubsystemCode(self.num_qubits, self.stabilizers, self.gauge_pairs, tuple(pairs))


@dataclass
class EliminationTrace:
    """Pivot record: row ``i`` owns single-qubit operator (indices[i], letters[i]).

    Letter 0 denotes X, 1 denotes Z.
    """

    indices: list[int] = field(default_factory=list)
    letters: list[int] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.indices)


def pivot_operator(num_qubits: int, qubit: int, letter: int) -> PauliOperator:
    """Single-qubit X (letter 0) or Z (letter 1)."""
    if letter == 0:
        return PauliOperator._raw(num_qubits, 1 << qubit, 0)
    return PauliOperator._raw(num_qubits, 0, 1 << qubit)


def _anti_pivot(op: PauliOperator, qubit: int, letter: int) -> bool:
    # op anti-commutes with X_q iff it has a Z bit there, and vice versa
    return bool((op.z if letter == 0 else op.x) >> qubit & 1)


def gaussian_eliminate(ops: list[PauliOperator], start: int, trace: EliminationTrace) -> None:
    """Eliminate ``ops[start:]`` in place, extending ``trace``.

    Rows reduced to the identity are deleted.  Every surviving row gets a
    pivot on a fresh qubit (lowest index first, X tried before Z) and is
    afterwards the only row of ``ops`` anti-commuting with its pivot.
    """
    if len(trace) != start:
        raise ValueError("trace length must equal start")
    n = ops[0].num_qubits if ops else 0
    used = set(trace.indices)
    i = start
    while i < len(ops):
        o = ops[i]
        for j in range(i):
            if _anti_pivot(o, trace.indices[j], trace.letters[j]):
                o = o * ops[j]
        if o.is_identity():
            del ops[i]
            continue
        pivot = None
        for q in range(n):
            if q in used:
                continue
            if o.z >> q & 1:
                pivot = (q, 0)
                break
            if o.x >> q & 1:
                pivot = (q, 1)
                break
        if pivot is None:
            # only happens when the commutation precondition is violated
            raise ValueError("rows do not commute; elimination precondition violated")
        q, letter = pivot
        for j in range(i):
            if _anti_pivot(ops[j], q, letter):
                ops[j] = ops[j] * o
        ops[i] = o
        trace.indices.append(q)
        trace.letters.append(letter)
        used.add(q)
        i += 1


def compute_subsystem_code(measurements: Sequence[PauliOperator], num_qubits: int | None = None) -> SubsystemCode:
    """Build stabilizers, gauge pairs and (unoptimized) logical pairs.

    ``num_qubits`` is only needed when ``measurements`` is empty.
    """
    if measurements:
        n = measurements[0].num_qubits
        for m in measurements:
            if m.num_qubits != n:
                raise ValueError("mixed operator sizes in measurement list")
        if num_qubits is not None and num_qubits != n:
            raise ValueError("num_qubits disagrees with the measurements")
    elif num_qubits is None:
        raise ValueError("num_qubits is required for an empty measurement list")
    else:
        n = num_qubits

    stabs: list[PauliOperator] = []
    gauge: list[tuple[PauliOperator, PauliOperator]] = []
    for o in measurements:
        for gx, gz in gauge:
            if anti(o, gx):
                o = o * gz
            if anti(o, gz):
                o = o * gx
        if o.is_identity():
            continue
        hit = next((k for k, s in enumerate(stabs) if anti(o, s)), None)
        if hit is None:
            stabs.append(o)
            continue
        s = stabs[hit]
        gauge.append((o, s))
        patched = []
        for k, t in enumerate(stabs):
            if k == hit:
                continue
            if anti(t, o):
                t = t * s
            if not t.is_identity():
                patched.append(t)
        stabs = patched

    trace = EliminationTrace()
    gaussian_eliminate(stabs, 0, trace)
    rows = list(stabs) + [gx for gx, _ in gauge]
    gaussian_eliminate(rows, len(stabs), trace)
    if len(rows) != len(stabs) + len(gauge):
        raise AssertionError("gauge operators turned out dependent")

    pivots = set(trace.indices)
    logical: list[ConjugalPair] = []
    for q in range(n):
        if q in pivots:
            continue
        lx = pivot_operator(n, q, 0)
        lz = pivot_operator(n, q, 1)
        # cancel anti-commutation with each row using that row's private pivot
        for row, pq, pl in zip(rows, trace.indices, trace.letters):
            if anti(row, lx):
                lx = lx * pivot_operator(n, pq, pl)
            if anti(row, lz):
                lz = lz * pivot_operator(n, pq, pl)
        for gx, gz in gauge:
            if anti(lx, gz):
                lx = lx * gx
            if anti(lz, gz):
                lz = lz * gx
        logical.append(ConjugalPair(lx, lz))

    return SubsystemCode(
        num_qubits=n,
        stabilizers=tuple(stabs),
        gauge_pairs=tuple(ConjugalPair(gx, gz) for gx, gz in gauge),
        logical_pairs=tuple(logical),
    )
