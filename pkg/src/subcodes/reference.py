"""Brute-force reference implementations used to validate the fast paths.

Nothing here shares code with :mod:`subcodes.codegen` or
:mod:`subcodes.optimize` beyond the Pauli arithmetic.  Everything is
exhaustive and therefore limited to small instances.
"""

from __future__ import annotations

import itertools
from collections.abc import Sequence
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .codegen import SubsystemCode
from .pauli import PauliOperator, anti

__all__ = [
    "GroupSpan",
    "group_equal",
    "group_contains",
    "gf2_rank",
    "brute_force_distance",
    "brute_force_omega",
    "brute_force_optimal_profile",
    "weight_ascending",
    "TooLargeError",
]

# exhaustive limits
MAX_EXHAUSTIVE_QUBITS = 8
MAX_PROFILE_QUBITS = 6
MAX_PROFILE_PAIRS = 3


class TooLargeError(ValueError):
    """Instance exceeds what the exhaustive oracle will enumerate."""


def _row(op: PauliOperator) -> int:
    # symplectic row as one integer: x bits low, z bits high
    return op.x | (op.z << op.num_qubits)


def _reduce_basis(rows: Sequence[int]) -> dict[int, int]:
    """xor basis keyed by leading bit."""
    basis: dict[int, int] = {}
    for r in rows:
        while r:
            top = r.bit_length() - 1
            if top not in basis:
                basis[top] = r
                break
            r ^= basis[top]
    return basis


def _in_span(basis: dict[int, int], r: int) -> bool:
    while r:
        top = r.bit_length() - 1
        if top not in basis:
            return False
        r ^= basis[top]
    return True


def gf2_rank(ops: Sequence[PauliOperator]) -> int:
    return len(_reduce_basis([_row(o) for o in ops]))


@dataclass(frozen=True)
class GroupSpan:
    """Span of a generator list, with exact membership testing."""

    generators: tuple[PauliOperator, ...]
    num_qubits: int

    @classmethod
    def of(cls, ops: Sequence[PauliOperator], num_qubits: int | None = None) -> GroupSpan:
        ops = tuple(ops)
        if ops:
            num_qubits = ops[0].num_qubits
            if any(o.num_qubits != num_qubits for o in ops):
                raise ValueError("mixed operator sizes")
        elif num_qubits is None:
            num_qubits = 0
        return cls(ops, num_qubits)

    @property
    def _basis(self) -> dict[int, int]:
        return _reduce_basis([_row(o) for o in self.generators])

    @property
    def rank(self) -> int:
        return len(self._basis)

    def __contains__(self, op: PauliOperator) -> bool:
        if self.generators and op.num_qubits != self.num_qubits:
            raise ValueError("size mismatch")
        return _in_span(self._basis, _row(op))

    def elements(self) -> list[PauliOperator]:
        """Every group element (2**rank of them), identity first."""
        n = self.num_qubits
        basis = list(self._basis.values())
        out = []
        for bits in range(1 << len(basis)):
            r = 0
            for i, b in enumerate(basis):
                if bits >> i & 1:
                    r ^= b
            out.append(PauliOperator(n, r & ((1 << n) - 1), r >> n))
        return out


def group_contains(gens: Sequence[PauliOperator], op: PauliOperator) -> bool:
    return _in_span(_reduce_basis([_row(g) for g in gens]), _row(op))


def group_equal(a: Sequence[PauliOperator], b: Sequence[PauliOperator]) -> bool:
    """True iff ``a`` and ``b`` generate the same group."""
    ba = _reduce_basis([_row(o) for o in a])
    bb = _reduce_basis([_row(o) for o in b])
    return all(_in_span(bb, _row(o)) for o in a) and all(_in_span(ba, _row(o)) for o in b)


def weight_ascending(num_qubits: int, max_weight: int | None = None):
    """Every non-identity operator, lighter ones first."""
    top = num_qubits if max_weight is None else min(max_weight, num_qubits)
    for w in range(1, top + 1):
        for support in itertools.combinations(range(num_qubits), w):
            for letters in itertools.product((1, 2, 3), repeat=w):
                x = z = 0
                for q, l in zip(support, letters):
                    if l & 1:
                        x |= 1 << q
                    if l & 2:
                        z |= 1 << q
                yield PauliOperator(num_qubits, x, z)


@lru_cache(maxsize=16)
def _all_masks(n: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    # every (x, z) pair, grouped by weight so the first hit is the lightest
    x = np.repeat(np.arange(1 << n, dtype=np.int64), 1 << n)
    z = np.tile(np.arange(1 << n, dtype=np.int64), 1 << n)
    w = np.bitwise_count(x | z).astype(np.int64)
    order = np.argsort(w, kind="stable")
    return x[order], z[order], w[order]


def _anti_vec(x, z, op: PauliOperator) -> np.ndarray:
    return (np.bitwise_count((x & op.z) ^ (z & op.x)) & 1).astype(bool)


def _min_weight_undetectable(stabs, targets, n: int, max_weight: int | None = None) -> int | None:
    """Lightest operator commuting with ``stabs`` and anti-commuting with a target."""
    if n <= MAX_EXHAUSTIVE_QUBITS:
        x, z, w = _all_masks(n)
        ok = np.ones(len(x), dtype=bool)
        for s in stabs:
            ok &= ~_anti_vec(x, z, s)
        hit = np.zeros(len(x), dtype=bool)
        for t in targets:
            hit |= _anti_vec(x, z, t)
        sel = np.flatnonzero(ok & hit)
        return int(w[sel[0]]) if len(sel) else None
    for e in weight_ascending(n, max_weight):
        if any(anti(e, s) for s in stabs):
            continue
        if any(anti(e, t) for t in targets):
            return e.weight
    return None


def brute_force_omega(stabilizers: Sequence[PauliOperator], op: PauliOperator, max_weight: int | None = None) -> int | None:
    """Minimum weight of an undetectable error acting on ``op``.

    ``None`` when no such error exists (``op`` is in the stabilizer group,
    up to the gauge-blind definition used throughout).
    """
    return _min_weight_undetectable(list(stabilizers), [op], op.num_qubits, max_weight)


def brute_force_distance(code: SubsystemCode, max_weight: int | None = None) -> int:
    """Code distance by exhaustive search.

    Exhaustive over all ``4**N`` operators for ``N <= 8``; weight-ascending
    enumeration (optionally capped at ``max_weight``) beyond that.
    """
    if not code.logical_pairs:
        raise ValueError("code has no logical pairs; distance undefined")
    d = _min_weight_undetectable(
        list(code.stabilizers), code.logical_members(), code.num_qubits, max_weight
    )
    if d is None:
        raise TooLargeError("no undetectable error within the weight cap")
    return d


def _symplectic_pairs_profiles(elems, omega, anti_tab):
    """Every sorted distance profile reachable by symplectic bases of a subspace.

    ``elems`` are indices into the logical group (closed under xor of
    coordinates), ``anti_tab[a][b]`` the commutation table.
    """
    results: set[tuple[int, ...]] = set()

    @lru_cache(maxsize=None)
    def rec(space: frozenset) -> frozenset:
        nz = sorted(e for e in space if e != 0)
        if not nz:
            return frozenset({()})
        out = set()
        # a basis need not contain any particular element, so branch over
        # every unordered anti-commuting pair
        for i, a in enumerate(nz):
            for b in nz[i + 1 :]:
                if not anti_tab[a][b]:
                    continue
                rest = frozenset(e for e in space if not anti_tab[e][a] and not anti_tab[e][b])
                m = min(omega[a], omega[b])
                for tail in rec(rest):
                    out.add(tuple(sorted((m, *tail))))
        return frozenset(out)

    results |= rec(frozenset(elems))
    return results


def brute_force_optimal_profile(code: SubsystemCode) -> tuple[int, ...]:
    """Best sorted distance profile over every recombination of the logical pairs.

    Enumerates all symplectic bases of the group generated by the logical
    members, scores each by its per-pair distances, and returns the
    componentwise maximum, after checking some basis attains it.
    """
    n = code.num_qubits
    k = len(code.logical_pairs)
    if n > MAX_PROFILE_QUBITS or k > MAX_PROFILE_PAIRS:
        raise TooLargeError(
            f"exhaustive profile needs N <= {MAX_PROFILE_QUBITS} and at most "
            f"{MAX_PROFILE_PAIRS} logical pairs"
        )
    if k == 0:
        return ()
    gens = code.logical_members()
    # element index = bitmask over gens
    ops = []
    for bits in range(1 << len(gens)):
        x = z = 0
        for i, g in enumerate(gens):
            if bits >> i & 1:
                x ^= g.x
                z ^= g.z
        ops.append(PauliOperator(n, x, z))
    stabs = list(code.stabilizers)
    omega = [10**9] + [brute_force_omega(stabs, o) for o in ops[1:]]
    if any(w is None for w in omega):
        raise ValueError("logical member without undetectable errors")
    anti_tab = [[anti(a, b) for b in ops] for a in ops]
    profiles = _symplectic_pairs_profiles(range(len(ops)), omega, anti_tab)
    best = tuple(max(p[i] for p in profiles) for i in range(k))
    if best not in profiles:
        raise AssertionError("no recombination attains the componentwise maximum")
    return best
