"""Distance computation and logical-qubit optimization.

Three pieces:

* :func:`compute_pseudogenerators` turns any operator list into disjoint
  pseudo-generators, i.e. 1- or 2-element sets each owning a private
  single-qubit witness.  Any product drawn from ``r`` distinct generators
  then has weight at least ``r``.
* :func:`find_weight_minimizer` enumerates pseudo-products of 1, 2, 3, ...
  generators and stops as soon as the best match is no heavier than the
  round number.
* :func:`optimize_logical_qubits` repeatedly finds the lightest undetectable
  error touching a logical pair that is not yet settled and recombines the
  pairs around it, giving an optimal choice of logical qubits.
"""

from __future__ import annotations

import itertools
from collections.abc import Callable, Iterable, Iterator, Sequence
from dataclasses import dataclass
from typing import Any

import numpy as np

from . import _kernels
from .codegen import ConjugalPair, SubsystemCode
from .pauli import PauliOperator, anti, pack_words, unpack_words

__all__ = [
    "PseudoGenerator",
    "PseudoGeneratorSet",
    "DistanceProfile",
    "NoMatchError",
    "SearchCutoff",
    "AntiCommutationQuery",
    "compute_pseudogenerators",
    "pseudo_product",
    "find_weight_minimizer",
    "optimize_logical_qubits",
    "centralizer_generators",
]


class NoMatchError(LookupError):
    """The query matched nothing in the generated group."""


class SearchCutoff(Exception):
    """The search passed its weight cutoff; ``lower_bound`` is proven."""

    def __init__(self, lower_bound: int):
        super().__init__(f"minimum weight is at least {lower_bound}")
        self.lower_bound = lower_bound


@dataclass(frozen=True, slots=True)
class PseudoGenerator:
    """One or two operators sharing a witness qubit.

    ``members`` are ordered by witness letter (X witness first), which fixes
    the enumeration order a, b, a*b of :meth:`elements`.
    """

    members: tuple[PauliOperator, ...]
    witness_qubit: int
    witness_letters: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= len(self.members) <= 2 or len(self.members) != len(self.witness_letters):
            raise ValueError("a pseudo-generator has one or two members")

    def elements(self) -> tuple[PauliOperator, ...]:
        """Non-identity elements of the generated group, in search order."""
        if len(self.members) == 1:
            return self.members
        a, b = self.members
        return (a, b, a * b)


@dataclass(frozen=True, slots=True)
class PseudoGeneratorSet:
    generators: tuple[PseudoGenerator, ...]
    num_qubits: int

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def operators(self) -> list[PauliOperator]:
        return [m for g in self.generators for m in g.members]

    def element_table(self) -> tuple[np.ndarray, np.ndarray]:
        """``(elems, counts)`` arrays for the compiled search kernel."""
        n = self.num_qubits
        w = (n + 63) // 64
        elems = np.zeros((len(self.generators), 3, 2, w), dtype=np.uint64)
        counts = np.zeros(len(self.generators), dtype=np.int64)
        for i, g in enumerate(self.generators):
            el = g.elements()
            counts[i] = len(el)
            elems[i, : len(el)] = pack_words(el, n)
        return elems, counts


@dataclass(frozen=True, slots=True)
class DistanceProfile:
    """Sorted per-pair distances.

    The last ``censored`` entries are lower bounds produced by a search
    cutoff rather than exact distances.
    """

    distances: tuple[int, ...]
    censored: int = 0

    def __post_init__(self):
        if list(self.distances) != sorted(self.distances):
            raise ValueError("distances must be sorted non-decreasing")
        if not 0 <= self.censored <= len(self.distances):
            raise ValueError("censored count out of range")

    def __len__(self) -> int:
        return len(self.distances)

    def __iter__(self):
        return iter(self.distances)

    @property
    def minimum(self) -> int | None:
        return self.distances[0] if self.distances else None

    @property
    def maximum(self) -> int | None:
        return self.distances[-1] if self.distances else None

    def counts(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for d in self.distances:
            out[d] = out.get(d, 0) + 1
        return out


# ---------------------------------------------------------------------------
# pseudo-generators
# ---------------------------------------------------------------------------


def _anti_witness(op: PauliOperator, qubit: int, letter: int) -> bool:
    return bool((op.z if letter == 0 else op.x) >> qubit & 1)


def compute_pseudogenerators(ops: Sequence[PauliOperator], num_qubits: int | None = None) -> PseudoGeneratorSet:
    """Disjoint pseudo-generators generating the same group as ``ops``."""
    ops = list(ops)
    if ops:
        n = ops[0].num_qubits
        if any(o.num_qubits != n for o in ops):
            raise ValueError("mixed operator sizes")
    elif num_qubits is None:
        raise ValueError("num_qubits is required for an empty operator list")
    else:
        n = num_qubits
    wit: list[tuple[int, int]] = []
    i = 0
    while i < len(ops):
        o = ops[i]
        for j in range(i):
            if _anti_witness(o, *wit[j]):
                o = o * ops[j]
        if o.is_identity():
            del ops[i]
            continue
        # lowest qubit first, X witness before Z
        low = (o.x | o.z) & -(o.x | o.z)
        q = low.bit_length() - 1
        letter = 0 if o.z >> q & 1 else 1
        for j in range(i):
            if _anti_witness(ops[j], q, letter):
                ops[j] = ops[j] * o
        ops[i] = o
        wit.append((q, letter))
        i += 1

    by_qubit: dict[int, list[tuple[int, PauliOperator]]] = {}
    for op, (q, letter) in zip(ops, wit):
        by_qubit.setdefault(q, []).append((letter, op))
    gens = []
    for q in sorted(by_qubit):
        members = sorted(by_qubit[q], key=lambda t: t[0])
        gens.append(
            PseudoGenerator(
                members=tuple(m for _, m in members),
                witness_qubit=q,
                witness_letters=tuple(l for l, _ in members),
            )
        )
    return PseudoGeneratorSet(tuple(gens), n)


def pseudo_product(chosen: Sequence[PseudoGenerator]) -> Iterator[PauliOperator]:
    """All products taking one non-identity element from each chosen generator.

    The first generator varies slowest.  An empty choice yields nothing.
    """
    if not chosen:
        return
    n = chosen[0].members[0].num_qubits
    for combo in itertools.product(*(g.elements() for g in chosen)):
        x = z = 0
        for op in combo:
            x ^= op.x
            z ^= op.z
        yield PauliOperator._raw(n, x, z)


# ---------------------------------------------------------------------------
# weight minimizer
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AntiCommutationQuery:
    """Query matching operators that anti-commute with any target.

    The tag of the first anti-commuting target is returned as the aux value.
    Using this query type (rather than a plain callable) lets
    :func:`find_weight_minimizer` run on the compiled kernel.
    """

    targets: tuple[PauliOperator, ...]
    tags: tuple[Any, ...]

    def __call__(self, op: PauliOperator) -> tuple[bool, Any]:
        for t, tag in zip(self.targets, self.tags):
            if anti(op, t):
                return True, tag
        return False, None


def _find_generic(query, pgens: PseudoGeneratorSet, max_weight):
    best_w = None
    best = None
    gens = pgens.generators
    r = 1
    while (best_w is None or best_w > r) and r <= len(gens):
        if max_weight is not None and r > max_weight:
            raise SearchCutoff(r)
        for combo in itertools.combinations(gens, r):
            for op in pseudo_product(combo):
                w = op.weight
                if best_w is not None and w >= best_w:
                    continue
                matched, aux = query(op)
                if matched:
                    best_w, best = w, (op, aux)
                    if w == r:
                        return best
        r += 1
    if best is None:
        raise NoMatchError("no operator in the generated group satisfies the query")
    return best


def find_weight_minimizer(
    query: Callable[[PauliOperator], tuple[bool, Any]] | AntiCommutationQuery,
    pgens: PseudoGeneratorSet,
    max_weight: int | None = None,
    backend: str | None = None,
) -> tuple[PauliOperator, Any]:
    """Lightest group element matching ``query``, with the query's aux value.

    Ties go to the first candidate in enumeration order: generator
    combinations in lexicographic order, then elements with the first
    generator varying slowest.  With ``max_weight`` set, the search gives up
    before combining more than ``max_weight`` generators and raises
    :class:`SearchCutoff`.  A match found earlier is exact even when it is
    heavier than ``max_weight``.
    ``backend`` (``numba``/``numpy``) applies only to
    :class:`AntiCommutationQuery`; ``python`` forces the generic loop.
    """
    if backend == "python" or not isinstance(query, AntiCommutationQuery):
        return _find_generic(query, pgens, max_weight)
    if not query.targets:
        raise NoMatchError("empty target list")
    n = pgens.num_qubits
    elems, counts = pgens.element_table()
    targets = pack_words(query.targets, n)
    status, w, prod, t = _kernels.min_weight_search(elems, counts, targets, max_weight, backend)
    if status == _kernels.CUTOFF:
        raise SearchCutoff(w)
    if status == _kernels.EXHAUSTED:
        raise NoMatchError("no operator in the generated group satisfies the query")
    return unpack_words(prod, n), query.tags[t]


# ---------------------------------------------------------------------------
# optimization
# ---------------------------------------------------------------------------


def centralizer_generators(code: SubsystemCode) -> list[PauliOperator]:
    """Generators of the centralizer of the stabilizers (S, gauge and logical members)."""
    return code.all_operators()


def _prod(ops: Iterable[PauliOperator], n: int) -> PauliOperator:
    x = z = 0
    for op in ops:
        x ^= op.x
        z ^= op.z
    return PauliOperator._raw(n, x, z)


def optimize_logical_qubits(
    code: SubsystemCode,
    cutoff: int | None = None,
    backend: str | None = None,
    pgens: PseudoGeneratorSet | None = None,
) -> tuple[SubsystemCode, DistanceProfile]:
    """Replace the logical pairs by an optimal choice and report distances.

    Each returned pair's first member attains that pair's distance.  Pairs
    come out in non-decreasing distance order.  With ``cutoff`` set, pairs
    whose distance exceeds it are left as they are and reported with the
    lower bound ``cutoff + 1`` (counted in ``profile.censored``).  Exact
    distances above the cutoff are clipped to the same bound.
    """
    n = code.num_qubits
    if not code.logical_pairs:
        return code, DistanceProfile(())
    if pgens is None:
        pgens = compute_pseudogenerators(code.all_operators())

    # chosen pairs as mutable [first, second], exposure flags, distances
    P: list[list[PauliOperator]] = []
    exposed: list[bool] = []
    dist: list[int] = []
    Q: list[list[PauliOperator]] = [[p.first, p.second] for p in code.logical_pairs]

    while Q:
        targets, tags = [], []
        for i, pair in enumerate(P):
            if exposed[i]:
                targets.append(pair[1])
                tags.append((1, i))
        for j, pair in enumerate(Q):
            targets.append(pair[0])
            tags.append((2, j))
            targets.append(pair[1])
            tags.append((2, j))
        query = AntiCommutationQuery(tuple(targets), tuple(tags))
        try:
            h, (case, idx) = find_weight_minimizer(query, pgens, cutoff, backend)
        except SearchCutoff as cut:
            # every pair still touchable by a light error is finished; the
            # rest only have undetectable errors heavier than the cutoff
            for pair in Q:
                P.append(pair)
                exposed.append(False)
                dist.append(cut.lower_bound)
            Q = []
            break
        w = h.weight

        if case == 1:
            k = idx
            o = P[k][1]
            first = P[k][0]
            for i in range(k + 1, len(P)):
                if exposed[i] and anti(h, P[i][1]):
                    first = first * P[i][0]
                    P[i][1] = P[i][1] * o
            first = first * _partner_product(h, Q, n)
            _apply_f(h, o, Q)
            P[k] = [first, o]
            exposed[k] = False
        else:
            q = Q.pop(idx)
            if not anti(h, q[0]):
                q = [q[1], q[0]]
            o = q[0]
            b = q[1] * _partner_product(h, Q, n)
            if anti(h, b):
                b = b * o
            _apply_f(h, o, Q)
            P.append([o, b])
            exposed.append(True)
            dist.append(w)

    pairs = [ConjugalPair(a, b) for a, b in P]
    order = sorted(range(len(pairs)), key=lambda i: dist[i])
    if cutoff is not None:
        dist = [min(d, cutoff + 1) for d in dist]
    censored = 0 if cutoff is None else sum(1 for d in dist if d > cutoff)
    profile = DistanceProfile(tuple(dist[i] for i in order), censored)
    return code.with_logical_pairs([pairs[i] for i in order]), profile


def _partner_product(h: PauliOperator, Q: list[list[PauliOperator]], n: int) -> PauliOperator:
    # product over unsettled pairs (a, b) of [b if h anti a] * [a if h anti b]
    factors = []
    for a, b in Q:
        if anti(h, a):
            factors.append(b)
        if anti(h, b):
            factors.append(a)
    return _prod(factors, n)


def _apply_f(h: PauliOperator, o: PauliOperator, Q: list[list[PauliOperator]]) -> None:
    for pair in Q:
        for s in range(2):
            if anti(h, pair[s]):
                pair[s] = pair[s] * o
