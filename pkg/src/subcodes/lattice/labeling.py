"""Translation-invariant ray labelings, their canonical form and ordering.

A labeling assigns X, Y or Z to every ray class (vertex class, ray index).
Permuting the three letters at one vertex class is a single-qubit
equivalence, so each class is stored in canonical form.  Its first ray is X
and its first non-X ray, if any, is Y.  With ``k`` canonical assignments per
class, labelings are numbered as ``m``-digit base-``k`` numbers (class 0
most significant, each digit the lexicographic rank of the assignment).
"""

from __future__ import annotations

import itertools
from collections.abc import Iterator
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .. import _kernels
from ..pauli import PauliOperator
from .periodic import PeriodicLattice
from .tiling import TilingSpec, load_tiling

__all__ = [
    "Labeling",
    "LabelingScheme",
    "labeling_scheme",
    "canonical_assignments",
    "canonicalize_letters",
    "total_labelings",
    "enumerate_labelings",
    "labeling_from_ordinal",
    "parse_labeling",
    "rotate_labeling",
    "is_orbit_representative",
    "orbit_representatives",
    "count_orbit_representatives",
    "labeling_to_measurements",
]

DELIMITER = "/"


def canonical_assignments(n: int) -> tuple[str, ...]:
    """Canonical letter strings for one vertex class with ``n`` rays, sorted."""
    out = []
    for tail in itertools.product("XYZ", repeat=n - 1):
        s = "X" + "".join(tail)
        first = next((c for c in s if c != "X"), None)
        if first in (None, "Y"):
            out.append(s)
    return tuple(sorted(out))


def canonicalize_letters(s: str) -> str:
    """Relabel letters so the string starts with X and its first other letter is Y."""
    a = s[0]
    b = next((c for c in s if c != a), None)
    mapping = {a: "X"}
    if b is not None:
        mapping[b] = "Y"
        c = ({"X", "Y", "Z"} - {a, b}).pop()
        mapping[c] = "Z"
    return "".join(mapping[ch] for ch in s)


@dataclass(frozen=True)
class Labeling:
    tiling: str
    letters: tuple[str, ...]
    ordinal: int

    def __str__(self) -> str:
        return DELIMITER.join(self.letters)

    def letter(self, ray_class: int) -> str:
        n = len(self.letters[0])
        return self.letters[ray_class // n][ray_class % n]


@dataclass(frozen=True)
class LabelingScheme:
    """Per-tiling enumeration data shared by all labeling operations."""

    spec: TilingSpec
    assignments: tuple[str, ...]
    rank: dict
    tables: np.ndarray  # (|G|, m, k) rotated digit per class
    src: np.ndarray  # (|G|, m) source class of each target class

    @property
    def k(self) -> int:
        return len(self.assignments)

    @property
    def m(self) -> int:
        return self.spec.vertex_classes

    @property
    def total(self) -> int:
        return self.k**self.m


def _rotate_letters(letters, g) -> list[str]:
    n = len(letters[0])
    out = [[""] * n for _ in letters]
    for i, s in enumerate(letters):
        j = g.targets[i]
        for ri, ch in enumerate(s):
            out[j][g.ray_map[i][ri]] = ch
    return ["".join(r) for r in out]


@lru_cache(maxsize=None)
def labeling_scheme(tiling: str | TilingSpec) -> LabelingScheme:
    spec = load_tiling(tiling) if isinstance(tiling, str) else tiling
    n, m = spec.rays_per_vertex, spec.vertex_classes
    assignments = canonical_assignments(n)
    rank = {s: d for d, s in enumerate(assignments)}
    G = len(spec.rotations)
    tables = np.zeros((G, m, len(assignments)), dtype=np.int64)
    src = np.zeros((G, m), dtype=np.int64)
    for gi, g in enumerate(spec.rotations):
        for i in range(m):
            j = g.targets[i]
            src[gi, j] = i
            for d, s in enumerate(assignments):
                img = [""] * n
                for ri, ch in enumerate(s):
                    img[g.ray_map[i][ri]] = ch
                tables[gi, j, d] = rank[canonicalize_letters("".join(img))]
    return LabelingScheme(spec, assignments, rank, tables, src)


def _scheme(tiling) -> LabelingScheme:
    if isinstance(tiling, LabelingScheme):
        return tiling
    if isinstance(tiling, TilingSpec):
        return labeling_scheme(tiling.name)
    return labeling_scheme(load_tiling(tiling).name)


def total_labelings(tiling: str | TilingSpec) -> int:
    """``(1 + (3**(n-1) - 1) // 2) ** m``."""
    spec = load_tiling(tiling) if isinstance(tiling, str) else tiling
    n, m = spec.rays_per_vertex, spec.vertex_classes
    return (1 + (3 ** (n - 1) - 1) // 2) ** m


def labeling_from_ordinal(tiling, ordinal: int) -> Labeling:
    sch = _scheme(tiling)
    if not 0 <= ordinal < sch.total:
        raise ValueError(f"ordinal {ordinal} out of range for {sch.spec.name}")
    digits = []
    rest = ordinal
    for _ in range(sch.m):
        rest, d = divmod(rest, sch.k)
        digits.append(d)
    letters = tuple(sch.assignments[d] for d in reversed(digits))
    return Labeling(sch.spec.name, letters, ordinal)


def _ordinal(sch: LabelingScheme, letters) -> int:
    o = 0
    for s in letters:
        o = o * sch.k + sch.rank[s]
    return o


def parse_labeling(tiling, text: str) -> Labeling:
    """Inverse of ``str(labeling)``; letters must already be canonical."""
    sch = _scheme(tiling)
    parts = tuple(text.split(DELIMITER))
    if len(parts) != sch.m:
        raise ValueError(f"expected {sch.m} vertex classes, got {len(parts)}")
    for p in parts:
        if p not in sch.rank:
            raise ValueError(f"{p!r} is not a canonical assignment for {sch.spec.rays_per_vertex} rays")
    return Labeling(sch.spec.name, parts, _ordinal(sch, parts))


def enumerate_labelings(tiling, start: int = 0, stop: int | None = None, step: int = 1) -> Iterator[Labeling]:
    """Canonical labelings in increasing ordinal order (optionally strided)."""
    sch = _scheme(tiling)
    stop = sch.total if stop is None else min(stop, sch.total)
    for o in range(start, stop, step):
        yield labeling_from_ordinal(sch, o)


def rotate_labeling(labeling: Labeling, rotation_index: int, tiling=None) -> Labeling:
    """Image of ``labeling`` under a rotation, re-canonicalized per class."""
    sch = _scheme(tiling or labeling.tiling)
    g = sch.spec.rotations[rotation_index]
    letters = tuple(canonicalize_letters(s) for s in _rotate_letters(labeling.letters, g))
    return Labeling(sch.spec.name, letters, _ordinal(sch, letters))


def is_orbit_representative(labeling: Labeling, tiling=None) -> bool:
    """True iff no rotated, re-canonicalized image has a smaller ordinal."""
    sch = _scheme(tiling or labeling.tiling)
    return all(
        rotate_labeling(labeling, gi, sch).ordinal >= labeling.ordinal
        for gi in range(len(sch.spec.rotations))
    )


def orbit_representatives(tiling, start: int = 0, stop: int | None = None, backend: str | None = None,
                          chunk: int = 1 << 20) -> Iterator[int]:
    """Ordinals of orbit representatives in ``[start, stop)``, ascending."""
    sch = _scheme(tiling)
    stop = sch.total if stop is None else min(stop, sch.total)
    for lo in range(start, stop, chunk):
        hi = min(lo + chunk, stop)
        mask = _kernels.orbit_rep_mask(lo, hi, sch.k, sch.m, sch.tables, sch.src, backend)
        yield from (lo + np.flatnonzero(mask)).tolist()


def count_orbit_representatives(tiling, backend: str | None = None, chunk: int = 1 << 20) -> int:
    sch = _scheme(tiling)
    total = 0
    for lo in range(0, sch.total, chunk):
        hi = min(lo + chunk, sch.total)
        total += int(_kernels.orbit_rep_mask(lo, hi, sch.k, sch.m, sch.tables, sch.src, backend).sum())
    return total


_BITS = {"X": (1, 0), "Y": (1, 1), "Z": (0, 1)}


def labeling_to_measurements(lattice: PeriodicLattice, labeling: Labeling) -> list[PauliOperator]:
    """One two-body operator per edge: the product of its two rays' letters."""
    if labeling.tiling != lattice.tiling.name:
        raise ValueError("labeling and lattice belong to different tilings")
    n = lattice.num_qubits
    out = []
    for ra, rb in lattice.edge_rays:
        x = z = 0
        for q, _, cls in (lattice.rays[ra], lattice.rays[rb]):
            bx, bz = _BITS[labeling.letter(cls)]
            x ^= bx << q
            z ^= bz << q
        out.append(PauliOperator._raw(n, x, z))
    return out
