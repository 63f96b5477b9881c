"""Radius-r periodic instantiation of a tiling on a torus."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .tiling import TilingSpec, load_tiling

__all__ = ["PeriodicLattice", "build_lattice", "reduce_cell"]


def reduce_cell(cell: tuple[int, int], rows: tuple[tuple[int, int], tuple[int, int]]) -> tuple[int, int]:
    """Canonical representative of ``cell`` modulo the lattice spanned by ``rows``.

    Coordinates with respect to ``rows`` are floored into [0, 1).
    """
    (p, q), (r, s) = rows
    det = p * s - q * r
    if det < 0:
        (p, q), (r, s), det = (r, s), (p, q), -det
    x_num = cell[0] * s - cell[1] * r
    y_num = p * cell[1] - q * cell[0]
    fx, fy = x_num // det, y_num // det
    return (cell[0] - fx * p - fy * r, cell[1] - fx * q - fy * s)


@dataclass(frozen=True)
class PeriodicLattice:
    """A tiling wrapped on the torus spanned by ``radius * supercell``.

    Qubit ``c * m + i`` is unit-cell vertex ``i`` in the ``c``-th cell of
    ``cells``.  ``rays[k] = (qubit, edge, ray_class)`` where
    ``ray_class = vertex_class * n + ray_index``.
    """

    tiling: TilingSpec
    radius: int
    cells: tuple[tuple[int, int], ...]
    edges: tuple[tuple[int, int], ...]
    rays: tuple[tuple[int, int, int], ...]
    edge_rays: tuple[tuple[int, int], ...]

    @property
    def num_qubits(self) -> int:
        return len(self.cells) * self.tiling.vertex_classes

    @property
    def num_vertices(self) -> int:
        return self.num_qubits

    def vertex_class(self, qubit: int) -> int:
        return qubit % self.tiling.vertex_classes

    def degree(self, qubit: int) -> int:
        return sum(1 for q, _, _ in self.rays if q == qubit)

    def ray_class(self, ray: int) -> int:
        return self.rays[ray][2]

    def qubit_permutation(self, rotation_index: int) -> list[int]:
        """Where each qubit goes under the tiling's ``rotation_index``-th rotation."""
        g = self.tiling.rotations[rotation_index]
        m = self.tiling.vertex_classes
        rows = self.tiling.supercell_rows(self.radius)
        index = {c: k for k, c in enumerate(self.cells)}
        perm = []
        for q in range(self.num_qubits):
            cell, i = self.cells[q // m], q % m
            new_cell, j = g.apply_cell(cell, i)
            perm.append(index[reduce_cell(new_cell, rows)] * m + j)
        return perm


@lru_cache(maxsize=64)
def _build(name: str, radius: int) -> PeriodicLattice:
    spec = load_tiling(name)
    return _instantiate(spec, radius)


def _instantiate(spec: TilingSpec, radius: int) -> PeriodicLattice:
    spec.check_radius(radius)
    rows = spec.supercell_rows(radius)
    span = max(abs(v) for row in rows for v in row) * 2 + 1
    reps = {reduce_cell((a, b), rows) for a in range(-span, span + 1) for b in range(-span, span + 1)}
    (p, q), (r, s) = rows
    if len(reps) != abs(p * s - q * r):
        raise AssertionError("coset enumeration incomplete")
    cells = tuple(sorted(reps))
    index = {c: k for k, c in enumerate(cells)}
    m, n = spec.vertex_classes, spec.rays_per_vertex
    ray_index = {ray: (i, k) for i, rl in enumerate(spec.rays) for k, ray in enumerate(rl)}

    edges, rays, edge_rays = [], [], []
    for c_idx, cell in enumerate(cells):
        for e, (u, v, (o1, o2)) in enumerate(spec.edges):
            other = index[reduce_cell((cell[0] + o1, cell[1] + o2), rows)]
            qu, qv = c_idx * m + u, other * m + v
            eid = len(edges)
            edges.append((qu, qv))
            iu, ku = ray_index[(e, 0)]
            iv, kv = ray_index[(e, 1)]
            edge_rays.append((len(rays), len(rays) + 1))
            rays.append((qu, eid, iu * n + ku))
            rays.append((qv, eid, iv * n + kv))
    return PeriodicLattice(spec, radius, cells, tuple(edges), tuple(rays), tuple(edge_rays))


def build_lattice(tiling: TilingSpec | str, radius: int) -> PeriodicLattice:
    """Periodic lattice of ``tiling`` at ``radius``.

    Raises ``ValueError`` for invalid radii, including deltille radii that
    are multiples of 3.
    """
    if isinstance(tiling, str):
        return _build(load_tiling(tiling).name, radius)
    return _instantiate(tiling, radius)
