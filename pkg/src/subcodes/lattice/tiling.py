"""Tiling specifications: loading and validating the shipped data files.

Schema (JSON, ``format == "subcodes-tiling"``, ``version == 1``):

``name``
    Tiling name, e.g. ``"truncated quadrille"``.
``wallpaper_group`` / ``rotation_group``
    Full symmetry group and the rotation subgroup used for deduplication.
``scan_by_default``
    False for tilings that are representable but not scanned.
``lattice_vectors``
    Two primitive translation vectors (Cartesian, unit edge length).
``vertices``
    ``{"id", "class", "position"}`` per unit-cell vertex.  Each vertex is
    its own translation class, so ``class == id``.
``edges``
    ``{"id", "u", "v", "offset"}``: the edge joins vertex ``u`` in cell
    ``c`` to vertex ``v`` in cell ``c + offset``.  Each undirected edge of
    the tiling appears once per cell.
``rays``
    Per vertex, its incident rays in counter-clockwise order from the
    positive x axis, each ``{"edge", "end"}`` (``end`` 0 at ``u``, 1 at
    ``v``).  The first ray is the one fixed to X by the canonical form.
``supercell``
    Integer 2x2 matrix whose rows, times the radius, span the periodic
    torus in lattice coordinates.
``exclude_radius_multiples_of``
    Radii that are multiples of this value are rejected (or ``null``).
``rotations``
    Every element of the rotation group about the origin, identity first.
    ``linear`` is the action on lattice coordinates, ``vertex_map[i]``
    gives the image vertex ``target`` and cell ``offset`` of vertex ``i`` in
    cell 0, ``ray_map[i][k]`` the image ray index of ray ``k`` of vertex
    ``i``.
``closure_checksum``
    SHA-256 over the canonical serialization of the rotation set
    (see :func:`closure_checksum`).  It is checked on load together with
    closure under composition.
"""

from __future__ import annotations

import hashlib
import json
import math
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path

__all__ = [
    "TilingSpec",
    "Rotation",
    "TilingDataError",
    "TILING_NAMES",
    "SCANNED_TILINGS",
    "load_tiling",
    "load_tiling_file",
    "parse_tiling",
    "closure_checksum",
]

TILING_NAMES = (
    "quadrille",
    "truncated quadrille",
    "snub quadrille",
    "isosnub quadrille",
    "hextille",
    "truncated hextille",
    "deltille",
    "hexadeltille",
    "rhombihexadeltille",
    "snub hextille",
    "truncated hexadeltille",
)
SCANNED_TILINGS = TILING_NAMES[:9]


class TilingDataError(ValueError):
    """A tiling data file failed validation."""


@dataclass(frozen=True, slots=True)
class Rotation:
    linear: tuple[tuple[int, int], tuple[int, int]]
    targets: tuple[int, ...]
    offsets: tuple[tuple[int, int], ...]
    ray_map: tuple[tuple[int, ...], ...]
    angle_deg: float = 0.0

    def key(self):
        return (self.linear, self.targets, self.offsets, self.ray_map)

    def apply_cell(self, cell: tuple[int, int], vertex: int) -> tuple[tuple[int, int], int]:
        (a, b), (c, d) = self.linear
        t = self.offsets[vertex]
        return (a * cell[0] + b * cell[1] + t[0], c * cell[0] + d * cell[1] + t[1]), self.targets[vertex]

    def compose(self, inner: Rotation) -> Rotation:
        """``self`` after ``inner``."""
        (a, b), (c, d) = self.linear
        (e, f), (g, h) = inner.linear
        lin = ((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h))
        targets, offsets, rays = [], [], []
        for i in range(len(inner.targets)):
            (cell, j) = inner.apply_cell((0, 0), i)
            cell2, k = self.apply_cell(cell, j)
            targets.append(k)
            offsets.append(cell2)
            rays.append(tuple(self.ray_map[j][r] for r in inner.ray_map[i]))
        return Rotation(lin, tuple(targets), tuple(offsets), tuple(rays), (self.angle_deg + inner.angle_deg) % 360)


@dataclass(frozen=True)
class TilingSpec:
    name: str
    wallpaper_group: str
    rotation_group: str
    scan_by_default: bool
    lattice_vectors: tuple[tuple[float, float], tuple[float, float]]
    positions: tuple[tuple[float, float], ...]
    edges: tuple[tuple[int, int, tuple[int, int]], ...]
    rays: tuple[tuple[tuple[int, int], ...], ...]
    supercell: tuple[tuple[int, int], tuple[int, int]]
    exclude_radius_multiples_of: int | None
    rotations: tuple[Rotation, ...]

    @property
    def vertex_classes(self) -> int:
        return len(self.positions)

    @property
    def rays_per_vertex(self) -> int:
        return len(self.rays[0])

    def supercell_rows(self, radius: int) -> tuple[tuple[int, int], tuple[int, int]]:
        (a, b), (c, d) = self.supercell
        return ((radius * a, radius * b), (radius * c, radius * d))

    def qubits_per_radius(self, radius: int) -> int:
        (a, b), (c, d) = self.supercell
        return self.vertex_classes * abs(a * d - b * c) * radius * radius

    def check_radius(self, radius: int) -> None:
        if not isinstance(radius, int) or radius < 1:
            raise ValueError(f"radius must be a positive integer, got {radius!r}")
        k = self.exclude_radius_multiples_of
        if k and radius % k == 0:
            raise ValueError(
                f"{self.name}: radius {radius} is a multiple of {k}; vertices would sit "
                "on the supercell corners"
            )


def closure_checksum(rotations: list[dict]) -> str:
    """SHA-256 of the sorted, compact JSON form of each rotation's integer data."""
    items = sorted(
        json.dumps(
            [r["linear"], [[v["target"], *v["offset"]] for v in r["vertex_map"]], r["ray_map"]],
            separators=(",", ":"),
        )
        for r in rotations
    )
    return hashlib.sha256("\n".join(items).encode()).hexdigest()


def _fail(name: str, msg: str):
    raise TilingDataError(f"{name}: {msg}")


def _int_pair(v, name, what):
    if not (isinstance(v, list) and len(v) == 2 and all(isinstance(t, int) for t in v)):
        _fail(name, f"{what} must be a pair of integers")
    return (v[0], v[1])


def parse_tiling(doc: dict) -> TilingSpec:
    """Validate a decoded data file and build a :class:`TilingSpec`."""
    name = doc.get("name", "<unnamed>")
    if doc.get("format") != "subcodes-tiling" or doc.get("version") != 1:
        _fail(name, "unsupported format or version")
    if name not in TILING_NAMES:
        _fail(name, "unknown tiling name")

    verts = doc["vertices"]
    m = len(verts)
    if m == 0:
        _fail(name, "no vertices")
    for i, v in enumerate(verts):
        if v.get("id") != i or v.get("class") != i:
            _fail(name, "vertex ids and classes must be 0..m-1 in order")
    positions = tuple((float(v["position"][0]), float(v["position"][1])) for v in verts)

    edges = []
    for e_i, e in enumerate(doc["edges"]):
        if e.get("id") != e_i:
            _fail(name, "edge ids must be 0..E-1 in order")
        u, v = e["u"], e["v"]
        if not (0 <= u < m and 0 <= v < m):
            _fail(name, f"edge {e_i} references a missing vertex")
        edges.append((u, v, _int_pair(e["offset"], name, f"edge {e_i} offset")))

    rays_doc = doc["rays"]
    if len(rays_doc) != m:
        _fail(name, "one ray list per vertex required")
    n = len(rays_doc[0])
    seen = set()
    rays = []
    for i, rl in enumerate(rays_doc):
        if len(rl) != n:
            _fail(name, f"vertex {i} has {len(rl)} rays, expected {n}")
        row = []
        for r in rl:
            e, end = r["edge"], r["end"]
            if not 0 <= e < len(edges) or end not in (0, 1):
                _fail(name, f"bad ray {r}")
            if edges[e][end] != i:
                _fail(name, f"ray {r} listed at vertex {i} but the edge end is elsewhere")
            if (e, end) in seen:
                _fail(name, f"ray {r} listed twice")
            seen.add((e, end))
            row.append((e, end))
        rays.append(tuple(row))
    if len(seen) != 2 * len(edges):
        _fail(name, "every edge must own exactly two rays")

    a1, a2 = (tuple(map(float, v)) for v in doc["lattice_vectors"])
    lengths = []
    for u, v, (o1, o2) in edges:
        dx = positions[v][0] + o1 * a1[0] + o2 * a2[0] - positions[u][0]
        dy = positions[v][1] + o1 * a1[1] + o2 * a2[1] - positions[u][1]
        lengths.append(math.hypot(dx, dy))
    if max(lengths) - min(lengths) > 1e-6:
        _fail(name, "edges have unequal lengths")

    sc = doc["supercell"]
    supercell = (_int_pair(sc[0], name, "supercell row"), _int_pair(sc[1], name, "supercell row"))
    det = supercell[0][0] * supercell[1][1] - supercell[0][1] * supercell[1][0]
    if det == 0:
        _fail(name, "singular supercell")

    rots = []
    for k, r in enumerate(doc["rotations"]):
        lin = (_int_pair(r["linear"][0], name, "linear row"), _int_pair(r["linear"][1], name, "linear row"))
        vm = r["vertex_map"]
        targets = tuple(v["target"] for v in vm)
        offsets = tuple(_int_pair(v["offset"], name, "vertex offset") for v in vm)
        if sorted(targets) != list(range(m)):
            _fail(name, f"rotation {k} vertex map is not a permutation")
        ray_map = tuple(tuple(p) for p in r["ray_map"])
        if len(ray_map) != m or any(sorted(p) != list(range(n)) for p in ray_map):
            _fail(name, f"rotation {k} ray map is not a permutation")
        rots.append(Rotation(lin, targets, offsets, ray_map, float(r.get("angle_deg", 0.0))))
    if not rots:
        _fail(name, "rotation list is empty")
    ident = rots[0]
    if (
        ident.linear != ((1, 0), (0, 1))
        or ident.targets != tuple(range(m))
        or any(o != (0, 0) for o in ident.offsets)
        or any(p != tuple(range(n)) for p in ident.ray_map)
    ):
        _fail(name, "first rotation must be the identity")

    spec = TilingSpec(
        name=name,
        wallpaper_group=str(doc["wallpaper_group"]),
        rotation_group=str(doc["rotation_group"]),
        scan_by_default=bool(doc.get("scan_by_default", True)),
        lattice_vectors=(a1, a2),
        positions=positions,
        edges=tuple(edges),
        rays=tuple(rays),
        supercell=supercell,
        exclude_radius_multiples_of=doc.get("exclude_radius_multiples_of"),
        rotations=tuple(rots),
    )
    _check_rotations(spec)
    if closure_checksum(doc["rotations"]) != doc.get("closure_checksum"):
        _fail(name, "closure checksum mismatch")
    return spec


def _check_rotations(spec: TilingSpec) -> None:
    name = spec.name
    keys = {r.key() for r in spec.rotations}
    if len(keys) != len(spec.rotations):
        _fail(name, "duplicate rotations")
    for g in spec.rotations:
        for h in spec.rotations:
            if g.compose(h).key() not in keys:
                _fail(name, "rotation set is not closed under composition")
    (a1x, a1y), (a2x, a2y) = spec.lattice_vectors
    for g in spec.rotations:
        # geometry: vertex i maps onto vertex target + offset under the angle
        t = math.radians(g.angle_deg)
        cs, sn = math.cos(t), math.sin(t)
        for i, (px, py) in enumerate(spec.positions):
            qx, qy = cs * px - sn * py, sn * px + cs * py
            j = g.targets[i]
            o1, o2 = g.offsets[i]
            ex = spec.positions[j][0] + o1 * a1x + o2 * a2x
            ey = spec.positions[j][1] + o1 * a1y + o2 * a2y
            if math.hypot(qx - ex, qy - ey) > 1e-6:
                _fail(name, f"rotation by {g.angle_deg} misplaces vertex {i}")
        # edges map to edges, rays to the matching rays
        (a, b), (c, d) = g.linear
        for e, (u, v, (o1, o2)) in enumerate(spec.edges):
            ru = spec.rays[u].index((e, 0))
            rv = spec.rays[v].index((e, 1))
            ju, jv = g.targets[u], g.targets[v]
            eu, endu = spec.rays[ju][g.ray_map[u][ru]]
            ev, endv = spec.rays[jv][g.ray_map[v][rv]]
            if eu != ev or endu == endv:
                _fail(name, f"rotation by {g.angle_deg} breaks edge {e}")
            tu, tv = g.offsets[u], g.offsets[v]
            off = (a * o1 + b * o2 + tv[0] - tu[0], c * o1 + d * o2 + tv[1] - tu[1])
            want = spec.edges[eu][2]
            if endu == 1:
                off = (-off[0], -off[1])
            if off != want:
                _fail(name, f"rotation by {g.angle_deg} maps edge {e} to the wrong cell")
        # the torus must be invariant
        for row in spec.supercell:
            img = (a * row[0] + b * row[1], c * row[0] + d * row[1])
            if not _in_lattice(img, spec.supercell):
                _fail(name, f"rotation by {g.angle_deg} does not preserve the supercell")


def _in_lattice(v, rows) -> bool:
    (p, q), (r, s) = rows
    det = p * s - q * r
    # solve v = x*row0 + y*row1
    x_num = v[0] * s - v[1] * r
    y_num = p * v[1] - q * v[0]
    return x_num % det == 0 and y_num % det == 0


def load_tiling_file(path: str | Path) -> TilingSpec:
    with open(path, encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise TilingDataError(f"{path}: not valid JSON ({exc})") from None
    try:
        return parse_tiling(doc)
    except (KeyError, TypeError, IndexError) as exc:
        raise TilingDataError(f"{path}: malformed tiling document ({exc!r})") from None


def load_tiling(name: str) -> TilingSpec:
    """Load a shipped tiling by name (spaces or underscores accepted)."""
    key = name.replace("_", " ").strip().lower()
    if key not in TILING_NAMES:
        raise ValueError(f"unknown tiling {name!r}; choose from {', '.join(TILING_NAMES)}")
    return _load_shipped(key)


@lru_cache(maxsize=None)
def _load_shipped(key: str) -> TilingSpec:
    ref = resources.files("subcodes.lattice") / "data" / (key.replace(" ", "_") + ".json")
    with resources.as_file(ref) as path:
        return load_tiling_file(path)
