"""Regenerate the tiling data files under src/subcodes/lattice/data.

Each tiling is built from an explicit construction with unit edge length:
lattice vectors, the unit-cell vertices, and a rotation centre at the origin.
Edges are all vertex pairs at distance one.  Rays at every vertex are ordered
counter-clockwise starting from the positive x axis.  Rotations are the
powers of the generator about the origin; each is stored as an integer
action on (cell, vertex, ray).

Run:  python tools/gen_tilings.py
"""

from __future__ import annotations

import json
import math
from pathlib import Path

import numpy as np

OUT = Path(__file__).resolve().parents[1] / "src" / "subcodes" / "lattice" / "data"
S2, S3 = math.sqrt(2), math.sqrt(3)
TOL = 1e-7


def polar(r, deg, centre=(0.0, 0.0)):
    t = math.radians(deg)
    return (centre[0] + r * math.cos(t), centre[1] + r * math.sin(t))


def hex_lattice(a):
    return (a, 0.0), (a / 2, a * S3 / 2)


def constructions():
    c = {}
    c["quadrille"] = dict(
        a=((1.0, 0.0), (0.0, 1.0)), pts=[(0.5, 0.5)], order=4,
        wallpaper="p4m", rotation="p4", supercell=[[2, 0], [0, 2]],
    )
    a = 1 + S2
    c["truncated quadrille"] = dict(
        a=((a, 0.0), (0.0, a)),
        pts=[polar(1 / S2, d, (a / 2, a / 2)) for d in (0, 90, 180, 270)],
        order=4, wallpaper="p4m", rotation="p4", supercell=[[2, 0], [0, 2]],
    )
    a = math.sqrt(2 + S3)
    pts = [polar(1 / S2, 45 + 15 + 90 * k) for k in range(4)]
    pts += [polar(1 / S2, 45 - 15 + 90 * k, (a / 2, a / 2)) for k in range(4)]
    c["snub quadrille"] = dict(
        a=((a, 0.0), (0.0, a)), pts=pts, order=4,
        wallpaper="p4g", rotation="p4", supercell=[[1, 1], [-1, 1]],
    )
    c["isosnub quadrille"] = dict(
        a=((1.0, 0.0), (0.5, 1 + S3 / 2)), pts=[(0.5, 0.5), (0.5, -0.5)], order=2,
        wallpaper="cmm", rotation="p2", supercell=[[3, 0], [-1, 2]],
    )
    c["hextille"] = dict(
        a=((S3, 0.0), (S3 / 2, 1.5)), pts=[(0.0, 1.0), (S3 / 2, 0.5)], order=6,
        wallpaper="p6m", rotation="p6", supercell=[[1, 1], [-1, 2]],
    )
    a = 2 + S3
    a1, a2 = hex_lattice(a)
    g1 = ((a1[0] + a2[0]) / 3, (a1[1] + a2[1]) / 3)
    g2 = (2 * g1[0], 2 * g1[1])
    pts = [polar(1 / S3, 30 + 120 * k, g1) for k in range(3)]
    pts += [polar(1 / S3, 210 + 120 * k, g2) for k in range(3)]
    c["truncated hextille"] = dict(
        a=(a1, a2), pts=pts, order=6,
        wallpaper="p6m", rotation="p6", supercell=[[2, 0], [0, 2]],
    )
    c["deltille"] = dict(
        a=hex_lattice(1.0), pts=[(0.0, 0.0)], order=6,
        wallpaper="p6m", rotation="p6", supercell=[[2, 0], [0, 2]],
        exclude_multiples_of=3,
    )
    c["hexadeltille"] = dict(
        a=hex_lattice(2.0), pts=[polar(1, 60 * k) for k in range(3)], order=6,
        wallpaper="p6m", rotation="p6", supercell=[[2, 0], [0, 2]],
    )
    c["rhombihexadeltille"] = dict(
        a=hex_lattice(1 + S3), pts=[polar(1, 30 + 60 * k) for k in range(6)], order=6,
        wallpaper="p6m", rotation="p6", supercell=[[1, 1], [-1, 2]],
    )
    # triangular lattice with an index-7 sublattice of sites removed
    t1, t2 = np.array([1.0, 0.0]), np.array([0.5, S3 / 2])
    u1, u2 = 2 * t1 + t2, -t1 + 3 * t2
    pts = []
    for i in range(-3, 4):
        for j in range(-3, 4):
            p = i * t1 + j * t2
            pts.append(tuple(p))
    c["snub hextille"] = dict(
        a=(tuple(u1), tuple(u2)), pts=pts, order=6, drop_lattice_points=True,
        wallpaper="p6", rotation="p6", supercell=[[1, 1], [-1, 2]], scan_by_default=False,
    )
    a = 3 + S3
    a1, a2 = hex_lattice(a)
    g1 = ((a1[0] + a2[0]) / 3, (a1[1] + a2[1]) / 3)
    g2 = (2 * g1[0], 2 * g1[1])
    pts = [polar(1, 60 * k, g1) for k in range(6)] + [polar(1, 60 * k, g2) for k in range(6)]
    c["truncated hexadeltille"] = dict(
        a=(a1, a2), pts=pts, order=6,
        wallpaper="p6m", rotation="p6", supercell=[[1, 1], [-1, 2]], scan_by_default=False,
    )
    return c


def build(name, spec):
    A = np.array(spec["a"], dtype=float).T  # columns are lattice vectors
    Ai = np.linalg.inv(A)
    basis: list[np.ndarray] = []
    for p in spec["pts"]:
        f = Ai @ np.array(p, dtype=float)
        frac = f - np.floor(f + TOL)
        if spec.get("drop_lattice_points") and np.allclose(frac, 0, atol=1e-6):
            continue
        q = A @ frac
        if not any(np.allclose(q, b, atol=1e-6) for b in basis):
            basis.append(q)

    def locate(p):
        f = Ai @ p
        cell = np.floor(f + 1e-6)
        q = A @ (f - cell)
        for i, b in enumerate(basis):
            if np.allclose(q, b, atol=1e-5):
                return i, [int(cell[0]), int(cell[1])]
        for i, b in enumerate(basis):  # wrap-around at the cell border
            for d1 in (-1, 0, 1):
                for d2 in (-1, 0, 1):
                    if np.allclose(q, b + A @ np.array([d1, d2]), atol=1e-5):
                        return i, [int(cell[0]) + d1, int(cell[1]) + d2]
        raise RuntimeError(f"{name}: point {p} is not a vertex")

    rays = []  # per vertex: list of (angle, nbr, offset, vec)
    for i, b in enumerate(basis):
        rs = []
        for j, bb in enumerate(basis):
            for c1 in range(-3, 4):
                for c2 in range(-3, 4):
                    d = bb + A @ np.array([c1, c2]) - b
                    if abs(np.linalg.norm(d) - 1) < 1e-6:
                        ang = math.atan2(d[1], d[0]) % (2 * math.pi)
                        if ang > 2 * math.pi - 1e-9:
                            ang = 0.0
                        rs.append((ang, j, [c1, c2], d))
        rs.sort(key=lambda t: t[0])
        rays.append(rs)

    edges = []
    ray_edge = {}
    for i, rs in enumerate(rays):
        for ri, (_, j, off, d) in enumerate(rs):
            if (i, ri) in ray_edge:
                continue
            back = [rj for rj, r in enumerate(rays[j]) if np.allclose(r[3], -d, atol=1e-6)]
            assert len(back) == 1
            e = len(edges)
            edges.append({"id": e, "u": i, "v": j, "offset": off})
            ray_edge[(i, ri)] = (e, 0)
            ray_edge[(j, back[0])] = (e, 1)

    rotations = []
    for k in range(spec["order"]):
        t = 2 * math.pi * k / spec["order"]
        R = np.array([[math.cos(t), -math.sin(t)], [math.sin(t), math.cos(t)]])
        L = Ai @ R @ A
        Li = np.rint(L).astype(int)
        assert np.allclose(L, Li, atol=1e-6), (name, k)
        vmap, rmap = [], []
        for i, b in enumerate(basis):
            j, off = locate(R @ b)
            vmap.append({"target": j, "offset": off})
            perm = []
            for r in rays[i]:
                d = R @ r[3]
                hit = [x for x, rr in enumerate(rays[j]) if np.allclose(rr[3], d, atol=1e-6)]
                assert len(hit) == 1
                perm.append(hit[0])
            rmap.append(perm)
        rotations.append({
            "angle_deg": round(360 * k / spec["order"], 6),
            "linear": Li.tolist(),
            "vertex_map": vmap,
            "ray_map": rmap,
        })

    from subcodes.lattice.tiling import closure_checksum  # noqa: E402

    doc = {
        "format": "subcodes-tiling",
        "version": 1,
        "name": name,
        "wallpaper_group": spec["wallpaper"],
        "rotation_group": spec["rotation"],
        "scan_by_default": spec.get("scan_by_default", True),
        "lattice_vectors": [list(map(float, A[:, 0])), list(map(float, A[:, 1]))],
        "vertices": [
            {"id": i, "class": i, "position": [float(b[0]), float(b[1])]} for i, b in enumerate(basis)
        ],
        "edges": edges,
        "rays": [
            [{"edge": ray_edge[(i, ri)][0], "end": ray_edge[(i, ri)][1]} for ri in range(len(rs))]
            for i, rs in enumerate(rays)
        ],
        "supercell": spec["supercell"],
        "exclude_radius_multiples_of": spec.get("exclude_multiples_of"),
        "rotations": rotations,
    }
    doc["closure_checksum"] = closure_checksum(doc["rotations"])
    return doc


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for name, spec in constructions().items():
        doc = build(name, spec)
        path = OUT / (name.replace(" ", "_") + ".json")
        path.write_text(json.dumps(doc, indent=1) + "\n")
        print(f"{name}: {len(doc['vertices'])} vertices, {len(doc['rays'][0])} rays, "
              f"{len(doc['rotations'])} rotations -> {path.name}")


if __name__ == "__main__":
    main()
