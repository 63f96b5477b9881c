"""Compare the numba and numpy kernel backends.

    python3 benchmarks/bench_kernels.py [--repeat 3] [--radius 2] [--labeling XXY/XXY]

Workloads:
  search  one minimum-weight query over the centralizer pseudo-generators of
          a hextille code (the inner loop of every scan step)
  orbits  orbit-representative filtering of the first 2**20 rhombihexadeltille
          ordinals (the enumeration front end of a scan)
Both backends must return identical results; the script checks that.
"""

from __future__ import annotations

import argparse
import statistics
import time

import numpy as np

from subcodes import _kernels
from subcodes.codegen import compute_subsystem_code
from subcodes.lattice import build_lattice, labeling_to_measurements, parse_labeling
from subcodes.lattice.labeling import labeling_scheme
from subcodes.optimize import compute_pseudogenerators
from subcodes.pauli import pack_words


def _timed(fn, repeat):
    out = fn()  # warm-up (triggers numba compilation or cache load)
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return out, statistics.median(times)


def search_workload(radius: int, labeling: str):
    lat = build_lattice("hextille", radius)
    code = compute_subsystem_code(labeling_to_measurements(lat, parse_labeling("hextille", labeling)),
                                  lat.num_qubits)
    pg = compute_pseudogenerators(code.all_operators())
    elems, counts = pg.element_table()
    # the optimizer's first query: every logical member is a target
    targets = pack_words(code.logical_members(), lat.num_qubits)
    label = f"search hextille {labeling} r={radius} (N={lat.num_qubits}, |G|={len(pg)})"
    return label, lambda b: _kernels.min_weight_search(elems, counts, targets, None, b)


def orbit_workload(size: int = 1 << 20):
    sch = labeling_scheme("rhombihexadeltille")
    label = f"orbits rhombihexadeltille [0, {size})"
    return label, lambda b: _kernels.orbit_rep_mask(0, size, sch.k, sch.m, sch.tables, sch.src, b)


def _same(a, b) -> bool:
    if isinstance(a, np.ndarray):
        return np.array_equal(a, b)
    return a[0] == b[0] and a[1] == b[1] and a[3] == b[3] and np.array_equal(a[2], b[2])


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--radius", type=int, default=2, help="hextille radius for the search workload")
    ap.add_argument("--labeling", default="XXY/XXY", help="hextille labeling for the search workload")
    args = ap.parse_args(argv)

    backends = _kernels.available_backends()
    if "numba" not in backends:
        print("numba is not importable; only the numpy backend can run")
    print(f"{'workload':58s} " + " ".join(f"{b:>10s}" for b in backends) + "   speedup")
    ok = True
    for label, fn in (search_workload(args.radius, args.labeling), orbit_workload()):
        results, times = {}, {}
        for b in backends:
            results[b], times[b] = _timed(lambda: fn(b), args.repeat)
        ok &= all(_same(results[backends[0]], results[b]) for b in backends)
        speed = f"{times['numpy'] / times['numba']:8.1f}x" if "numba" in times else "       -"
        print(f"{label:58s} " + " ".join(f"{times[b]:9.4f}s" for b in backends) + f"  {speed}")
    print("results identical across backends" if ok else "BACKEND MISMATCH")
    return 0 if ok else 1


if __name__ == "__main__":
    raise SystemExit(main())
