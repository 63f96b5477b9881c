"""Command-line entry point: ``subcodes <command> ...``."""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import _kernels
from .codegen import compute_subsystem_code
from .optimize import optimize_logical_qubits
from .pauli import PauliParseError, format_pauli, read_operator_list


def _cmd_scan(args) -> int:
    from .scan import ScanConfig, scan_all_walkers, scan_to_file

    cfg = ScanConfig(
        tiling=args.tiling,
        radius=args.radius,
        min_distance=args.min_distance,
        walkers=args.walkers,
        walker_id=args.walker_id if args.walker_id is not None else 0,
        out=args.out,
        cutoff=args.cutoff,
        allow_excluded=args.allow_excluded,
    )
    try:
        cfg.validate()
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    t0 = time.perf_counter()
    if args.walker_id is None:
        stats = scan_all_walkers(cfg, processes=args.processes)
    else:
        stats = scan_to_file(cfg)
    elapsed = time.perf_counter() - t0
    report = {**stats.as_dict(), "seconds": round(elapsed, 3)}
    print(json.dumps(report), file=sys.stderr)
    return 0


def _cmd_merge(args) -> int:
    from .scan import merge_shards

    n = merge_shards(args.shards, args.out)
    print(f"merged {n} records into {args.out}", file=sys.stderr)
    return 0


def _cmd_summarize(args) -> int:
    from .scan import format_summary, read_records, summarize

    summary = summarize(read_records(args.input))
    sys.stdout.write(format_summary(summary, csv=args.csv))
    return 0


def _cmd_codeinfo(args) -> int:
    try:
        ops = read_operator_list(args.ops)
    except (OSError, PauliParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if not ops and args.num_qubits is None:
        print("error: empty operator list; pass --num-qubits", file=sys.stderr)
        return 2
    code = compute_subsystem_code(ops, num_qubits=args.num_qubits)
    opt, profile = optimize_logical_qubits(code, cutoff=args.cutoff)
    print(f"qubits      {code.num_qubits}")
    print(f"stabilizers {code.n_stab}")
    print(f"gauge pairs {code.n_gauge}")
    print(f"logical     {code.n_logical}")
    dist = " ".join(map(str, profile.distances)) or "-"
    if profile.censored:
        dist += f"  (last {profile.censored} are lower bounds)"
    print(f"distances   {dist}")
    if args.show_operators:
        for s in opt.stabilizers:
            print(f"S  {format_pauli(s)}")
        for g in opt.gauge_pairs:
            print(f"G  {format_pauli(g.first)} {format_pauli(g.second)}")
        for p, d in zip(opt.logical_pairs, profile.distances):
            print(f"L  {format_pauli(p.first)} {format_pauli(p.second)}  d={d}")
    if args.verify:
        return _verify(code, profile)
    return 0


def _verify(code, profile) -> int:
    from .reference import (
        MAX_EXHAUSTIVE_QUBITS,
        TooLargeError,
        brute_force_distance,
        brute_force_optimal_profile,
    )

    if not code.logical_pairs:
        print("verify      skipped (no logical qubits)")
        return 0
    ok = True
    cap = None if code.num_qubits <= MAX_EXHAUSTIVE_QUBITS else profile.distances[0]
    try:
        d = brute_force_distance(code, max_weight=cap)
        good = d == profile.distances[0]
        ok &= good
        print(f"verify      brute-force distance {d}: {'ok' if good else 'MISMATCH'}")
    except TooLargeError:
        ok = False
        print("verify      brute-force distance: no error within the reported distance (MISMATCH)")
    try:
        best = brute_force_optimal_profile(code)
        good = best == profile.distances
        ok &= good
        print(f"verify      brute-force profile {list(best)}: {'ok' if good else 'MISMATCH'}")
    except TooLargeError:
        print("verify      profile check skipped (instance too large)")
    return 0 if ok else 1


def _cmd_orbits(args) -> int:
    from .lattice import count_orbit_representatives, load_tiling, total_labelings

    spec = load_tiling(args.tiling)
    print(f"{spec.name}: {total_labelings(spec)} labelings, "
          f"{count_orbit_representatives(spec.name)} orbit representatives under {spec.rotation_group}")
    return 0


def _cmd_tilings(args) -> int:
    from .lattice import TILING_NAMES, load_tiling, total_labelings

    for name in TILING_NAMES:
        t = load_tiling(name)
        flag = "" if t.scan_by_default else "  (not scanned by default)"
        print(f"{name:24s} m={t.vertex_classes:<3d} n={t.rays_per_vertex}  {t.wallpaper_group:4s} "
              f"labelings={total_labelings(t):<12d} qubits(r)={t.qubits_per_radius(1)}r^2{flag}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="subcodes", description=__doc__)
    p.add_argument("--backend", choices=_kernels.available_backends(),
                   help="kernel implementation (default: SUBCODES_BACKEND or numba)")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("scan", help="scan the labelings of one tiling at one radius")
    s.add_argument("--tiling", required=True)
    s.add_argument("--radius", type=int, required=True)
    s.add_argument("--min-distance", type=int, default=3)
    s.add_argument("--walkers", type=int, default=1)
    s.add_argument("--walker-id", type=int, default=None,
                   help="run only this walker (omit to run all walkers and merge)")
    s.add_argument("--cutoff", type=int, default=None,
                   help="give up on distances above this value (recorded as cutoff+1)")
    s.add_argument("--processes", type=int, default=None, help="parallel processes when running all walkers")
    s.add_argument("--allow-excluded", action="store_true", help="permit tilings not scanned by default")
    s.add_argument("--out", required=True)
    s.set_defaults(func=_cmd_scan)

    m = sub.add_parser("merge", help="merge walker shard files in ordinal order")
    m.add_argument("shards", nargs="+")
    m.add_argument("--out", required=True)
    m.set_defaults(func=_cmd_merge)

    c = sub.add_parser("codeinfo", help="code parameters for an operator-list file")
    c.add_argument("--ops", required=True)
    c.add_argument("--num-qubits", type=int, default=None)
    c.add_argument("--cutoff", type=int, default=None)
    c.add_argument("--verify", action="store_true", help="cross-check against brute force (small codes)")
    c.add_argument("--show-operators", action="store_true")
    c.set_defaults(func=_cmd_codeinfo)

    z = sub.add_parser("summarize", help="group scan records into a table")
    z.add_argument("--in", dest="input", required=True)
    z.add_argument("--csv", action="store_true", help="plot-ready CSV instead of a table")
    z.set_defaults(func=_cmd_summarize)

    o = sub.add_parser("orbits", help="count rotation-orbit representatives")
    o.add_argument("--tiling", required=True)
    o.set_defaults(func=_cmd_orbits)

    t = sub.add_parser("tilings", help="list the known tilings")
    t.set_defaults(func=_cmd_tilings)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.backend:
        _kernels.set_backend(args.backend)
    return args.func(args)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
