"""Acceptance criteria.

Each test carries a ``criterion`` marker; the terminal summary prints one
PASS/FAIL line per criterion with the measured values.  Reference values
come from the published tables and formulas; tolerances are exact.
"""

import itertools
import random

import pytest

from conftest import assert_code_invariants, random_ops
from subcodes.codegen import compute_subsystem_code
from subcodes.lattice import build_lattice, count_orbit_representatives, total_labelings
from subcodes.optimize import (
    centralizer_generators,
    compute_pseudogenerators,
    optimize_logical_qubits,
    pseudo_product,
)
from subcodes.reference import brute_force_distance, group_equal
from subcodes.scan import ScanConfig, run_scan, scan_all_walkers

TOTAL_LABELINGS = {
    "quadrille": 14,
    "truncated quadrille": 625,
    "snub quadrille": 2825761,
    "isosnub quadrille": 1681,
    "hextille": 25,
    "truncated hextille": 15625,
    "deltille": 122,
    "hexadeltille": 2744,
    "rhombihexadeltille": 7529536,
}

ORBIT_COUNTS = {
    "quadrille": 10,
    "truncated quadrille": 155,
    "isosnub quadrille": 743,
    "hextille": 11,
    "truncated hextille": 2392,
    "deltille": 58,
    "hexadeltille": 594,
}

ORBIT_COUNTS_LARGE = {"snub quadrille": 706881, "rhombihexadeltille": 904741}

MAX_RADIUS_QUBITS = {
    "quadrille": (4, 64),
    "truncated quadrille": (6, 576),
    "snub quadrille": (5, 200),
    "isosnub quadrille": (8, 768),
    "hextille": (10, 600),
    "truncated hextille": (5, 600),
    "deltille": (8, 256),
    "hexadeltille": (3, 108),
    "rhombihexadeltille": (3, 162),
}


def _mismatches(got, want):
    return {k: (got[k], want[k]) for k in want if got[k] != want[k]}


@pytest.mark.criterion("1", "labeling combinatorics")
def test_labeling_combinatorics(record_property):
    got = {name: total_labelings(name) for name in TOTAL_LABELINGS}
    bad = _mismatches(got, TOTAL_LABELINGS)
    record_property("detail", f"mismatches (got, expected): {bad}" if bad else "9/9 exact")
    assert not bad


@pytest.mark.criterion("2", "orbit counts, small tilings")
def test_orbit_counts(record_property):
    got = {name: count_orbit_representatives(name) for name in ORBIT_COUNTS}
    bad = _mismatches(got, ORBIT_COUNTS)
    record_property("detail", f"mismatches (got, expected): {bad}" if bad else "7/7 exact")
    assert not bad


@pytest.mark.criterion("2b", "orbit counts, snub quadrille and rhombihexadeltille")
def test_orbit_counts_large(record_property):
    got = {name: count_orbit_representatives(name) for name in ORBIT_COUNTS_LARGE}
    bad = _mismatches(got, ORBIT_COUNTS_LARGE)
    record_property("detail", f"mismatches (got, expected): {bad}" if bad else "2/2 exact")
    assert not bad


@pytest.mark.criterion("3", "vertex counts at the largest scanned radius")
def test_vertex_counts(record_property):
    got = {name: build_lattice(name, r).num_vertices for name, (r, _) in MAX_RADIUS_QUBITS.items()}
    want = {name: q for name, (_, q) in MAX_RADIUS_QUBITS.items()}
    bad = _mismatches(got, want)
    record_property("detail", f"mismatches (got, expected): {bad}" if bad else "9/9 exact")
    assert not bad


@pytest.mark.criterion("4", "quadrille radius 2: one labeling, 1 logical qubit at distance 4")
def test_quadrille_radius_2(record_property):
    recs = list(run_scan(ScanConfig("quadrille", 2)))
    record_property("detail", "; ".join(f"{r.labeling} l={r.n_logical} d={list(r.distances)}" for r in recs))
    assert len(recs) == 1
    assert recs[0].num_qubits == 16
    assert recs[0].distances == (4,)


@pytest.mark.criterion("5", "truncated quadrille radius 1: distance 3 and 4 codes with 1 logical qubit")
def test_truncated_quadrille_radius_1(record_property):
    recs = list(run_scan(ScanConfig("truncated quadrille", 1)))
    single = [r for r in recs if r.n_logical == (2 * 1 - 1) ** 2]
    d3 = [r for r in single if r.distances[-1] == 3]
    d4 = [r for r in single if r.distances[-1] == 4]
    record_property("detail", f"{len(recs)} records; l=1 at d3: {len(d3)}, at d4: {len(d4)}")
    assert recs and recs[0].num_qubits == 16
    assert d3 and d4


def _hextille_l(rec, d):
    return rec.distance_counts.get(d, 0)


@pytest.mark.criterion("6a", "hextille radius 2: distance-4 code with r(r+3)=10 logical qubits")
def test_hextille_radius_2(record_property):
    r = 2
    recs = list(run_scan(ScanConfig("hextille", r)))
    best = max((_hextille_l(x, 4) for x in recs), default=0)
    record_property("detail", "; ".join(
        f"{x.labeling} l={x.n_logical} d={list(x.distances)}" for x in recs) + f"; max l4={best}")
    assert recs and recs[0].num_qubits == 24
    assert any(_hextille_l(x, 4) == r * (r + 3) for x in recs)


@pytest.mark.criterion("6b", "hextille radius 3 (cutoff 5): distance-3 code with (r-1)(r-2)/2=1 logical qubit")
def test_hextille_radius_3(record_property):
    r = 3
    recs = list(run_scan(ScanConfig("hextille", r, cutoff=5)))
    record_property("detail", "; ".join(f"{x.labeling} l={x.n_logical} d={list(x.distances)}" for x in recs))
    assert recs and recs[0].num_qubits == 54
    assert any(_hextille_l(x, 3) == (r - 1) * (r - 2) // 2 for x in recs)


@pytest.mark.criterion("7", "deltille radii 1, 2, 4: no records")
def test_deltille_empty(record_property):
    counts = {r: len(list(run_scan(ScanConfig("deltille", r)))) for r in (1, 2, 4)}
    with pytest.raises(ValueError):
        ScanConfig("deltille", 3).validate()
    record_property("detail", f"records per radius {counts}; radius 3 rejected")
    assert all(v == 0 for v in counts.values())


@pytest.mark.criterion("8", "oracle equivalence on 500 random measurement sets, N <= 8")
def test_oracle_equivalence(record_property):
    rng = random.Random(20240817)
    failures = 0
    with_logicals = 0
    for _ in range(500):
        n = rng.randint(1, 8)
        m = random_ops(rng, n, rng.randint(0, 2 * n), density=rng.choice([0.25, 0.4, 0.6]))
        code = compute_subsystem_code(m, num_qubits=n)
        try:
            assert_code_invariants(code, m)
            assert group_equal(list(code.stabilizers) + code.gauge_members(), m) if m else True
            assert code.n_stab + code.n_gauge + code.n_logical == n
            if code.logical_pairs:
                with_logicals += 1
                _, prof = optimize_logical_qubits(code)
                assert prof.minimum == brute_force_distance(code)
        except AssertionError:
            failures += 1
    record_property("detail", f"500 sets, {with_logicals} with logical qubits, {failures} failures")
    assert failures == 0


def _random_commuting(rng, n):
    code = compute_subsystem_code(random_ops(rng, n, rng.randint(0, 2 * n)), num_qubits=n)
    # stabilizers plus one member of each pair still commute pairwise
    picks = [p.first for p in code.gauge_pairs]
    picks += [p.first for p in code.logical_pairs if rng.random() < 0.5]
    return list(code.stabilizers) + picks


@pytest.mark.criterion("9", "pseudo-generator law on 100 random commuting sets, N <= 10")
def test_pseudogenerator_law(record_property):
    rng = random.Random(77)
    wrong_count = []
    weight_violations = 0
    for _ in range(100):
        n = rng.randint(1, 10)
        s = _random_commuting(rng, n)
        cent = compute_subsystem_code(s, num_qubits=n)
        assert cent.n_gauge == 0
        pg = compute_pseudogenerators(centralizer_generators(cent), num_qubits=n)
        if len(pg) != n:
            wrong_count.append((n, len(pg)))
        for r in range(1, min(len(pg), 3) + 1):
            for chosen in itertools.combinations(pg.generators, r):
                weight_violations += sum(1 for op in pseudo_product(chosen) if op.weight < r)
    record_property(
        "detail",
        f"|G|!=N in {len(wrong_count)}/100 (first few (N,|G|): {wrong_count[:4]}); "
        f"weight-law violations: {weight_violations}",
    )
    assert weight_violations == 0
    assert not wrong_count


@pytest.mark.criterion("10", "walker determinism, quadrille radius 2 with 1, 2, 4 walkers")
def test_walker_determinism(tmp_path, record_property):
    blobs = {}
    for w in (1, 2, 4):
        out = tmp_path / f"w{w}.jsonl"
        scan_all_walkers(ScanConfig("quadrille", 2, walkers=w, out=str(out)))
        blobs[w] = out.read_bytes()
    record_property("detail", f"sizes {[len(b) for b in blobs.values()]} bytes")
    assert blobs[1] == blobs[2] == blobs[4]
    assert blobs[1]


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
