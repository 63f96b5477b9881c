import math
import random

import pytest

from conftest import random_ops
from subcodes.codegen import compute_subsystem_code
from subcodes.pauli import parse_pauli
from subcodes.reference import (
    GroupSpan,
    TooLargeError,
    brute_force_distance,
    brute_force_omega,
    brute_force_optimal_profile,
    gf2_rank,
    group_contains,
    group_equal,
    weight_ascending,
)
from test_codegen import bacon_shor_3x3
from test_optimize import five_qubit_code


def P(*t):
    return [parse_pauli(s) for s in t]


def test_rank_and_membership():
    g = P("XXI", "IXX", "XIX")
    assert gf2_rank(g) == 2
    assert group_contains(g, parse_pauli("XIX"))
    assert not group_contains(g, parse_pauli("ZII"))
    span = GroupSpan.of(g)
    assert span.rank == 2
    assert parse_pauli("III") in span
    assert len(span.elements()) == 4 and span.elements()[0].is_identity()


def test_group_equal():
    assert group_equal(P("XX", "ZZ"), P("YY", "ZZ"))
    assert not group_equal(P("XX"), P("ZZ"))


def test_weight_ascending_counts():
    ops = list(weight_ascending(3))
    assert len(ops) == 4**3 - 1
    assert [o.weight for o in ops] == sorted(o.weight for o in ops)
    assert len(list(weight_ascending(4, 2))) == 4 * 3 + math.comb(4, 2) * 9


def test_known_distances():
    assert brute_force_distance(compute_subsystem_code(five_qubit_code())) == 3
    # nine qubits takes the weight-ascending path
    assert brute_force_distance(compute_subsystem_code(bacon_shor_3x3())) == 3


def test_distance_requires_logicals():
    with pytest.raises(ValueError):
        brute_force_distance(compute_subsystem_code(P("XX", "ZZ")))


def test_distance_cap():
    with pytest.raises(TooLargeError):
        brute_force_distance(compute_subsystem_code(bacon_shor_3x3()), max_weight=2)


def test_omega_of_stabilizer_element_is_none():
    assert brute_force_omega(P("ZZ"), parse_pauli("ZZ")) is None
    assert brute_force_omega(P("ZZ"), parse_pauli("XX")) == 1


def test_optimal_profile_limits():
    with pytest.raises(TooLargeError):
        brute_force_optimal_profile(compute_subsystem_code(bacon_shor_3x3()))
    code = compute_subsystem_code([], num_qubits=2)
    assert brute_force_optimal_profile(code) == (1, 1)


def test_exhaustive_and_ascending_paths_agree():
    # the same question, asked below and above the exhaustive threshold
    rng = random.Random(2)
    from subcodes.reference import _min_weight_undetectable

    for _ in range(30):
        n = rng.randint(2, 6)
        stabs = [s for s in compute_subsystem_code(random_ops(rng, n, 3), num_qubits=n).stabilizers]
        t = random_ops(rng, n, 1, 0.7)
        a = _min_weight_undetectable(stabs, t, n)
        found = next((e.weight for e in weight_ascending(n)
                      if not any(e.anticommutes(s) for s in stabs) and e.anticommutes(t[0])), None)
        assert a == found
