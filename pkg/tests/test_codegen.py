import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import assert_code_invariants, random_ops
from subcodes.codegen import (
    ConjugalPair,
    EliminationTrace,
    SubsystemCode,
    compute_subsystem_code,
    gaussian_eliminate,
    pivot_operator,
)
from subcodes.pauli import PauliOperator, anti, parse_pauli


def ops(*texts):
    return [parse_pauli(t) for t in texts]


def bacon_shor_3x3():
    def at(r, c):
        return 3 * r + c

    out = []
    for r in range(3):
        for c in range(2):
            x = (1 << at(r, c)) | (1 << at(r, c + 1))
            out.append(PauliOperator(9, x, 0))
    for c in range(3):
        for r in range(2):
            z = (1 << at(r, c)) | (1 << at(r + 1, c))
            out.append(PauliOperator(9, 0, z))
    return out


def test_conjugal_pair_requires_anticommutation():
    with pytest.raises(ValueError):
        ConjugalPair(parse_pauli("XX"), parse_pauli("ZZ"))
    p = ConjugalPair(parse_pauli("XI"), parse_pauli("ZI"))
    a, b = p
    assert (a, b) == (p.first, p.second)
    assert p.swapped().first == b


def test_empty_measurements_give_free_qubits():
    code = compute_subsystem_code([], num_qubits=3)
    assert (code.n_stab, code.n_gauge, code.n_logical) == (0, 0, 3)
    assert_code_invariants(code, [])
    with pytest.raises(ValueError):
        compute_subsystem_code([])


def test_commuting_measurements_become_stabilizers():
    # every measurement commutes with every other: none can enter a gauge pair
    m = ops("ZZI", "IZZ")
    code = compute_subsystem_code(m)
    assert (code.n_stab, code.n_gauge, code.n_logical) == (2, 0, 1)
    assert_code_invariants(code, m)


def test_redundant_and_identity_measurements_dropped():
    m = ops("ZZI", "IZZ", "ZIZ", "III", "ZZI")
    code = compute_subsystem_code(m)
    assert code.n_stab == 2
    assert_code_invariants(code, m)


def test_single_gauge_pair():
    m = ops("XI", "ZI")
    code = compute_subsystem_code(m)
    assert (code.n_stab, code.n_gauge, code.n_logical) == (0, 1, 1)
    assert_code_invariants(code, m)


def test_bacon_shor():
    m = bacon_shor_3x3()
    code = compute_subsystem_code(m)
    assert (code.n_stab, code.n_gauge, code.n_logical) == (4, 4, 1)
    assert_code_invariants(code, m)


def test_mixed_sizes_rejected():
    with pytest.raises(ValueError):
        compute_subsystem_code(ops("XX", "XXX"))


def test_gaussian_eliminate_pivots():
    rows = ops("ZZI", "IZZ")
    trace = EliminationTrace()
    gaussian_eliminate(rows, 0, trace)
    assert len(trace) == 2
    # lowest qubit first; a Z bit on the pivot qubit gives an X-letter pivot
    assert trace.indices == [0, 1] and trace.letters == [0, 0]
    for k, (q, letter) in enumerate(zip(trace.indices, trace.letters)):
        piv = pivot_operator(3, q, letter)
        for j, row in enumerate(rows):
            assert anti(row, piv) == (j == k)


def test_gaussian_eliminate_rejects_bad_start():
    with pytest.raises(ValueError):
        gaussian_eliminate(ops("ZZ"), 1, EliminationTrace())


def test_with_logical_pairs_keeps_rest():
    code = compute_subsystem_code(ops("ZZI", "IZZ"))
    p = code.logical_pairs[0].swapped()
    c2 = code.with_logical_pairs([p])
    assert isinstance(c2, SubsystemCode)
    assert c2.logical_pairs == (p,) and c2.stabilizers == code.stabilizers


def test_random_invariants():
    rng = random.Random(7)
    for _ in range(300):
        n = rng.randint(1, 9)
        m = random_ops(rng, n, rng.randint(0, 12))
        code = compute_subsystem_code(m, num_qubits=n)
        assert_code_invariants(code, m)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 80), st.integers(0, 2**32), st.integers(0, 30))
def test_invariants_hypothesis(n, seed, k):
    # wide registers exercise the multi-word paths
    rng = random.Random(seed)
    m = random_ops(rng, n, k, density=0.2)
    code = compute_subsystem_code(m, num_qubits=n)
    assert_code_invariants(code, m)


def test_order_does_not_change_parameters():
    rng = random.Random(3)
    for _ in range(50):
        m = random_ops(rng, 7, 9)
        a = compute_subsystem_code(m, num_qubits=7)
        b = compute_subsystem_code(m[::-1], num_qubits=7)
        assert (a.n_stab, a.n_gauge, a.n_logical) == (b.n_stab, b.n_gauge, b.n_logical)
