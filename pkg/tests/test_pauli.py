import pickle

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from subcodes.pauli import (
    PauliOperator,
    PauliParseError,
    anti,
    format_pauli,
    identity,
    multiply,
    pack_words,
    parse_operator_list,
    parse_pauli,
    read_operator_list,
    single_qubit,
    unpack_words,
    weight,
)

paulis = st.integers(1, 140).flatmap(
    lambda n: st.tuples(st.just(n), st.integers(0, 2**n - 1), st.integers(0, 2**n - 1))
).map(lambda t: PauliOperator(*t))


def pair(n):
    return st.tuples(
        st.builds(PauliOperator, st.just(n), st.integers(0, 2**n - 1), st.integers(0, 2**n - 1)),
        st.builds(PauliOperator, st.just(n), st.integers(0, 2**n - 1), st.integers(0, 2**n - 1)),
    )


def test_parse_and_format():
    p = parse_pauli("XIYZ")
    assert p.num_qubits == 4
    assert [p.letter(i) for i in range(4)] == list("XIYZ")
    assert format_pauli(p) == "XIYZ"
    assert p.weight == 3
    assert p.support == (0, 2, 3)
    assert str(p) == "XIYZ"


def test_lowercase_and_whitespace_rejected_reports_position():
    with pytest.raises(PauliParseError) as exc:
        parse_pauli("XXQ")
    assert exc.value.position == 2
    with pytest.raises(PauliParseError):
        parse_pauli("")


def test_single_qubit_products():
    x, y, z = (single_qubit(c, 0, 1) for c in "XYZ")
    assert x * z == y
    assert anti(x, z) and anti(x, y) and anti(y, z)
    assert not anti(x, x)
    assert (x * x).is_identity()


def test_single_qubit_validation():
    with pytest.raises(IndexError):
        single_qubit("X", 3, 3)
    with pytest.raises(ValueError):
        single_qubit("Q", 0, 3)


def test_size_mismatch():
    with pytest.raises(ValueError):
        multiply(parse_pauli("XX"), parse_pauli("XXX"))
    with pytest.raises(ValueError):
        anti(parse_pauli("XX"), parse_pauli("XXX"))


def test_mask_range_checked():
    with pytest.raises(ValueError):
        PauliOperator(2, 4, 0)


def test_immutable_and_hashable():
    p = parse_pauli("XZ")
    with pytest.raises(AttributeError):
        p.x = 0
    assert len({p, parse_pauli("XZ"), parse_pauli("ZX")}) == 2
    assert pickle.loads(pickle.dumps(p)) == p


def test_operator_list_file(tmp_path):
    f = tmp_path / "ops.txt"
    f.write_text("# comment\nXXI\n\nIZZ  # trailing\n")
    assert [format_pauli(o) for o in read_operator_list(f)] == ["XXI", "IZZ"]
    with pytest.raises(ValueError, match="line 2"):
        parse_operator_list("XX\nXXX\n")
    with pytest.raises(PauliParseError) as exc:
        parse_operator_list("XX\nXQ\n")
    assert exc.value.line == 2 and exc.value.position == 1


@given(paulis)
def test_roundtrip(p):
    assert parse_pauli(format_pauli(p)) == p
    assert weight(p) == sum(c != "I" for c in format_pauli(p))
    assert (p * p) == identity(p.num_qubits)


@given(st.integers(1, 70).flatmap(pair))
def test_anti_matches_letterwise_count(ab):
    a, b = ab
    clashes = sum(
        1 for q in range(a.num_qubits) if a.letter(q) != "I" and b.letter(q) != "I" and a.letter(q) != b.letter(q)
    )
    assert anti(a, b) == bool(clashes % 2)
    assert anti(a, b) == anti(b, a)
    assert a.commutes(b) != a.anticommutes(b)


@given(st.integers(1, 200).flatmap(pair))
def test_pack_unpack(ab):
    a, b = ab
    words = pack_words([a, b], a.num_qubits)
    assert words.dtype == np.uint64
    assert words.shape == (2, 2, (a.num_qubits + 63) // 64)
    assert unpack_words(words[0], a.num_qubits) == a
    assert unpack_words(words[1], a.num_qubits) == b
