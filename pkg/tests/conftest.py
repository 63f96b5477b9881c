import random

import pytest

from subcodes import _kernels
from subcodes.pauli import PauliOperator


def random_op(rng: random.Random, n: int, density: float = 0.4) -> PauliOperator:
    x = z = 0
    for q in range(n):
        if rng.random() < density:
            letter = rng.randint(1, 3)
            x |= (letter & 1) << q
            z |= (letter >> 1) << q
    return PauliOperator(n, x, z)


def random_ops(rng: random.Random, n: int, k: int, density: float = 0.4) -> list[PauliOperator]:
    return [random_op(rng, n, density) for _ in range(k)]


@pytest.fixture(params=_kernels.available_backends())
def backend(request):
    return request.param


_ACCEPTANCE: dict[str, tuple[str, str, str]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker and rep.when == "call":
        detail = dict(item.user_properties).get("detail", "")
        _ACCEPTANCE[marker.args[0]] = (marker.args[1], "PASS" if rep.passed else "FAIL", detail)


def _criterion_order(key: str):
    digits = "".join(ch for ch in key if ch.isdigit())
    return int(digits), key


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for key in sorted(_ACCEPTANCE, key=_criterion_order):
        title, verdict, detail = _ACCEPTANCE[key]
        line = f"criterion {key:<3} {verdict}  {title}"
        terminalreporter.write_line(f"{line}  [{detail}]" if detail else line)


def assert_code_invariants(code, measurements=None):
    """Structural invariants every constructed code must satisfy."""
    from subcodes.pauli import anti
    from subcodes.reference import gf2_rank, group_equal

    n = code.num_qubits
    assert code.n_stab + code.n_gauge + code.n_logical == n
    pairs = list(code.gauge_pairs) + list(code.logical_pairs)
    ops = code.all_operators()
    assert gf2_rank(ops) == len(ops)
    for s in code.stabilizers:
        assert not s.is_identity()
        assert all(not anti(s, o) for o in ops)
    for i, p in enumerate(pairs):
        assert anti(p.first, p.second)
        for j, other in enumerate(pairs):
            if i != j:
                assert not any(anti(a, b) for a in p for b in other)
    if measurements is not None:
        assert group_equal(list(code.stabilizers) + code.gauge_members(), list(measurements))
        for lop in code.logical_members():
            assert all(not anti(lop, m) for m in measurements)
