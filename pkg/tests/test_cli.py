import json

import pytest

from subcodes import _kernels
from subcodes.cli import main


def test_tilings(capsys):
    assert main(["tilings"]) == 0
    out = capsys.readouterr().out
    assert "rhombihexadeltille" in out and "not scanned by default" in out


def test_orbits(capsys):
    assert main(["orbits", "--tiling", "quadrille"]) == 0
    assert "14 labelings" in capsys.readouterr().out


def test_scan_merge_summarize(tmp_path, capsys):
    out = tmp_path / "q.jsonl"
    assert main(["scan", "--tiling", "quadrille", "--radius", "2", "--walkers", "2", "--out", str(out)]) == 0
    stats = json.loads(capsys.readouterr().err.strip().splitlines()[-1])
    assert stats["logged"] == 1
    shards = []
    for w in range(2):
        p = tmp_path / f"s{w}"
        assert main(["scan", "--tiling", "quadrille", "--radius", "2", "--walkers", "2",
                     "--walker-id", str(w), "--out", str(p)]) == 0
        shards.append(str(p))
    merged = tmp_path / "m.jsonl"
    assert main(["merge", *shards, "--out", str(merged)]) == 0
    assert merged.read_bytes() == out.read_bytes()
    capsys.readouterr()
    assert main(["summarize", "--in", str(out), "--csv"]) == 0
    assert capsys.readouterr().out.splitlines()[1] == "2,16,4,1,1"


def test_scan_rejects_bad_radius(tmp_path, capsys):
    assert main(["scan", "--tiling", "deltille", "--radius", "3", "--out", str(tmp_path / "x")]) == 2
    assert "multiple of 3" in capsys.readouterr().err


def test_codeinfo_verify(tmp_path, capsys):
    f = tmp_path / "ops.txt"
    f.write_text("# five-qubit code\nXZZXI\nIXZZX\nXIXZZ\nZXIXZ\n")
    assert main(["codeinfo", "--ops", str(f), "--verify", "--show-operators"]) == 0
    out = capsys.readouterr().out
    assert "logical     1" in out and "distances   3" in out and "MISMATCH" not in out
    assert out.count("\nS  ") == 4


def test_codeinfo_parse_error(tmp_path, capsys):
    f = tmp_path / "ops.txt"
    f.write_text("XQ\n")
    assert main(["codeinfo", "--ops", str(f)]) == 2
    assert "line 1" in capsys.readouterr().err


def test_backend_flag(tmp_path, capsys):
    before = _kernels.get_backend()
    try:
        assert main(["--backend", "numpy", "orbits", "--tiling", "hextille"]) == 0
        assert _kernels.get_backend() == "numpy"
    finally:
        _kernels.set_backend(before)


def test_unknown_command():
    with pytest.raises(SystemExit):
        main(["frobnicate"])
