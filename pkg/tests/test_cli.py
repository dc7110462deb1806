"""End-to-end command line behaviour."""

import pytest

from ephemedit.cli import main

TEXT = b"ananabannabanaana"
PATTERN = b"banana"
SCRIPT = b"D 13 13\nI -1 b\nI 7 a\nI 11 na\nX 0 b\n"


@pytest.fixture
def files(tmp_path):
    t = tmp_path / "text.bin"
    p = tmp_path / "pattern.bin"
    s = tmp_path / "script.txt"
    t.write_bytes(TEXT)
    p.write_bytes(PATTERN)
    s.write_bytes(SCRIPT)
    return t, p, s


def run_cli(capsys, *argv):
    code = main([str(a) for a in argv])
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_run_index_worked_script(files, capsys):
    t, p, s = files
    code, out, err = run_cli(capsys, "run", t, p, s, "--mode", "index", "--verify")
    assert code == 0
    assert out.splitlines() == ["10", "0", "5", "10", "-"]
    assert err == ""


def test_run_pm_del(files, tmp_path, capsys):
    t, p, _ = files
    s = tmp_path / "dels.txt"
    s.write_bytes(b"D 13 13\nD 0 16\n")
    code, out, _ = run_cli(capsys, "run", t, p, s, "--mode", "pm-del", "--verify")
    assert code == 0
    assert out.splitlines() == ["10", "-"]


def test_run_pm_edit(files, tmp_path, capsys):
    t, p, _ = files
    s = tmp_path / "edits.txt"
    s.write_bytes(b"D 13 13\nI -1 b\nX 0 b\n")
    code, out, _ = run_cli(capsys, "run", t, p, s, "--mode", "pm-edit", "--verify")
    assert code == 0
    assert out.splitlines() == ["10", "0", "-"]


def test_byte_and_token_modes_agree(files, tmp_path, capsys):
    t, p, s = files
    tt = tmp_path / "text.tok"
    pt = tmp_path / "pattern.tok"
    st = tmp_path / "script.tok"
    tt.write_text(" ".join(str(b) for b in TEXT))
    pt.write_text(" ".join(str(b) for b in PATTERN))
    st.write_text("D 13 13\nI -1 98\nI 7 97\nI 11 110,97\nX 0 98\n")
    _, byte_out, _ = run_cli(capsys, "run", t, p, s)
    code, tok_out, _ = run_cli(capsys, "run", tt, pt, st, "--tokens", "--verify")
    assert code == 0
    assert tok_out == byte_out


def test_empty_script(files, tmp_path, capsys):
    t, p, _ = files
    s = tmp_path / "empty.txt"
    s.write_bytes(b"")
    code, out, err = run_cli(capsys, "run", t, p, s, "--verify")
    assert (code, out, err) == (0, "", "")


def test_parse_error_reports_line(files, tmp_path, capsys):
    t, p, _ = files
    s = tmp_path / "bad.txt"
    s.write_bytes(b"D 13 13\nZ 1 2\n")
    code, out, err = run_cli(capsys, "run", t, p, s)
    assert code == 2
    assert out == ""
    assert "bad.txt:2" in err


def test_position_violation_reports_line(files, tmp_path, capsys):
    t, p, _ = files
    s = tmp_path / "oob.txt"
    s.write_bytes(b"D 13 99\n")
    code, _, err = run_cli(capsys, "run", t, p, s)
    assert code == 2 and ":1" in err


def test_epsilon_violation(files, tmp_path, capsys):
    t, p, _ = files
    s = tmp_path / "wide.txt"
    s.write_bytes(b"I 0 abcde\n")
    code, _, err = run_cli(capsys, "run", t, p, s, "--epsilon", "4")
    assert code == 2 and "epsilon" in err
    code, out, _ = run_cli(capsys, "run", t, p, s, "--epsilon", "5")
    assert code == 0 and out == "-\n"


def test_mode_restrictions(files, tmp_path, capsys):
    t, p, _ = files
    s = tmp_path / "ins.txt"
    s.write_bytes(b"I 0 a\n")
    code, _, err = run_cli(capsys, "run", t, p, s, "--mode", "pm-del")
    assert code == 2 and "pm-del" in err
    s2 = tmp_path / "wide.txt"
    s2.write_bytes(b"I 0 ab\nD 2 5\n")
    code, _, err = run_cli(capsys, "run", t, p, s2, "--mode", "pm-edit")
    assert code == 2 and ":1" in err


def test_empty_inputs_rejected(tmp_path, capsys):
    t = tmp_path / "t.bin"
    p = tmp_path / "p.bin"
    s = tmp_path / "s.txt"
    t.write_bytes(b"")
    p.write_bytes(b"x")
    s.write_bytes(b"")
    assert run_cli(capsys, "run", t, p, s)[0] == 2
    t.write_bytes(b"x")
    p.write_bytes(b"")
    assert run_cli(capsys, "run", t, p, s)[0] == 2


def test_missing_file(tmp_path, capsys):
    t = tmp_path / "t.bin"
    t.write_bytes(b"x")
    code, _, err = run_cli(capsys, "run", t, tmp_path / "nope.bin", t)
    assert code == 2 and err


def test_bench_preprocessing_only(capsys):
    code, out, _ = run_cli(capsys, "bench", "-n", "500", "-m", "8", "--ops", "0")
    assert code == 0
    assert "preprocess" in out
    assert "latency" not in out


def test_bench_reports_latency(capsys):
    for mode in ("index", "pm-del", "pm-edit"):
        code, out, _ = run_cli(
            capsys, "bench", "-n", "400", "-m", "6", "--ops", "40",
            "--baseline-samples", "5", "--mode", mode, "--seed", "2",
        )
        assert code == 0
        assert "per-op latency" in out
        assert "baseline" in out
