import subprocess
import sys

import pytest
from conftest import triangle, two_edges

from majlab import core
from majlab.cli import main
from majlab.closure import decide_fast
from majlab.core import (
    ChoiceFunction,
    VoterProfile,
    all_functions,
    cyclic,
    linear_order,
    partisan,
)
from majlab.formats import emit_cff, emit_pff, parse_cff_stream, parse_pff


@pytest.fixture
def write(tmp_path):
    def _write(name, obj):
        path = tmp_path / name
        text = emit_pff(obj) if isinstance(obj, VoterProfile) else emit_cff(obj)
        path.write_text(text)
        return str(path)

    return _write


@pytest.fixture(autouse=True)
def restore_cap(monkeypatch):
    monkeypatch.delenv("MAJLAB_MAX_N", raising=False)
    saved = core.MAX_N
    yield
    core.MAX_N = saved


def test_demo_condorcet(capsys):
    assert main(["demo", "condorcet"]) == 0
    out = capsys.readouterr().out
    assert "M(0,1) = 1, M(1,2) = 1, M(2,0) = 1" in out
    assert "0>1 2>0 1>2" in out


def test_classify(write, capsys):
    assert main(["classify", "--function", write("c.cff", two_edges())]) == 0
    out = capsys.readouterr().out
    assert "chaotic: yes" in out
    assert "valences: 2 -1 -1 0" in out
    assert "valence-imbalanced: yes (imbalance 1/2)" in out


def test_classify_class_stripping_note(write, capsys):
    g1 = write("e.cff", ChoiceFunction.empty(3))
    g2 = write("p.cff", partisan(3, [0]))
    assert main(["classify-class", "--generator", g1, "--generator", g2]) == 0
    out = capsys.readouterr().out
    assert "category: partisan" in out
    assert "literal: mixed" in out


def test_decide_not_member_both_routes(write, capsys):
    g = write("g.cff", triangle())
    d = write("d.cff", linear_order(3, [0, 1, 2]))
    assert main(["decide", "--generator", g, "--target", d, "--method", "both"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("NOT-MEMBER")
    assert "route fast: not member" in out and "route lp: not member" in out
    assert main(["decide", "--generator", g, "--target", d, "--assert-member"]) == 1


def test_decide_member_prints_certificate(write, capsys):
    g = write("g.cff", triangle())
    d = write("d.cff", ChoiceFunction.empty(3))
    assert main(["decide", "--generator", g, "--target", d, "--method", "lp", "--assert-member"]) == 0
    out = capsys.readouterr().out
    assert "MEMBER" in out and "1/2 *" in out


def test_enumerate(write, capsys):
    g = write("g.cff", partisan(3, [0]))
    assert main(["enumerate", "--generator", g, "--check-lp"]) == 0
    assert len(parse_cff_stream(capsys.readouterr().out)) == 13


def test_synthesize_verify_round_trip_n4(write, tmp_path, capsys):
    """synthesize then verify succeeds for every closure member of a few classes at n=4."""
    fixtures = {
        "bal": [cyclic(4, [0, 1, 2, 3])],
        "par": [partisan(4, [0])],
        "chaos": [two_edges()],
    }
    for name, gens in fixtures.items():
        gpaths = [write(f"{name}{i}.cff", g) for i, g in enumerate(gens)]
        gargs = [a for p in gpaths for a in ("--generator", p)]
        for d in all_functions(4):
            if not decide_fast(gens, d).member:
                continue
            dpath = write("d.cff", d)
            out = str(tmp_path / "p.pff")
            assert main(["synthesize", *gargs, "--target", dpath, "--out", out]) == 0
            assert main(["verify", "--profile", out, "--target", dpath]) == 0
    capsys.readouterr()


def test_synthesize_not_member(write, tmp_path, capsys):
    g = write("g.cff", partisan(3, [0]))
    d = write("d.cff", triangle())
    assert main(["synthesize", "--generator", g, "--target", d, "--out", str(tmp_path / "p.pff")]) == 1
    assert "not in closure" in capsys.readouterr().err


def test_verify_mismatch(write, capsys):
    p = write("p.pff", VoterProfile.of(3, [linear_order(3, [0, 1, 2])]))
    d = write("d.cff", triangle())
    assert main(["verify", "--profile", p, "--target", d]) == 1
    assert "MISMATCH" in capsys.readouterr().out


def test_bounds(write, capsys):
    g = write("g.cff", triangle())
    assert main(["bounds", "--generator", g, "--target", write("d.cff", triangle())]) == 0
    out = capsys.readouterr().out
    assert "voters: 9" in out and "bound: 9" in out and "within bound: yes" in out


def test_parse_error_exit_2(tmp_path, capsys):
    bad = tmp_path / "bad.cff"
    bad.write_text("cff 1\ncandidates 3\nbeats 0 1\nbeats 1 0\n")
    assert main(["classify", "--function", str(bad)]) == 2
    assert "line 4" in capsys.readouterr().err


def test_missing_file_exit_2(capsys):
    assert main(["classify", "--function", "/nonexistent/x.cff"]) == 2


def test_mismatched_sizes_exit_2(write, capsys):
    g = write("g.cff", triangle(3))
    d = write("d.cff", ChoiceFunction.empty(4))
    assert main(["decide", "--generator", g, "--target", d]) == 2


def test_usage_error_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["decide"])
    assert exc.value.code == 2


def test_max_n_override(write, monkeypatch, capsys):
    g = write("g.cff", triangle(4))
    monkeypatch.setenv("MAJLAB_MAX_N", "3")
    assert main(["decide", "--generator", g, "--target", write("d.cff", triangle(4)), "--method", "lp"]) == 2
    monkeypatch.setenv("MAJLAB_MAX_N", "abc")
    assert main(["demo", "condorcet"]) == 2


def test_synthesized_file_is_canonical(write, tmp_path, capsys):
    g = write("g.cff", partisan(3, [0]))
    d = write("d.cff", linear_order(3, [2, 1, 0]))
    out = tmp_path / "p.pff"
    assert main(["synthesize", "--generator", g, "--target", d, "--out", str(out)]) == 0
    text = out.read_text()
    assert emit_pff(parse_pff(text)) == text
    assert parse_pff(text).total == 12


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "majlab", "demo", "condorcet"], capture_output=True, text=True)
    assert res.returncode == 0 and "majority outcome" in res.stdout
