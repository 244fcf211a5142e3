import io
import shlex
import subprocess
import sys
from pathlib import Path

import pytest

from perfdigraphs.cli import run_command
from perfdigraphs.digraph_file import read_digraph
from perfdigraphs.gen import GenSpec, random_digraph

DATA = Path(__file__).parent / "data"
GOLDEN = DATA / "golden"


def load_cases():
    cases = []
    for line in (GOLDEN / "cases.txt").read_text().splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        name, code, argv = (part.strip() for part in line.split("|", 2))
        cases.append(pytest.param(int(code), shlex.split(argv), id=name))
    return cases


def run(argv):
    buf = io.StringIO()
    code = run_command(argv, buf)
    return code, buf.getvalue()


@pytest.mark.parametrize("code,argv", load_cases())
def test_golden(code, argv, request, monkeypatch):
    monkeypatch.chdir(DATA)
    got_code, got = run(argv)
    assert got_code == code
    assert got == (GOLDEN / f"{request.node.callspec.id}.out").read_text()


def test_every_golden_has_a_case():
    names = {p.id for p in load_cases()}
    assert names == {p.stem for p in GOLDEN.glob("*.out")}


def test_generate_to_file(tmp_path):
    target = tmp_path / "g.dg"
    code, out = run(["generate", "--model", "er", "--n", "7", "--psym", "0.2", "--pasym", "0.4", "--seed", "5", "-o", str(target)])
    assert code == 0 and out == ""
    assert read_digraph(target) == random_digraph(GenSpec(7, 0.2, 0.4, 5))


def test_generate_named_sized():
    code, out = run(["generate", "--named", "dicycle", "--k", "5"])
    assert code == 0
    assert out == "n 5\narc 0 1\narc 1 2\narc 2 3\narc 3 4\narc 4 0\n"


def test_generate_needs_parameters():
    assert run(["generate", "--model", "er", "--n", "4"])[0] == 2


def test_analyze_reports_perfection(tmp_path):
    path = tmp_path / "c.dg"
    run(["generate", "--named", "c4_complement", "-o", str(path)])
    code, out = run(["analyze", str(path)])
    assert code == 0 and "perfect: true" in out


def test_unknown_command():
    assert run(["frobnicate"])[0] == 2
    assert run([])[0] == 2


def test_module_entry_point():
    path = DATA / "corpus" / "c3.dg"
    proc = subprocess.run(
        [sys.executable, "-m", "perfdigraphs", "analyze", str(path)], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert "chi: 2" in proc.stdout


def test_export_dot_lists_isolated_vertices():
    path = DATA / "corpus" / "arcless3.dg"
    code, out = run(["export-dot", str(path)])
    assert code == 0
    for v in range(3):
        assert f"  {v};" in out
