from __future__ import annotations

import json
import shutil
import subprocess
import sys

import pytest

from sset1 import corpus
from sset1.cli import main
from sset1.fileio import load_presentation
from sset1.lifting import is_isomorphic


@pytest.fixture
def run(capsys):
    def go(*argv):
        code = main([str(a) for a in argv])
        out, err = capsys.readouterr()
        return code, out, err

    return go


def test_validate(run, corpus_dir):
    code, out, _ = run("validate", corpus_dir / "rp2.json")
    assert code == 0 and "valid" in out


def test_validate_reports_parse_errors(run, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"name": "x", "dimensions": [}', encoding="utf-8")
    code, _, err = run("validate", bad)
    assert code == 2 and "line 1" in err


def test_info(run, corpus_dir):
    code, out, _ = run("info", corpus_dir / "s2.json")
    assert code == 0
    assert "counts: 1 0 1" in out and "euler: 2" in out and "1-reduced: yes" in out


def test_homology(run, corpus_dir):
    code, out, _ = run("homology", corpus_dir / "rp2.json")
    assert code == 0 and out.splitlines() == ["H_0 = Z", "H_1 = Z/2", "H_2 = 0"]
    code, out, _ = run("homology", corpus_dir / "rp2.json", "--rational")
    assert code == 0 and "(1, 0, 0)" in out
    code, out, _ = run("homology", corpus_dir / "rp2.json", "--invert", "6")
    assert code == 0 and "H (inverting {2,3})_1 = 0" in out


def test_homology_rejects_zero(run, corpus_dir):
    code, _, err = run("homology", corpus_dir / "rp2.json", "--invert", "0")
    assert code == 2 and "multiplicative" in err


def test_pi1(run, corpus_dir):
    code, out, _ = run("pi1", corpus_dir / "rp2.json")
    assert code == 0 and "abelianization: Z/2" in out
    code, _, _ = run("pi1", corpus_dir / "bd1.json")
    assert code == 2


def test_kan(run, corpus_dir):
    code, out, _ = run("kan", corpus_dir / "s2.json", "--max-dim", 3)
    assert code == 1 and "not Kan" in out
    code, out, _ = run("kan", corpus_dir / "s2.json", "--max-dim", 3, "--all")
    assert "horn(3,0), horn(3,1), horn(3,2), horn(3,3)" in out
    code, _, _ = run("kan", corpus_dir / "s2.json", "--max-dim", 2)
    assert code == 0


def test_lift(run, corpus_dir):
    code, out, _ = run("lift", corpus_dir / "squares" / "boundary_d1.json")
    assert code == 0 and json.loads(out)["assignment"]
    code, out, _ = run("lift", corpus_dir / "squares" / "horn_eee.json")
    assert code == 1 and "no lift" in out


def test_rlp(run, corpus_dir):
    maps = corpus_dir / "maps"
    code, _, _ = run("rlp", "--p", maps / "s2_to_point.json", "--i", maps / "i1.json")
    assert code == 0
    # the square sending the endpoints to 1 and 0 needs a backwards edge in the interval
    code, _, _ = run("rlp", "--p", maps / "d1_to_point.json", "--i", maps / "i1.json")
    assert code == 1
    code, out, _ = run("rlp", "--p", maps / "s2_to_point.json", "--i", maps / "j30.json")
    assert code == 1 and "top:" in out


def test_weq(run, corpus_dir):
    maps = corpus_dir / "maps"
    code, out, _ = run("weq", maps / "id_s2.json")
    assert code == 0 and out.startswith("local homology isomorphism")
    code, out, _ = run("weq", "--p1", maps / "s2_to_point.json", "--rational")
    assert code == 1 and "degree 2" in out
    code, _, err = run("weq", maps / "j21.json")
    assert code == 2 and "1-reduced" in err
    code, _, _ = run("weq", maps / "id_s2.json", "--p1", maps / "id_s2.json")
    assert code == 2


def test_telescope(run):
    code, out, _ = run("telescope", "-n", 2, "-m", "2,3")
    assert code == 0 and "inclusion degree: 6" in out and "H_2 = Z" in out
    code, _, _ = run("telescope", "-n", 2, "-m", "2,3", "--invert", "6")
    assert code == 0
    code, out, _ = run("telescope", "-n", 2, "-m", "2,3", "--invert", "2")
    assert code == 1 and "warning" in out
    code, _, _ = run("telescope", "-n", 1, "-m", "2")
    assert code == 2


@pytest.mark.parametrize(
    "cmd, extra, stem, check",
    [
        ("skeleton1", [], "d2", lambda Y: Y.counts() == (3, 3)),
        ("reduce1", [], "d2", lambda Y: is_isomorphic(Y, corpus.space("s2"))),
        ("eilenberg1", [], "s2vs2", lambda Y: Y.counts() == (1, 0, 2)),
        ("coskeleton1", ["--max-dim", "2"], "bd2", lambda Y: Y.counts() == (3, 3, 1)),
    ],
)
def test_functor_commands_write_files(run, corpus_dir, tmp_path, cmd, extra, stem, check):
    out = tmp_path / "out.json"
    code, _, _ = run(cmd, corpus_dir / f"{stem}.json", *extra, "-o", out)
    assert code == 0 and check(load_presentation(out))


def test_functor_command_to_stdout(run, corpus_dir):
    code, out, _ = run("skeleton1", corpus_dir / "s3.json")
    assert code == 0 and json.loads(out)["name"]


def test_eilenberg_needs_basepoint(run, corpus_dir):
    code, _, err = run("eilenberg1", corpus_dir / "d2.json")
    assert code == 2 and err.startswith("error:")


def test_verify_only(run):
    code, out, _ = run("verify-paper", "--only", "sphere-endos", "spheres-not-kan")
    assert code == 0 and "2/2 checks passed" in out
    code, out, _ = run("verify-paper", "--only", "reduced-j2", "--format", "json", "--seed", 5)
    doc = json.loads(out)
    assert code == 0 and doc["seed"] == 5 and [c["id"] for c in doc["checks"]] == ["reduced-j2"]


def test_corpus_write(run, tmp_path):
    code, out, _ = run("corpus", "--write", tmp_path)
    assert code == 0 and f"wrote {len(corpus.files())} files" in out
    assert (tmp_path / "maps" / "j21.json").read_text(encoding="utf-8") == corpus.files()["maps/j21.json"]


def test_usage_errors():
    with pytest.raises(SystemExit) as e:
        main(["kan"])
    assert e.value.code == 2
    with pytest.raises(SystemExit) as e:
        main(["nonsense"])
    assert e.value.code == 2


@pytest.mark.skipif(shutil.which("sset1") is None, reason="console script not installed")
def test_console_script(corpus_dir):
    p = subprocess.run(["sset1", "info", str(corpus_dir / "d1.json")], capture_output=True, text=True)
    assert p.returncode == 0 and "counts: 2 1" in p.stdout


def test_module_entry_point(corpus_dir):
    p = subprocess.run(
        [sys.executable, "-m", "sset1", "validate", str(corpus_dir / "point.json")],
        capture_output=True,
        text=True,
    )
    assert p.returncode == 0
