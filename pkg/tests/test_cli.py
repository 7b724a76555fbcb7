from __future__ import annotations

import json
import shutil

import pytest

from skeinforge.cli import main
from skeinforge.corpus import bundled_corpus_dir
from skeinforge.cyclo import CycNum
from skeinforge.skein import normalize
from skeinforge.diagram import BraidWord, braid_closure


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def files(tmp_path):
    (tmp_path / "unknot.pd").write_text("L 1\n")
    (tmp_path / "hopf.braid").write_text("B 2: 1 1\n")
    (tmp_path / "bad.pd").write_text("X 1 2 3\n")
    return tmp_path


def test_invariant_unknot(capsys, files):
    code, out, _ = run(capsys, "invariant", "--input", str(files / "unknot.pd"),
                       "--form", "wenzl", "--mode", "so8")
    assert code == 0 and out.strip() == "1"


def test_invariant_hopf_symbolic(capsys, files):
    code, out, _ = run(capsys, "invariant", "--input", str(files / "hopf.braid"),
                       "--form", "dubrovnik", "--mode", "symbolic")
    assert code == 0
    expected = normalize(braid_closure(BraidWord(2, (1, 1))), "dubrovnik").clear()
    assert out.strip() == str(expected)
    assert out.strip() == ("-1*alpha^-3*omega^-1 + -1*alpha^-3*omega^1 + 1*alpha^-2*omega^0 "
                           "+ 1*alpha^-1*omega^-1 + 1*alpha^-1*omega^1")


def test_invariant_hopf_json(capsys, files):
    code, out, _ = run(capsys, "invariant", "--input", str(files / "hopf.braid"),
                       "--form", "wenzl", "--mode", "so8", "--json")
    assert code == 0
    value = CycNum.from_json(json.loads(out)["value"])
    assert value == 1 + CycNum.zeta(4)


def test_invariant_unnormalized(capsys, files):
    code, out, _ = run(capsys, "invariant", "--input", str(files / "hopf.braid"),
                       "--form", "kauffman", "--no-normalized", "--json")
    assert code == 0 and "terms" in json.loads(out)["value"]


def test_invariant_stdin(capsys, monkeypatch):
    import io
    monkeypatch.setattr("sys.stdin", io.StringIO("B 2: 1 1 1\n"))
    code, out, _ = run(capsys, "invariant", "--input", "-", "--mode", "so8")
    assert code == 0 and out.strip() == "1"


def test_parse_error_exit(capsys, files):
    code, _, err = run(capsys, "invariant", "--input", str(files / "bad.pd"))
    assert code == 2 and "error" in err
    code, _, _ = run(capsys, "invariant", "--input", str(files / "missing.pd"))
    assert code == 2


def test_engine_error_exit(capsys, files, monkeypatch):
    import skeinforge.skein as skein
    monkeypatch.setenv("SKEINFORGE_MEMO_LIMIT", "1")
    skein.clear_memos()
    (files / "borromean.braid").write_text("B 3: 1 -2 1 -2 1 -2\n")
    try:
        code, _, err = run(capsys, "invariant", "--input", str(files / "borromean.braid"),
                           "--mode", "so8")
    finally:
        skein.clear_memos()
    assert code == 3 and "memo" in err


def test_verify_thm44_single(capsys, files):
    code, out, _ = run(capsys, "verify-thm44", "--input", str(files / "unknot.pd"))
    assert code == 0 and "equal" in out and "informational" in out


def test_verify_thm44_corpus(capsys):
    code, out, _ = run(capsys, "verify-thm44", "--json")
    data = json.loads(out)
    assert code == 0 and data["all_equal"]
    assert all(r["equal"] for r in data["results"])


def test_verify_thm44_corrupted_expected(capsys, tmp_path):
    src = bundled_corpus_dir() / "hopf_positive.json"
    obj = json.loads(src.read_text())
    obj["expected"]["wenzl_so8"] = {"num": [1, 0, 0, 0, -1, 0, 0, 0], "den": 1}
    (tmp_path / "hopf_positive.json").write_text(json.dumps(obj))
    code, out, _ = run(capsys, "verify-thm44", "--corpus", str(tmp_path))
    assert code == 1 and "differs" in out


def test_fusion_commands(capsys):
    code, out, _ = run(capsys, "fusion", "--n", "9")
    assert code == 0 and "FAIL" not in out
    code, out, _ = run(capsys, "fusion", "--n", "8", "--check", "numerology")
    assert code == 0
    for figure in ("32", "1024", "11", "256"):
        assert figure in out
    code, _, err = run(capsys, "fusion", "--n", "12")
    assert code == 2 and "integral" in err
    code, out, _ = run(capsys, "fusion", "--n", "12", "--check", "associativity")
    assert code == 0
    code, out, _ = run(capsys, "fusion", "--n", "50", "--json")
    assert code == 0 and json.loads(out)["ok"]


def test_corpus_run(capsys):
    code, out, _ = run(capsys, "corpus", "run", "--seed", "7", "--random", "10",
                       "--max-crossings", "12")
    assert code == 0 and out.strip().endswith("all pass")
    code2, out2, _ = run(capsys, "corpus", "run", "--seed", "7", "--random", "10",
                         "--max-crossings", "12")
    assert out2 == out


def test_corpus_run_without_random(capsys):
    code, out, _ = run(capsys, "corpus", "run", "--random", "0")
    assert code == 0 and "random" not in out


def test_corrupted_corpus_file(capsys, tmp_path):
    shutil.copy(bundled_corpus_dir() / "unknot.json", tmp_path / "unknot.json")
    (tmp_path / "broken.json").write_text("{\"name\": ")
    code, _, err = run(capsys, "corpus", "run", "--dir", str(tmp_path))
    assert code == 2 and "broken.json" in err


def test_deterministic_json(capsys):
    first = run(capsys, "verify-thm44", "--json")[1]
    second = run(capsys, "verify-thm44", "--json")[1]
    assert first == second
