import json
import subprocess
import sys

import pytest

from goldenico import cli
from goldenico.assignment import search_exceptional


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_derive(capsys, tmp_path):
    target = tmp_path / "structures.json"
    code, out, _ = run(capsys, "derive", "--out", str(target))
    assert code == 0
    assert "4 exceptional classes" in out
    for label in ("1*", "2*", "3*", "4*"):
        assert f"type {label}" in out
    doc = json.loads(target.read_text())
    assert sorted(doc) == ["1*", "2*", "3*", "4*"]


def test_derive_with_broken_search(capsys, monkeypatch):
    monkeypatch.setattr(cli, "search_exceptional", lambda: search_exceptional()[:3])
    code, _, err = run(capsys, "derive")
    assert code == 2 and "expected exactly one class" in err


@pytest.mark.parametrize(
    "argv, code, needle",
    [
        (["decompose", "--type", "1", "C", "E", "G", "Bb"], 1, "golden singular"),
        (["decompose", "--type", "2", "C", "E", "G", "Bb"], 0, "1 minimum decomposition"),
        (["decompose", "--type", "1", "C", "E", "G"], 0, "C,E,G (gt)"),
        (["decompose", "-t", "2*", "Db", "E", "G", "A#"], 0, "(gr)"),
        (["classify", "-t", "1", "C", "E", "G"], 0, "gt"),
        (["classify", "-t", "1", "C", "E", "G#"], 1, "none"),
        (["sevenths"], 0, "singular"),
        (["scan", "--k", "5"], 0, "0 golden singular 5-subsets"),
        (["scan", "--k", "3", "-t", "1"], 1, "100 golden singular"),
        (["neoriemann", "-t", "1"], 0, "s-edge"),
        (["analyze", "--bwv846", "--type", "2"], 0, "distinct shapes: 5"),
    ],
)
def test_subcommands(capsys, argv, code, needle):
    got, out, err = run(capsys, *argv)
    assert got == code
    assert needle in out + err


def test_analyze_type1_is_singular(capsys):
    code, _, err = run(capsys, "analyze", "--bwv846", "--type", "1")
    assert code == 1 and "measure 3" in err


def test_analyze_file_json(capsys, tmp_path):
    piece = tmp_path / "piece.txt"
    piece.write_text("1: C E G\n2: G B D F\n")
    code, out, _ = run(capsys, "analyze", str(piece), "--type", "3", "--json")
    assert code == 0
    doc = json.loads(out)
    assert [m["shape"] for m in doc["measures"]] == ["gg", "gt2"]
    assert out == json.dumps(doc, indent=2, sort_keys=True) + "\n"


@pytest.mark.parametrize(
    "argv",
    [
        ["decompose", "--type", "1", "C", "X", "G"],
        ["decompose", "--type", "9", "C", "E", "G"],
        ["decompose", "--type", "1", "C", "E"],
        ["decompose", "--type", "1", "C", "C", "E"],
        ["analyze", "--type", "2"],
        ["render", "--type", "2", "C", "E", "G", "-o", "/nonexistent/dir/x.svg"],
        ["render", "--type", "2", "C", "E", "G", "-o", "x.svg", "--index", "4"],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    try:
        code = cli.main(argv)
    except SystemExit as exc:  # argparse rejects before dispatch
        code = exc.code
    assert code == 2


def test_analyze_parse_error(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("1: C E G\n2: C C E\n")
    code, _, err = run(capsys, "analyze", str(bad), "--type", "2")
    assert code == 2 and "line 2" in err


def test_render(capsys, tmp_path):
    a, b = tmp_path / "a.svg", tmp_path / "b.svg"
    assert run(capsys, "render", "--type", "2", "C", "E", "G", "-o", str(a))[0] == 0
    assert run(capsys, "render", "--type", "2", "C", "E", "G", "-o", str(b))[0] == 0
    assert a.read_bytes() == b.read_bytes()
    assert run(capsys, "render", "--type", "1", "C", "E", "G", "Bb", "-o", str(a))[0] == 1


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "goldenico", "decompose", "--type", "2", "C", "E", "G", "--json"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    doc = json.loads(proc.stdout)
    assert doc["C,E,G"]["count"] == 1 and doc["type"] == "2*"
