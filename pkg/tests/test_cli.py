import json
import subprocess
import sys

import pytest

from loopmod.cli import main
from loopmod.emit import emit
from loopmod.errors import FormatMismatch


def run(argv, capsysbinary):
    code = main(argv)
    out, err = capsysbinary.readouterr()
    return code, out, err


def test_decompose_default(capsysbinary):
    code, out, _ = run(["decompose", "--n", "1", "--m", "2"], capsysbinary)
    assert code == 0
    rep = json.loads(out)
    assert rep["m"] == 2 and len(rep["components"]) == 2
    assert set(rep) == {"n", "m", "d", "pi0_roots", "components"}
    entry = rep["components"][0]["dims"][0]
    assert set(entry) == {"composition", "r", "dim"}


def test_decompose_inline_tuple(capsysbinary):
    code, out, _ = run(["decompose", "--n", "1", "--m", "2", "--tuple", "roots: [[1, -1]]"],
                       capsysbinary)
    assert code == 0 and json.loads(out)["pi0_roots"] == [["1"]]


def test_decompose_tuple_file(tmp_path, capsysbinary):
    f = tmp_path / "pi.txt"
    f.write_text("roots: [[1, z, z^2]]\n")
    code, out, _ = run(["decompose", "--n", "1", "--m", "3", "--tuple", str(f),
                        "--r-window", "0:0"], capsysbinary)
    assert code == 0
    assert len(json.loads(out)["components"]) == 3


def test_maj(capsysbinary):
    code, out, _ = run(["maj", "--n", "1", "--m", "3", "--composition", "2,1"], capsysbinary)
    assert code == 0 and json.loads(out)["counts"] == [1, 1, 1]


def test_verify_all(capsysbinary):
    code, out, _ = run(["verify", "--n", "1", "--m", "4", "--suite", "all"], capsysbinary)
    rep = json.loads(out)
    assert code == 0
    assert all(s["ok"] and not s["discrepancies"] for s in rep["suites"].values())


def test_character_csv(capsysbinary):
    code, out, _ = run(["character", "--n", "1", "--m", "2", "--format", "csv"], capsysbinary)
    lines = out.decode().split("\n")
    assert code == 0
    assert lines[0] == "composition,nu,k,closed,brute,maj"
    assert b"\r" not in out


def test_crystal_dot(capsysbinary):
    code, out, _ = run(["crystal", "--n", "1", "--m", "3", "--s", "1", "--r-window", "0:2",
                        "--format", "dot"], capsysbinary)
    assert code == 0 and out.startswith(b"digraph")


def test_out_file(tmp_path, capsysbinary):
    path = tmp_path / "g.json"
    code, out, _ = run(["crystal", "--n", "1", "--m", "2", "--out", str(path)], capsysbinary)
    assert code == 0 and out == b""
    assert json.loads(path.read_text())["m"] == 2


@pytest.mark.parametrize("argv,code", [
    (["decompose", "--n", "0", "--m", "2"], "ConfigError"),
    (["decompose", "--n", "1"], "ConfigError"),
    (["maj", "--n", "1", "--m", "3"], "ConfigError"),
    (["maj", "--n", "1", "--m", "3", "--composition", "1,1"], "ConfigError"),
    (["crystal", "--n", "1", "--m", "2", "--format", "csv"], "FormatMismatch"),
    (["decompose", "--n", "1", "--m", "2", "--tuple", "coeffs: [[1, 0, -1]]"],
     "UnsupportedTuple"),
    (["decompose", "--n", "1", "--m", "2", "--tuple", "roots: [[1, 1]]"], "UnsupportedTuple"),
    (["decompose", "--n", "1", "--m", "2", "--tuple", "coeffs: [[1]]"], "TrivialTuple"),
    (["decompose", "--n", "1", "--m", "2", "--tuple", "/nonexistent/file"], "ConfigError"),
    (["verify", "--n", "1", "--m", "2", "--suite", "nope"], "ConfigError"),
])
def test_errors(argv, code, capsysbinary):
    status, out, err = run(argv, capsysbinary)
    assert status == 2 and out == b""
    assert json.loads(err)["error"]["code"] == code


def test_determinism(capsysbinary):
    argv = ["crystal", "--n", "2", "--m", "3", "--r-window", "-1:1"]
    outs = {run(argv, capsysbinary)[1] for _ in range(3)}
    assert len(outs) == 1
    a = run(["decompose", "--n", "1", "--m", "4", "--jobs", "1"], capsysbinary)[1]
    b = run(["decompose", "--n", "1", "--m", "4", "--jobs", "3"], capsysbinary)[1]
    assert a == b


def test_emit_mismatch():
    with pytest.raises(FormatMismatch):
        emit({"a": 1}, "dot")
    with pytest.raises(FormatMismatch):
        emit({"a": 1}, "xml")


def test_console_script_entry():
    proc = subprocess.run([sys.executable, "-m", "loopmod.cli", "maj", "--n", "1", "--m", "2",
                           "--composition", "1,1"], capture_output=True, check=False,
                          env={"LOOPMOD_LOG": "debug", "PATH": ""})
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["counts"] == [1, 1]
