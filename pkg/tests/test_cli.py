import io
import json
import subprocess
import sys

import pytest

from polyrec.cli import run
from polyrec.ps_codes import channel_missing, encode_E2, encode_E3
from polyrec.strings_core import prefix_suffix_multiset


def call(*argv):
    buf = io.StringIO()
    code = run(list(argv), out=buf)
    return code, buf.getvalue()


def test_class_lists_four_strings():
    code, out = call("class", "101010")
    assert code == 0
    assert out.split() == ["010101", "011001", "100110", "101010"]


def test_family_count():
    assert call("family", "u", "--n", "6", "--count-only") == (0, "60\n")
    assert call("family", "u", "--n", "6", "--count-only", "--enumerate") == (0, "60\n")


def test_rll_next():
    assert call("rll", "--q", "4", "--r", "9", "next", "003103") == (0, "00310301\n")


def test_json_report_shape():
    code, out = call("--json", "count", "e1", "--n", "8")
    rep = json.loads(out)
    assert code == 0 and set(rep) == {"command", "params", "outputs"}
    assert rep["outputs"]["count"] == 126 and rep["params"]["seed"] == 0


def test_encode_decode_roundtrip(tmp_path):
    src = tmp_path / "msg.txt"
    src.write_text("1101001010\n")
    code, out = call("encode", "--code", "e2", "--t", "2", "--input", str(src))
    assert code == 0 and out.strip() == encode_E2("1101001010", 2)
    code, out = call("encode", "--code", "e3", "--t", "2", "--input", str(src), "--multiset")
    ms = tmp_path / "m.json"
    ms.write_text(out)
    assert call("decode", "--code", "e3", "--t", "2", str(ms)) == (0, "1101001010\n")


def test_channel_then_decode(tmp_path):
    c = encode_E3("1101001010", 1, 1, 2)
    code, out = call("--seed", "11", "channel", "--model", "massred", "--word", c, "--t", "2")
    assert code == 0
    f = tmp_path / "m.json"
    f.write_text(out)
    assert call("decode", "--code", "e3", "--t", "2", str(f)) == (0, "1101001010\n")


def test_decode_failure_exit_code(tmp_path):
    c = encode_E2("1101001010", 1)
    f = tmp_path / "m.json"
    M = channel_missing(prefix_suffix_multiset(c), [("prefix", 3), ("prefix", 9)], source=c)
    f.write_text(M.dumps())
    assert call("decode", "--code", "e2", "--t", "1", str(f))[0] == 1


def test_usage_errors():
    assert call("class", "10a")[0] == 2
    assert call("encode", "--code", "e1", "--input", "/nonexistent/file")[0] == 2
    with pytest.raises(SystemExit) as exc:
        call("bogus")
    assert exc.value.code == 2


def test_fullcode_and_oracle():
    assert call("fullcode", "--n", "12", "--t", "2", "count") == (0, "235\n")
    code, out = call("oracle", "--n", "6")
    assert out.splitlines() == ["classes 35", "max class 4"]


def test_seeded_runs_are_byte_identical():
    c = encode_E3("1101001010", 1, 1, 2)
    argv = [sys.executable, "-m", "polyrec.cli", "--seed", "42", "--json", "channel",
            "--model", "massred", "--word", c, "--t", "2"]
    a = subprocess.run(argv, capture_output=True, check=True).stdout
    b = subprocess.run(argv, capture_output=True, check=True).stdout
    other = subprocess.run([*argv[:3], "--threads", "4", *argv[3:]], capture_output=True, check=True).stdout
    assert a == b and a
    assert json.loads(a)["outputs"] == json.loads(other)["outputs"]
