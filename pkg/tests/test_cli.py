import io
import json
import subprocess
import sys

import pytest

from waring.cli import DEFAULT_SEED, run
from waring.forms import BinaryForm
from waring.sylvester import RankCertificate

X2Y = '{"degree":3,"field":"rational","coeffs":["0","1","0","0"]}'


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), stdout=out)
    text = out.getvalue()
    return code, (json.loads(text) if "--output" not in argv or "json" in argv else text)


def strip_time(report):
    return {k: v for k, v in report.items() if k != "elapsed_seconds"}


def test_rank_example():
    code, rep = call("rank", "--form", X2Y)
    assert code == 0
    assert rep["command"] == "rank" and rep["results"]["rank"] == 3
    cert = RankCertificate.from_json(rep["certificate"])
    F = BinaryForm.from_json(rep["inputs"]["form"])
    cert.verify(F)
    assert "elapsed_seconds" in rep


def test_binomial_example():
    code, rep = call("binomial", "--r", "0", "--s", "1", "--alpha", "2")
    assert code == 0 and rep["results"]["rank"] == 2 == rep["results"]["sylvester_rank"]
    code, rep2 = call("binomial", "--exponents", "3", "0", "1", "2")
    assert code == 0 and rep2["inputs"]["swapped_xy"] is True
    assert rep2["results"]["rank"] == 2


def test_verify_cover_example():
    code, rep = call("verify-cover", "--d", "4")
    assert code == 0
    res = rep["results"]
    assert (res["orbit_count"], res["image_size"], res["partitions_equal"]) == (3, 3, True)
    assert res["transversality_all"] is True
    assert all(BinaryForm.from_json(f).to_json() == f for f in res["forms"])


def test_verify_cover_other_lines():
    L = json.dumps([{"degree": 1, "coeffs": ["1", "2"]}, {"degree": 1, "coeffs": ["1", "-1"]},
                    {"degree": 1, "coeffs": ["0", "1"]}])
    code, rep = call("verify-cover", "--d", "5", "--L", L)
    assert code == 0 and rep["results"]["image_size"] == 6


def test_verify_binomial_deterministic():
    code, a = call("verify-binomial", "--dmax", "6")
    _, b = call("verify-binomial", "--dmax", "6")
    assert code == 0 and a["results"]["mismatches"] == []
    assert a["inputs"]["seed"] == DEFAULT_SEED
    assert strip_time(a) == strip_time(b)
    _, c = call("verify-binomial", "--dmax", "6", "--seed", "3")
    assert c["results"]["seed"] == 3


@pytest.mark.parametrize("argv", [
    ("hilbert", "--form", '{"degree":4,"coeffs":["1","0","0","0","1"]}'),
    ("generators", "--form", X2Y),
    ("classify", "--form", X2Y),
    ("enumerate", "--d", "5"),
    ("terracini", "--d", "4"),
])
def test_other_subcommands_succeed(argv):
    code, rep = call(*argv)
    assert code == 0 and rep["status"] == "ok"


def test_hilbert_values():
    _, rep = call("hilbert", "--form", '{"degree":4,"coeffs":["1","0","0","0","1"]}')
    assert rep["results"]["hilbert_function"] == [1, 2, 2, 2, 1, 0]


def test_classify_values():
    _, rep = call("classify", "--form", X2Y)
    assert rep["results"]["class"] == "TANGENT"


@pytest.mark.parametrize("argv, needle", [
    (("rank", "--form", '{"degree":3,"coeffs":["0.5","1","0","0"]}'), "p/q"),
    (("rank", "--form", "{not json"), "malformed"),
    (("rank", "--form", '{"degree":0,"coeffs":["3"]}'), "degree"),
    (("rank", "--form", '{"degree":2,"coeffs":["0","0","0"]}'), "nonzero"),
    (("rank",), "--form"),
    (("binomial", "--r", "3", "--s", "1", "--alpha", "1"), "r <= s"),
    (("binomial", "--exponents", "1", "1", "1", "2"), "degree"),
    (("verify-cover", "--d", "3"), "at least 4"),
    (("verify-cover", "--d", "4", "--L", '[{"degree":1,"coeffs":["1","0"]},{"degree":1,"coeffs":["2","0"]},'
                                          '{"degree":1,"coeffs":["0","1"]}]'), "proportional"),
    (("verify-binomial", "--dmax", "1"), "d_max"),
])
def test_bad_input_exit_one(argv, needle, capsys):
    code, rep = call(*argv)
    assert code == 1 and rep["status"] == "error"
    assert needle in rep["error"]


def test_verification_failure_exit_two(monkeypatch):
    import waring.binomial as bn

    monkeypatch.setattr(bn, "binomial_rank", lambda spec: 99)
    code, rep = call("binomial", "--r", "0", "--s", "1", "--alpha", "2")
    assert code == 2 and rep["status"] == "verification_failed"
    assert any("Sylvester" in f for f in rep["failed_checks"])


def test_text_output():
    code, text = call("rank", "--form", X2Y, "--output", "text")
    assert code == 0
    assert "rank: 3" in text and "x^2*y" in text


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "waring", "rank", "--form", X2Y],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["results"]["rank"] == 3
