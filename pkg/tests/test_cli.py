import io
import json

import pytest

from wpoly.cli import main, run


@pytest.fixture
def hopf(tmp_path):
    p = tmp_path / "hopf.graph"
    p.write_text(json.dumps({"vertices": 2, "edges": [{"u": 0, "v": 1, "color": "sheaf", "t": 2}]}))
    return str(p)


def call(argv):
    out = io.StringIO()
    code = run(argv, out)
    return code, out.getvalue()


def test_bracket(hopf):
    assert call(["bracket", hopf]) == (0, "-A^4 - A^-4\n")
    assert call(["--formulation", "oracle", "bracket", hopf]) == (0, "-A^4 - A^-4\n")


def test_certify_and_verify():
    code, text = call(["certify", "--family", "builtin:2-1"])
    assert code == 0 and text.startswith("DIVERGES; witness t=1.25 z=")
    assert call(["verify", "--family", "builtin:2-1", "--n", "4"]) == (0, "OK: closed form == direct, n=1..4\n")
    code, text = call(["certify", "--family", "twist"])
    assert text.startswith("INCONCLUSIVE")


def test_csv_outputs(tmp_path):
    code, text = call(["mahler", "--family", "twist", "--n-list", "3,1"])
    lines = text.splitlines()
    assert lines[0] == "n,mahler,euclidean_mahler" and lines[1].startswith("1,")
    code, text = call(["zeros", "--family", "2-1", "--n", "2"])
    assert text.splitlines()[0] == "n,re,im,modulus,residual"
    out = tmp_path / "eq.csv"
    assert call(["equimod", "--family", "2-1", "--t-grid", "0:4:5", "--out", str(out)]) == (0, "")
    assert out.read_text().splitlines()[0] == "t,re,im,modulus,isolated,common_lambda_modulus"


def test_deterministic():
    argv = ["equimod", "--family", "3-2", "--t-grid", "1/2,5/4"]
    assert call(argv) == call(argv)


def test_exit_codes(hopf, tmp_path):
    assert main(["bracket", str(tmp_path / "missing")]) == 1
    assert main(["certify", "--family", "nope"]) == 1
    assert main(["zeros", "--family", "twist"]) == 2
    assert main(["frobnicate"]) == 2
    assert main(["--tol-zero", "-1", "bracket", hopf]) == 2
    bad = tmp_path / "bad.graph"
    bad.write_text('{"vertices": 2, "edges": [{"u": 0, "v": 1, "color": "sheaf", "t": 0}]}')
    assert main(["bracket", str(bad)]) == 1
