import json

import pytest

from cliffkernels.cli import main
from cliffkernels.cliffpoly import parse_cliffpoly
from cliffkernels.kernels import zonal_harmonic


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_verify_suite_exit_zero(capsys):
    code, out = run(capsys, "verify", "--suite", "orthopoly")
    assert code == 0
    assert "PASS" in out


def test_verify_json(capsys):
    code, out = run(capsys, "verify", "--suite", "algebra", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc[0]["suite"] == "algebra"
    assert doc[0]["passed"] is True
    assert all("anchor" in c for c in doc[0]["checks"])


def test_verify_grid_override(capsys):
    code, out = run(capsys, "verify", "--suite", "operators", "--m", "3",
                    "--n", "2", "--degmax", "3")
    assert code == 0


def test_kernel_zonal_text_roundtrip(capsys):
    code, out = run(capsys, "kernel", "zonal", "--k", "1", "--m", "3")
    assert code == 0
    got = parse_cliffpoly(out.strip(), 3, nslots=2)
    assert got == zonal_harmonic(1, 3).poly


def test_kernel_monogenic_trivial(capsys):
    code, out = run(capsys, "kernel", "monogenic", "--k", "0", "--m", "3")
    assert code == 0
    assert out.strip() == "1"


def test_kernel_json_schema(capsys):
    code, out = run(capsys, "kernel", "hermitian", "--p", "1", "--q", "0",
                    "--n", "2", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["params"] == {"p": 1, "q": 0, "n": 2}
    assert doc["bidegree"] == {"first": [1, 0], "second": [0, 1]}
    for term in doc["terms"]:
        assert set(term) == {"blade", "monomial", "coef"}


def test_kernel_trace(capsys):
    code, out = run(capsys, "kernel", "hermitian", "--p", "1", "--q", "0",
                    "--n", "2", "--trace")
    assert code == 0
    assert "stage 1:" in out and "stage 4:" in out


def test_kernel_missing_params(capsys):
    with pytest.raises(SystemExit):
        main(["kernel", "zonal", "--k", "1"])


def test_dims(capsys):
    code, out = run(capsys, "dims", "--space", "H", "--m", "3", "--k", "2")
    assert code == 0
    assert "= 5" in out
    code, out = run(capsys, "dims", "--space", "P", "--m", "4", "--k", "3")
    assert "= 20" in out
    code, out = run(capsys, "dims", "--space", "M", "--m", "3", "--k", "1",
                    "--format", "json")
    doc = json.loads(out)
    assert doc["dim"] == 16
    assert doc["module_generators"] == 3


def test_decompose_harmonic(capsys):
    code, out = run(capsys, "decompose", "--mode", "harmonic", "--m", "3",
                    "--poly", "x1^2", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    pieces = doc["pieces"]
    assert pieces["|x|^2 * H_0"] == "1/3"


def test_decompose_monogenic(capsys):
    code, out = run(capsys, "decompose", "--mode", "monogenic", "--m", "2",
                    "--poly", "x1", "--format", "json")
    assert code == 0


def test_decompose_parse_error(capsys):
    with pytest.raises(SystemExit) as err:
        main(["decompose", "--mode", "harmonic", "--m", "3", "--poly", "x7^2"])
    assert "parse error" in str(err.value)


def test_verify_determinism(capsys):
    code1, out1 = run(capsys, "verify", "--suite", "normalization", "--verbose")
    code2, out2 = run(capsys, "verify", "--suite", "normalization", "--verbose")
    strip = lambda s: "\n".join(l for l in s.splitlines()
                                if not l.startswith("suite normalization:")
                                and not l.startswith("TOTAL"))
    assert strip(out1) == strip(out2)
