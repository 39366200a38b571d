"""Command-line interface: outputs, formats, exit codes, determinism."""

import json

import pytest

from elliptica import cli
from elliptica.multipoly import MultiPoly


def run_cli(capsys, *argv):
    code = cli.run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out


def test_reduced_faulhaber_text(capsys):
    code, out = run_cli(capsys, "faulhaber", "--m", "1", "--weierstrass", "--format", "text")
    assert code == 0
    assert out == "-4*eta*lambda\n"


def test_kdv_density_text(capsys):
    code, out = run_cli(capsys, "kdv", "--k", "3")
    assert code == 0
    assert out.strip() == "2*u0^3 + u1^2"


def test_kdv_raw_sigma(capsys):
    code, out = run_cli(capsys, "kdv", "--k", "3", "--raw-sigma")
    assert code == 0
    assert out.strip() == "-u0^2 + u2"


def test_kdv_domain_error_exit_2(capsys):
    with pytest.raises(SystemExit) as excinfo:
        cli.run(["kdv", "--k", "0"])
    assert excinfo.value.code == 2


def test_unknown_flag_rejected(capsys):
    with pytest.raises(SystemExit) as excinfo:
        cli.run(["kdv", "--k", "3", "--frobnicate"])
    assert excinfo.value.code == 2


def test_halphen_output(capsys):
    code, out = run_cli(capsys, "halphen", "--n", "6", "--r", "6")
    assert code == 0
    assert out.strip() == "15/4928*g2^3 + 1/55*g3^2"


def test_kn_variants(capsys):
    code, out = run_cli(capsys, "kn", "--n", "2", "--equianharmonic")
    assert code == 0
    assert out.strip() == "0"
    code, out = run_cli(capsys, "kn", "--n", "2", "--lemniscatic")
    assert out.strip() == "1/6*g2*omega"
    code, out = run_cli(capsys, "kn", "--n", "2", "--general")
    assert out.strip() == "-1/3*g1*xi + 1/6*g2*omega"


def test_ebernoulli_output(capsys):
    code, out = run_cli(capsys, "ebernoulli", "--n", "4")
    assert code == 0
    assert out.strip() == "2/5*eta*g2 - 3/5*g3*omega"


def test_ebernoulli_odd_rejected():
    with pytest.raises(SystemExit) as excinfo:
        cli.run(["ebernoulli", "--n", "5"])
    assert excinfo.value.code == 2


def test_bh_output(capsys):
    code, out = run_cli(capsys, "bh", "--k", "4")
    assert code == 0
    assert out.strip() == "2/5*g2"


def test_json_output_parses_and_round_trips(capsys):
    code, out = run_cli(capsys, "faulhaber", "--m", "2", "--classical", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["m"] == 2
    poly = MultiPoly.from_wire(data)
    assert str(poly) == "lambda^2"


def test_latex_output(capsys):
    code, out = run_cli(capsys, "faulhaber", "--m", "2", "--weierstrass", "--format", "latex")
    assert code == 0
    assert out.strip() == r"g_2 \omega \left[ \frac{2}{3} \lambda^{2} \right]"


def test_lame_symbolic(capsys):
    code, out = run_cli(capsys, "lame", "--n", "sym", "--order", "1")
    assert code == 0
    assert out.strip() == "a_1 = 1/2*n^2*pbar + 1/2*n*pbar"


def test_lame_numeric_json(capsys):
    code, out = run_cli(capsys, "lame", "--n", "2", "--order", "2", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["n"] == 2
    coeffs = [str(MultiPoly.from_wire(w)) for w in data["coefficients"]]
    assert coeffs == ["3*pbar", "-3/2*g2"]


def test_lame_numeric_out_of_range():
    with pytest.raises(SystemExit) as excinfo:
        cli.run(["lame", "--n", "7", "--order", "2"])
    assert excinfo.value.code == 2


def test_lame_with_spectral_table(tmp_path, capsys):
    from elliptica.lame import builtin_spectral_b

    payload = {"max_k": 4, "b": [builtin_spectral_b(k).to_wire() for k in range(1, 5)]}
    path = tmp_path / "table.json"
    path.write_text(json.dumps(payload))
    code, out = run_cli(capsys, "lame", "--n", "sym", "--order", "3", "--spectral-table", str(path))
    assert code == 0
    assert out.startswith("a_1 = ")


def test_lame_symbolic_order_beyond_table():
    with pytest.raises(SystemExit) as excinfo:
        cli.run(["lame", "--n", "sym", "--order", "5"])
    assert excinfo.value.code == 2


def test_phi_csv(capsys):
    code, out = run_cli(
        capsys, "phi", "--m", "3", "--g2", "4", "--g3", "0", "--xmin", "-1",
        "--xmax", "0", "--points", "3",
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "x,phi,target"
    assert len(lines) == 4
    first = lines[1].split(",")
    assert float(first[0]) == -1.0
    assert abs(float(first[1])) < 1e-10


def test_phi_rejects_degenerate_curve():
    with pytest.raises(SystemExit) as excinfo:
        cli.run(["phi", "--m", "3", "--g2", "0", "--g3", "1"])
    assert excinfo.value.code == 2


def test_determinism_byte_identical(capsys):
    _, first = run_cli(capsys, "faulhaber", "--m", "4", "--weierstrass", "--format", "json")
    _, second = run_cli(capsys, "faulhaber", "--m", "4", "--weierstrass", "--format", "json")
    assert first == second
    _, third = run_cli(capsys, "kdv", "--k", "6", "--format", "latex")
    _, fourth = run_cli(capsys, "kdv", "--k", "6", "--format", "latex")
    assert third == fourth


def test_output_to_file(tmp_path, capsys):
    target = tmp_path / "out.txt"
    code, out = run_cli(capsys, "-o", str(target), "kdv", "--k", "2")
    assert code == 0
    assert out == ""
    assert target.read_text() == "u0^2\n"


def test_verify_list(capsys):
    code, out = run_cli(capsys, "verify", "--list")
    assert code == 0
    assert "halphen" in out and "numerics" in out


def test_verify_single_suite_and_alias(capsys):
    code, out = run_cli(capsys, "verify", "--suite", "table1")
    assert code == 0
    assert "[PASS] halphen" in out


def test_verify_unknown_suite():
    with pytest.raises(SystemExit) as excinfo:
        cli.run(["verify", "--suite", "nope"])
    assert excinfo.value.code == 2


def test_verify_failure_exit_code(tmp_path, capsys, monkeypatch):
    # point the fixture directory at a corrupted copy: exit code 1 + first diff
    import shutil
    from elliptica import verify as vf

    src = vf.fixtures_dir()
    dst = tmp_path / "fixtures"
    shutil.copytree(src, dst)
    data = json.loads((dst / "halphen_table.json").read_text())
    data["entries"][10]["value"]["terms"] = [{"coeff": "1/7", "exp": []}]
    (dst / "halphen_table.json").write_text(json.dumps(data))
    monkeypatch.setenv("ELLIPTICA_FIXTURES", str(dst))
    code, out = run_cli(capsys, "verify", "--suite", "halphen")
    assert code == 1
    assert "first difference:" in out
    assert "FAIL" in out
