import numpy as np

from tbtinv import assemble_dense, generate_pd_tbt
from tbtinv.cli import EXIT_FAIL, EXIT_NOT_PD, EXIT_PASS, EXIT_USAGE, \
    main, run_verify
from tbtinv.fileio import read_dense, read_factor, read_generator
from conftest import identity_generator


def test_gen_deterministic(tmp_path, capsys):
    out1 = tmp_path / "a.txt"
    out2 = tmp_path / "b.txt"
    argv = ["gen", "--n1", "3", "--n2", "2", "--seed", "42"]
    assert main(argv + ["--output", str(out1)]) == EXIT_PASS
    assert main(argv + ["--output", str(out2)]) == EXIT_PASS
    assert out1.read_bytes() == out2.read_bytes()
    g = read_generator(out1)
    assert g.n1 == 3 and g.n2 == 2
    capsys.readouterr()


def test_invert_fast_vs_oracle(tmp_path, capsys):
    gen = tmp_path / "g.txt"
    main(["gen", "--n1", "2", "--n2", "3", "--seed", "7",
          "--output", str(gen)])
    fast_out = tmp_path / "fast.txt"
    oracle_out = tmp_path / "oracle.txt"
    factor_out = tmp_path / "factor.txt"
    assert main(["invert", "--input", str(gen), "--method", "fast",
                 "--output", str(fast_out), "--factor", str(factor_out),
                 "--counter"]) == EXIT_PASS
    printed = capsys.readouterr().out
    assert "mul=" in printed and "add=" in printed and "div=" in printed
    assert main(["invert", "--input", str(gen), "--method", "oracle",
                 "--output", str(oracle_out)]) == EXIT_PASS
    xf = read_dense(fast_out)
    xo = read_dense(oracle_out)
    assert np.max(np.abs(xf - xo)) <= 1e-8
    g = read_generator(gen)
    r = assemble_dense(g)
    assert np.linalg.norm(r @ xf - np.eye(6)) <= 1e-8
    f = read_factor(factor_out)
    assert f.n == 6


def test_invert_deterministic_output(tmp_path, capsys):
    gen = tmp_path / "g.txt"
    main(["gen", "--n1", "2", "--n2", "2", "--seed", "1",
          "--output", str(gen)])
    a = tmp_path / "xa.txt"
    b = tmp_path / "xb.txt"
    main(["invert", "--input", str(gen), "--output", str(a)])
    main(["invert", "--input", str(gen), "--output", str(b)])
    assert a.read_bytes() == b.read_bytes()
    capsys.readouterr()


def test_wwr_command(tmp_path, capsys):
    gen = tmp_path / "g.txt"
    main(["gen", "--n1", "2", "--n2", "4", "--seed", "3",
          "--output", str(gen)])
    out = tmp_path / "coeffs.txt"
    assert main(["wwr", "--input", str(gen), "--output", str(out)]) == EXIT_PASS
    text = out.read_text()
    assert text.count("\n2\n") >= 2 or text.startswith("2\n")
    assert "residual" in text.splitlines()[-1]
    capsys.readouterr()


def test_wwr_needs_two_orders(tmp_path, capsys):
    gen = tmp_path / "g.txt"
    main(["gen", "--n1", "2", "--n2", "1", "--seed", "3",
          "--output", str(gen)])
    out = tmp_path / "w.txt"
    assert main(["wwr", "--input", str(gen),
                 "--output", str(out)]) == EXIT_USAGE
    capsys.readouterr()


def test_opcount_csv(tmp_path, capsys):
    out = tmp_path / "costs.csv"
    assert main(["opcount", "--min", "2", "--max", "6",
                 "--output", str(out)]) == EXIT_PASS
    lines = out.read_text().strip().split("\n")
    assert lines[0] == "n1,n2,opc_eq15,opc_eq12_c1_3,opcwwr_eq14,ratio"
    assert len(lines) == 6
    capsys.readouterr()


def test_verify_pass_and_fail(tmp_path, capsys):
    gen = tmp_path / "g.txt"
    main(["gen", "--n1", "3", "--n2", "3", "--seed", "11",
          "--output", str(gen)])
    assert main(["verify", "--input", str(gen)]) == EXIT_PASS
    out = capsys.readouterr().out
    assert "PASS" in out
    # Roundoff can never satisfy an absurd tolerance on a random instance.
    assert main(["verify", "--input", str(gen),
                 "--tolerance", "1e-300"]) == EXIT_FAIL
    assert "FAIL" in capsys.readouterr().out


def test_verify_not_pd(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    # Tiny zero lag against unit off-diagonal lags: indefinite.
    bad.write_text("2 1\n1.0 0.0 0.01 0.0 1.0 0.0\n")
    assert main(["verify", "--input", str(bad)]) == EXIT_NOT_PD
    capsys.readouterr()


def test_usage_errors(tmp_path, capsys):
    assert main(["frobnicate"]) == EXIT_USAGE
    assert main(["gen", "--n1", "2"]) == EXIT_USAGE
    assert main(["invert", "--input", str(tmp_path / "missing.txt"),
                 "--output", str(tmp_path / "x.txt")]) == EXIT_USAGE
    assert main(["gen", "--n1", "2", "--n2", "2", "--ridge", "-1",
                 "--output", str(tmp_path / "g.txt")]) == EXIT_USAGE
    capsys.readouterr()


def test_run_verify_identity():
    report = run_verify(identity_generator(2, 2), tolerance=1e-8)
    assert report.table_deviation == 0.0
    assert report.inverse_residual == 0.0
    assert report.wwr_relative_residual == 0.0
    assert report.passed


def test_run_verify_single_block():
    report = run_verify(generate_pd_tbt(3, 1, seed=5), tolerance=1e-8)
    assert report.wwr_relative_residual is None
    assert report.passed
