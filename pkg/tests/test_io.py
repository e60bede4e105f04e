import numpy as np
import pytest

from tbtinv import BandVector, InverseFactor, assemble_dense, generate_pd_tbt
from tbtinv.fileio import (
    format_generator,
    parse_dense,
    parse_factor,
    parse_generator,
    read_dense,
    read_factor,
    read_generator,
    write_dense,
    write_factor,
    write_generator,
)
from conftest import random_generator


def test_generator_roundtrip_exact(tmp_path):
    g = generate_pd_tbt(3, 4, seed=1)
    path = tmp_path / "g.txt"
    write_generator(g, path)
    back = read_generator(path)
    assert back.n1 == g.n1 and back.n2 == g.n2
    assert np.array_equal(back.c, g.c)


def test_generator_roundtrip_17_digits(tmp_path):
    # Shortest round-trip text must recover awkward 17-digit values.
    c = np.zeros((2, 3), dtype=complex)
    c[0] = (0.12345678901234567 - 0.98765432109876543j,
            2.2250738585072014,
            0.12345678901234567 + 0.98765432109876543j)
    c[1] = (1e-17 + 1e17j, -0.1 + 0.3j, 0.7 - 1.9999999999999998j)
    from tbtinv import TbtGenerator
    g = TbtGenerator(2, 2, c)
    path = tmp_path / "g.txt"
    write_generator(g, path)
    assert np.array_equal(read_generator(path).c, g.c)


def test_generator_comments_and_errors():
    g = random_generator(2, 2, seed=2)
    text = format_generator(g)
    commented = "# instance file\n" + text.replace("\n", "\n# note\n", 1)
    back = parse_generator(commented)
    assert np.array_equal(back.c, g.c)
    with pytest.raises(ValueError):
        parse_generator("")
    with pytest.raises(ValueError):
        parse_generator("2\n1 0")
    with pytest.raises(ValueError):
        parse_generator("2 2\n1 0 2 0\n")  # wrong row width and count
    with pytest.raises(ValueError):
        parse_generator("a b\n")


def test_dense_roundtrip(tmp_path):
    g = generate_pd_tbt(2, 2, seed=3)
    r = assemble_dense(g)
    path = tmp_path / "r.txt"
    write_dense(r, path)
    assert np.array_equal(read_dense(path), r)


def test_dense_errors():
    with pytest.raises(ValueError):
        parse_dense("")
    with pytest.raises(ValueError):
        parse_dense("x\n1 0")
    with pytest.raises(ValueError):
        parse_dense("2\n1 0 0 0\n")
    with pytest.raises(ValueError):
        parse_dense("1\n1 0 3 0\n")


def test_factor_roundtrip(tmp_path):
    cols = [BandVector(3, 0, 2, np.array([1.0, -0.25 + 0.5j, 0.125])),
            BandVector(3, 1, 2, np.array([1.0, 0.625 - 1j])),
            BandVector(3, 2, 2, np.array([1.0]))]
    f = InverseFactor(3, cols, np.array([0.75, 1.25, 2.0]))
    path = tmp_path / "f.txt"
    write_factor(f, path)
    back = read_factor(path)
    assert back.n == 3
    assert np.array_equal(back.diag, f.diag)
    for a, b in zip(back.columns, f.columns):
        assert a == b


def test_factor_errors():
    with pytest.raises(ValueError):
        parse_factor("")
    with pytest.raises(ValueError):
        parse_factor("2\n0 1 1 0 0 0\n")  # missing second column + diag
    with pytest.raises(ValueError):
        parse_factor("1\n0\n1.0\n")  # column line too short
