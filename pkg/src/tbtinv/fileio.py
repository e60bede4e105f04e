"""Text formats for generators, dense matrices and inverse factors.

All files are whitespace-separated decimal text; a line whose first
non-blank character is ``#`` is a comment.  Complex values are written as
``re im`` pairs.  Floats are emitted in shortest round-trip form, so a
write/read cycle is value-exact.

generator file   line 1: ``n1 n2``; then n2 lines, line d holding the
                 2*n1-1 values c(d, s) for s = -(n1-1) .. n1-1.
dense file       line 1: ``n``; then n rows of n ``re im`` pairs.
factor file      line 1: ``n``; then n column lines ``lo hi re im ...``
                 (column k is supported on [k, n-1]); final line: the n
                 positive diagonal values.
"""

import numpy as np

from .core import BandVector, TbtGenerator
from .oracle import InverseFactor


def _fmt(x: float) -> str:
    return repr(float(x))


def _data_lines(text: str):
    for raw in text.splitlines():
        line = raw.strip()
        if line and not line.startswith("#"):
            yield line


def _floats(line: str, count: int, what: str) -> list:
    parts = line.split()
    if len(parts) != count:
        raise ValueError(f"{what}: expected {count} values, got {len(parts)}")
    try:
        return [float(p) for p in parts]
    except ValueError as exc:
        raise ValueError(f"{what}: {exc}") from None


def format_generator(g: TbtGenerator) -> str:
    lines = [f"{g.n1} {g.n2}"]
    for d in range(g.n2):
        row = g.c[d]
        lines.append(" ".join(f"{_fmt(z.real)} {_fmt(z.imag)}" for z in row))
    return "\n".join(lines) + "\n"


def parse_generator(text: str) -> TbtGenerator:
    lines = list(_data_lines(text))
    if not lines:
        raise ValueError("generator file: empty")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError("generator file: first line must be 'n1 n2'")
    try:
        n1, n2 = int(head[0]), int(head[1])
    except ValueError:
        raise ValueError("generator file: sizes must be integers") from None
    if len(lines) != 1 + n2:
        raise ValueError(f"generator file: expected {n2} data rows, "
                         f"got {len(lines) - 1}")
    c = np.empty((n2, 2 * n1 - 1), dtype=complex)
    for d in range(n2):
        vals = _floats(lines[1 + d], 2 * (2 * n1 - 1), f"generator row {d}")
        c[d] = [complex(vals[2 * i], vals[2 * i + 1])
                for i in range(2 * n1 - 1)]
    return TbtGenerator(n1, n2, c)


def write_generator(g: TbtGenerator, path) -> None:
    with open(path, "w") as fh:
        fh.write(format_generator(g))


def read_generator(path) -> TbtGenerator:
    with open(path) as fh:
        return parse_generator(fh.read())


def format_dense(a: np.ndarray) -> str:
    a = np.asarray(a, dtype=complex)
    n = a.shape[0]
    lines = [str(n)]
    for row in a:
        lines.append(" ".join(f"{_fmt(z.real)} {_fmt(z.imag)}" for z in row))
    return "\n".join(lines) + "\n"


def parse_dense(text: str) -> np.ndarray:
    lines = list(_data_lines(text))
    if not lines:
        raise ValueError("dense file: empty")
    try:
        n = int(lines[0])
    except ValueError:
        raise ValueError("dense file: first line must be the size") from None
    if len(lines) != 1 + n:
        raise ValueError(f"dense file: expected {n} rows, got {len(lines) - 1}")
    out = np.empty((n, n), dtype=complex)
    for i in range(n):
        vals = _floats(lines[1 + i], 2 * n, f"dense row {i}")
        out[i] = [complex(vals[2 * j], vals[2 * j + 1]) for j in range(n)]
    return out


def write_dense(a: np.ndarray, path) -> None:
    with open(path, "w") as fh:
        fh.write(format_dense(a))


def read_dense(path) -> np.ndarray:
    with open(path) as fh:
        return parse_dense(fh.read())


def format_factor(f: InverseFactor) -> str:
    lines = [str(f.n)]
    for col in f.columns:
        vals = " ".join(f"{_fmt(z.real)} {_fmt(z.imag)}" for z in col.coeff)
        lines.append(f"{col.lo} {col.hi} {vals}")
    lines.append(" ".join(_fmt(d) for d in f.diag))
    return "\n".join(lines) + "\n"


def parse_factor(text: str) -> InverseFactor:
    lines = list(_data_lines(text))
    if not lines:
        raise ValueError("factor file: empty")
    try:
        n = int(lines[0])
    except ValueError:
        raise ValueError("factor file: first line must be the size") from None
    if len(lines) != 2 + n:
        raise ValueError(f"factor file: expected {n} column lines plus a "
                         f"diagonal line")
    columns = []
    for k in range(n):
        parts = lines[1 + k].split()
        if len(parts) < 2:
            raise ValueError(f"factor column {k}: missing support bounds")
        lo, hi = int(parts[0]), int(parts[1])
        vals = _floats(" ".join(parts[2:]), 2 * (hi - lo + 1),
                       f"factor column {k}")
        coeff = [complex(vals[2 * i], vals[2 * i + 1])
                 for i in range(hi - lo + 1)]
        columns.append(BandVector(n, lo, hi, coeff))
    diag = _floats(lines[1 + n], n, "factor diagonal")
    return InverseFactor(n, columns, np.asarray(diag, dtype=float))


def write_factor(f: InverseFactor, path) -> None:
    with open(path, "w") as fh:
        fh.write(format_factor(f))


def read_factor(path) -> InverseFactor:
    with open(path) as fh:
        return parse_factor(fh.read())
