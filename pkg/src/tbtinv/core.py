"""Structured-matrix core shared by every solver in the package.

Provides the compact generator describing a Hermitian
Toeplitz-block-Toeplitz (TBT) matrix, banded coefficient vectors with an
explicit support window, and the small integer machinery (nonnegative
remainder, its complement, antidiagonal index mirror) that the fast
recursion is built on.

A TBT matrix here is block-Toeplitz with Toeplitz blocks: entry (i, j)
depends only on the block offset and the within-block offset, so the full
n1*n2 x n1*n2 matrix is reconstructed from the generator values c(d, s)
of its first block row.
"""

from dataclasses import dataclass

import numpy as np


class NotPositiveDefinite(Exception):
    """The input matrix (or one of its leading sections) is not PD.

    ``pair`` identifies the (k, l) cell at which positivity failed.
    """

    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


class NumericalBreakdown(Exception):
    """A residual scalar underflowed or lost its realness in floating point."""


class FactorizationMismatch(Exception):
    """The factor verification pass failed; indicates an implementation bug."""


class InternalIndexError(Exception):
    """An index reconstruction left its proven range; implementation bug."""


class SingularP(Exception):
    """The block prediction-error matrix is numerically singular."""


class DomainError(ValueError):
    """A closed-form cost formula was evaluated outside its domain."""


def mod_op(a: int, b: int) -> int:
    """Nonnegative remainder a - b*floor(a/b); requires b >= 1, a >= 0."""
    return a - b * (a // b)


def sec_op(a: int, b: int) -> int:
    """Complement of mod_op: the largest multiple of b not exceeding a."""
    return a - mod_op(a, b)


def index_exchange(k: int, l: int, n1: int) -> tuple[int, int]:
    """Antidiagonal mirror of the pair (k, l) within its block cell.

    The mirrored pair preserves the distance l - k and the map is an
    involution.  The whole half-table reduction of the fast solver rests
    on the symmetry between a pair and its mirror.
    """
    return (sec_op(k, n1) + n1 - 1 - mod_op(l, n1),
            sec_op(l, n1) + n1 - 1 - mod_op(k, n1))


@dataclass
class OpCounter:
    """Tally of complex multiplies / adds / divides for one solver run."""

    mul: int = 0
    add: int = 0
    div: int = 0

    @property
    def total(self) -> int:
        return self.mul + self.add + self.div


@dataclass(frozen=True)
class TbtGenerator:
    """Compact description of a Hermitian TBT matrix.

    n1 is the Toeplitz block size, n2 the number of block rows/columns.
    ``c[d, s + n1 - 1]`` holds the value shared by all entries with block
    offset d >= 0 and within-block offset s (column minus row).  Entries
    with negative block offset follow from Hermitian symmetry and are not
    stored.  The first row must itself be Hermitian (c(0,-s) = conj c(0,s))
    with a real, strictly positive c(0,0).
    """

    n1: int
    n2: int
    c: np.ndarray

    def __post_init__(self):
        if self.n1 < 1 or self.n2 < 1:
            raise ValueError("block sizes must be positive")
        c = np.asarray(self.c, dtype=complex)
        if c.shape != (self.n2, 2 * self.n1 - 1):
            raise ValueError(f"generator table must have shape "
                             f"({self.n2}, {2 * self.n1 - 1}), got {c.shape}")
        if not np.all(np.isfinite(c.real) & np.isfinite(c.imag)):
            raise ValueError("generator values must be finite")
        mid = self.n1 - 1
        if not np.array_equal(c[0, :mid], np.conj(c[0, mid + 1:][::-1])):
            raise ValueError("row 0 of the generator must be Hermitian: "
                             "c(0,-s) == conj(c(0,s))")
        if c[0, mid].imag != 0.0 or c[0, mid].real <= 0.0:
            raise ValueError("c(0,0) must be real and strictly positive")
        c.flags.writeable = False
        object.__setattr__(self, "c", c)

    @property
    def n(self) -> int:
        return self.n1 * self.n2

    def value(self, d: int, s: int) -> complex:
        """Generator value c(d, s), d in [0, n2), s in (-n1, n1)."""
        return complex(self.c[d, s + self.n1 - 1])

    def entry(self, i: int, j: int) -> complex:
        """Matrix entry (i, j); satisfies the accessor contract."""
        return tbt_entry(self, i, j)


def tbt_entry(g: TbtGenerator, i: int, j: int) -> complex:
    """Entry (i, j) of the TBT matrix described by ``g``.

    The entry is looked up by block offset and within-block offset; a
    negative block offset is served through the Hermitian mirror.
    """
    n = g.n
    if not (0 <= i < n and 0 <= j < n):
        raise IndexError(f"entry ({i}, {j}) outside a {n} x {n} matrix")
    d = (sec_op(j, g.n1) - sec_op(i, g.n1)) // g.n1
    s = mod_op(j, g.n1) - mod_op(i, g.n1)
    if d >= 0:
        return complex(g.c[d, s + g.n1 - 1])
    return complex(np.conj(g.c[-d, -s + g.n1 - 1]))


def assemble_dense(g: TbtGenerator) -> np.ndarray:
    """Materialize the full n x n matrix of ``g`` (exactly Hermitian)."""
    n = g.n
    out = np.empty((n, n), dtype=complex)
    for i in range(n):
        for j in range(n):
            out[i, j] = tbt_entry(g, i, j)
    return out


def validate_hermitian(a: np.ndarray, tol: float = 0.0) -> np.ndarray:
    """Check that ``a`` is square Hermitian within ``tol`` (relative)."""
    a = np.asarray(a, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("matrix must be square")
    if not np.all(np.isfinite(a.real) & np.isfinite(a.imag)):
        raise ValueError("matrix entries must be finite")
    dev = np.max(np.abs(a - a.conj().T)) if a.size else 0.0
    scale = max(np.max(np.abs(a)), 1.0) if a.size else 1.0
    if dev > tol * scale:
        raise ValueError(f"matrix is not Hermitian (deviation {dev:g})")
    return a


@dataclass(frozen=True, eq=False)
class BandVector:
    """Length-n coefficient vector that is zero outside [lo, hi].

    Only the support window is stored; every operation on band vectors
    costs time proportional to the window, which is what gives the fast
    recursion its complexity bound.
    """

    n: int
    lo: int
    hi: int
    coeff: np.ndarray

    def __eq__(self, other):
        if not isinstance(other, BandVector):
            return NotImplemented
        return (self.n == other.n and self.lo == other.lo
                and self.hi == other.hi
                and np.array_equal(self.coeff, other.coeff))

    def __post_init__(self):
        if not (0 <= self.lo <= self.hi <= self.n - 1):
            raise ValueError(f"support [{self.lo}, {self.hi}] invalid for "
                             f"length {self.n}")
        coeff = np.asarray(self.coeff, dtype=complex)
        if coeff.shape != (self.hi - self.lo + 1,):
            raise ValueError("coefficient count must match the support window")
        if not np.all(np.isfinite(coeff.real) & np.isfinite(coeff.imag)):
            raise ValueError("coefficients must be finite")
        coeff.flags.writeable = False
        object.__setattr__(self, "coeff", coeff)

    @property
    def width(self) -> int:
        return self.hi - self.lo + 1


def unit_band(n: int, k: int) -> BandVector:
    """The canonical basis vector e_k as a band vector."""
    return BandVector(n, k, k, np.ones(1, dtype=complex))


def shift(v: BandVector, t: int) -> BandVector:
    """Translate the support of ``v`` by t (t < 0 shifts toward index 0).

    Equivalent to multiplying by the t-th power of the down-shift matrix.
    The support must stay inside [0, n-1]; leaving it means an index
    derivation elsewhere is wrong, so that is reported as an internal
    error rather than a value error.
    """
    if t == 0:
        return v
    if v.lo + t < 0 or v.hi + t > v.n - 1:
        raise InternalIndexError(
            f"shift by {t} pushes support [{v.lo}, {v.hi}] out of range "
            f"for length {v.n}")
    return BandVector(v.n, v.lo + t, v.hi + t, v.coeff)


def reverse_support(v: BandVector) -> BandVector:
    """Reverse the coefficients within the support window (involution)."""
    return BandVector(v.n, v.lo, v.hi, v.coeff[::-1])


def conj_band(v: BandVector) -> BandVector:
    """Entrywise conjugate of ``v``."""
    return BandVector(v.n, v.lo, v.hi, np.conj(v.coeff))


def band_to_dense(v: BandVector) -> np.ndarray:
    """Zero-padded full-length copy of ``v`` (test and I/O helper)."""
    out = np.zeros(v.n, dtype=complex)
    out[v.lo:v.hi + 1] = v.coeff
    return out


def column_inner(v: BandVector, m, col: int, counter: OpCounter | None = None):
    """Sum of v_i * m(i, col) over the support of ``v``.

    ``m`` is any (i, j) -> complex accessor; both the dense matrix path
    and the generator path satisfy that contract.  Cost is proportional
    to the support width, which the attached counter records.
    """
    acc = 0.0 + 0.0j
    for offset in range(v.width):
        acc += v.coeff[offset] * m(v.lo + offset, col)
    if counter is not None:
        counter.mul += v.width
        counter.add += v.width - 1
    return acc
