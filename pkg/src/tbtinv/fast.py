"""Fast recursion for Hermitian positive definite TBT matrices.

Computes the reflection-coefficient tables for a TBT matrix while storing
only the canonical half of each block cell: the pair (k, l) and its
antidiagonal mirror carry the same information, related by conjugation, a
support reversal and a shift.  Values at non-stored pairs are
reconstructed on demand, and pairs whose head index lies beyond the first
block row reduce to a stored pair by a whole-block shift.  The matrix is
read exclusively through the generator's entry accessor, never through a
dense copy, and the total work is O(n1^3 * n2^2) scalar operations.
"""

from dataclasses import dataclass

import numpy as np

from .core import (
    InternalIndexError,
    OpCounter,
    TbtGenerator,
    conj_band,
    index_exchange,
    mod_op,
    reverse_support,
    sec_op,
    shift,
    tbt_entry,
    unit_band,
)
from .oracle import GrcEntry, InverseFactor, grc_step


@dataclass
class CanonicalTables:
    """Stored half of the reflection tables for one TBT generator.

    Keys are the diagonal pairs (k, k) for k < n1 plus every off-diagonal
    pair (k, l) with k < n1 and k <= k' under the antidiagonal mirror.
    Everything else is served by :func:`fetch` through the exchange and
    block-shift reconstructions.
    """

    g: TbtGenerator
    entries: dict

    def is_stored(self, k: int, l: int) -> bool:
        return (k, l) in self.entries


def storage_condition(k: int, l: int, n1: int) -> bool:
    """Whether the pair (k, l) belongs to the stored canonical half."""
    if k == l:
        return k < n1
    return k < n1 and k <= index_exchange(k, l, n1)[0]


def _stored(entries: dict, k: int, l: int) -> GrcEntry:
    try:
        return entries[(k, l)]
    except KeyError:
        raise InternalIndexError(
            f"pair ({k}, {l}) needed but neither stored nor "
            f"reconstructible") from None


def _mirrored(e: GrcEntry, dk: int) -> GrcEntry:
    """Values at a pair from its stored mirror entry; dk = k - k_mirror.

    Coefficients swap roles under conjugation, the residual scalars swap
    (they are real), and each polynomial is the shifted, reversed
    conjugate of its partner.
    """
    return GrcEntry(np.conj(e.ap), np.conj(e.a), e.vp, e.v,
                    shift(conj_band(reverse_support(e.q)), dk),
                    shift(conj_band(reverse_support(e.p)), dk))


def _diagonal_entry(g: TbtGenerator, k: int) -> GrcEntry:
    e_k = unit_band(g.n, k)
    c00 = g.c[0, g.n1 - 1].real
    return GrcEntry(0j, 0j, c00, c00, e_k, e_k)


def tbt_grc(g: TbtGenerator, counter: OpCounter | None = None) -> CanonicalTables:
    """Run the half-table recursion over the generator.

    One block column at a time, two index sweeps cover the canonical
    pairs: heads at or below the block antidiagonal first (descending
    head offset), then strictly above it.  Each step draws its two
    predecessor polynomials either from storage, from the mirror of a
    stored pair (when the predecessor fell into the non-stored half or
    the previous block column), or from the step's own forward
    polynomial when the pair sits exactly on the antidiagonal.
    """
    n1, n2, n = g.n1, g.n2, g.n

    def m(i, j):
        return tbt_entry(g, i, j)

    entries = {}
    for k in range(n1):
        entries[(k, k)] = _diagonal_entry(g, k)

    for d2 in range(n2):
        if d2 != 0:
            for d1 in range(n1 - 1, -1, -1):
                for u in range(n1 - d1):
                    k = u + d1
                    l = d2 * n1 + u
                    kp = index_exchange(k, l, n1)[0]
                    if k > kp:
                        continue
                    if u == 0:
                        # (k, l-1) lives in the previous block column's
                        # non-stored half; take its mirror.
                        mk, ml = index_exchange(k, l - 1, n1)
                        mirror = _stored(entries, mk, ml)
                        p_hat = shift(conj_band(reverse_support(mirror.q)),
                                      k - mk)
                        vp_hat = mirror.v
                    else:
                        left = _stored(entries, k, l - 1)
                        p_hat, vp_hat = left.p, left.vp
                    if k == kp:
                        # (k+1, l) mirrors onto (k, l-1): derive the
                        # backward polynomial from p_hat itself.
                        q_hat = shift(conj_band(reverse_support(p_hat)), 1)
                        v_hat = vp_hat
                    else:
                        below = _stored(entries, k + 1, l)
                        q_hat, v_hat = below.q, below.v
                    entries[(k, l)] = grc_step(p_hat, q_hat, v_hat, vp_hat,
                                               m, k, l, counter)
        for d1 in range(1, n1):
            for u in range(n1 - d1):
                k = u
                l = d2 * n1 + u + d1
                kp = index_exchange(k, l, n1)[0]
                if k > kp:
                    continue
                left = _stored(entries, k, l - 1)
                p_hat, vp_hat = left.p, left.vp
                if k == kp:
                    q_hat = shift(conj_band(reverse_support(p_hat)), 1)
                    v_hat = vp_hat
                else:
                    below = _stored(entries, k + 1, l)
                    q_hat, v_hat = below.q, below.v
                entries[(k, l)] = grc_step(p_hat, q_hat, v_hat, vp_hat,
                                           m, k, l, counter)
    return CanonicalTables(g, entries)


def fetch(t: CanonicalTables, k: int, l: int) -> GrcEntry:
    """Table values for any pair (k, l), stored or not.

    Resolution: diagonal pairs are synthesized from the constant main
    diagonal; otherwise the pair block-reduces to the first block row by
    a whole-block shift, is taken from storage or reconstructed from its
    mirror, and is shifted back.
    """
    g = t.g
    n1, n = g.n1, g.n
    if not (0 <= k <= l <= n - 1):
        raise IndexError(f"pair ({k}, {l}) outside a {n} x {n} table")
    if k == l:
        return _diagonal_entry(g, k)
    tau = sec_op(k, n1)
    k0 = mod_op(k, n1)
    l0 = l - tau
    e = t.entries.get((k0, l0))
    if e is None:
        mk, ml = index_exchange(k0, l0, n1)
        mirror = t.entries.get((mk, ml))
        if mirror is None:
            raise InternalIndexError(
                f"pair ({k0}, {l0}) has no stored value and no stored "
                f"mirror ({mk}, {ml})")
        e = _mirrored(mirror, k0 - mk)
    if tau:
        e = GrcEntry(e.a, e.ap, e.v, e.vp, shift(e.p, tau), shift(e.q, tau))
    return e


def tbt_factorization(g: TbtGenerator,
                      counter: OpCounter | None = None) -> InverseFactor:
    """Inverse factor of the TBT matrix from the half-table recursion.

    Matches the factor the dense reference recursion produces, but never
    assembles the matrix.
    """
    t = tbt_grc(g, counter)
    n = g.n
    columns = []
    diag = np.empty(n, dtype=float)
    for k in range(n):
        e = fetch(t, k, n - 1)
        columns.append(conj_band(e.p))
        diag[k] = e.vp
    return InverseFactor(n, columns, diag)
