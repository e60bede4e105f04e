"""Block-Levinson baseline for the TBT normal equations.

Solves the block linear-prediction problem attached to a TBT covariance:
order by order, the innovation block is accumulated from the current
coefficients, a new leading coefficient is obtained by applying the
inverse of the prediction-error block, and the remaining coefficients are
updated against the conjugate-flipped copies of their predecessors.  The
Toeplitz structure of the blocks makes the time-reversed (backward)
quantities conjugate-flips of the forward ones, which is what lets a
single prediction-error matrix drive the recursion; the tracked matrix is
the backward prediction error, whose inverse the reflection step needs.

This module is a comparison baseline and deliberately shares no solver
code with the reflection-coefficient modules; the small Hermitian systems
are solved by an in-module LU elimination with partial pivoting so the
singularity threshold is explicit.
"""

from dataclasses import dataclass

import numpy as np

from .core import OpCounter, SingularP, TbtGenerator

# A pivot at or below this fraction of the matrix norm counts as singular.
PIVOT_TOL = 1e3 * np.finfo(float).eps


@dataclass
class WwrState:
    """Recursion state after one order: coefficients A_1..A_order, the
    prediction-error block P and the innovation block of that order."""

    order: int
    coeffs: list
    prediction_error: np.ndarray
    innovation: np.ndarray


def block(g: TbtGenerator, d: int) -> np.ndarray:
    """Block d of the first block row (d < 0 via the Hermitian mirror)."""
    if d < 0:
        return block(g, -d).conj().T
    n1 = g.n1
    out = np.empty((n1, n1), dtype=complex)
    for u in range(n1):
        out[u, :] = g.c[d, n1 - 1 - u:2 * n1 - 1 - u]
    return out


def flip_conj(a: np.ndarray) -> np.ndarray:
    """Conjugate with reversed row and column order."""
    return np.conj(a)[::-1, ::-1]


def _lu_factor(a: np.ndarray, counter: OpCounter | None = None):
    """LU with partial pivoting; raises SingularP on a negligible pivot."""
    a = np.array(a, dtype=complex)
    n = a.shape[0]
    perm = np.arange(n)
    scale = np.linalg.norm(a)
    if scale == 0.0:
        raise SingularP("prediction-error block is zero")
    for col in range(n):
        r = col + int(np.argmax(np.abs(a[col:, col])))
        if np.abs(a[r, col]) <= PIVOT_TOL * scale:
            raise SingularP(
                f"pivot {np.abs(a[r, col]):g} at column {col} below "
                f"threshold {PIVOT_TOL * scale:g}")
        if r != col:
            a[[col, r]] = a[[r, col]]
            perm[[col, r]] = perm[[r, col]]
        a[col + 1:, col] /= a[col, col]
        a[col + 1:, col + 1:] -= np.outer(a[col + 1:, col], a[col, col + 1:])
        if counter is not None:
            below = n - col - 1
            counter.div += below
            counter.mul += below * below
            counter.add += below * below
    return a, perm


def _lu_solve(lu: np.ndarray, perm: np.ndarray, b: np.ndarray,
              counter: OpCounter | None = None) -> np.ndarray:
    """Solve LU x = b[perm] for one or more right-hand-side columns."""
    n = lu.shape[0]
    x = np.array(b[perm], dtype=complex)
    if x.ndim == 1:
        x = x[:, None]
    for col in range(1, n):
        x[col] -= lu[col, :col] @ x[:col]
    for col in range(n - 1, -1, -1):
        x[col] -= lu[col, col + 1:] @ x[col + 1:]
        x[col] /= lu[col, col]
    if counter is not None:
        ncols = x.shape[1]
        counter.mul += n * (n - 1) * ncols
        counter.add += n * (n - 1) * ncols
        counter.div += n * ncols
    return x.reshape(np.shape(b[perm]))


def _solve_right(b: np.ndarray, a: np.ndarray,
                 counter: OpCounter | None = None) -> np.ndarray:
    """Solve X a = b for X (a Hermitian, well conditioned for PD input)."""
    lu, perm = _lu_factor(a.T, counter)
    return _lu_solve(lu, perm, b.T, counter).T


def _matmul(a: np.ndarray, b: np.ndarray,
            counter: OpCounter | None = None) -> np.ndarray:
    if counter is not None:
        counter.mul += a.shape[0] * a.shape[1] * b.shape[1]
        counter.add += a.shape[0] * (a.shape[1] - 1) * b.shape[1]
    return a @ b


def wwr_recurse(g: TbtGenerator,
                counter: OpCounter | None = None) -> list:
    """Run the block recursion; returns the state after each order.

    Requires at least two block orders; raises SingularP when the
    prediction-error block degenerates (non-PD input).
    """
    n1, n2 = g.n1, g.n2
    if n2 < 2:
        raise ValueError("the block recursion needs n2 >= 2")
    r_blocks = [block(g, d) for d in range(n2)]
    p = r_blocks[0]
    coeffs = []
    states = []
    for order in range(1, n2):
        delta = r_blocks[order].copy()
        for l in range(1, order):
            delta += _matmul(coeffs[l - 1], r_blocks[order - l], counter)
        a_new = -_solve_right(delta, p, counter)
        updated = [coeffs[k - 1] + _matmul(a_new, flip_conj(coeffs[order - k - 1]),
                                           counter)
                   for k in range(1, order)]
        updated.append(a_new)
        # The backward reflection block is the conjugate-flip of a_new.
        p = p + _matmul(flip_conj(a_new), delta, counter)
        coeffs = updated
        states.append(WwrState(order, [c.copy() for c in coeffs], p.copy(),
                               delta))
    return states


def normal_system(g: TbtGenerator):
    """Dense block-Toeplitz system and right-hand side of the final order.

    The right-hand side carries the minus sign of the normal equations:
    the coefficients of a perfect solve satisfy  A . big_R = -[R_1 .. ].
    """
    n1, n2 = g.n1, g.n2
    m = n2 - 1
    big = np.empty((m * n1, m * n1), dtype=complex)
    for row in range(m):
        for col in range(m):
            big[row * n1:(row + 1) * n1, col * n1:(col + 1) * n1] = \
                block(g, col - row)
    rhs = -np.hstack([block(g, d) for d in range(1, n2)])
    return big, rhs


def wwr_residual(g: TbtGenerator, final: WwrState) -> float:
    """Frobenius norm of the normal-equation residual at the final order."""
    if final.order != g.n2 - 1:
        raise ValueError("state is not at the final order")
    big, rhs = normal_system(g)
    a_row = np.hstack(final.coeffs)
    return float(np.linalg.norm(a_row @ big - rhs))
