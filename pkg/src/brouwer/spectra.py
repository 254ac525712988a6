"""Laplacian spectra through a deterministic cyclic Jacobi eigensolver.

The solver runs fixed-order Jacobi sweeps until the off-diagonal
Frobenius mass drops below 1e-12 times the input Frobenius norm, with a
hard cap of 100 sweeps.  Rotation order and arithmetic are fixed, so
identical input bits always produce identical eigenvalue bits; there is
no LAPACK in this path.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from numba import njit

from .graphs import Graph

SWEEP_CAP = 100
CONVERGENCE_RTOL = 1e-12


def spectral_tol(n: int) -> float:
    """Absolute tolerance for eigenvalue assertions at order n."""
    return 1e-8 * max(1.0, float(n))


class SolverConvergenceError(RuntimeError):
    """Jacobi sweep cap reached before the off-diagonal mass converged."""

    def __init__(self, residual: float):
        super().__init__(
            f"eigensolver did not converge within {SWEEP_CAP} sweeps, "
            f"off-diagonal mass {residual:.6e}"
        )
        self.residual = residual


@njit(cache=True, nogil=True)
def _offdiag_mass(a):
    total = 0.0
    n = a.shape[0]
    for i in range(n - 1):
        for j in range(i + 1, n):
            total += a[i, j] * a[i, j]
    return np.sqrt(2.0 * total)


@njit(cache=True, nogil=True)
def _jacobi(a):
    """Cyclic Jacobi on the upper triangle of a, in place.

    Returns (off_mass, converged).  Eigenvalues end up on the diagonal.
    """
    n = a.shape[0]
    fro = 0.0
    for i in range(n):
        for j in range(n):
            fro += a[i, j] * a[i, j]
    thresh = CONVERGENCE_RTOL * np.sqrt(fro)
    off = _offdiag_mass(a)
    sweeps = 0
    while off > thresh:
        if sweeps == SWEEP_CAP:
            return off, False
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                diff = a[q, q] - a[p, p]
                if abs(apq) < abs(diff) * 1e-36:
                    t = apq / diff
                else:
                    phi = diff / (2.0 * apq)
                    t = 1.0 / (abs(phi) + np.sqrt(phi * phi + 1.0))
                    if phi < 0.0:
                        t = -t
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                tau = s / (1.0 + c)
                a[p, q] = 0.0
                a[p, p] -= t * apq
                a[q, q] += t * apq
                for i in range(p):
                    t1 = a[i, p]
                    t2 = a[i, q]
                    a[i, p] = t1 - s * (t2 + tau * t1)
                    a[i, q] = t2 + s * (t1 - tau * t2)
                for i in range(p + 1, q):
                    t1 = a[p, i]
                    t2 = a[i, q]
                    a[p, i] = t1 - s * (t2 + tau * t1)
                    a[i, q] = t2 + s * (t1 - tau * t2)
                for i in range(q + 1, n):
                    t1 = a[p, i]
                    t2 = a[q, i]
                    a[p, i] = t1 - s * (t2 + tau * t1)
                    a[q, i] = t2 + s * (t1 - tau * t2)
        sweeps += 1
        off = _offdiag_mass(a)
    return off, True


@njit(cache=True, nogil=True)
def _jacobi_values(a):
    """Run _jacobi and return (values descending, off_mass, converged)."""
    off, converged = _jacobi(a)
    n = a.shape[0]
    vals = np.empty(n)
    for i in range(n):
        vals[i] = a[i, i]
    vals.sort()
    return vals[::-1].copy(), off, converged


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Eigenvalues in descending order plus solver quality measures."""

    values: np.ndarray = field(repr=False)
    residual: float
    trace_error: float

    @property
    def n(self) -> int:
        return int(self.values.shape[0])


def laplacian(g: Graph) -> np.ndarray:
    """Laplacian matrix L = D - A as an exactly symmetric float array."""
    a = np.zeros((g.n, g.n))
    for i, j in g.edges():
        a[i, j] = -1.0
        a[j, i] = -1.0
    for v, d in enumerate(g.degrees):
        a[v, v] = float(d)
    return a


def complement_l(g: Graph) -> np.ndarray:
    """The matrix L' = J - L whose spectrum pairs with the Laplacian's."""
    return np.ones((g.n, g.n)) - laplacian(g)


def eigenvalues_sym(matrix: np.ndarray) -> Spectrum:
    """Eigenvalues of an exactly symmetric real matrix, descending.

    Raises ValueError for non-square or asymmetric input and
    SolverConvergenceError when the sweep cap is hit.
    """
    m = np.asarray(matrix, dtype=np.float64)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if m.shape[0] < 1:
        raise ValueError("matrix must have order >= 1")
    if not np.isfinite(m).all():
        raise ValueError("matrix entries must be finite")
    if not np.array_equal(m, m.T):
        raise ValueError("matrix entries are not exactly symmetric")
    work = np.ascontiguousarray(m, dtype=np.float64).copy()
    values, off, converged = _jacobi_values(work)
    if not converged:
        raise SolverConvergenceError(float(off))
    trace_error = float(abs(values.sum() - np.trace(m)))
    values.flags.writeable = False
    return Spectrum(values=values, residual=float(off), trace_error=trace_error)


def s_k(spectrum: Spectrum, k: int) -> float:
    """Sum of the k largest eigenvalues."""
    if not 1 <= k <= spectrum.n:
        raise ValueError(f"k={k} outside [1, {spectrum.n}]")
    return float(spectrum.values[:k].sum())
