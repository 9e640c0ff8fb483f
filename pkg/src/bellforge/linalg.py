"""Dense complex linear algebra for small operators.

Matrices are plain ``numpy`` arrays of dtype ``complex128``.  Arithmetic,
Kronecker products and commutators are thin wrappers over numpy; the
Hermitian eigensolver is a cyclic complex Jacobi iteration so that the
spectra reported by this package do not depend on LAPACK.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import DimensionMismatch, NoConvergence, NotHermitian

HERMITIAN_ATOL = 1e-12
JACOBI_TOL = 1e-12
MAX_SWEEPS = 64
MAX_DIM = 64


def cmatrix(data) -> np.ndarray:
    """Coerce ``data`` into a finite 2-D complex array."""
    m = np.array(data, dtype=np.complex128)
    if m.ndim == 1:
        m = m.reshape(-1, 1)
    if m.ndim != 2:
        raise DimensionMismatch(f"expected a 2-D matrix, got ndim={m.ndim}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix entries must be finite")
    return m


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.complex128)


def zeros(rows: int, cols: int | None = None) -> np.ndarray:
    return np.zeros((rows, rows if cols is None else cols), dtype=np.complex128)


def adjoint(m) -> np.ndarray:
    return cmatrix(m).conj().T


def trace(m) -> complex:
    m = cmatrix(m)
    _require_square(m)
    return complex(np.trace(m))


def add(a, b) -> np.ndarray:
    a, b = cmatrix(a), cmatrix(b)
    if a.shape != b.shape:
        raise DimensionMismatch(f"cannot add {a.shape} and {b.shape}")
    return a + b


def scale(alpha: complex, m) -> np.ndarray:
    return complex(alpha) * cmatrix(m)


def matmul(a, b) -> np.ndarray:
    a, b = cmatrix(a), cmatrix(b)
    if a.shape[1] != b.shape[0]:
        raise DimensionMismatch(f"cannot multiply {a.shape} by {b.shape}")
    return a @ b


def kron(a, b) -> np.ndarray:
    """Kronecker product; entry ``(i*rb + k, j*cb + l)`` is ``a[i, j] * b[k, l]``."""
    return np.kron(cmatrix(a), cmatrix(b))


def commutator(a, b) -> np.ndarray:
    """Return ``a @ b - b @ a`` for square matrices of equal shape."""
    a, b = cmatrix(a), cmatrix(b)
    _require_square(a)
    if a.shape != b.shape:
        raise DimensionMismatch(f"commutator of {a.shape} and {b.shape}")
    return a @ b - b @ a


def is_hermitian(m, atol: float = HERMITIAN_ATOL) -> bool:
    m = cmatrix(m)
    if m.shape[0] != m.shape[1]:
        return False
    return bool(np.max(np.abs(m - m.conj().T), initial=0.0) <= atol)


def hermitian_eigh(m, tol: float = JACOBI_TOL, max_sweeps: int = MAX_SWEEPS):
    """Eigen-decompose a Hermitian matrix by cyclic Jacobi rotations.

    Returns ``(w, v)`` with ``w`` ascending and the columns of ``v`` an
    orthonormal set of eigenvectors, so that ``v @ diag(w) @ v^H == m``.
    Iteration stops once the off-diagonal Frobenius norm drops below
    ``tol * max(1, ||m||_F)``.

    Raises:
        NotHermitian: ``m`` deviates from its adjoint by more than 1e-12.
        NoConvergence: ``max_sweeps`` sweeps did not reach the tolerance.
    """
    a = cmatrix(m)
    _require_square(a)
    n = a.shape[0]
    if n > MAX_DIM:
        raise DimensionMismatch(f"eigensolver supports at most {MAX_DIM}x{MAX_DIM}")
    if not is_hermitian(a):
        raise NotHermitian("matrix is not Hermitian within 1e-12")
    # symmetrise away sub-tolerance asymmetry so the diagonal stays real
    a = 0.5 * (a + a.conj().T)
    v = identity(n)
    threshold = tol * max(1.0, float(np.linalg.norm(a)))

    for _ in range(max_sweeps + 1):
        if _off_norm(a) < threshold:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                _rotate(a, v, p, q)
    else:
        raise NoConvergence(f"Jacobi did not converge in {max_sweeps} sweeps")

    w = a.diagonal().real.copy()
    order = np.argsort(w, kind="stable")
    return w[order], v[:, order]


def hermitian_eigenvalues(m, **kwargs) -> np.ndarray:
    """Ascending real eigenvalues of a Hermitian matrix (see :func:`hermitian_eigh`)."""
    return hermitian_eigh(m, **kwargs)[0]


def _off_norm(a: np.ndarray) -> float:
    off = a - np.diag(a.diagonal())
    return float(np.sqrt(np.sum(np.abs(off) ** 2)))


def _rotate(a: np.ndarray, v: np.ndarray, p: int, q: int) -> None:
    apq = a[p, q]
    r = abs(apq)
    if r < 1e-300:
        return
    phase = apq / r
    app, aqq = a[p, p].real, a[q, q].real
    # real Jacobi angle for the phase-rotated 2x2 block [[app, r], [r, aqq]]
    tau = (aqq - app) / (2.0 * r)
    t = math.copysign(1.0, tau) / (abs(tau) + math.hypot(tau, 1.0))
    c = 1.0 / math.hypot(t, 1.0)
    s = t * c
    # U = diag(1, conj(phase)) @ [[c, s], [-s, c]] restricted to (p, q)
    u_pp, u_pq = c, s
    u_qp, u_qq = -s * phase.conjugate(), c * phase.conjugate()

    col_p, col_q = a[:, p].copy(), a[:, q].copy()
    a[:, p] = col_p * u_pp + col_q * u_qp
    a[:, q] = col_p * u_pq + col_q * u_qq
    row_p, row_q = a[p, :].copy(), a[q, :].copy()
    a[p, :] = np.conj(u_pp) * row_p + np.conj(u_qp) * row_q
    a[q, :] = np.conj(u_pq) * row_p + np.conj(u_qq) * row_q
    a[p, q] = a[q, p] = 0.0
    a[p, p] = a[p, p].real
    a[q, q] = a[q, q].real

    vp, vq = v[:, p].copy(), v[:, q].copy()
    v[:, p] = vp * u_pp + vq * u_qp
    v[:, q] = vp * u_pq + vq * u_qq


def _require_square(m: np.ndarray) -> None:
    if m.shape[0] != m.shape[1]:
        raise DimensionMismatch(f"expected a square matrix, got {m.shape}")
