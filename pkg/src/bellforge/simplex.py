"""Dense two-phase tableau simplex for equality-form linear programs.

Solves ``min c.x  s.t.  A x = b, x >= 0``.  Pivoting follows Bland's rule
(lowest-index entering column, lowest-index leaving basic variable on
ratio ties), which rules out cycling on degenerate vertices.  Sized for a
few dozen rows and a few thousand columns.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

FEAS_TOL = 1e-9
PIVOT_TOL = 1e-12


@dataclass
class LPResult:
    status: str  # "optimal", "infeasible" or "unbounded"
    x: np.ndarray | None
    fun: float | None
    infeasibility: float
    iterations: int

    @property
    def feasible(self) -> bool:
        return self.status != "infeasible"


def _pivot(tab: np.ndarray, basis: list[int], row: int, col: int) -> None:
    tab[row] /= tab[row, col]
    for r in range(tab.shape[0]):
        if r != row and tab[r, col] != 0.0:
            tab[r] -= tab[r, col] * tab[row]
    basis[row] = col


def _run(tab: np.ndarray, basis: list[int], allowed: int, max_iter: int) -> tuple[str, int]:
    """Iterate on ``tab`` whose last row holds reduced costs; columns >= allowed never enter."""
    m = len(basis)
    for it in range(max_iter):
        costs = tab[-1, :allowed]
        candidates = np.flatnonzero(costs < -PIVOT_TOL)
        if candidates.size == 0:
            return "optimal", it
        col = int(candidates[0])
        column = tab[:m, col]
        positive = np.flatnonzero(column > PIVOT_TOL)
        if positive.size == 0:
            return "unbounded", it
        ratios = tab[positive, -1] / column[positive]
        best = ratios.min()
        tied = positive[ratios <= best + PIVOT_TOL * max(1.0, abs(best))]
        row = int(min(tied, key=lambda r: basis[r]))
        _pivot(tab, basis, row, col)
    raise RuntimeError(f"simplex exceeded {max_iter} iterations")


def linprog_eq(c, a_eq, b_eq, feas_tol: float = FEAS_TOL, max_iter: int = 50_000) -> LPResult:
    """Minimise ``c.x`` over ``{x >= 0 : a_eq x = b_eq}``.

    Phase one minimises the sum of artificial variables; the problem is
    declared infeasible when that minimum exceeds ``feas_tol``.  With
    ``c`` all zero the phase-one vertex is returned directly.
    """
    a = np.array(a_eq, dtype=float)
    b = np.array(b_eq, dtype=float).ravel()
    m, n = a.shape
    c = np.zeros(n) if c is None else np.asarray(c, dtype=float).ravel()

    flip = b < 0
    a[flip] *= -1
    b[flip] *= -1

    # columns: n structural, m artificial, rhs
    tab = np.zeros((m + 1, n + m + 1))
    tab[:m, :n] = a
    tab[:m, n : n + m] = np.eye(m)
    tab[:m, -1] = b
    tab[-1, :n] = -a.sum(axis=0)
    tab[-1, -1] = -b.sum()
    basis = list(range(n, n + m))

    _, it1 = _run(tab, basis, n + m, max_iter)
    infeasibility = float(-tab[-1, -1])
    if infeasibility > feas_tol:
        return LPResult("infeasible", None, None, infeasibility, it1)

    # drive zero-level artificials out of the basis where a structural pivot exists
    for row, var in enumerate(basis):
        if var >= n:
            nz = np.flatnonzero(np.abs(tab[row, :n]) > PIVOT_TOL)
            if nz.size:
                _pivot(tab, basis, row, int(nz[0]))

    # phase two: reduced costs of the real objective
    tab[-1] = 0.0
    tab[-1, :n] = c
    for row, var in enumerate(basis):
        if var < n and c[var] != 0.0:
            tab[-1] -= c[var] * tab[row]
    tab[:m, n : n + m] = 0.0  # artificials may no longer enter; keep them inert

    status, it2 = _run(tab, basis, n, max_iter)
    x = np.zeros(n)
    for row, var in enumerate(basis):
        if var < n:
            x[var] = tab[row, -1]
    x[x < 0] = 0.0
    fun = float(c @ x) if status == "optimal" else None
    return LPResult(status, x, fun, infeasibility, it1 + it2)
