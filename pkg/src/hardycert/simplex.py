"""Phase-one simplex feasibility solver for small dense equality systems.

Answers: does x >= 0 with A x = b exist?  One artificial variable is added
per row and their total mass minimized; the system is feasible exactly when
that minimum is numerically zero.  Bland's anti-cycling rule keeps pivoting
deterministic and guarantees termination, which matters because the systems
this package feeds in are heavily rank-deficient.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .errors import DimensionMismatchError, NumericalBreakdownError

#: Entries smaller than this are not trusted as pivots or reduced costs.
PIVOT_EPS = 1e-12

#: Hard iteration guard.  Bland's rule terminates on its own; hitting the
#: guard means float noise broke the bookkeeping and the result is unusable.
MAX_PIVOTS = 50_000


class FeasibilityResult(NamedTuple):
    """Outcome of a feasibility solve.

    ``residual`` is the minimized total artificial mass, i.e. the smallest
    L1 equation error any x >= 0 can achieve; ``solution`` attains it.
    """

    feasible: bool
    solution: np.ndarray
    residual: float


def solve_feasibility_lp(constraint_matrix, rhs, tol: float = 1e-9) -> FeasibilityResult:
    """Decide feasibility of ``{x >= 0 : constraint_matrix @ x = rhs}``.

    Runs a phase-one simplex on the tableau [A | I | b] (rows with negative
    b are sign-flipped first).  Reports ``feasible`` when the minimized
    artificial mass does not exceed ``tol``; the returned ``solution`` holds
    the original variables either way.

    Raises
    ------
    NumericalBreakdownError
        The pivot guard was exceeded or no admissible pivot row existed;
        neither can happen for a well-posed finite system under Bland's rule.
    """
    a = np.asarray(constraint_matrix, dtype=float)
    b = np.asarray(rhs, dtype=float).reshape(-1)
    if a.ndim != 2:
        raise DimensionMismatchError(f"expected a 2-D constraint matrix, got shape {a.shape}")
    if b.size != a.shape[0]:
        raise DimensionMismatchError(
            f"rhs length {b.size} does not match {a.shape[0]} constraint rows"
        )
    if not (np.all(np.isfinite(a)) and np.all(np.isfinite(b))):
        raise ValueError("constraint data must be finite")

    m, n = a.shape
    flip = b < 0.0
    a = np.where(flip[:, None], -a, a)
    b = np.where(flip, -b, b)

    tableau = np.hstack([a, np.eye(m), b[:, None]])
    basis = np.arange(n, n + m)

    for _ in range(MAX_PIVOTS):
        # Reduced costs for the phase-one objective: with unit cost on the
        # artificial block, z_j is the column sum over rows whose basic
        # variable is still artificial.
        artificial_rows = basis >= n
        z = tableau[artificial_rows, :-1].sum(axis=0)
        reduced = z.copy()
        reduced[n:] -= 1.0
        candidates = np.nonzero(reduced > PIVOT_EPS)[0]
        if candidates.size == 0:
            break
        entering = int(candidates[0])  # Bland: smallest eligible index
        column = tableau[:, entering]
        rows = np.nonzero(column > PIVOT_EPS)[0]
        if rows.size == 0:
            raise NumericalBreakdownError("no admissible pivot row for an improving column")
        ratios = tableau[rows, -1] / column[rows]
        best = float(ratios.min())
        ties = rows[ratios <= best + PIVOT_EPS]
        leaving = int(ties[np.argmin(basis[ties])])  # Bland: smallest basic index
        _pivot(tableau, leaving, entering)
        basis[leaving] = entering
    else:
        raise NumericalBreakdownError(f"pivot guard of {MAX_PIVOTS} iterations exceeded")

    values = tableau[:, -1]
    solution = np.zeros(n)
    original = basis < n
    solution[basis[original]] = values[original]
    # Artificials stranded in the basis at (numerically) zero level still
    # count toward the reported residual; the solution itself is unaffected.
    residual = max(float(values[basis >= n].sum()), 0.0)
    return FeasibilityResult(feasible=residual <= tol, solution=solution, residual=residual)


def _pivot(tableau: np.ndarray, row: int, col: int) -> None:
    tableau[row] /= tableau[row, col]
    others = np.arange(tableau.shape[0]) != row
    tableau[others] -= np.outer(tableau[others, col], tableau[row])
    tableau[:, col] = 0.0
    tableau[row, col] = 1.0


__all__ = ["MAX_PIVOTS", "PIVOT_EPS", "FeasibilityResult", "solve_feasibility_lp"]
