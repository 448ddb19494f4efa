"""Dense primal simplex for ``max c.x  s.t.  A x <= b, x >= 0`` with ``b >= 0``.

The origin is feasible for every problem the package builds, so the slack
basis is the starting vertex and no phase one is needed. Pivoting follows
Bland's rule (lowest-index entering variable, lowest-index leaving variable on
ratio ties), which rules out cycling on the degenerate vertices that show up
whenever a source eigenvalue is zero.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import SymTransError


class Unbounded(SymTransError):
    pass


@dataclass
class SimplexResult:
    x: np.ndarray
    slack: np.ndarray
    objective: float
    basis: np.ndarray
    iterations: int


def simplex_max(
    c, A, b, secondary=None, eps: float = 1e-12, max_iter: int | None = None
) -> SimplexResult:
    """Solve the LP; optionally break ties among optimal vertices.

    With ``secondary`` given, a second pivoting stage maximizes
    ``secondary.x`` while only admitting entering columns whose primary
    reduced cost is zero, so the primary optimum is kept.
    """
    c = np.asarray(c, dtype=float)
    A = np.asarray(A, dtype=float)
    b = np.asarray(b, dtype=float)
    m, n = A.shape
    if c.shape != (n,) or b.shape != (m,):
        raise ValueError("inconsistent LP dimensions")
    if b.min(initial=0.0) < 0:
        raise ValueError("right-hand side must be non-negative (origin must be feasible)")

    # rows 0..m-1: constraints [A | I | b]; then reduced-cost rows [-c | 0 | obj]
    T = np.zeros((m + 2, n + m + 1))
    T[:m, :n] = A
    T[:m, n : n + m] = np.eye(m)
    T[:m, -1] = b
    T[m, :n] = -c
    if secondary is not None:
        T[m + 1, :n] = -np.asarray(secondary, dtype=float)
    basis = np.arange(n, n + m)

    max_iter = max_iter or 50 * (n + m) ** 2
    it = 0
    stage = 0
    while True:
        if stage == 0:
            candidates = np.flatnonzero(T[m, :-1] < -eps)
            if candidates.size == 0:
                if secondary is None:
                    break
                stage = 1
                continue
        else:
            tie_scale = 10 * eps * max(1.0, np.abs(c).max())
            candidates = np.flatnonzero(
                (np.abs(T[m, :-1]) <= tie_scale) & (T[m + 1, :-1] < -eps)
            )
            if candidates.size == 0:
                break
        if it >= max_iter:
            raise SymTransError(f"simplex did not terminate in {max_iter} pivots")
        col = candidates[0]
        column = T[:m, col]
        rows = np.flatnonzero(column > eps)
        if rows.size == 0:
            raise Unbounded("objective is unbounded")
        ratios = T[rows, -1] / column[rows]
        best = ratios.min()
        tied = rows[ratios <= best + eps * max(1.0, abs(best))]
        row = tied[np.argmin(basis[tied])]

        T[row] /= T[row, col]
        for r in range(m + 2):
            if r != row and T[r, col] != 0.0:
                T[r] -= T[r, col] * T[row]
        basis[row] = col
        it += 1

    # Recover the vertex from the original data for accuracy.
    full = np.hstack([A, np.eye(m)])
    try:
        xb = np.linalg.solve(full[:, basis], b)
    except np.linalg.LinAlgError:
        xb = T[:m, -1].copy()
    xb[np.abs(xb) < eps] = 0.0
    z = np.zeros(n + m)
    z[basis] = np.maximum(xb, 0.0)
    x = z[:n]
    return SimplexResult(
        x=x,
        slack=b - A @ x,
        objective=float(c @ x),
        basis=basis.copy(),
        iterations=it,
    )
