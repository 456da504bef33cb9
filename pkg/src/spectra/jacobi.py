"""
Собственные значения плотной симметричной матрицы методом вращений Якоби.

Циклический вариант с турнирным (round-robin) порядком пар: внутри раунда
пары (p, q) не пересекаются, поэтому все n/2 вращений раунда применяются
одной векторной операцией numpy. Сходимость по норме Фробениуса
внедиагональной части: off(A) ≤ tol·‖A‖.
"""

from __future__ import annotations
import logging
from functools import lru_cache
from typing import List, Tuple

import numpy as np

from errors import ConvergenceError
from .matrices import DenseSymMatrix

log = logging.getLogger("jacobi")

OFFDIAG_TOL = 1e-10
MAX_SWEEPS = 100


@lru_cache(maxsize=64)
def _round_robin(n: int) -> Tuple[Tuple[np.ndarray, np.ndarray], ...]:
    """n-1 (или n для нечётного n) раундов, покрывающих все пары ровно один раз."""
    players = list(range(n)) + ([-1] if n % 2 else [])
    k = len(players)
    rounds = []
    for _ in range(k - 1):
        pairs = [
            tuple(sorted((players[i], players[k - 1 - i])))
            for i in range(k // 2)
            if players[i] >= 0 and players[k - 1 - i] >= 0
        ]
        p = np.fromiter((x for x, _ in pairs), dtype=np.int64, count=len(pairs))
        q = np.fromiter((y for _, y in pairs), dtype=np.int64, count=len(pairs))
        rounds.append((p, q))
        players = [players[0], players[-1], *players[1:-1]]
    return tuple(rounds)


def _off_norm(a: np.ndarray) -> float:
    # напрямую, не через ‖A‖² - Σdiag²: иначе сокращение съедает 1e-10
    off = a.copy()
    np.fill_diagonal(off, 0.0)
    return float(np.linalg.norm(off))


def _rotate(a: np.ndarray, p: np.ndarray, q: np.ndarray) -> None:
    apq = a[p, q]
    active = apq != 0.0
    if not active.any():
        return
    safe = np.where(active, apq, 1.0)
    theta = (a[q, q] - a[p, p]) / (2.0 * safe)
    t = np.where(theta >= 0, 1.0, -1.0) / (np.abs(theta) + np.hypot(theta, 1.0))
    t = np.where(active, t, 0.0)
    c = 1.0 / np.sqrt(t * t + 1.0)
    s = t * c

    rp, rq = a[p, :], a[q, :]
    a[p, :] = c[:, None] * rp - s[:, None] * rq
    a[q, :] = s[:, None] * rp + c[:, None] * rq
    cp, cq = a[:, p], a[:, q]
    a[:, p] = cp * c - cq * s
    a[:, q] = cp * s + cq * c
    a[p, q] = a[q, p] = 0.0


def numeric_eigenvalues(
    m: DenseSymMatrix,
    tol: float = OFFDIAG_TOL,
    *,
    max_sweeps: int = MAX_SWEEPS,
) -> List[float]:
    """Все собственные значения по убыванию."""
    a = np.array(m.entries, dtype=np.float64)
    n = a.shape[0]
    threshold = tol * float(np.linalg.norm(a))
    rounds = _round_robin(n)

    for sweep in range(max_sweeps + 1):
        off = _off_norm(a)
        if off <= threshold:
            log.debug(f"dim {n}: converged after {sweep} sweeps, off={off:.3e}")
            return sorted((float(v) for v in np.diag(a)), reverse=True)
        if sweep == max_sweeps:
            break
        for p, q in rounds:
            _rotate(a, p, q)
        a = 0.5 * (a + a.T)
        log.debug(f"dim {n}: sweep {sweep + 1}, off={_off_norm(a):.3e}")

    raise ConvergenceError(
        f"Jacobi did not converge in {max_sweeps} sweeps (dim {n}, off={off:.3e}, "
        f"target {threshold:.3e})"
    )
