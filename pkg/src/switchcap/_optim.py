"""Derivative-free multistart maximization used by the capacity routines.

Each restart runs Nelder-Mead from a different start point; the reported
optimum is the best final value, with exact ties resolved in favor of the
lowest restart index so results are reproducible for a fixed seed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np
from scipy.optimize import minimize


@dataclass(frozen=True)
class MultistartResult:
    x: np.ndarray
    value: float
    evaluations: int
    converged: bool
    restart_values: tuple


def maximize_multistart(
    objective: Callable[[np.ndarray], float],
    starts: Sequence[np.ndarray],
    max_iterations: int,
    tolerance: float,
) -> MultistartResult:
    """Maximize ``objective`` with one Nelder-Mead run per start point.

    ``converged`` is True when the two best restart values agree within
    ``tolerance`` (a single restart falls back to the solver's own
    success flag).
    """
    if not starts:
        raise ValueError("at least one start point is required")
    results = []
    evaluations = 0
    for x0 in starts:
        res = minimize(
            lambda x: -objective(x),
            np.asarray(x0, dtype=float),
            method="Nelder-Mead",
            options={
                "maxiter": max_iterations,
                "xatol": 1e-9,
                "fatol": 1e-12,
            },
        )
        evaluations += int(res.nfev)
        results.append(res)
    values = np.array([-r.fun for r in results])
    best = int(np.argmax(values))
    if len(values) >= 2:
        top_two = np.sort(values)[-2:]
        converged = bool(top_two[1] - top_two[0] <= tolerance)
    else:
        converged = bool(results[0].success)
    return MultistartResult(
        x=np.asarray(results[best].x, dtype=float),
        value=float(values[best]),
        evaluations=evaluations,
        converged=converged,
        restart_values=tuple(float(v) for v in values),
    )
