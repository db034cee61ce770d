"""Reference computations that share no code with the solver.

Each one evaluates the budget equation from raw project fields.
"""

from __future__ import annotations

import numpy as np

from equirisk import ProblemInstance


def spend_at(instance: ProblemInstance, r: float) -> float:
    total = 0.0
    for p in instance.projects:
        cp = p.base_cost + p.inflation_rate * p.delay
        total += p.base_cost * cp * p.volume / (cp + p.base_cost * r)
    return total


def bisect_root(instance: ProblemInstance, steps: int = 400) -> float:
    """Plain bisection on [0, hi], hi found by stepping by factors of 10."""
    hi = 10.0
    while spend_at(instance, hi) > instance.budget:
        hi *= 10.0
    lo = 0.0
    for _ in range(steps):
        mid = 0.5 * (lo + hi)
        if mid in (lo, hi):
            break
        if spend_at(instance, mid) > instance.budget:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def grid_root(instance: ProblemInstance, step: float = 1e-5) -> float:
    """Root located by scanning r on a uniform grid.

    A coarse unit-step scan finds an interval [a, a + 1] with a sign change;
    that interval is then scanned at ``step`` and the crossing is linearly
    interpolated between the two grid points that straddle it.
    """
    b = instance.budget
    a = 0.0
    while spend_at(instance, a + 1.0) > b:
        a += 1.0
    cs = np.array([p.base_cost for p in instance.projects])
    cps = np.array([p.base_cost + p.inflation_rate * p.delay for p in instance.projects])
    vs = np.array([p.volume for p in instance.projects])
    r = a + step * np.arange(int(round(1.0 / step)) + 1)
    f = (cs * cps * vs / (cps + np.outer(r, cs))).sum(axis=1) - b
    k = int(np.nonzero(f <= 0)[0][0])
    if k == 0:
        return float(r[0])
    r0, r1, f0, f1 = r[k - 1], r[k], f[k - 1], f[k]
    return float(r0 + (r1 - r0) * f0 / (f0 - f1))


def central_difference(fn, x: float, h: float) -> float:
    return (fn(x + h) - fn(x - h)) / (2.0 * h)
