"""Deterministic 1-D and 2-D integration of smooth scalar functions on boxes.

Adaptive Simpson with Richardson error control. Intervals whose five-point
refinement changes the Simpson estimate by more than the locally allotted
tolerance are split, with the allotment halving per split, so the accepted
error estimates sum below the requested tolerance. The evaluation frontier is
processed in rounds, which lets a vectorized integrand amortize its cost over
the whole round (the norm-product integrands here are batched SVDs).

Exact for cubics up to roundoff; budget of ``max_evals`` integrand
evaluations per axis (default 10^4), beyond which BudgetExceeded is raised.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .errors import BudgetExceeded, InvalidParams

__all__ = ["QuadResult", "integrate_1d", "integrate_2d"]

DEFAULT_MAX_EVALS = 10_000


@dataclass(frozen=True)
class QuadResult:
    value: float
    error_estimate: float
    evaluations: int


def _batched(f: Callable, vectorized: bool) -> Callable[[np.ndarray], np.ndarray]:
    if vectorized:
        return lambda xs: np.asarray(f(xs), dtype=float)
    return lambda xs: np.array([float(f(x)) for x in xs], dtype=float)


def integrate_1d(f: Callable, a: float, b: float, tol: float, *,
                 vectorized: bool = False,
                 max_evals: int = DEFAULT_MAX_EVALS) -> QuadResult:
    """Integrate ``f`` over [a, b] to absolute tolerance ``tol``.

    ``vectorized=True`` promises that ``f`` accepts a 1-D ndarray of abscissae
    and returns the matching values. A degenerate interval (a == b) integrates
    to 0 with no evaluations.
    """
    a, b = float(a), float(b)
    if not a <= b:
        raise InvalidParams(f"need a <= b, got [{a}, {b}]")
    if tol <= 0.0:
        raise InvalidParams(f"tol must be positive, got {tol}")
    if a == b:
        return QuadResult(value=0.0, error_estimate=0.0, evaluations=0)

    fb = _batched(f, vectorized)
    fa, fm, fbv = fb(np.array([a, 0.5 * (a + b), b]))
    evals = 3
    width_floor = 1e-14 * max(1.0, abs(a), abs(b))

    # (lo, hi, f_lo, f_mid, f_hi, simpson, local_tol)
    pending = [(a, b, fa, fm, fbv, (b - a) / 6.0 * (fa + 4.0 * fm + fbv), tol)]
    total = 0.0
    err_total = 0.0

    while pending:
        if evals + 2 * len(pending) > max_evals:
            raise BudgetExceeded(
                f"adaptive Simpson needs more than {max_evals} evaluations for tol={tol}"
            )
        lo = np.array([p[0] for p in pending])
        hi = np.array([p[1] for p in pending])
        mid = 0.5 * (lo + hi)
        new_vals = fb(np.concatenate([0.5 * (lo + mid), 0.5 * (mid + hi)]))
        evals += new_vals.size
        flm, frm = new_vals[: len(pending)], new_vals[len(pending):]

        nxt = []
        for i, (x0, x1, f0, f1, f2, s, ltol) in enumerate(pending):
            xm = 0.5 * (x0 + x1)
            sl = (xm - x0) / 6.0 * (f0 + 4.0 * flm[i] + f1)
            sr = (x1 - xm) / 6.0 * (f1 + 4.0 * frm[i] + f2)
            delta = (sl + sr) - s
            if abs(delta) <= 15.0 * ltol or (x1 - x0) <= width_floor:
                total += sl + sr + delta / 15.0
                err_total += abs(delta) / 15.0
            else:
                nxt.append((x0, xm, f0, flm[i], f1, sl, 0.5 * ltol))
                nxt.append((xm, x1, f1, frm[i], f2, sr, 0.5 * ltol))
        pending = nxt

    return QuadResult(value=total, error_estimate=err_total, evaluations=evals)


def integrate_2d(f: Callable, xspan: Sequence[float], yspan: Sequence[float],
                 tol: float, *, vectorized: bool = False,
                 max_evals: int = DEFAULT_MAX_EVALS) -> QuadResult:
    """Iterated integral of ``f(x, y)`` over [a, b] x [c, d].

    The outer axis gets tol/2 and each inner integral tol/(2 (b - a)), so the
    accumulated inner error stays below tol/2 over the box. ``vectorized=True``
    promises ``f`` broadcasts over equal-shaped x and y arrays. A degenerate
    box integrates to 0.
    """
    (a, b), (c, d) = (float(xspan[0]), float(xspan[1])), (float(yspan[0]), float(yspan[1]))
    if not (a <= b and c <= d):
        raise InvalidParams(f"need a <= b and c <= d, got {xspan} x {yspan}")
    if tol <= 0.0:
        raise InvalidParams(f"tol must be positive, got {tol}")
    if a == b or c == d:
        return QuadResult(value=0.0, error_estimate=0.0, evaluations=0)

    inner_tol = tol / (2.0 * (b - a))
    inner_evals = 0

    def g(x: float) -> float:
        nonlocal inner_evals
        if vectorized:
            fx = lambda ys: f(np.full_like(np.asarray(ys, dtype=float), x), ys)
        else:
            fx = lambda y: f(x, y)
        res = integrate_1d(fx, c, d, inner_tol, vectorized=vectorized, max_evals=max_evals)
        inner_evals += res.evaluations
        return res.value

    outer = integrate_1d(g, a, b, 0.5 * tol, max_evals=max_evals)
    # every outer node consumed one inner integral; integrand evaluations are the inner ones
    return QuadResult(
        value=outer.value,
        error_estimate=outer.error_estimate + (b - a) * inner_tol,
        evaluations=inner_evals,
    )
