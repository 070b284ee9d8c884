"""Heinz-type norm products of fractional matrix powers.

For PSD ``A, B`` and arbitrary ``X`` the suites repeatedly need

    H(u, v) = ||| |A^u X B^(1-v)|^r ||| * ||| |A^(1-u) X B^v|^r |||

at many exponent pairs. Since ``A^u X B^(1-v) = V_A (D_A^u L D_B^(1-v)) V_B*``
with ``L = V_A* X V_B`` and unitarily invariant norms only see singular
values, each evaluation reduces to scaling the rows/columns of the fixed core
``L`` and one batched SVD; the eigendecompositions of ``A`` and ``B`` are done
once per instance. The Heinz function is the diagonal ``f(t) = H(t, t)``,
symmetric about 1/2 by construction and convex on [0, 1].
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import DimensionMismatch, InvalidParams, NoConvergence
from .linalg import _clamped_psd_spectrum, as_matrix
from .norms import NormSpec, gauge_many

__all__ = ["HeinzProduct", "HeinzCurve", "heinz_f", "sample_heinz_curve"]


class HeinzProduct:
    """Batched evaluator of ``H(u, v)`` for one ``(A, B, X, r, norm)`` instance."""

    def __init__(self, a, b, x, r: float, spec: NormSpec):
        if r < 0.0:
            raise InvalidParams(f"r must be >= 0, got {r}")
        a, b, x = as_matrix(a), as_matrix(b), as_matrix(x)
        if not (a.shape == b.shape == x.shape):
            raise DimensionMismatch(f"shapes {a.shape}, {b.shape}, {x.shape}")
        lam_a, vec_a = _clamped_psd_spectrum(a, context="HeinzProduct A")
        lam_b, vec_b = _clamped_psd_spectrum(b, context="HeinzProduct B")
        self.r = float(r)
        self.spec = spec
        self.n = a.shape[0]
        self._lam_a = lam_a
        self._lam_b = lam_b
        self._core = vec_a.conj().T @ x @ vec_b

    @staticmethod
    def _pow(lam: np.ndarray, exps: np.ndarray) -> np.ndarray:
        # (m, n) array lam_j ** e_i with numpy's 0.0**0.0 == 1.0, i.e. A**0 = I
        return np.power(lam[None, :], exps[:, None])

    def _sv_batch(self, row_exps: np.ndarray, col_exps: np.ndarray) -> np.ndarray:
        rows = self._pow(self._lam_a, row_exps)          # (m, n)
        cols = self._pow(self._lam_b, col_exps)          # (m, n)
        mats = rows[:, :, None] * self._core[None, :, :] * cols[:, None, :]
        try:
            return np.linalg.svd(mats, compute_uv=False)
        except np.linalg.LinAlgError as exc:  # pragma: no cover - LAPACK failure
            raise NoConvergence(str(exc)) from exc

    def _gauge_pow(self, sv: np.ndarray) -> np.ndarray:
        if self.r == 0.0:
            return gauge_many(np.ones_like(sv), self.spec)
        return gauge_many(sv**self.r, self.spec)

    def value_many(self, us, vs) -> np.ndarray:
        """``H(u_i, v_i)`` for matching arrays of exponents (each in [0, 1])."""
        us = np.atleast_1d(np.asarray(us, dtype=float))
        vs = np.atleast_1d(np.asarray(vs, dtype=float))
        us, vs = np.broadcast_arrays(us, vs)
        shape = us.shape
        us, vs = us.ravel().copy(), vs.ravel().copy()
        if np.any((us < -1e-12) | (us > 1.0 + 1e-12) | (vs < -1e-12) | (vs > 1.0 + 1e-12)):
            raise InvalidParams("exponents must lie in [0, 1]")
        np.clip(us, 0.0, 1.0, out=us)
        np.clip(vs, 0.0, 1.0, out=vs)
        term1 = self._gauge_pow(self._sv_batch(us, 1.0 - vs))
        term2 = self._gauge_pow(self._sv_batch(1.0 - us, vs))
        return (term1 * term2).reshape(shape)

    def value(self, u: float, v: float) -> float:
        return float(self.value_many([u], [v])[0])

    def diag_many(self, ts) -> np.ndarray:
        """Heinz function values ``f(t) = H(t, t)`` for an array of ``t``."""
        ts = np.asarray(ts, dtype=float)
        return self.value_many(ts, ts)

    def __call__(self, t) -> float | np.ndarray:
        out = self.diag_many(np.atleast_1d(t))
        return float(out[0]) if np.isscalar(t) or np.ndim(t) == 0 else out


@dataclass
class HeinzCurve:
    """Sampled Heinz function plus the exact evaluator it came from."""

    r: float
    spec: NormSpec
    ts: np.ndarray
    values: np.ndarray
    fn: Callable[[np.ndarray], np.ndarray] = field(repr=False)


def heinz_f(a, b, x, r: float, spec: NormSpec, t: float) -> float:
    """``f(t) = ||| |A^t X B^(1-t)|^r ||| * ||| |A^(1-t) X B^t|^r |||``."""
    if not 0.0 <= t <= 1.0:
        raise InvalidParams(f"t must lie in [0, 1], got {t}")
    return float(HeinzProduct(a, b, x, r, spec)(float(t)))


def sample_heinz_curve(a, b, x, r: float, spec: NormSpec, grid_n: int = 21) -> HeinzCurve:
    """Sample ``f`` on a uniform [0, 1] grid (odd ``grid_n`` puts 1/2 on it)."""
    if grid_n < 3:
        raise InvalidParams(f"grid_n must be >= 3, got {grid_n}")
    prod = HeinzProduct(a, b, x, r, spec)
    ts = np.linspace(0.0, 1.0, grid_n)
    return HeinzCurve(r=float(r), spec=spec, ts=ts, values=prod.diag_many(ts), fn=prod.diag_many)
