"""Identified real scalar functions on (0, inf) used for matrix-function constructions.

A :class:`ScalarFn` couples a vectorized callable with an explicit domain so
spectra can be validated before being pushed through ``V diag(f(lambda)) V*``.
The named constructors cover the power/logarithm family exercised by the
inequality suites; ``from_table`` admits ad-hoc sampled functions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Mapping

import numpy as np

from .errors import DomainViolation, InvalidSpec

__all__ = ["ScalarFn", "parse_scalar_fn"]


def _log1p_quotient(t: np.ndarray) -> np.ndarray:
    # t / log(1+t) with the removable singularity t=0 -> 1.
    t = np.asarray(t, dtype=float)
    out = np.ones_like(t)
    nz = t != 0.0
    out[nz] = t[nz] / np.log1p(t[nz])
    return out


@dataclass(frozen=True)
class ScalarFn:
    """Real scalar function with a declared domain ``(lo, hi)`` / ``[lo, hi]``."""

    name: str
    fn: Callable[[np.ndarray], np.ndarray] = field(repr=False)
    lo: float = -math.inf
    hi: float = math.inf
    lo_open: bool = False
    hi_open: bool = False

    def __call__(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        self.check_domain(x)
        return np.asarray(self.fn(x), dtype=float)

    def contains(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        lo_ok = x > self.lo if self.lo_open else x >= self.lo
        hi_ok = x < self.hi if self.hi_open else x <= self.hi
        return lo_ok & hi_ok

    def check_domain(self, x) -> None:
        ok = self.contains(x)
        if not np.all(ok):
            bad = np.asarray(x, dtype=float)[~ok]
            raise DomainViolation(
                f"{bad[0]!r} outside domain of {self.name} "
                f"({'(' if self.lo_open else '['}{self.lo}, {self.hi}"
                f"{')' if self.hi_open else ']'})"
            )

    # -- named constructors -------------------------------------------------

    @staticmethod
    def power(alpha: float) -> "ScalarFn":
        """t^alpha, with 0^0 = 1; domain [0, inf) for alpha >= 0, (0, inf) otherwise."""
        alpha = float(alpha)

        def fn(t: np.ndarray) -> np.ndarray:
            t = np.asarray(t, dtype=float)
            if alpha == 0.0:
                return np.ones_like(t)
            return np.power(t, alpha)

        return ScalarFn(name=f"pow:{alpha:g}", fn=fn, lo=0.0, lo_open=alpha < 0.0)

    @staticmethod
    def sqrt() -> "ScalarFn":
        return ScalarFn(name="sqrt", fn=np.sqrt, lo=0.0)

    @staticmethod
    def identity() -> "ScalarFn":
        return ScalarFn(name="identity", fn=lambda t: np.asarray(t, dtype=float))

    @staticmethod
    def log1p() -> "ScalarFn":
        return ScalarFn(name="log1p", fn=np.log1p, lo=-1.0, lo_open=True)

    @staticmethod
    def t_over_log1p() -> "ScalarFn":
        """t / log(1+t), value 1 at t = 0."""
        return ScalarFn(name="t_over_log1p", fn=_log1p_quotient, lo=-1.0, lo_open=True)

    @staticmethod
    def from_table(table: Mapping[float, float], name: str = "custom-table") -> "ScalarFn":
        """Function defined only at tabulated abscissae (exact float match)."""
        pts = {float(k): float(v) for k, v in table.items()}

        def fn(t: np.ndarray) -> np.ndarray:
            t = np.asarray(t, dtype=float)
            try:
                return np.array([pts[float(v)] for v in np.atleast_1d(t)]).reshape(t.shape)
            except KeyError as exc:
                raise DomainViolation(f"{exc.args[0]!r} not in {name} table") from None

        lo, hi = min(pts), max(pts)
        return ScalarFn(name=name, fn=fn, lo=lo, hi=hi)

    @staticmethod
    def ratio(f: "ScalarFn", g: "ScalarFn", name: str | None = None) -> "ScalarFn":
        """Pointwise quotient f/g on the intersection of the domains."""

        def fn(t: np.ndarray) -> np.ndarray:
            return np.asarray(f.fn(t), dtype=float) / np.asarray(g.fn(t), dtype=float)

        return ScalarFn(
            name=name or f"({f.name})/({g.name})",
            fn=fn,
            lo=max(f.lo, g.lo),
            hi=min(f.hi, g.hi),
            lo_open=(f.lo_open and f.lo >= g.lo) or (g.lo_open and g.lo >= f.lo),
            hi_open=(f.hi_open and f.hi <= g.hi) or (g.hi_open and g.hi <= f.hi),
        )


def parse_scalar_fn(text: str) -> ScalarFn:
    """Parse the CLI/service form: "sqrt", "log1p", "t_over_log1p", "identity", "pow:a"."""
    text = text.strip()
    if text == "sqrt":
        return ScalarFn.sqrt()
    if text == "log1p":
        return ScalarFn.log1p()
    if text == "t_over_log1p":
        return ScalarFn.t_over_log1p()
    if text == "identity":
        return ScalarFn.identity()
    if text.startswith("pow:"):
        try:
            return ScalarFn.power(float(text.split(":", 1)[1]))
        except ValueError:
            pass
    raise InvalidSpec(f"unknown scalar function {text!r}")
