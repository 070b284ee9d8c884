"""Structured inequality verdicts.

A verdict is one checked chain: ordered link values (smallest-claimed side
first), consecutive slacks, and a pass flag that is true iff every slack is
>= -tol_used * scale with scale = max(1, largest |link|). Absolute tolerance
contributions (omega engine error, quadrature budgets) are folded into
tol_used so the pass rule stays a single inequality.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field

import numpy as np

__all__ = ["InequalityVerdict", "make_verdict", "fingerprint_of"]

TOL_REL_DEFAULT = 1e-8


@dataclass
class InequalityVerdict:
    suite_id: str
    links: list[tuple[str, float]]
    slacks: list[float]
    tol_used: float
    passed: bool
    instance_fingerprint: str
    params: dict = field(default_factory=dict)
    info: dict = field(default_factory=dict)

    @property
    def min_slack(self) -> float:
        return min(self.slacks) if self.slacks else 0.0

    @property
    def scale(self) -> float:
        return max(1.0, max(abs(v) for _, v in self.links)) if self.links else 1.0

    def to_failure_record(self) -> dict:
        return {
            "fingerprint": self.instance_fingerprint,
            "params": dict(self.params),
            "links": [{"label": lab, "value": val} for lab, val in self.links],
            "min_slack": self.min_slack,
        }


def make_verdict(suite_id: str, links: list[tuple[str, float]], *,
                 fingerprint: str, params: dict | None = None,
                 tol_rel: float = TOL_REL_DEFAULT, extra_tol_abs: float = 0.0,
                 info: dict | None = None,
                 extra_pairs: list[tuple[str, float, float]] | None = None) -> InequalityVerdict:
    """Assemble a verdict from an ordered chain of (label, value) links.

    ``extra_tol_abs`` widens the tolerance additively (it is divided by the
    scale and folded into ``tol_used``). ``extra_pairs`` adds side constraints
    ``small <= big`` (label, small, big) that participate in pass/min_slack
    accounting without being part of the printed chain; the tightest pair
    replaces the links when it is tighter than every chain slack.
    """
    values = [float(v) for _, v in links]
    slacks = [values[i + 1] - values[i] for i in range(len(values) - 1)]
    scale = max(1.0, max((abs(v) for v in values), default=0.0))
    pair_slacks = []
    if extra_pairs:
        for _, small, big in extra_pairs:
            pair_slacks.append(float(big) - float(small))
            scale = max(scale, abs(float(small)), abs(float(big)))
    tol_used = tol_rel + extra_tol_abs / scale
    all_slacks = slacks + pair_slacks
    passed = all((s >= -tol_used * scale) for s in all_slacks)

    out_links, out_slacks = list(links), slacks
    if extra_pairs and (not slacks or min(pair_slacks) < min(slacks)):
        i = int(np.argmin(pair_slacks))
        label, small, big = extra_pairs[i]
        out_links = [(f"{label}[lo]", float(small)), (f"{label}[hi]", float(big))]
        out_slacks = [pair_slacks[i]]
    return InequalityVerdict(
        suite_id=suite_id,
        links=out_links,
        slacks=out_slacks,
        tol_used=tol_used,
        passed=passed,
        instance_fingerprint=fingerprint,
        params=dict(params or {}),
        info=dict(info or {}),
    )


def fingerprint_of(*arrays, **params) -> str:
    """Content hash of matrices and parameters (fallback for direct API calls)."""
    h = hashlib.sha256()
    for arr in arrays:
        m = np.ascontiguousarray(np.asarray(arr))
        h.update(str(m.shape).encode())
        h.update(m.tobytes())
    for key in sorted(params):
        h.update(f"{key}={params[key]!r};".encode())
    return "sha256:" + h.hexdigest()[:16]
