"""Inequality-chain evaluators.

Each operation evaluates every side of one norm-inequality chain on a
concrete instance and returns a structured :class:`InequalityVerdict`; the
chains are exact in exact arithmetic, so tolerances only absorb floating
point and quadrature error. Grid-style checks (convexity of the Heinz curve
and surface, Jensen-gap monotonicity, Kwong positivity) are expressed as
collections of two-sided constraints feeding the same verdict shape.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidParams, KwongPreconditionFailed, NotPSD
from .heinz import HeinzCurve, HeinzProduct
from .linalg import TAU_PD, _clamped_psd_spectrum, adjoint, as_matrix
from .norms import NormSpec, numerical_radius, uinorm_abs_pow
from .quadrature import integrate_1d, integrate_2d
from .scalarfn import ScalarFn
from .verdicts import TOL_REL_DEFAULT, InequalityVerdict, fingerprint_of, make_verdict

__all__ = [
    "TwoParamSurface",
    "heinz_product",
    "check_cs_basic",
    "check_bhatia_davis",
    "check_hh_chain",
    "surface_G",
    "check_corner_max",
    "check_dragomir_2d",
    "jensen_phi",
    "check_jensen_phi",
    "check_thm32",
    "check_thm33",
    "kwong_matrix",
    "is_kwong_sample",
    "check_kwong_psd",
    "check_thm43",
    "check_cor44",
    "check_example45",
    "check_convexity_f",
    "check_convexity_g",
]

HH_LIMIT_WINDOW = 1e-6  # |1 - 2 mu| below this switches to the closed-form limit


def heinz_product(a, b, x, r: float, spec: NormSpec) -> HeinzProduct:
    """Shared evaluator for all the chains below (eigendecompose A, B once)."""
    return HeinzProduct(a, b, x, r, spec)


def _check_unit(name: str, value: float) -> float:
    value = float(value)
    if not 0.0 <= value <= 1.0:
        raise InvalidParams(f"{name} must lie in [0, 1], got {value}")
    return value


def _check_open_unit(name: str, value: float) -> float:
    value = float(value)
    if not 0.0 < value < 1.0:
        raise InvalidParams(f"{name} must lie in (0, 1), got {value}")
    return value


# ---------------------------------------------------------------------------
# Cauchy-Schwarz chains
# ---------------------------------------------------------------------------

def check_cs_basic(a, b, x, r: float, spec: NormSpec, mu: float, *,
                   tol_rel: float = TOL_REL_DEFAULT,
                   fingerprint: str | None = None,
                   prod: HeinzProduct | None = None) -> InequalityVerdict:
    """Chain f(1/2) <= f(mu) <= f(0) for the Heinz function f."""
    mu = _check_unit("mu", mu)
    prod = prod or heinz_product(a, b, x, r, spec)
    f_half, f_mu, f_zero = prod.diag_many([0.5, mu, 0.0])
    fp = fingerprint or fingerprint_of(a, b, x, suite="cs-basic", r=r, spec=str(spec), mu=mu)
    return make_verdict(
        "cs-basic",
        [("f(1/2)", f_half), ("f(mu)", f_mu), ("f(0)", f_zero)],
        fingerprint=fp, params={"mu": mu}, tol_rel=tol_rel,
    )


def check_bhatia_davis(a, b, x, r: float, spec: NormSpec, *,
                       tol_rel: float = TOL_REL_DEFAULT,
                       fingerprint: str | None = None) -> InequalityVerdict:
    """||| |A*XB|^r |||^2 <= ||| |AA*X|^r ||| * ||| |XBB*|^r ||| for arbitrary A, B, X."""
    a, b, x = as_matrix(a), as_matrix(b), as_matrix(x)
    lhs = uinorm_abs_pow(adjoint(a) @ x @ b, r, spec) ** 2
    rhs = uinorm_abs_pow(a @ adjoint(a) @ x, r, spec) * uinorm_abs_pow(x @ b @ adjoint(b), r, spec)
    fp = fingerprint or fingerprint_of(a, b, x, suite="bhatia-davis", r=r, spec=str(spec))
    return make_verdict(
        "bhatia-davis",
        [("lhs_squared", lhs), ("rhs_product", rhs)],
        fingerprint=fp, tol_rel=tol_rel,
    )


def check_hh_chain(a, b, x, r: float, spec: NormSpec, mu: float, *,
                   quad_tol: float = 1e-9, tol_rel: float = TOL_REL_DEFAULT,
                   fingerprint: str | None = None,
                   prod: HeinzProduct | None = None) -> InequalityVerdict:
    """Four-term Hermite-Hadamard chain through the interval mean of f.

    Links: f(1/2) <= mean of f over [mu, 1-mu] <= (f(1/2) + f(mu))/2 <= f(mu).
    Within ``HH_LIMIT_WINDOW`` of mu = 1/2 the closed-form limit chain (all
    links equal to f(1/2)) is returned instead of a 0/0 quadrature.
    """
    mu = _check_unit("mu", mu)
    prod = prod or heinz_product(a, b, x, r, spec)
    f_half, f_mu = prod.diag_many([0.5, mu])
    fp = fingerprint or fingerprint_of(a, b, x, suite="hh-chain", r=r, spec=str(spec), mu=mu)
    width = abs(1.0 - 2.0 * mu)
    if width < HH_LIMIT_WINDOW:
        links = [("f(1/2)", f_half), ("interval_mean", f_half),
                 ("half_sum", f_half), ("f(mu)", f_half)]
        return make_verdict("hh-chain", links, fingerprint=fp,
                            params={"mu": mu}, tol_rel=tol_rel,
                            info={"limit_path": True})
    lo, hi = min(mu, 1.0 - mu), max(mu, 1.0 - mu)
    quad = integrate_1d(prod.diag_many, lo, hi, quad_tol, vectorized=True)
    mean = abs(quad.value) / width
    links = [("f(1/2)", f_half), ("interval_mean", mean),
             ("half_sum", 0.5 * (f_half + f_mu)), ("f(mu)", f_mu)]
    return make_verdict("hh-chain", links, fingerprint=fp, params={"mu": mu},
                        tol_rel=tol_rel, extra_tol_abs=quad_tol / width,
                        info={"limit_path": False, "quad_evaluations": quad.evaluations})


@dataclass
class TwoParamSurface:
    """G(s, t) = ||| |A^t X B^(1-s)|^r ||| * ||| |A^(1-t) X B^s|^r ||| on a uniform grid."""

    r: float
    spec: NormSpec
    ss: np.ndarray        # (g,)
    ts: np.ndarray        # (g,)
    values: np.ndarray    # (g, g), values[i, j] = G(ss[i], ts[j])


def surface_G(a, b, x, r: float, spec: NormSpec, grid_n: int, *,
              prod: HeinzProduct | None = None) -> TwoParamSurface:
    """Sample G on a uniform odd grid of [0, 1]^2 (so (1/2, 1/2) is a node)."""
    if grid_n < 3 or grid_n % 2 == 0:
        raise InvalidParams(f"grid_n must be odd and >= 3, got {grid_n}")
    prod = prod or heinz_product(a, b, x, r, spec)
    ss = np.linspace(0.0, 1.0, grid_n)
    smesh, tmesh = np.meshgrid(ss, ss, indexing="ij")
    # G(s, t) = H(t, s) in the evaluator's (row-exponent, column-exponent) convention
    values = prod.value_many(tmesh.ravel(), smesh.ravel()).reshape(grid_n, grid_n)
    return TwoParamSurface(r=float(r), spec=spec, ss=ss, ts=ss.copy(), values=values)


def check_corner_max(a, b, x, r: float, spec: NormSpec, s: float, t: float, *,
                     tol_rel: float = TOL_REL_DEFAULT,
                     fingerprint: str | None = None,
                     prod: HeinzProduct | None = None) -> InequalityVerdict:
    """G(1/2, 1/2) <= G(s, t) <= max of the two corner products."""
    s, t = _check_unit("s", s), _check_unit("t", t)
    a, b, x = as_matrix(a), as_matrix(b), as_matrix(x)
    prod = prod or heinz_product(a, b, x, r, spec)
    g_half = prod.value(0.5, 0.5)
    g_st = prod.value(t, s)
    corner_ax_xb = uinorm_abs_pow(a @ x, r, spec) * uinorm_abs_pow(x @ b, r, spec)
    corner_axb_x = uinorm_abs_pow(a @ x @ b, r, spec) * uinorm_abs_pow(x, r, spec)
    fp = fingerprint or fingerprint_of(a, b, x, suite="corner-max", r=r,
                                       spec=str(spec), s=s, t=t)
    return make_verdict(
        "corner-max",
        [("G(1/2,1/2)", g_half), ("G(s,t)", g_st),
         ("corner_max", max(corner_ax_xb, corner_axb_x))],
        fingerprint=fp, params={"s": s, "t": t}, tol_rel=tol_rel,
        info={"corner_ax_xb": corner_ax_xb, "corner_axb_x": corner_axb_x},
    )


def check_dragomir_2d(a, b, x, r: float, spec: NormSpec, alpha: float, beta: float, *,
                      quad_tol: float = 1e-8, tol_rel: float = TOL_REL_DEFAULT,
                      fingerprint: str | None = None,
                      prod: HeinzProduct | None = None) -> InequalityVerdict:
    """Four-term 2-D mean chain over [alpha, 1-alpha] x [beta, 1-beta].

    Links: 2 f(1/2) <= sum of the two normalized axis means <= 2 x normalized
    box mean <= sum of the two corner products. alpha and beta must lie on the
    same side of 1/2 (alpha = beta = 1 gives the plain [0,1]^2 form).
    """
    alpha, beta = _check_unit("alpha", alpha), _check_unit("beta", beta)
    wa, wb = abs(1.0 - 2.0 * alpha), abs(1.0 - 2.0 * beta)
    if wa < HH_LIMIT_WINDOW or wb < HH_LIMIT_WINDOW:
        raise InvalidParams("alpha and beta must be bounded away from 1/2")
    if (alpha < 0.5) != (beta < 0.5):
        raise InvalidParams(f"alpha={alpha} and beta={beta} straddle 1/2")
    prod = prod or heinz_product(a, b, x, r, spec)
    f_half = prod.value(0.5, 0.5)

    sa = (min(alpha, 1.0 - alpha), max(alpha, 1.0 - alpha))
    sb = (min(beta, 1.0 - beta), max(beta, 1.0 - beta))
    q1 = integrate_1d(lambda ss: prod.value_many(ss, np.full_like(ss, 0.5)),
                      sa[0], sa[1], quad_tol, vectorized=True)
    q2 = integrate_1d(lambda ts: prod.value_many(np.full_like(ts, 0.5), ts),
                      sb[0], sb[1], quad_tol, vectorized=True)
    q2d = integrate_2d(lambda ss, ts: prod.value_many(ss, ts), sa, sb,
                       quad_tol, vectorized=True)
    axis_means = abs(q1.value) / wa + abs(q2.value) / wb
    box_mean_x2 = 2.0 * abs(q2d.value) / (wa * wb)
    corners = prod.value_many([alpha, 1.0 - alpha], [beta, beta])
    corner_sum = float(corners[0] + corners[1])

    fp = fingerprint or fingerprint_of(a, b, x, suite="dragomir-2d", r=r,
                                       spec=str(spec), alpha=alpha, beta=beta)
    extra = quad_tol / wa + quad_tol / wb + 2.0 * quad_tol / (wa * wb)
    return make_verdict(
        "dragomir-2d",
        [("2 f(1/2)", 2.0 * f_half), ("axis_mean_sum", axis_means),
         ("box_mean_x2", box_mean_x2), ("corner_sum", corner_sum)],
        fingerprint=fp, params={"alpha": alpha, "beta": beta},
        tol_rel=tol_rel, extra_tol_abs=extra,
        info={"quad_evaluations": q1.evaluations + q2.evaluations + q2d.evaluations},
    )


# ---------------------------------------------------------------------------
# Jensen-gap refinements
# ---------------------------------------------------------------------------

def jensen_phi(curve: HeinzCurve, delta: float, p: float, t: float) -> float:
    """phi(t) = (1-p) f(delta) + p f(t) - f((1-p) delta + p t), exact f evaluations."""
    delta, t = _check_unit("delta", delta), _check_unit("t", t)
    p = _check_open_unit("p", p)
    vals = np.asarray(curve.fn(np.array([delta, t, (1.0 - p) * delta + p * t])), dtype=float)
    return float((1.0 - p) * vals[0] + p * vals[1] - vals[2])


def check_jensen_phi(a, b, x, r: float, spec: NormSpec, p: float, *,
                     delta: float = 0.5, grid_n: int = 21,
                     tol_rel: float = 1e-9,
                     fingerprint: str | None = None,
                     prod: HeinzProduct | None = None) -> InequalityVerdict:
    """phi nonincreasing left of delta, nondecreasing right of it, and >= 0.

    Constraints over a uniform ``grid_n``-point grid; the verdict's links show
    the tightest constraint.
    """
    delta = _check_unit("delta", delta)
    p = _check_open_unit("p", p)
    if grid_n < 3:
        raise InvalidParams(f"grid_n must be >= 3, got {grid_n}")
    prod = prod or heinz_product(a, b, x, r, spec)
    ts = np.linspace(0.0, 1.0, grid_n)
    pts = np.concatenate([[delta], ts, (1.0 - p) * delta + p * ts])
    vals = prod.diag_many(pts)
    f_delta, f_ts, f_mix = vals[0], vals[1:1 + grid_n], vals[1 + grid_n:]
    phi = (1.0 - p) * f_delta + p * f_ts - f_mix

    pairs: list[tuple[str, float, float]] = []
    for k in range(grid_n - 1):
        if ts[k + 1] <= delta + 1e-12:
            pairs.append((f"decreasing@t={ts[k + 1]:.3f}", phi[k + 1], phi[k]))
        if ts[k] >= delta - 1e-12:
            pairs.append((f"increasing@t={ts[k]:.3f}", phi[k], phi[k + 1]))
    for k in range(grid_n):
        pairs.append((f"nonneg@t={ts[k]:.3f}", 0.0, phi[k]))

    phi_at_delta = float((1.0 - p) * f_delta + p * f_delta - prod.diag_many([delta])[0])
    fp = fingerprint or fingerprint_of(a, b, x, suite="jensen-phi", r=r,
                                       spec=str(spec), p=p, delta=delta)
    return make_verdict(
        "jensen-phi", [], fingerprint=fp,
        params={"p": p, "delta": delta}, tol_rel=tol_rel, extra_pairs=pairs,
        info={"phi_max": float(np.max(phi)), "phi_at_delta": phi_at_delta},
    )


def _thm3_points(mu: float, p: float) -> tuple[float, float, float]:
    mu_reduced = min(mu, 1.0 - mu)
    base = 0.5 * (1.0 - p)
    return mu_reduced, base, base + p * mu_reduced


def check_thm32(a, b, x, r: float, spec: NormSpec, mu: float, p: float, *,
                tol_rel: float = TOL_REL_DEFAULT,
                fingerprint: str | None = None,
                prod: HeinzProduct | None = None) -> InequalityVerdict:
    """0 <= (1/p)(f((1-p)/2) - f((1-p)/2 + p mu')) <= f(0) - f(mu), mu' = min(mu, 1-mu).

    The Jensen gap is evaluated at the reduced exponent (f is symmetric about
    1/2); ``info`` additionally probes the chain with the raw mu.
    """
    mu = _check_unit("mu", mu)
    p = _check_open_unit("p", p)
    _, base, shifted = _thm3_points(mu, p)
    prod = prod or heinz_product(a, b, x, r, spec)
    f0, f_mu, f_base, f_shift, f_shift_raw = prod.diag_many(
        [0.0, mu, base, shifted, base + p * mu])
    gap = (f_base - f_shift) / p
    outer = f0 - f_mu
    fp = fingerprint or fingerprint_of(a, b, x, suite="thm32", r=r, spec=str(spec),
                                       mu=mu, p=p)
    scale = max(1.0, abs(gap), abs(outer))
    gap_raw = (f_base - f_shift_raw) / p
    printed_ok = bool(gap_raw >= -tol_rel * scale and outer - gap_raw >= -tol_rel * scale)
    return make_verdict(
        "thm32",
        [("zero", 0.0), ("jensen_gap", gap), ("outer_gap", outer)],
        fingerprint=fp, params={"mu": mu, "p": p}, tol_rel=tol_rel,
        info={"printed_form_gap": float(gap_raw), "printed_form_ok": printed_ok},
    )


def check_thm33(a, b, x, r: float, spec: NormSpec, mu: float, p: float, *,
                tol_rel: float = TOL_REL_DEFAULT,
                fingerprint: str | None = None,
                prod: HeinzProduct | None = None) -> InequalityVerdict:
    """0 <= (1/p)(f((1-p)/2 + p mu') - f(1/2)) <= f(mu) - f(1/2), mu' = min(mu, 1-mu)."""
    mu = _check_unit("mu", mu)
    p = _check_open_unit("p", p)
    _, _, shifted = _thm3_points(mu, p)
    prod = prod or heinz_product(a, b, x, r, spec)
    f_mu, f_half, f_shift = prod.diag_many([mu, 0.5, shifted])
    gap = (f_shift - f_half) / p
    outer = f_mu - f_half
    fp = fingerprint or fingerprint_of(a, b, x, suite="thm33", r=r, spec=str(spec),
                                       mu=mu, p=p)
    return make_verdict(
        "thm33",
        [("zero", 0.0), ("jensen_gap", gap), ("outer_gap", outer)],
        fingerprint=fp, params={"mu": mu, "p": p}, tol_rel=tol_rel,
    )


# ---------------------------------------------------------------------------
# convexity grids
# ---------------------------------------------------------------------------

def check_convexity_f(a, b, x, r: float, spec: NormSpec, *,
                      grid_n: int = 21, tol_rel: float = 1e-9,
                      fingerprint: str | None = None,
                      prod: HeinzProduct | None = None) -> InequalityVerdict:
    """Midpoint convexity of f over all aligned grid pairs, min at 1/2, symmetry."""
    if grid_n < 3 or grid_n % 2 == 0:
        raise InvalidParams(f"grid_n must be odd and >= 3, got {grid_n}")
    prod = prod or heinz_product(a, b, x, r, spec)
    ts = np.linspace(0.0, 1.0, grid_n)
    fv = prod.diag_many(ts)
    pairs: list[tuple[str, float, float]] = []
    for i in range(grid_n):
        for j in range(i + 2, grid_n, 2):
            pairs.append((f"convex[{i},{j}]", fv[(i + j) // 2], 0.5 * (fv[i] + fv[j])))
    center = grid_n // 2
    pairs.append(("min_at_half", fv[center], float(np.min(fv))))
    sym_dev = float(np.max(np.abs(fv - fv[::-1])))
    pairs.append(("symmetry_dev", sym_dev, 0.0))
    fp = fingerprint or fingerprint_of(a, b, x, suite="convexity-f", r=r, spec=str(spec))
    return make_verdict(
        "convexity-f", [], fingerprint=fp, params={"grid_n": grid_n},
        tol_rel=tol_rel, extra_pairs=pairs,
        info={"t_argmin": float(ts[int(np.argmin(fv))]), "f_half": float(fv[center]),
              "symmetry_dev": sym_dev},
    )


def check_convexity_g(a, b, x, r: float, spec: NormSpec, *,
                      grid_n: int = 11, tol_rel: float = TOL_REL_DEFAULT,
                      fingerprint: str | None = None,
                      prod: HeinzProduct | None = None) -> InequalityVerdict:
    """Midpoint convexity of G at every interior node of an odd grid, min at center."""
    surf = surface_G(a, b, x, r, spec, grid_n, prod=prod)
    v = surf.values
    pairs: list[tuple[str, float, float]] = []
    for i in range(1, grid_n - 1):
        for j in range(1, grid_n - 1):
            for di, dj, tag in ((1, 0, "s"), (0, 1, "t"), (1, 1, "d+"), (1, -1, "d-")):
                lo = v[i - di, j - dj]
                hi = v[i + di, j + dj]
                pairs.append((f"convexG[{i},{j},{tag}]", v[i, j], 0.5 * (lo + hi)))
    c = grid_n // 2
    pairs.append(("min_at_center", v[c, c], float(np.min(v))))
    sym_dev = float(np.max(np.abs(v - v[::-1, ::-1])))
    pairs.append(("swap_symmetry_dev", sym_dev, 0.0))
    imin = np.unravel_index(int(np.argmin(v)), v.shape)
    fp = fingerprint or fingerprint_of(a, b, x, suite="convexity-G", r=r, spec=str(spec))
    return make_verdict(
        "convexity-G", [], fingerprint=fp, params={"grid_n": grid_n},
        tol_rel=tol_rel, extra_pairs=pairs,
        info={"argmin_node": [float(surf.ss[imin[0]]), float(surf.ts[imin[1]])],
              "swap_symmetry_dev": sym_dev},
    )


# ---------------------------------------------------------------------------
# Kwong functions and numerical-radius chains
# ---------------------------------------------------------------------------

def kwong_matrix(points, f: ScalarFn) -> np.ndarray:
    """Symmetric matrix ``(f(a_i) + f(a_j)) / (a_i + a_j)`` at distinct positive points."""
    pts = np.atleast_1d(np.asarray(points, dtype=float))
    if pts.ndim != 1 or pts.size == 0:
        raise InvalidParams("points must be a nonempty 1-D collection")
    if np.any(pts <= 0.0):
        raise InvalidParams("points must be strictly positive")
    if np.unique(pts).size != pts.size:
        raise InvalidParams("points must be distinct")
    vals = f(pts)
    return (vals[:, None] + vals[None, :]) / (pts[:, None] + pts[None, :])


def is_kwong_sample(points, f: ScalarFn, tol: float = 1e-10) -> bool:
    """True iff the sampled Kwong matrix is PSD within ``tol`` (relative)."""
    lam = np.linalg.eigvalsh(kwong_matrix(points, f))
    scale = max(1.0, float(np.max(np.abs(lam))))
    return bool(lam[0] >= -tol * scale)


def check_kwong_psd(points, f: ScalarFn, *, tol_rel: float = 1e-10,
                    fingerprint: str | None = None) -> InequalityVerdict:
    """Verdict form of :func:`is_kwong_sample`: min eigenvalue >= 0 within tol."""
    lam = np.linalg.eigvalsh(kwong_matrix(points, f))
    fp = fingerprint or fingerprint_of(np.asarray(points, dtype=float), suite="kwong-psd",
                                       f=f.name)
    return make_verdict(
        "kwong-psd",
        [("psd_floor", 0.0), ("kwong_min_eigenvalue", float(lam[0]))],
        fingerprint=fp, params={"f": f.name, "n_points": int(np.size(points))},
        tol_rel=tol_rel,
    )


def _dedupe_ascending(vals: np.ndarray, rel: float = 1e-9) -> np.ndarray:
    vals = np.sort(np.asarray(vals, dtype=float))
    scale = max(float(vals[-1]), 1e-300)
    keep = [vals[0]]
    for v in vals[1:]:
        if v - keep[-1] > rel * scale:
            keep.append(v)
    return np.array(keep)


def _check_omega_chain(suite_id: str, a, x, f: ScalarFn, g: ScalarFn, *,
                       omega_tol: float, tol_rel: float, kwong_tol: float,
                       fingerprint: str | None, params: dict) -> InequalityVerdict:
    a, x = as_matrix(a), as_matrix(x)
    lam, vec = _clamped_psd_spectrum(a, context=suite_id)
    scale = float(np.max(lam)) if lam.size else 0.0
    if scale == 0.0 or float(np.min(lam)) < TAU_PD * scale:
        raise NotPSD(f"{suite_id}: positive definite operand required")

    sample = _dedupe_ascending(lam)
    ratio = ScalarFn.ratio(f, g)
    if not is_kwong_sample(sample, ratio, kwong_tol):
        raise KwongPreconditionFailed(
            f"{ratio.name} is not Kwong on the sampled spectrum {sample.tolist()}"
        )
    fv, gv = f(lam), g(lam)
    if np.any(fv * gv > lam * (1.0 + 1e-9) + 1e-12 * scale):
        raise KwongPreconditionFailed(f"f*g exceeds the identity on the spectrum ({f.name}, {g.name})")

    fa = (vec * fv) @ vec.conj().T
    ga = (vec * gv) @ vec.conj().T
    lhs_op = fa @ x @ ga + ga @ x @ fa
    rhs_op = a @ x + x @ a
    om_lhs = numerical_radius(lhs_op, omega_tol)
    om_rhs = numerical_radius(rhs_op, omega_tol)
    fp = fingerprint or fingerprint_of(a, x, suite=suite_id, f=f.name, g=g.name)
    return make_verdict(
        suite_id,
        [("omega(fXg+gXf)", om_lhs.value), ("omega(AX+XA)", om_rhs.value)],
        fingerprint=fp, params=params, tol_rel=tol_rel, extra_tol_abs=2.0 * omega_tol,
        info={"kwong_sample_size": int(sample.size)},
    )


def check_thm43(a, x, f: ScalarFn, g: ScalarFn, *, omega_tol: float = 1e-8,
                tol_rel: float = TOL_REL_DEFAULT, kwong_tol: float = 1e-10,
                fingerprint: str | None = None) -> InequalityVerdict:
    """omega(f(A)Xg(A) + g(A)Xf(A)) <= omega(AX + XA) for PD A, f/g Kwong, fg <= t.

    The Kwong precondition is verified on the sampled spectrum of A (a
    necessary condition; Kwong-ness on a whole interval is not finitely
    decidable), and f(t)g(t) <= t is checked on the spectrum.
    """
    return _check_omega_chain("thm43", a, x, f, g, omega_tol=omega_tol,
                              tol_rel=tol_rel, kwong_tol=kwong_tol,
                              fingerprint=fingerprint,
                              params={"f": f.name, "g": g.name})


def check_cor44(a, x, alpha: float, *, omega_tol: float = 1e-8,
                tol_rel: float = TOL_REL_DEFAULT, kwong_tol: float = 1e-10,
                fingerprint: str | None = None) -> InequalityVerdict:
    """Heinz-type radius chain: f = t^alpha, g = t^(1-alpha)."""
    alpha = _check_unit("alpha", alpha)
    return _check_omega_chain("cor44", a, x, ScalarFn.power(alpha),
                              ScalarFn.power(1.0 - alpha), omega_tol=omega_tol,
                              tol_rel=tol_rel, kwong_tol=kwong_tol,
                              fingerprint=fingerprint, params={"alpha": alpha})


def check_example45(a, x, *, omega_tol: float = 1e-8,
                    tol_rel: float = TOL_REL_DEFAULT, kwong_tol: float = 1e-10,
                    fingerprint: str | None = None) -> InequalityVerdict:
    """Logarithm pair f = log(1+t), g = t/log(1+t); f g = t exactly."""
    return _check_omega_chain("example45", a, x, ScalarFn.log1p(),
                              ScalarFn.t_over_log1p(), omega_tol=omega_tol,
                              tol_rel=tol_rel, kwong_tol=kwong_tol,
                              fingerprint=fingerprint, params={})
