"""Weighted norms of the test-function catalog.

The radial workhorse computes

    || f ||_{d,s}  =  ( N omega_N  *  integral t^{d+N-1} |f(t)|^s dt )^{1/s}

over (0, infinity) by geometric panels [2^k, 2^(k+1)] with adaptive
Gauss-Legendre inside each panel; panels split at the profile's seam
points.  Singular ends are handled in three tiers:

  1. Divergence is certified, never guessed: the profile's exact local
     power pi at the singular end decides d + N + s*pi <= 0 (at zero) or
     >= 0 (at infinity) in rational arithmetic.  Quadrature growth is
     only a cross-check.
  2. Where the profile is exactly a power C t^m (cutoff plateaus,
     indicator pieces, truncated-primitive tails), the contribution is a
     closed-form integral evaluated in log space; this is what keeps
     near-critical tails (exponent -1-epsilon) accurate without millions
     of panels.
  3. Otherwise panels extend toward the singular end until their
     contribution falls below the relative tolerance; failure to converge
     within the panel budget is an explicit error, never a silent value.

First-harmonic functions u = f(t) x1/|x| reduce to one radial integral
times a closed-form angular moment (for the function) and to a 2D
(t, angle) integral for the gradient, using |grad u|^2 = f'(t)^2 cos^2 +
(f/t)^2 sin^2 of the polar angle.  Translated profiles reduce to a 2D
integral over (t, angle) around the translation point, with the weight
factored as R^d (1 + (t/R)^2 + 2 (t/R) cos)^{d/2} so that huge offsets
stay in floating-point range.

Norm values are carried with their logarithm so that ratio probes remain
meaningful when a norm overflows or underflows the double range.

All decision logic stays upstream and exact; this module only corroborates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Tuple

import numpy as np

from .profiles import (
    DerivView,
    LogBandPower,
    LogModulated,
    PiecewisePower,
    RadialProfile,
)
from .testfunctions import Angular, TestFunction


@dataclass(frozen=True)
class QuadratureConfig:
    rel_tol: float = 1e-9
    abs_tol: float = 1e-280
    max_subdivisions: int = 12
    max_panels: int = 6000
    gauss_nodes: int = 16
    angular_nodes: int = 48
    divergence_threshold: float = 1e3

    def with_rel_tol(self, rel_tol: float) -> "QuadratureConfig":
        return replace(self, rel_tol=rel_tol)


DEFAULT_CONFIG = QuadratureConfig()


class NormStatus(str, Enum):
    FINITE = "Finite"
    DIVERGENT = "Divergent"
    FAILED = "Failed"


@dataclass(frozen=True)
class NormValue:
    value: float
    log_value: float
    status: NormStatus
    error: float = 0.0
    detail: str = ""

    @property
    def finite(self) -> bool:
        return self.status is NormStatus.FINITE

    @classmethod
    def divergent(cls, detail: str) -> "NormValue":
        return cls(math.inf, math.inf, NormStatus.DIVERGENT, detail=detail)

    @classmethod
    def failed(cls, detail: str) -> "NormValue":
        return cls(math.nan, math.nan, NormStatus.FAILED, detail=detail)

    @classmethod
    def from_log(cls, log_value: float, error: float = 0.0) -> "NormValue":
        try:
            value = math.exp(log_value)
        except OverflowError:
            value = math.inf
        return cls(value, log_value, NormStatus.FINITE, error)

    def as_dict(self) -> dict:
        return {
            "value": self.value,
            "log_value": self.log_value,
            "status": self.status.value,
            "error": self.error,
        }


class QuadratureError(RuntimeError):
    pass


# ---------------------------------------------------------------------------
# small numerics helpers
# ---------------------------------------------------------------------------

def _logsumexp(terms) -> float:
    terms = [t for t in terms if t != -math.inf]
    if not terms:
        return -math.inf
    m = max(terms)
    if m == math.inf:
        return math.inf
    return m + math.log(sum(math.exp(t - m) for t in terms))


@lru_cache(maxsize=16)
def _gl(nodes: int):
    x, w = np.polynomial.legendre.leggauss(nodes)
    return x, w


def surface_area(n: int) -> float:
    """|S^{n-1}| = N omega_N."""
    return 2.0 * math.pi ** (n / 2.0) / math.gamma(n / 2.0)


def sub_sphere_area(n: int) -> float:
    """|S^{n-2}| for n >= 2 (equals 2 when n = 2)."""
    if n < 2:
        raise ValueError("needs n >= 2")
    return 2.0 * math.pi ** ((n - 1) / 2.0) / math.gamma((n - 1) / 2.0)


def log_angular_moment(s: float, n: int) -> float:
    """log of the integral of |sigma_1|^s over the unit sphere S^{n-1}."""
    if n == 1:
        return math.log(2.0)
    # |S^{n-2}| * B((s+1)/2, (n-1)/2)
    return (
        math.log(sub_sphere_area(n))
        + math.lgamma((s + 1.0) / 2.0)
        + math.lgamma((n - 1.0) / 2.0)
        - math.lgamma((s + n) / 2.0)
    )


def log_power_integral(exponent: float, log_lo: Optional[float], log_hi: Optional[float]) -> float:
    """log of the integral of t^exponent over (lo, hi), bounds given as logs.

    log_lo = None means lo = 0, log_hi = None means hi = infinity.  Raises
    QuadratureError when the integral diverges (callers pre-check).
    """
    e1 = exponent + 1.0
    if log_lo is None and log_hi is None:
        raise QuadratureError("power integral over all of (0, inf) diverges")
    if log_lo is None:  # (0, hi): needs e1 > 0
        if e1 <= 0:
            raise QuadratureError("divergent power head")
        return e1 * log_hi - math.log(e1)
    if log_hi is None:  # (lo, inf): needs e1 < 0
        if e1 >= 0:
            raise QuadratureError("divergent power tail")
        return e1 * log_lo - math.log(-e1)
    if log_hi <= log_lo:
        return -math.inf
    if e1 == 0.0:
        return math.log(log_hi - log_lo)
    if e1 > 0:
        # hi^e1 (1 - (lo/hi)^e1) / e1
        return e1 * log_hi + math.log1p(-math.exp(e1 * (log_lo - log_hi))) - math.log(e1)
    return e1 * log_lo + math.log1p(-math.exp(e1 * (log_hi - log_lo))) - math.log(-e1)


# ---------------------------------------------------------------------------
# exact divergence tests
# ---------------------------------------------------------------------------

def _edge_exponent(d: Fraction, s: Fraction, n: int, power) -> Optional[object]:
    """d + n + s * power, exact when the power is a Fraction."""
    if power is None:
        return None
    if isinstance(power, Fraction):
        return d + n + s * power
    return float(d + n) + float(s) * float(power)


def _diverges_at_zero(d, s, n, power) -> bool:
    k = _edge_exponent(d, s, n, power)
    return k is not None and k <= 0


def _diverges_at_inf(d, s, n, power) -> bool:
    k = _edge_exponent(d, s, n, power)
    return k is not None and k >= 0


# ---------------------------------------------------------------------------
# adaptive panel integration of t^wexp |g(t)|^s
# ---------------------------------------------------------------------------

def _make_integrand(profile: RadialProfile, wexp: float, s: float):
    def integrand(t: np.ndarray) -> np.ndarray:
        t = np.asarray(t, dtype=float)
        fv = np.abs(profile.value(t))
        out = np.zeros_like(fv)
        mask = fv > 0
        if np.any(mask):
            with np.errstate(over="ignore"):
                out[mask] = np.exp(wexp * np.log(t[mask]) + s * np.log(fv[mask]))
        return out

    return integrand


def _gl_quad(g, x0: float, x1: float, nodes: int) -> float:
    x, w = _gl(nodes)
    mid, half = 0.5 * (x0 + x1), 0.5 * (x1 - x0)
    return half * float(np.dot(w, g(mid + half * x)))


def _adaptive_panel(g, x0: float, x1: float, cfg: QuadratureConfig, depth: int) -> Tuple[float, float]:
    coarse = _gl_quad(g, x0, x1, cfg.gauss_nodes)
    xm = 0.5 * (x0 + x1)
    fine = _gl_quad(g, x0, xm, cfg.gauss_nodes) + _gl_quad(g, xm, x1, cfg.gauss_nodes)
    err = abs(fine - coarse)
    if err <= cfg.rel_tol * max(abs(fine), cfg.abs_tol) or depth <= 0:
        return fine, err
    left = _adaptive_panel(g, x0, xm, cfg, depth - 1)
    right = _adaptive_panel(g, xm, x1, cfg, depth - 1)
    return left[0] + right[0], left[1] + right[1]


def _panel_edges(lo: float, hi: float, breakpoints) -> list:
    """Geometric 2^k grid intersected with [lo, hi], plus seam points."""
    edges = {lo, hi}
    if lo > 0 and hi > lo:
        k0 = math.ceil(math.log2(lo) + 1e-12)
        k1 = math.floor(math.log2(hi) - 1e-12)
        for k in range(k0, k1 + 1):
            edges.add(2.0**k)
    for b in breakpoints:
        if lo < b < hi:
            edges.add(b)
    return sorted(edges)


def _integrate_panels(g, edges, cfg) -> Tuple[float, float]:
    total, err = 0.0, 0.0
    for x0, x1 in zip(edges[:-1], edges[1:]):
        val, e = _adaptive_panel(g, x0, x1, cfg, cfg.max_subdivisions)
        total += val
        err += e
    return total, err


def _extend_down(g, lo_edge: float, cfg, total_hint: float) -> Tuple[float, float]:
    """Add panels [edge/2, edge] toward zero until they stop contributing."""
    total, err = 0.0, 0.0
    edge = lo_edge
    quiet = 0
    for _ in range(cfg.max_panels):
        val, e = _adaptive_panel(g, edge / 2.0, edge, cfg, cfg.max_subdivisions)
        total += val
        err += e
        edge /= 2.0
        floor = cfg.rel_tol * max(total + total_hint, cfg.abs_tol)
        quiet = quiet + 1 if val <= floor else 0
        if quiet >= 8 or edge < 1e-280:
            return total, err
    raise QuadratureError("panel budget exhausted extending toward zero")


def _extend_up(g, hi_edge: float, cfg, total_hint: float) -> Tuple[float, float]:
    total, err = 0.0, 0.0
    edge = hi_edge
    quiet = 0
    for _ in range(cfg.max_panels):
        val, e = _adaptive_panel(g, edge, edge * 2.0, cfg, cfg.max_subdivisions)
        total += val
        err += e
        edge *= 2.0
        floor = cfg.rel_tol * max(total + total_hint, cfg.abs_tol)
        quiet = quiet + 1 if val <= floor else 0
        if quiet >= 8 or edge > 1e280:
            return total, err
    raise QuadratureError("panel budget exhausted extending toward infinity")


def _radial_log_integral(profile: RadialProfile, wexp: float, s: float, cfg: QuadratureConfig) -> Tuple[float, float]:
    """log of the integral of t^wexp |f(t)|^s over the profile support.

    Divergence must have been excluded by the caller.  Returns
    (log_integral, relative error estimate).
    """
    lo, hi = profile.support
    if hi <= lo:
        return -math.inf, 0.0
    g = _make_integrand(profile, wexp, s)

    log_parts = []
    lo_eff, hi_eff = lo, hi

    head = profile.exact_head()
    if head is not None and lo == 0.0:
        coef, power, limit = head
        if coef != 0.0:
            log_parts.append(
                s * math.log(abs(coef))
                + log_power_integral(wexp + s * float(power), None, math.log(limit))
            )
        lo_eff = limit
    tail = profile.exact_tail()
    if tail is not None and hi == math.inf:
        coef, power, start = tail
        if coef != 0.0:
            log_parts.append(
                s * math.log(abs(coef))
                + log_power_integral(wexp + s * float(power), math.log(start), None)
            )
        hi_eff = start

    if hi_eff < lo_eff:
        # exact regions overlap the whole support
        return _logsumexp(log_parts), 0.0

    err = 0.0
    hint = sum(math.exp(x) for x in log_parts if x < 700)
    middle = 0.0

    anchor_lo = lo_eff if lo_eff > 0 else None
    anchor_hi = hi_eff if hi_eff < math.inf else None
    if anchor_lo is None and anchor_hi is None:
        anchor_lo, anchor_hi = 0.5, 2.0
        for b in profile.breakpoints:
            if math.isfinite(b) and b > 0:
                anchor_lo = min(anchor_lo, b)
                anchor_hi = max(anchor_hi, b)
    elif anchor_lo is None:
        anchor_lo = min(anchor_hi / 4.0, 1.0)
    elif anchor_hi is None:
        anchor_hi = max(anchor_lo * 4.0, 1.0)

    edges = _panel_edges(anchor_lo, anchor_hi, profile.breakpoints)
    middle, err0 = _integrate_panels(g, edges, cfg)
    err += err0

    if lo_eff == 0.0:
        down, err_d = _extend_down(g, anchor_lo, cfg, middle + hint)
        middle += down
        err += err_d
    if hi_eff == math.inf:
        up, err_u = _extend_up(g, anchor_hi, cfg, middle + hint)
        middle += up
        err += err_u

    if not math.isfinite(middle):
        raise QuadratureError("panel sum overflowed")
    if middle > 0:
        log_parts.append(math.log(middle))
    total_log = _logsumexp(log_parts)
    rel_err = err / max(middle + hint, cfg.abs_tol)
    return total_log, rel_err


# ---------------------------------------------------------------------------
# special exact paths
# ---------------------------------------------------------------------------

def _piecewise_log_integral(profile: PiecewisePower, wexp: float, s: float) -> float:
    """Closed-form log integral for piecewise powers; exact in log space."""
    parts = []
    for coef, expo, lo, hi in profile.pieces:
        if coef == 0.0:
            continue
        log_lo = None if lo == 0.0 else math.log(lo)
        log_hi = None if hi == math.inf else math.log(hi)
        parts.append(
            s * math.log(abs(coef)) + log_power_integral(wexp + s * float(expo), log_lo, log_hi)
        )
    return _logsumexp(parts)


def _log_band_log_integral(profile: LogBandPower, wexp: float, s: float) -> float:
    if profile.coef == 0.0:
        return -math.inf
    log_lo = None if profile.log_lo == -math.inf else profile.log_lo
    log_hi = None if profile.log_hi == math.inf else profile.log_hi
    return s * math.log(abs(profile.coef)) + log_power_integral(
        wexp + s * float(profile.expo), log_lo, log_hi
    )


def _log_modulated_log_integral(profile: LogModulated, d: Fraction, s: Fraction, n: int, cfg) -> float:
    """Exact log-variable reduction for log-window profiles.

    With K = d + n - m s the integral equals
    P^s e^{-shift K} / loglam * integral over (-1,1) of e^{v K / loglam} |W(v)|^s dv.
    """
    k_exact = d + n - profile.m * s
    kf = float(k_exact)
    sf = float(s)
    lam = profile.loglam
    # composite GL in v with the exponential weight handled in log space
    panels = 32
    x, w = _gl(cfg.gauss_nodes)
    logs = []
    edges = np.linspace(-1.0, 1.0, panels + 1)
    for v0, v1 in zip(edges[:-1], edges[1:]):
        mid, half = 0.5 * (v0 + v1), 0.5 * (v1 - v0)
        v = mid + half * x
        wv = np.abs(profile.window_values(v))
        mask = wv > 0
        if not np.any(mask):
            continue
        g = kf * v[mask] / lam + sf * np.log(wv[mask])
        weights = np.log(half * w[mask])
        m = float(np.max(g + weights))
        logs.append(m + math.log(float(np.sum(np.exp(g + weights - m)))))
    if not logs:
        return -math.inf
    log_v_integral = _logsumexp(logs)
    return (
        sf * math.log(abs(profile.prefactor))
        - profile.shift * kf
        - math.log(lam)
        + log_v_integral
    )


# ---------------------------------------------------------------------------
# public norms
# ---------------------------------------------------------------------------

def weighted_norm_radial(
    profile: RadialProfile,
    d: Fraction,
    s: Fraction,
    n: int,
    cfg: QuadratureConfig = DEFAULT_CONFIG,
) -> NormValue:
    """(N omega_N integral t^{d+n-1} |f|^s dt)^{1/s} with divergence status."""
    if s <= 0:
        raise ValueError("norm exponent must be positive")
    lo, hi = profile.support
    if lo == 0.0 and _diverges_at_zero(d, s, n, profile.power_at_zero()):
        return NormValue.divergent("non-integrable at zero")
    if hi == math.inf and _diverges_at_inf(d, s, n, profile.power_at_inf()):
        return NormValue.divergent("non-integrable at infinity")

    wexp = float(d + n - 1)
    sf = float(s)
    try:
        if isinstance(profile, PiecewisePower):
            log_integral, rel_err = _piecewise_log_integral(profile, wexp, sf), 0.0
        elif isinstance(profile, LogBandPower):
            log_integral, rel_err = _log_band_log_integral(profile, wexp, sf), 0.0
        elif isinstance(profile, LogModulated):
            log_integral, rel_err = _log_modulated_log_integral(profile, d, s, n, cfg), 0.0
        else:
            log_integral, rel_err = _radial_log_integral(profile, wexp, sf, cfg)
    except QuadratureError as exc:
        return NormValue.failed(str(exc))

    if log_integral == -math.inf:
        return NormValue(0.0, -math.inf, NormStatus.FINITE)
    log_norm = (math.log(surface_area(n)) + log_integral) / sf
    return NormValue.from_log(log_norm, rel_err)


def _gradient_profile(profile: RadialProfile) -> RadialProfile:
    if isinstance(profile, LogModulated):
        return profile.derivative_profile()
    piecewise = profile.deriv_piecewise()
    if piecewise is not None:
        return piecewise
    return DerivView(profile)


def _min_power(powers):
    known = [p for p in powers if p is not None]
    if not known:
        return None
    if all(isinstance(p, Fraction) for p in known):
        return min(known)
    return min(float(p) for p in known)


def _max_power(powers):
    known = [p for p in powers if p is not None]
    if not known:
        return None
    if all(isinstance(p, Fraction) for p in known):
        return max(known)
    return max(float(p) for p in known)


def _first_harmonic_gradient_lognorm(
    profile: RadialProfile, b: Fraction, p: Fraction, n: int, cfg: QuadratureConfig
) -> NormValue:
    """2D (t, polar angle) reduction of the gradient norm of f(t) sigma_1."""
    if n < 2:
        raise ValueError("first harmonics need dimension >= 2")

    lo, hi = profile.support
    dzero = _min_power(
        [profile.deriv_power_at_zero(), _shift_power(profile.power_at_zero(), -1)]
    )
    dinf = _max_power(
        [profile.deriv_power_at_inf(), _shift_power(profile.power_at_inf(), -1)]
    )
    if lo == 0.0 and _diverges_at_zero(b, p, n, dzero):
        return NormValue.divergent("gradient non-integrable at zero")
    if hi == math.inf and _diverges_at_inf(b, p, n, dinf):
        return NormValue.divergent("gradient non-integrable at infinity")

    pf = float(p)
    wexp = float(b + n - 1)
    psi, wpsi = _gl(cfg.angular_nodes)
    psi = 0.5 * math.pi * (psi + 1.0)
    wpsi = 0.5 * math.pi * wpsi
    cos2 = np.cos(psi) ** 2
    sin2 = np.sin(psi) ** 2
    angular_weight = wpsi * np.sin(psi) ** (n - 2)

    def g(t: np.ndarray) -> np.ndarray:
        t = np.asarray(t, dtype=float)
        fp = profile.derivative(t)
        fv = profile.value(t)
        mag = (
            fp[:, None] ** 2 * cos2[None, :]
            + (fv[:, None] / t[:, None]) ** 2 * sin2[None, :]
        ) ** (pf / 2.0)
        ang = mag @ angular_weight
        out = np.zeros_like(t)
        mask = ang > 0
        if np.any(mask):
            with np.errstate(over="ignore"):
                out[mask] = np.exp(wexp * np.log(t[mask]) + np.log(ang[mask]))
        return out

    anchor_lo = lo if lo > 0 else min(1.0, *(x for x in (*profile.breakpoints, hi, 1.0) if 0 < x < math.inf))
    anchor_hi = hi if hi < math.inf else max(1.0, anchor_lo * 4.0, *(x for x in profile.breakpoints if x < math.inf))
    edges = _panel_edges(anchor_lo, anchor_hi, profile.breakpoints)
    try:
        total, err = _integrate_panels(g, edges, cfg)
        if lo == 0.0:
            down, e2 = _extend_down(g, anchor_lo, cfg, total)
            total += down
            err += e2
        if hi == math.inf:
            up, e3 = _extend_up(g, anchor_hi, cfg, total)
            total += up
            err += e3
    except QuadratureError as exc:
        return NormValue.failed(str(exc))
    if total <= 0:
        return NormValue(0.0, -math.inf, NormStatus.FINITE)
    log_norm = (math.log(sub_sphere_area(n)) + math.log(total)) / pf
    return NormValue.from_log(log_norm, err / max(total, cfg.abs_tol))


def _shift_power(power, delta: int):
    if power is None:
        return None
    if isinstance(power, Fraction):
        return power + delta
    return float(power) + delta


def _translated_lognorm(
    profile: RadialProfile,
    d: Fraction,
    s: Fraction,
    n: int,
    offset: float,
    cfg: QuadratureConfig,
    use_derivative: bool,
) -> NormValue:
    """Norm of f(|x - x0|) (or its gradient magnitude |f'(|x - x0|)|).

    The weight is factored as R^d (1 + x^2 + 2 x cos psi)^{d/2}, x = t/R,
    keeping every intermediate in floating-point range for huge R.
    """
    lo, hi = profile.support
    if hi >= offset:
        raise ValueError("translated support must stay away from the origin")
    sf = float(s)
    df = float(d)
    values = profile.derivative if use_derivative else profile.value

    if n >= 2:
        psi, wpsi = _gl(cfg.angular_nodes)
        psi = 0.5 * math.pi * (psi + 1.0)
        wpsi = 0.5 * math.pi * wpsi
        cospsi = np.cos(psi)
        angular_weight = wpsi * np.sin(psi) ** (n - 2)
        prefactor_log = math.log(sub_sphere_area(n))
    else:
        cospsi = np.array([1.0, -1.0])
        angular_weight = np.array([1.0, 1.0])
        prefactor_log = 0.0

    def g(t: np.ndarray) -> np.ndarray:
        t = np.asarray(t, dtype=float)
        x = t / offset
        base = 1.0 + x[:, None] ** 2 + 2.0 * x[:, None] * cospsi[None, :]
        ang = np.power(base, df / 2.0) @ angular_weight
        fv = np.abs(values(t))
        out = np.zeros_like(t)
        mask = fv > 0
        if np.any(mask):
            out[mask] = np.exp(
                (n - 1) * np.log(t[mask]) + sf * np.log(fv[mask]) + np.log(ang[mask])
            )
        return out

    anchor_lo = lo if lo > 0 else hi / 512.0
    edges = _panel_edges(anchor_lo, hi, profile.breakpoints)
    try:
        total, err = _integrate_panels(g, edges, cfg)
        if lo == 0.0:
            down, e2 = _extend_down(g, anchor_lo, cfg, total)
            total += down
            err += e2
    except QuadratureError as exc:
        return NormValue.failed(str(exc))
    if total <= 0:
        return NormValue(0.0, -math.inf, NormStatus.FINITE)
    log_norm = (df * math.log(offset) + prefactor_log + math.log(total)) / sf
    return NormValue.from_log(log_norm, err / max(total, cfg.abs_tol))


def weighted_norm(
    u: TestFunction,
    d: Fraction,
    s: Fraction,
    n: int,
    cfg: QuadratureConfig = DEFAULT_CONFIG,
) -> NormValue:
    """|| u ||_{d,s} for any catalog test function."""
    if u.angular is Angular.RADIAL:
        return weighted_norm_radial(u.profile, d, s, n, cfg)
    if u.angular is Angular.FIRST_HARMONIC:
        if n < 2:
            raise ValueError("first harmonics need dimension >= 2")
        base = weighted_norm_radial(u.profile, d, s, n, cfg)
        if not base.finite:
            return base
        sf = float(s)
        correction = (log_angular_moment(sf, n) - math.log(surface_area(n))) / sf
        return NormValue.from_log(base.log_value + correction, base.error)
    return _translated_lognorm(u.profile, d, s, n, u.offset, cfg, use_derivative=False)


def weighted_norm_gradient(
    u: TestFunction,
    b: Fraction,
    p: Fraction,
    n: int,
    cfg: QuadratureConfig = DEFAULT_CONFIG,
) -> NormValue:
    """|| grad u ||_{b,p} (for radial u this is the radial-derivative norm)."""
    if u.angular is Angular.RADIAL:
        return weighted_norm_radial(_gradient_profile(u.profile), b, p, n, cfg)
    if u.angular is Angular.FIRST_HARMONIC:
        return _first_harmonic_gradient_lognorm(u.profile, b, p, n, cfg)
    return _translated_lognorm(u.profile, b, p, n, u.offset, cfg, use_derivative=True)
