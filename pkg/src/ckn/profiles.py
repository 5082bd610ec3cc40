"""Radial profile catalog: evaluable f(t), analytic f'(t), and exact
asymptotic metadata.

Every profile knows, besides pointwise values:

  * its support and seam points (quadrature panels are split there);
  * exact local powers at 0 and infinity (f(t) ~ C t^power with C != 0),
    or None when the profile vanishes identically near that end.  The
    powers drive the exact divergence test of the weighted norms;
  * optional exact head/tail certificates: regions where f is exactly a
    single power C t^m, so the norm contribution there is a closed-form
    integral rather than a panel sum (essential for near-critical tails
    whose panel sums converge geometrically slowly).

The smooth cutoff is fixed once and for all: zeta(t) = 1 for t <= 1/2,
0 for t >= 1, bridged by the standard exp-based mollifier step
h(x) = exp(-1/x); the log-window bump is exp(-1/(1-v^2)) on (-1, 1).
Fixing both makes quadrature outputs reproducible across runs.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Optional, Sequence, Tuple, Union

import numpy as np

Power = Union[Fraction, float, None]
HeadTail = Optional[Tuple[float, Union[Fraction, float], float]]  # (coef, power, limit)


# ---------------------------------------------------------------------------
# fixed smooth cutoff and bump
# ---------------------------------------------------------------------------

def _h(x: np.ndarray) -> np.ndarray:
    """exp(-1/x) for x > 0, else 0 (the standard mollifier kernel)."""
    x = np.asarray(x, dtype=float)
    out = np.zeros_like(x)
    pos = x > 0
    out[pos] = np.exp(-1.0 / x[pos])
    return out


def _h_prime(x: np.ndarray) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    out = np.zeros_like(x)
    pos = x > 0
    out[pos] = np.exp(-1.0 / x[pos]) / x[pos] ** 2
    return out


def smooth_step(w: np.ndarray) -> np.ndarray:
    """1 for w <= 0, 0 for w >= 1, smooth and monotone in between."""
    w = np.asarray(w, dtype=float)
    num = _h(1.0 - w)
    den = _h(w) + num
    with np.errstate(invalid="ignore", divide="ignore"):
        out = np.where(den > 0, num / np.where(den > 0, den, 1.0), 0.0)
    out = np.where(w <= 0, 1.0, out)
    out = np.where(w >= 1, 0.0, out)
    return out


def smooth_step_prime(w: np.ndarray) -> np.ndarray:
    w = np.asarray(w, dtype=float)
    inside = (w > 0) & (w < 1)
    out = np.zeros_like(w)
    if np.any(inside):
        wi = w[inside]
        hw, h1w = _h(wi), _h(1.0 - wi)
        dhw, dh1w = _h_prime(wi), _h_prime(1.0 - wi)
        den = hw + h1w
        out[inside] = -(dh1w * hw + h1w * dhw) / den**2
    return out


def zeta(t: np.ndarray) -> np.ndarray:
    """Radial cutoff: 1 on t <= 1/2, 0 on t >= 1."""
    return smooth_step(2.0 * np.asarray(t, dtype=float) - 1.0)


def zeta_prime(t: np.ndarray) -> np.ndarray:
    return 2.0 * smooth_step_prime(2.0 * np.asarray(t, dtype=float) - 1.0)


def bump(v: np.ndarray) -> np.ndarray:
    """exp(-1/(1-v^2)) on (-1, 1), zero outside."""
    v = np.asarray(v, dtype=float)
    out = np.zeros_like(v)
    inside = np.abs(v) < 1.0
    vi = v[inside]
    out[inside] = np.exp(-1.0 / (1.0 - vi**2))
    return out


def bump_prime(v: np.ndarray) -> np.ndarray:
    v = np.asarray(v, dtype=float)
    out = np.zeros_like(v)
    inside = np.abs(v) < 1.0
    vi = v[inside]
    out[inside] = np.exp(-1.0 / (1.0 - vi**2)) * (-2.0 * vi) / (1.0 - vi**2) ** 2
    return out


def _fpow(t: np.ndarray, e) -> np.ndarray:
    return np.power(np.asarray(t, dtype=float), float(e))


# ---------------------------------------------------------------------------
# profile protocol
# ---------------------------------------------------------------------------

class RadialProfile:
    """Base class; subclasses override values and asymptotic metadata."""

    kind = "abstract"

    def value(self, t: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def derivative(self, t: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    # support and seams -----------------------------------------------------
    @property
    def support(self) -> Tuple[float, float]:
        return (0.0, math.inf)

    @property
    def breakpoints(self) -> Tuple[float, ...]:
        return ()

    # exact asymptotics -----------------------------------------------------
    def power_at_zero(self) -> Power:
        return None

    def power_at_inf(self) -> Power:
        return None

    def deriv_power_at_zero(self) -> Power:
        return None

    def deriv_power_at_inf(self) -> Power:
        return None

    def exact_head(self) -> HeadTail:
        return None

    def exact_tail(self) -> HeadTail:
        return None

    def deriv_exact_head(self) -> HeadTail:
        return None

    def deriv_exact_tail(self) -> HeadTail:
        return None

    def deriv_piecewise(self) -> Optional["PiecewisePower"]:
        """Exact piecewise-power representation of f', when available."""
        return None

    # transforms ------------------------------------------------------------
    def scaled(self, lam: float) -> "RadialProfile":
        """Profile of t -> f(lam t)."""
        return ScaledProfile(self, lam)

    def inverted(self) -> "RadialProfile":
        """Profile of t -> f(1/t)."""
        return InvertedProfile(self)

    def descriptor(self) -> dict:
        return {"kind": self.kind}

    def __repr__(self):
        return f"{type(self).__name__}({self.descriptor()})"


class ZeroProfile(RadialProfile):
    kind = "zero"

    def value(self, t):
        return np.zeros_like(np.asarray(t, dtype=float))

    def derivative(self, t):
        return np.zeros_like(np.asarray(t, dtype=float))

    @property
    def support(self):
        return (1.0, 1.0)


class PowerCutoffInner(RadialProfile):
    """t^{-alpha} zeta(t): a pure power near 0, cut off beyond t = 1."""

    kind = "power_cutoff_inner"

    def __init__(self, alpha):
        self.alpha = Fraction(alpha)

    def value(self, t):
        t = np.asarray(t, dtype=float)
        return _fpow(t, -self.alpha) * zeta(t)

    def derivative(self, t):
        t = np.asarray(t, dtype=float)
        out = _fpow(t, -self.alpha) * zeta_prime(t)
        if self.alpha != 0:
            out = out - float(self.alpha) * _fpow(t, -self.alpha - 1) * zeta(t)
        return out

    @property
    def support(self):
        return (0.0, 1.0)

    @property
    def breakpoints(self):
        return (0.5, 1.0)

    def power_at_zero(self):
        return -self.alpha

    def deriv_power_at_zero(self):
        return -self.alpha - 1 if self.alpha != 0 else None

    def exact_head(self):
        return (1.0, -self.alpha, 0.5)

    def deriv_exact_head(self):
        if self.alpha == 0:
            return None
        return (-float(self.alpha), -self.alpha - 1, 0.5)

    def descriptor(self):
        return {"kind": self.kind, "alpha": str(self.alpha)}


class PowerCutoffOuter(RadialProfile):
    """t^{-alpha} (1 - zeta(t)): a pure power beyond t = 1."""

    kind = "power_cutoff_outer"

    def __init__(self, alpha):
        self.alpha = Fraction(alpha)

    def value(self, t):
        t = np.asarray(t, dtype=float)
        return _fpow(t, -self.alpha) * (1.0 - zeta(t))

    def derivative(self, t):
        t = np.asarray(t, dtype=float)
        out = -_fpow(t, -self.alpha) * zeta_prime(t)
        if self.alpha != 0:
            out = out - float(self.alpha) * _fpow(t, -self.alpha - 1) * (1.0 - zeta(t))
        return out

    @property
    def support(self):
        return (0.5, math.inf)

    @property
    def breakpoints(self):
        return (0.5, 1.0)

    def power_at_inf(self):
        return -self.alpha

    def deriv_power_at_inf(self):
        return -self.alpha - 1 if self.alpha != 0 else None

    def exact_tail(self):
        return (1.0, -self.alpha, 1.0)

    def deriv_exact_tail(self):
        if self.alpha == 0:
            return None
        return (-float(self.alpha), -self.alpha - 1, 1.0)

    def descriptor(self):
        return {"kind": self.kind, "alpha": str(self.alpha)}


class SmoothBump(RadialProfile):
    """bump((t - center)/width); center = 0 gives a ball bump at the origin."""

    kind = "smooth_bump"

    def __init__(self, center: float, width: float):
        if width <= 0:
            raise ValueError("bump width must be positive")
        self.center = float(center)
        self.width = float(width)

    def value(self, t):
        t = np.asarray(t, dtype=float)
        return bump((t - self.center) / self.width)

    def derivative(self, t):
        t = np.asarray(t, dtype=float)
        return bump_prime((t - self.center) / self.width) / self.width

    @property
    def support(self):
        return (max(0.0, self.center - self.width), self.center + self.width)

    def power_at_zero(self):
        # nonzero limit at 0 only when the bump straddles the origin
        return Fraction(0) if self.center - self.width < 0 < self.center else None

    def descriptor(self):
        return {"kind": self.kind, "center": self.center, "width": self.width}


class PowerTail(RadialProfile):
    """t^{-alpha} (1+t)^{alpha-beta}: power -alpha near 0, -beta near infinity."""

    kind = "power_tail"

    def __init__(self, alpha, beta):
        self.alpha = Fraction(alpha)
        self.beta = Fraction(beta)

    def value(self, t):
        t = np.asarray(t, dtype=float)
        return _fpow(t, -self.alpha) * np.power(1.0 + t, float(self.alpha - self.beta))

    def derivative(self, t):
        t = np.asarray(t, dtype=float)
        a, b = float(self.alpha), float(self.beta)
        return (
            _fpow(t, -self.alpha - 1)
            * np.power(1.0 + t, float(self.alpha - self.beta) - 1.0)
            * (-a - b * t)
        )

    def power_at_zero(self):
        return -self.alpha

    def power_at_inf(self):
        return -self.beta

    def deriv_power_at_zero(self):
        if self.alpha != 0:
            return -self.alpha - 1
        return Fraction(0) if self.beta != 0 else None

    def deriv_power_at_inf(self):
        if self.beta != 0:
            return -self.beta - 1
        return -self.alpha - 2 if self.alpha != 0 else None

    def descriptor(self):
        return {"kind": self.kind, "alpha": str(self.alpha), "beta": str(self.beta)}


class LogWindow:
    """Compactly supported window in the log variable with its derivative."""

    def __init__(self, value, deriv, label="bump"):
        self.value = value
        self.deriv = deriv
        self.label = label

    @classmethod
    def standard(cls) -> "LogWindow":
        return cls(bump, bump_prime, "bump")


class LogModulated(RadialProfile):
    """prefactor * t^{-m} * W(loglam (ln t + shift)).

    The window W lives on (-1, 1); the profile occupies an interval of the
    log axis of width 2/loglam.  Weighted norms of these profiles are
    computed in the log variable (see quadrature), because for small
    loglam the support in t overflows floating point.
    """

    kind = "log_modulated"

    def __init__(self, m, loglam: float, window: Optional[LogWindow] = None,
                 shift: float = 0.0, prefactor: float = 1.0,
                 window_combo: Optional[Tuple[float, float]] = None):
        self.m = Fraction(m)
        self.loglam = float(loglam)
        self.window = window or LogWindow.standard()
        self.shift = float(shift)
        self.prefactor = float(prefactor)
        # (c0, c1): effective window c0*W + c1*W'; None means plain W
        self.window_combo = window_combo

    def _wvals(self, v: np.ndarray) -> np.ndarray:
        if self.window_combo is None:
            return self.window.value(v)
        c0, c1 = self.window_combo
        return c0 * self.window.value(v) + c1 * self.window.deriv(v)

    def window_values(self, v: np.ndarray) -> np.ndarray:
        return self._wvals(v)

    def value(self, t):
        t = np.asarray(t, dtype=float)
        with np.errstate(divide="ignore"):
            w = np.log(t)
        return self.prefactor * _fpow(t, -self.m) * self._wvals(self.loglam * (w + self.shift))

    def derivative(self, t):
        if self.window_combo is not None:
            raise NotImplementedError("second derivatives of log windows are not needed")
        t = np.asarray(t, dtype=float)
        with np.errstate(divide="ignore"):
            w = np.log(t)
        v = self.loglam * (w + self.shift)
        return (
            self.prefactor
            * _fpow(t, -self.m - 1)
            * (-float(self.m) * self.window.value(v) + self.loglam * self.window.deriv(v))
        )

    def derivative_profile(self) -> "LogModulated":
        """f' as a log-modulated profile with power m+1 and combined window."""
        if self.window_combo is not None:
            raise NotImplementedError
        return LogModulated(
            self.m + 1,
            self.loglam,
            self.window,
            shift=self.shift,
            prefactor=self.prefactor,
            window_combo=(-float(self.m), self.loglam),
        )

    @property
    def log_support(self) -> Tuple[float, float]:
        """Support of ln t."""
        half = 1.0 / self.loglam
        return (-half - self.shift, half - self.shift)

    @property
    def support(self):
        lo, hi = self.log_support
        try:
            slo = math.exp(lo)
        except OverflowError:
            slo = math.inf
        try:
            shi = math.exp(hi)
        except OverflowError:
            shi = math.inf
        return (slo, shi)

    def scaled(self, lam: float) -> "LogModulated":
        return LogModulated(
            self.m,
            self.loglam,
            self.window,
            shift=self.shift + math.log(lam),
            prefactor=self.prefactor * lam ** (-float(self.m)),
            window_combo=self.window_combo,
        )

    def descriptor(self):
        return {
            "kind": self.kind,
            "m": str(self.m),
            "loglam": self.loglam,
            "shift": self.shift,
            "prefactor": self.prefactor,
            "window": self.window.label,
            "combo": self.window_combo,
        }


class PiecewisePower(RadialProfile):
    """Finitely many disjoint pieces coef * t^expo on (lo, hi).

    Weighted norms of these profiles are evaluated by exact closed-form
    piece integrals in log space, so pieces may sit at astronomically
    large abscissae without loss of accuracy.
    """

    kind = "piecewise_power"

    def __init__(self, pieces: Sequence[Tuple[float, Fraction, float, float]]):
        cleaned = []
        for coef, expo, lo, hi in pieces:
            if hi <= lo:
                raise ValueError("piece with empty interior")
            cleaned.append((float(coef), Fraction(expo), float(lo), float(hi)))
        cleaned.sort(key=lambda piece: piece[2])
        self.pieces = tuple(cleaned)

    @classmethod
    def single(cls, coef, expo, lo, hi) -> "PiecewisePower":
        return cls([(coef, expo, lo, hi)])

    @classmethod
    def indicator(cls, lo, hi) -> "PiecewisePower":
        return cls([(1.0, Fraction(0), lo, hi)])

    def value(self, t):
        t = np.asarray(t, dtype=float)
        out = np.zeros_like(t)
        for coef, expo, lo, hi in self.pieces:
            mask = (t > lo) & (t < hi)
            if np.any(mask):
                out[mask] = coef * _fpow(t[mask], expo)
        return out

    def derivative(self, t):
        t = np.asarray(t, dtype=float)
        out = np.zeros_like(t)
        for coef, expo, lo, hi in self.pieces:
            if expo == 0:
                continue
            mask = (t > lo) & (t < hi)
            if np.any(mask):
                out[mask] = coef * float(expo) * _fpow(t[mask], expo - 1)
        return out

    def deriv_piecewise(self) -> "PiecewisePower":
        pieces = [
            (coef * float(expo), expo - 1, lo, hi)
            for coef, expo, lo, hi in self.pieces
            if expo != 0
        ]
        if not pieces:
            return PiecewisePower.single(0.0, Fraction(0), 1.0, 2.0)
        return PiecewisePower(pieces)

    @property
    def support(self):
        return (self.pieces[0][2], self.pieces[-1][3])

    @property
    def breakpoints(self):
        points = []
        for _, _, lo, hi in self.pieces:
            points.extend((lo, hi))
        return tuple(sorted({x for x in points if 0.0 < x < math.inf}))

    def power_at_zero(self):
        coef, expo, lo, _ = self.pieces[0]
        return expo if (lo == 0.0 and coef != 0.0) else None

    def power_at_inf(self):
        coef, expo, _, hi = self.pieces[-1]
        return expo if (hi == math.inf and coef != 0.0) else None

    def deriv_power_at_zero(self):
        coef, expo, lo, _ = self.pieces[0]
        return expo - 1 if (lo == 0.0 and coef != 0.0 and expo != 0) else None

    def deriv_power_at_inf(self):
        coef, expo, _, hi = self.pieces[-1]
        return expo - 1 if (hi == math.inf and coef != 0.0 and expo != 0) else None

    def scaled(self, lam: float) -> "PiecewisePower":
        lam = float(lam)
        return PiecewisePower(
            [
                (coef * lam ** float(expo), expo, lo / lam, hi / lam)
                for coef, expo, lo, hi in self.pieces
            ]
        )

    def descriptor(self):
        return {
            "kind": self.kind,
            "pieces": [
                {"coef": coef, "expo": str(expo), "lo": lo, "hi": hi}
                for coef, expo, lo, hi in self.pieces
            ],
        }


class LogBandPower(RadialProfile):
    """coef * t^expo on a single band whose bounds are stored as logs.

    The band may sit so far out that lo and lo + width coincide as floats
    (e.g. (m, m+1) with m ~ 1e60); carrying log bounds keeps the exact
    closed-form norm integrals meaningful at any scale.  log_lo = -inf
    encodes lo = 0 and log_hi = +inf encodes an unbounded band.
    """

    kind = "log_band_power"

    def __init__(self, coef: float, expo, log_lo: float, log_hi: float):
        if not log_lo < log_hi:
            raise ValueError("empty band")
        self.coef = float(coef)
        self.expo = Fraction(expo)
        self.log_lo = float(log_lo)
        self.log_hi = float(log_hi)

    def value(self, t):
        t = np.asarray(t, dtype=float)
        out = np.zeros_like(t)
        with np.errstate(divide="ignore"):
            logs = np.log(np.maximum(t, 1e-300))
        mask = (logs > self.log_lo) & (logs < self.log_hi) & (t > 0)
        if np.any(mask):
            with np.errstate(over="ignore"):
                out[mask] = self.coef * np.exp(float(self.expo) * logs[mask])
        return out

    def derivative(self, t):
        if self.expo == 0:
            return np.zeros_like(np.asarray(t, dtype=float))
        return LogBandPower(
            self.coef * float(self.expo), self.expo - 1, self.log_lo, self.log_hi
        ).value(t)

    def deriv_band(self) -> Optional["LogBandPower"]:
        if self.expo == 0 or self.coef == 0.0:
            return None
        return LogBandPower(
            self.coef * float(self.expo), self.expo - 1, self.log_lo, self.log_hi
        )

    def deriv_piecewise(self):
        band = self.deriv_band()
        if band is None:
            return PiecewisePower.single(0.0, Fraction(0), 1.0, 2.0)
        return band

    @property
    def support(self):
        lo = 0.0 if self.log_lo == -math.inf else _safe_exp(self.log_lo)
        hi = math.inf if self.log_hi == math.inf else _safe_exp(self.log_hi)
        return (lo, hi)

    @property
    def breakpoints(self):
        points = []
        for lg in (self.log_lo, self.log_hi):
            if math.isfinite(lg):
                value = _safe_exp(lg)
                if 0.0 < value < math.inf:
                    points.append(value)
        return tuple(sorted(points))

    def power_at_zero(self):
        return self.expo if (self.log_lo == -math.inf and self.coef != 0) else None

    def power_at_inf(self):
        return self.expo if (self.log_hi == math.inf and self.coef != 0) else None

    def deriv_power_at_zero(self):
        band = self.deriv_band()
        return band.power_at_zero() if band is not None else None

    def deriv_power_at_inf(self):
        band = self.deriv_band()
        return band.power_at_inf() if band is not None else None

    def scaled(self, lam: float) -> "LogBandPower":
        shift = math.log(lam)
        coef = self.coef * math.exp(float(self.expo) * shift)
        return LogBandPower(coef, self.expo, self.log_lo - shift, self.log_hi - shift)

    def descriptor(self):
        return {
            "kind": self.kind,
            "coef": self.coef,
            "expo": str(self.expo),
            "log_lo": self.log_lo,
            "log_hi": self.log_hi,
        }


def _safe_exp(x: float) -> float:
    try:
        return math.exp(x)
    except OverflowError:
        return math.inf


class TruncatedPrimitive(RadialProfile):
    """f(t) = integral over (0, t) of s^{-beta} on the band (1, n).

    Vanishes on (0, 1], grows like the primitive of t^{-beta} on [1, n],
    and is exactly constant beyond n.  The band upper end is supplied as
    log_n, so the family index can push n far beyond 1/eps without losing
    the closed forms (values are computed with expm1/log1p).
    """

    kind = "truncated_primitive"

    def __init__(self, beta, log_n: float):
        self.beta = Fraction(beta)
        if log_n <= 0:
            raise ValueError("log_n must be positive")
        if log_n > 260.0:
            raise ValueError("log_n beyond float range of n")
        self.log_n = float(log_n)
        self.n = math.exp(self.log_n)

    def _primitive(self, t: np.ndarray) -> np.ndarray:
        """F(t) = (t^{1-beta} - 1)/(1-beta), or ln t when beta = 1."""
        t = np.asarray(t, dtype=float)
        logs = np.log(np.maximum(t, 1e-300))
        if self.beta == 1:
            return logs
        g = 1.0 - float(self.beta)
        return np.expm1(g * logs) / g

    def plateau(self) -> float:
        if self.beta == 1:
            return self.log_n
        g = 1.0 - float(self.beta)
        return math.expm1(g * self.log_n) / g

    def value(self, t):
        t = np.asarray(t, dtype=float)
        out = np.zeros_like(t)
        band = (t > 1.0) & (t < self.n)
        out[band] = self._primitive(t[band])
        out[t >= self.n] = self.plateau()
        return out

    def derivative(self, t):
        t = np.asarray(t, dtype=float)
        out = np.zeros_like(t)
        band = (t > 1.0) & (t < self.n)
        out[band] = _fpow(t[band], -self.beta)
        return out

    @property
    def support(self):
        return (1.0, math.inf)

    @property
    def breakpoints(self):
        return (1.0, self.n)

    def power_at_inf(self):
        return Fraction(0)

    def exact_tail(self):
        return (self.plateau(), Fraction(0), self.n)

    def deriv_piecewise(self) -> PiecewisePower:
        return PiecewisePower.single(1.0, -self.beta, 1.0, self.n)

    def deriv_power_at_inf(self):
        return None

    def descriptor(self):
        return {"kind": self.kind, "beta": str(self.beta), "log_n": self.log_n}


class PowerModulated(RadialProfile):
    """t^{-eps} * inner(t), the vanishing-exponent tail modification."""

    kind = "power_modulated"

    def __init__(self, inner: RadialProfile, eps: float):
        self.inner = inner
        self.eps = float(eps)

    def value(self, t):
        t = np.asarray(t, dtype=float)
        return np.power(np.maximum(t, 1e-300), -self.eps) * self.inner.value(t)

    def derivative(self, t):
        t = np.asarray(t, dtype=float)
        tt = np.maximum(t, 1e-300)
        return np.power(tt, -self.eps) * (
            self.inner.derivative(t) - self.eps * self.inner.value(t) / tt
        )

    @property
    def support(self):
        return self.inner.support

    @property
    def breakpoints(self):
        return self.inner.breakpoints

    def _shift(self, power: Power) -> Power:
        return None if power is None else float(power) - self.eps

    def power_at_zero(self):
        return self._shift(self.inner.power_at_zero())

    def power_at_inf(self):
        return self._shift(self.inner.power_at_inf())

    def deriv_power_at_zero(self):
        base = self.inner.power_at_zero()
        return None if base is None else float(base) - self.eps - 1.0

    def deriv_power_at_inf(self):
        base = self.inner.power_at_inf()
        return None if base is None else float(base) - self.eps - 1.0

    def exact_tail(self):
        tail = self.inner.exact_tail()
        if tail is None:
            return None
        coef, power, start = tail
        return (coef, float(power) - self.eps, start)

    def deriv_exact_tail(self):
        # where the inner profile is exactly C t^m, the modulated derivative
        # is exactly C (m - eps) t^{m - eps - 1}
        tail = self.inner.exact_tail()
        if tail is None:
            return None
        coef, power, start = tail
        m = float(power)
        return (coef * (m - self.eps), m - self.eps - 1.0, start)

    def descriptor(self):
        return {"kind": self.kind, "eps": self.eps, "inner": self.inner.descriptor()}


class ScaledProfile(RadialProfile):
    """t -> inner(lam t)."""

    kind = "scaled"

    def __init__(self, inner: RadialProfile, lam: float):
        if lam <= 0:
            raise ValueError("scale must be positive")
        if isinstance(inner, ScaledProfile):
            inner, lam = inner.inner, lam * inner.lam
        self.inner = inner
        self.lam = float(lam)

    def value(self, t):
        return self.inner.value(np.asarray(t, dtype=float) * self.lam)

    def derivative(self, t):
        return self.lam * self.inner.derivative(np.asarray(t, dtype=float) * self.lam)

    @property
    def support(self):
        lo, hi = self.inner.support
        return (lo / self.lam, hi / self.lam if hi != math.inf else math.inf)

    @property
    def breakpoints(self):
        return tuple(x / self.lam for x in self.inner.breakpoints)

    def power_at_zero(self):
        return self.inner.power_at_zero()

    def power_at_inf(self):
        return self.inner.power_at_inf()

    def deriv_power_at_zero(self):
        return self.inner.deriv_power_at_zero()

    def deriv_power_at_inf(self):
        return self.inner.deriv_power_at_inf()

    def _map_headtail(self, ht: HeadTail, extra_power: int = 0) -> HeadTail:
        if ht is None:
            return None
        coef, power, limit = ht
        scaled_coef = coef * self.lam ** (float(power) + extra_power)
        return (scaled_coef, power, limit / self.lam)

    def exact_head(self):
        return self._map_headtail(self.inner.exact_head())

    def exact_tail(self):
        return self._map_headtail(self.inner.exact_tail())

    def deriv_exact_head(self):
        return self._map_headtail(self.inner.deriv_exact_head(), extra_power=1)

    def deriv_exact_tail(self):
        return self._map_headtail(self.inner.deriv_exact_tail(), extra_power=1)

    def descriptor(self):
        return {"kind": self.kind, "lam": self.lam, "inner": self.inner.descriptor()}


class InvertedProfile(RadialProfile):
    """t -> inner(1/t), the radial action of the Kelvin transform."""

    kind = "inverted"

    def __init__(self, inner: RadialProfile):
        if isinstance(inner, InvertedProfile):
            raise ValueError("flatten double inversion at the call site")
        self.inner = inner

    def value(self, t):
        t = np.asarray(t, dtype=float)
        with np.errstate(divide="ignore", over="ignore"):
            return self.inner.value(1.0 / np.maximum(t, 1e-300))

    def derivative(self, t):
        t = np.asarray(t, dtype=float)
        tt = np.maximum(t, 1e-300)
        with np.errstate(divide="ignore", over="ignore"):
            return -self.inner.derivative(1.0 / tt) / tt**2

    @property
    def support(self):
        lo, hi = self.inner.support
        new_lo = 0.0 if hi == math.inf else 1.0 / hi
        new_hi = math.inf if lo == 0.0 else 1.0 / lo
        return (new_lo, new_hi)

    @property
    def breakpoints(self):
        return tuple(sorted(1.0 / x for x in self.inner.breakpoints if x > 0))

    def power_at_zero(self):
        power = self.inner.power_at_inf()
        return None if power is None else -_as_power(power)

    def power_at_inf(self):
        power = self.inner.power_at_zero()
        return None if power is None else -_as_power(power)

    def deriv_power_at_zero(self):
        power = self.inner.deriv_power_at_inf()
        return None if power is None else -_as_power(power) - 2

    def deriv_power_at_inf(self):
        power = self.inner.deriv_power_at_zero()
        return None if power is None else -_as_power(power) - 2

    def exact_head(self):
        tail = self.inner.exact_tail()
        if tail is None:
            return None
        coef, power, start = tail
        return (coef, -_as_power(power), 1.0 / start)

    def exact_tail(self):
        head = self.inner.exact_head()
        if head is None:
            return None
        coef, power, limit = head
        return (coef, -_as_power(power), 1.0 / limit)

    def deriv_exact_head(self):
        tail = self.inner.deriv_exact_tail()
        if tail is None:
            return None
        coef, power, start = tail
        return (-coef, -_as_power(power) - 2, 1.0 / start)

    def deriv_exact_tail(self):
        head = self.inner.deriv_exact_head()
        if head is None:
            return None
        coef, power, limit = head
        return (-coef, -_as_power(power) - 2, 1.0 / limit)

    def inverted(self):
        return self.inner

    def descriptor(self):
        return {"kind": self.kind, "inner": self.inner.descriptor()}


def _as_power(power):
    return power if isinstance(power, Fraction) else float(power)


class DerivView(RadialProfile):
    """Presents f' of a profile as a profile (for gradient norms)."""

    kind = "derivative_view"

    def __init__(self, base: RadialProfile):
        self.base = base

    def value(self, t):
        return self.base.derivative(t)

    def derivative(self, t):
        raise NotImplementedError("second derivatives are not used")

    @property
    def support(self):
        return self.base.support

    @property
    def breakpoints(self):
        return self.base.breakpoints

    def power_at_zero(self):
        return self.base.deriv_power_at_zero()

    def power_at_inf(self):
        return self.base.deriv_power_at_inf()

    def exact_head(self):
        return self.base.deriv_exact_head()

    def exact_tail(self):
        return self.base.deriv_exact_tail()

    def descriptor(self):
        return {"kind": self.kind, "inner": self.base.descriptor()}


def profile_from_descriptor(data: dict) -> RadialProfile:
    """Rebuild catalog profiles from their JSON descriptors."""
    kind = data["kind"]
    if kind == "zero":
        return ZeroProfile()
    if kind == "power_cutoff_inner":
        return PowerCutoffInner(Fraction(data["alpha"]))
    if kind == "power_cutoff_outer":
        return PowerCutoffOuter(Fraction(data["alpha"]))
    if kind == "smooth_bump":
        return SmoothBump(data["center"], data["width"])
    if kind == "power_tail":
        return PowerTail(Fraction(data["alpha"]), Fraction(data["beta"]))
    if kind == "log_modulated":
        return LogModulated(
            Fraction(data["m"]),
            data["loglam"],
            shift=data.get("shift", 0.0),
            prefactor=data.get("prefactor", 1.0),
            window_combo=tuple(data["combo"]) if data.get("combo") else None,
        )
    if kind == "piecewise_power":
        return PiecewisePower(
            [(p["coef"], Fraction(p["expo"]), p["lo"], p["hi"]) for p in data["pieces"]]
        )
    if kind == "log_band_power":
        return LogBandPower(data["coef"], Fraction(data["expo"]), data["log_lo"], data["log_hi"])
    if kind == "truncated_primitive":
        return TruncatedPrimitive(Fraction(data["beta"]), data["log_n"])
    if kind == "power_modulated":
        return PowerModulated(profile_from_descriptor(data["inner"]), data["eps"])
    if kind == "scaled":
        return ScaledProfile(profile_from_descriptor(data["inner"]), data["lam"])
    if kind == "inverted":
        return InvertedProfile(profile_from_descriptor(data["inner"]))
    raise ValueError(f"unknown profile kind {kind!r}")
