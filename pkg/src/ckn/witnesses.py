"""Counterexample families, one per non-embedding reason.

Each negative verdict is falsifiable by a concrete indexed family whose
additive norm ratio ||u||_{c,r} / (||u||_{a,q} + ||grad u||_{b,p}) grows
without bound, or by a single function whose target norm is certified
divergent while the source norms are finite:

  COutsideHull               inner/outer power cutoff |x|^{-(c+N)/r} with
                             the target integrand exactly |x|^{-N}: a
                             divergence certificate, no limit needed.
  COutsideOppositeSideWindow the plateau cutoff (1 near 0, resp. near
                             infinity after inversion): again a
                             certificate.
  EndpointC0WrongR           1-d reduction u = |x|^{1/r - (a+N)/q} g(|x|)
                             with g an indicator band marching to
                             infinity (r > q) or a vanishing-exponent
                             power on (0,1) (r < q).  The ratio
                             ||g||_r / ||g||_{q/r-1, q} diverges; a
                             dilation sweep suppresses the gradient term.
  EndpointC1SmallR           truncated primitives of s^{-(b+N)/p} on
                             bands (1, n): the classic failure of the
                             power-weight Hardy inequality for r < p.
                             The a = -N variant multiplies the tail by
                             t^{-eps_n}, eps_n = 1/log(n+2), to stay in
                             the source space.  Instances on the wrong
                             side of -N are reflected by inversion first.
  EqualSlopesSmallR          log-window profiles t^{-eta} W(lam ln t)
                             with lam -> 0: every term scales by a
                             different power of lam and r < min{p,q}
                             makes the target win.
  EtaZeroSmallR              same window family at eta = 0 (r < q).
  ROutOfRange                bumps of width R^{-nu} translated to
                             distance R: for r beyond max{p*, q} some
                             shrink rate nu makes the target exponent
                             dominate both source exponents.
  ThetaConditionFails        unit bumps translated to distance R: the
                             multiplicative ratio grows like R to the
                             (positive) theta-condition defect.

Family indices are geometric reparameterizations of the constructions'
limits, with the base chosen from the exact growth exponent so that the
divergence threshold is reached within a practical index budget.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .classify import Reason, classify
from .derived import DerivedQuantities, derive
from .params import Params, kelvin_params
from .profiles import (
    InvertedProfile,
    LogBandPower,
    LogModulated,
    PowerCutoffInner,
    PowerCutoffOuter,
    PowerModulated,
    RadialProfile,
    SmoothBump,
    TruncatedPrimitive,
)
from .testfunctions import TestFunction, kelvin_function, radial, translated


@dataclass(frozen=True)
class WitnessFamily:
    reason: Reason
    params: Params
    kind: str
    mode: str  # "certificate" | "direct" | "sup_dilation"
    max_index: int = 40

    def member(self, index: int) -> TestFunction:
        raise NotImplementedError

    def descriptor(self) -> dict:
        return {
            "reason": self.reason.value,
            "kind": self.kind,
            "mode": self.mode,
            "params": self.params.as_dict(),
        }


@dataclass(frozen=True)
class _FixedFamily(WitnessFamily):
    profile: RadialProfile = None
    inverted: bool = False

    def member(self, index: int) -> TestFunction:
        u = radial(self.profile)
        return kelvin_function(u) if self.inverted else u


@dataclass(frozen=True)
class _IndicatorBandFamily(WitnessFamily):
    """u = |x|^kappa g(|x|), g an indicator band (m_k, m_k + 1)."""

    kappa: Fraction = Fraction(0)
    log_base: float = math.log(2.0)

    def member(self, index: int) -> TestFunction:
        log_m = (index + 1) * self.log_base
        log_m = min(log_m, 500.0)
        log_hi = log_m + math.log1p(math.exp(-log_m))  # log(m + 1)
        return radial(LogBandPower(1.0, self.kappa, log_m, log_hi))


@dataclass(frozen=True)
class _VanishingPowerFamily(WitnessFamily):
    """u = |x|^{kappa + 1/m_k - 1/r} on (delta_k, 1), m_k integer.

    The inner edge delta_k = exp(-5 m_k / r) is far enough inside that the
    band carries the full 1/m_k mass while keeping the member (and its
    gradient) in the source space; the band limit delta -> 0 is the
    monotone limit used by the reduction argument."""

    kappa: Fraction = Fraction(0)
    base: float = 2.0

    def member(self, index: int) -> TestFunction:
        m = max(2, int(round(self.base ** (index + 1))))
        expo = self.kappa + Fraction(1, m) - 1 / self.params.r
        log_delta = -5.0 * m / float(self.params.r)
        return radial(LogBandPower(1.0, expo, log_delta, 0.0))


@dataclass(frozen=True)
class _TruncatedPrimitiveFamily(WitnessFamily):
    beta: Fraction = Fraction(0)
    log_n_start: float = 2.0
    log_n_growth: float = 1.3
    eps_modulated: bool = False
    inverted: bool = False

    def member(self, index: int) -> TestFunction:
        log_n = min(self.log_n_start * self.log_n_growth**index, 255.0)
        prof: RadialProfile = TruncatedPrimitive(self.beta, log_n)
        if self.eps_modulated:
            prof = PowerModulated(prof, 1.0 / (log_n + math.log1p(2.0 * math.exp(-log_n))))
        if self.inverted:
            prof = InvertedProfile(prof)
        return radial(prof)


@dataclass(frozen=True)
class _LogWindowFamily(WitnessFamily):
    eta: Fraction = Fraction(0)
    base: float = 2.0

    def member(self, index: int) -> TestFunction:
        lam = self.base ** -(index + 1)
        return radial(LogModulated(self.eta, lam))


@dataclass(frozen=True)
class _TranslatedBumpFamily(WitnessFamily):
    nu: int = 0
    offset_start: float = 64.0
    offset_base: float = 2.0

    def member(self, index: int) -> TestFunction:
        offset = self.offset_start * self.offset_base**index
        width = 1.0 if self.nu == 0 else max(offset**-self.nu, 1e-250)
        return translated(SmoothBump(0.0, width), offset)


# ---------------------------------------------------------------------------
# growth-exponent helpers (exact rational arithmetic)
# ---------------------------------------------------------------------------

def _translation_exponent(params: Params, d: DerivedQuantities, nu: int) -> Fraction:
    """Exponent of the additive ratio along bumps of width R^-nu at
    distance R: num - min(source exponents), all per log R."""
    n = Fraction(params.n)
    num = params.c / params.r - nu * n / params.r
    src_q = params.a / params.q - nu * n / params.q
    src_p = params.b / params.p + nu * (1 - n / params.p)
    return num - min(src_q, src_p)


def _theta_defect(params: Params, d: DerivedQuantities) -> Fraction:
    """-N ((1/r - 1/q) - theta_c (1/p - 1/N - 1/q)); positive exactly when
    the theta-condition fails."""
    s_factor = 1 / params.p - Fraction(1, params.n) - 1 / params.q
    v = (1 / params.r - 1 / params.q) - d.theta_c * s_factor
    return -params.n * v


def _geometric_base(exponent: float, target_index: int = 20, cap: float = 1e4) -> float:
    """Base B with B^(target_index * exponent) ~ 2e3; clamped to [2, cap]."""
    if exponent <= 0:
        return 2.0
    base = 10.0 ** (3.4 / (target_index * exponent))
    return min(max(base, 2.0), cap)


# ---------------------------------------------------------------------------
# builders per reason
# ---------------------------------------------------------------------------

def _hull_family(params: Params, d: DerivedQuantities) -> WitnessFamily:
    alpha = (params.c + params.n) / params.r
    if params.c < min(d.c0, d.c1):
        profile: RadialProfile = PowerCutoffInner(alpha)
        kind = "inner_power_cutoff"
    else:
        profile = PowerCutoffOuter(alpha)
        kind = "outer_power_cutoff"
    return _FixedFamily(
        Reason.C_OUTSIDE_HULL, params, kind, "certificate", 1, profile=profile
    )


def _window_family(params: Params, d: DerivedQuantities) -> WitnessFamily:
    if params.a > -params.n:
        # b - p <= -N < a: the plateau at the origin lies in the source
        # space while |x|^c is non-integrable over it (c <= -N here)
        return _FixedFamily(
            Reason.C_OUTSIDE_OPPOSITE_SIDE_WINDOW,
            params,
            "plateau_cutoff",
            "certificate",
            1,
            profile=PowerCutoffInner(Fraction(0)),
        )
    # mirrored side (a < -N < b - p, c >= -N): plateau at infinity
    return _FixedFamily(
        Reason.C_OUTSIDE_OPPOSITE_SIDE_WINDOW,
        params,
        "plateau_cutoff_inverted",
        "certificate",
        1,
        profile=InvertedProfile(PowerCutoffInner(Fraction(0))),
    )


def _c0_endpoint_family(params: Params, d: DerivedQuantities) -> WitnessFamily:
    kappa = 1 / params.r - d.slope_a
    growth = abs(float(1 / params.q - 1 / params.r))
    if params.r > params.q:
        return _IndicatorBandFamily(
            Reason.ENDPOINT_C0_WRONG_R,
            params,
            "indicator_band",
            "sup_dilation",
            kappa=kappa,
            log_base=math.log(_geometric_base(growth, cap=1e5)),
        )
    return _VanishingPowerFamily(
        Reason.ENDPOINT_C0_WRONG_R,
        params,
        "vanishing_power",
        "sup_dilation",
        kappa=kappa,
        base=_geometric_base(growth, cap=1e4),
    )


def _c1_endpoint_family(params: Params, d: DerivedQuantities) -> WitnessFamily:
    inverted = False
    work = params
    if params.a > -params.n:
        # reflect to the a < -N side (a = -N is preserved by reflection)
        work = kelvin_params(params)
        inverted = True
    dw = derive(work)
    gamma = dw.slope_b
    beta = (work.b + work.n) / work.p  # = gamma + 1
    eps_modulated = work.a == -work.n
    if eps_modulated and gamma > 0:
        work = kelvin_params(work)
        dw = derive(work)
        gamma = dw.slope_b
        beta = (work.b + work.n) / work.p
        inverted = not inverted

    if gamma >= 0:
        # eventually-constant profiles have divergent target norm outright
        return _TruncatedPrimitiveFamily(
            Reason.ENDPOINT_C1_SMALL_R,
            params,
            "truncated_primitive",
            "certificate",
            1,
            beta=beta,
            log_n_start=4.0,
            log_n_growth=1.0,
            inverted=inverted,
        )

    # slow logarithmic divergence: aim the band top near the transitional
    # crossing scale (ln n)^{1 + 1/r - 1/p} ~ 2 * threshold
    r, p = float(params.r), float(params.p)
    expo = 1.0 + 1.0 / r - 1.0 / p
    target = (2.5e3 * (r + 1.0) ** (1.0 / r)) ** (1.0 / expo)
    target = min(max(target, 30.0), 250.0)
    growth = (target / 2.0) ** (1.0 / 24.0)
    return _TruncatedPrimitiveFamily(
        Reason.ENDPOINT_C1_SMALL_R,
        params,
        "truncated_primitive_eps" if eps_modulated else "truncated_primitive",
        "sup_dilation",
        beta=beta,
        log_n_start=2.0,
        log_n_growth=min(max(growth, 1.1), 1.45),
        eps_modulated=eps_modulated,
        inverted=inverted,
    )


def _log_window_family(params: Params, d: DerivedQuantities, reason: Reason) -> WitnessFamily:
    eta = d.eta
    growth = abs(float(1 / params.r - 1 / min(params.p, params.q)))
    if reason is Reason.ETA_ZERO_SMALL_R:
        growth = abs(float(1 / params.r - 1 / params.q))
    return _LogWindowFamily(
        reason,
        params,
        "log_window",
        "direct",
        eta=eta,
        base=_geometric_base(growth, cap=1e3),
    )


def _r_range_family(params: Params, d: DerivedQuantities) -> WitnessFamily:
    best_nu, best_val = 1, None
    for nu in range(1, 13):
        val = _translation_exponent(params, d, nu)
        if best_val is None or val > best_val:
            best_nu, best_val = nu, val
        if val >= Fraction(1, 4):
            best_nu, best_val = nu, val
            break
    if best_val is None or best_val <= 0:
        raise AssertionError(f"no shrinking translation exponent found for {params}")
    return _TranslatedBumpFamily(
        Reason.R_OUT_OF_RANGE,
        params,
        "translated_shrinking_bump",
        "sup_dilation",
        nu=best_nu,
        offset_start=16.0,
        offset_base=_geometric_base(float(best_val), cap=64.0),
    )


def _theta_family(params: Params, d: DerivedQuantities) -> WitnessFamily:
    defect = _theta_defect(params, d)
    if defect <= 0:
        raise AssertionError(f"theta-condition defect not positive for {params}")
    return _TranslatedBumpFamily(
        Reason.THETA_CONDITION_FAILS,
        params,
        "translated_bump",
        "sup_dilation",
        nu=0,
        offset_base=_geometric_base(float(defect), cap=1e4),
    )


_BUILDERS = {
    Reason.C_OUTSIDE_HULL: _hull_family,
    Reason.C_OUTSIDE_OPPOSITE_SIDE_WINDOW: _window_family,
    Reason.ENDPOINT_C0_WRONG_R: _c0_endpoint_family,
    Reason.ENDPOINT_C1_SMALL_R: _c1_endpoint_family,
    Reason.R_OUT_OF_RANGE: _r_range_family,
    Reason.THETA_CONDITION_FAILS: _theta_family,
}


def witness_for(reason: Reason, params: Params) -> WitnessFamily:
    """The counterexample family matching a classifier reason.

    The reason must be the one the classifier actually assigns to the
    parameters; mismatches are rejected.
    """
    verdict = classify(params)
    if verdict.embeds or verdict.reason is not reason:
        raise ValueError(
            f"reason {reason.value} does not match the verdict "
            f"{verdict.reason.value if verdict.reason else verdict.decision.value}"
        )
    d = verdict.derived
    if reason in (Reason.EQUAL_SLOPES_SMALL_R, Reason.ETA_ZERO_SMALL_R):
        return _log_window_family(params, d, reason)
    return _BUILDERS[reason](params, d)


def witness_for_verdict(verdict_params: Params) -> WitnessFamily:
    verdict = classify(verdict_params)
    if verdict.embeds:
        raise ValueError("witness families exist only for non-embedding instances")
    return witness_for(verdict.reason, verdict_params)
