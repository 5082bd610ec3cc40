"""Decision procedures for the weighted embeddings.

`classify` settles whether the weighted Sobolev space on the punctured
space embeds continuously into L^r(|x|^c dx).  The embedding holds iff
r <= max{p*, q} and one of six exact conditions is met:

    I    a, b-p on the same side of -N (weakly), slopes differ, c strictly
         between c0 and c1, and theta_c (1/p - 1/N - 1/q) <= 1/r - 1/q;
    II   a, b-p strictly on opposite sides of -N, c strictly between c0
         and -N, and the same theta-condition;
    III  r = q and c = a (= c0);
    IV   p <= r <= p*, the pair lies weakly/strictly on one side
         (a <= -N and b-p < -N, or a >= -N and b-p > -N), and c = c1;
    V    slopes equal with common value eta != 0, r >= min{p,q}, c = c1;
    VI   a = -N, b = p - N (so eta = 0), q < r <= p*, c = -N.

The conditions overlap; the reported case tag uses the fixed priority
III < IV < V < VI < I < II so output is deterministic.

A negative verdict carries the first applicable necessity reason, each
mapping to one concrete counterexample family:

    ROutOfRange                  r > max{p*, q}           (translated bumps)
    COutsideHull                 c outside [c0, c1] hull  (power cutoff)
    COutsideOppositeSideWindow   opposite sides, c outside
                                 the (-N, c0] window      (plateau cutoff)
    EndpointC0WrongR             c = c0, r != q           (1-d indicator lift)
    EndpointC1SmallR             c = c1, r < p            (truncated primitive)
    EqualSlopesSmallR            slopes equal, r < min{p,q} (log-window)
    EtaZeroSmallR                eta = 0, r < q           (log-window)
    ThetaConditionFails          theta-condition violated (translated bumps)

`classify_radial` is the analogous characterization for the subspace of
radially symmetric functions (valid for all q, r > 0), and `classify_w0`
gives the sufficient conditions for the subspace with vanishing spherical
mean.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional

from .derived import DerivedQuantities, derive, theta_condition_holds
from .params import Params, validate_full_space, validate_radial
from .rational import ext_le, ext_max, ext_min


class Decision(str, Enum):
    EMBEDS = "Embeds"
    DOES_NOT_EMBED = "DoesNotEmbed"


class Case(str, Enum):
    I = "I"
    II = "II"
    III = "III"
    IV = "IV"
    V = "V"
    VI = "VI"


class Reason(str, Enum):
    R_OUT_OF_RANGE = "ROutOfRange"
    C_OUTSIDE_HULL = "COutsideHull"
    C_OUTSIDE_OPPOSITE_SIDE_WINDOW = "COutsideOppositeSideWindow"
    ENDPOINT_C0_WRONG_R = "EndpointC0WrongR"
    ENDPOINT_C1_SMALL_R = "EndpointC1SmallR"
    EQUAL_SLOPES_SMALL_R = "EqualSlopesSmallR"
    ETA_ZERO_SMALL_R = "EtaZeroSmallR"
    THETA_CONDITION_FAILS = "ThetaConditionFails"


class W0Result(str, Enum):
    EMBEDS = "Embeds"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class Verdict:
    decision: Decision
    case: Optional[Case]
    reason: Optional[Reason]
    derived: DerivedQuantities
    note: Optional[str] = None

    @property
    def embeds(self) -> bool:
        return self.decision is Decision.EMBEDS

    def as_dict(self) -> dict:
        return {
            "decision": self.decision.value,
            "case": self.case.value if self.case else None,
            "reason": self.reason.value if self.reason else None,
            "note": self.note,
            "derived": self.derived.as_dict(),
        }


# ---------------------------------------------------------------------------
# side predicates relative to -N
# ---------------------------------------------------------------------------

def _same_side(params: Params) -> bool:
    """a and b-p weakly on the same side of -N (either may equal -N)."""
    mn = -params.n
    bp = params.b - params.p
    return (params.a >= mn and bp >= mn) or (params.a <= mn and bp <= mn)


def _opposite_strict(params: Params) -> bool:
    mn = -params.n
    bp = params.b - params.p
    return (params.a < mn < bp) or (bp < mn < params.a)


def _side_for_c1_endpoint(params: Params) -> bool:
    """Side condition of case IV: b-p strictly off -N, a weakly on the
    same side."""
    mn = -params.n
    bp = params.b - params.p
    return (params.a <= mn and bp < mn) or (params.a >= mn and bp > mn)


def _opposite_weak(params: Params) -> bool:
    """Precondition of the opposite-side window reason: b-p may sit on -N."""
    mn = -params.n
    bp = params.b - params.p
    return (bp <= mn < params.a) or (bp >= mn > params.a)


def _strictly_between(c: Fraction, e1: Fraction, e2: Fraction) -> bool:
    lo, hi = (e1, e2) if e1 <= e2 else (e2, e1)
    return lo < c < hi


def _in_hull(c: Fraction, e1: Fraction, e2: Fraction) -> bool:
    lo, hi = (e1, e2) if e1 <= e2 else (e2, e1)
    return lo <= c <= hi


def _in_window(params: Params, d: DerivedQuantities) -> bool:
    """c in the half-open interval with endpoints c0 (included) and -N
    (excluded)."""
    c, mn = params.c, Fraction(-params.n)
    return c == d.c0 or _strictly_between(c, d.c0, mn)


# ---------------------------------------------------------------------------
# full-space characterization
# ---------------------------------------------------------------------------

def _r_in_range(params: Params, d: DerivedQuantities) -> bool:
    return ext_le(params.r, ext_max(d.p_star, params.q))


def _case_conditions(params: Params, d: DerivedQuantities) -> dict:
    p, q, r = params.p, params.q, params.r
    a, b, c = params.a, params.b, params.c
    mn = Fraction(-params.n)
    slopes_differ = not d.slopes_equal

    cond = {}
    cond[Case.III] = r == q and c == a
    cond[Case.IV] = (
        p <= r
        and ext_le(r, d.p_star)
        and _side_for_c1_endpoint(params)
        and c == d.c1
    )
    cond[Case.V] = (
        d.slopes_equal and d.eta != 0 and r >= min(p, q) and c == d.c1
    )
    cond[Case.VI] = (
        a == mn and b == p + mn and q < r and ext_le(r, d.p_star) and c == d.c1
    )
    cond[Case.I] = (
        _same_side(params)
        and slopes_differ
        and _strictly_between(c, d.c0, d.c1)
        and theta_condition_holds(d.theta_c, params)
    )
    cond[Case.II] = (
        _opposite_strict(params)
        and _strictly_between(c, d.c0, mn)
        and theta_condition_holds(d.theta_c, params)
    )
    return cond


_CASE_PRIORITY = (Case.III, Case.IV, Case.V, Case.VI, Case.I, Case.II)


def _failure_reason(params: Params, d: DerivedQuantities) -> Reason:
    p, q, r = params.p, params.q, params.r
    a, b, c = params.a, params.b, params.c
    mn = Fraction(-params.n)
    slopes_differ = not d.slopes_equal

    if not _r_in_range(params, d):
        return Reason.R_OUT_OF_RANGE
    if not _in_hull(c, d.c0, d.c1):
        return Reason.C_OUTSIDE_HULL
    if _opposite_weak(params) and not _in_window(params, d):
        return Reason.C_OUTSIDE_OPPOSITE_SIDE_WINDOW
    if slopes_differ and c == d.c0 and r != q:
        return Reason.ENDPOINT_C0_WRONG_R
    if slopes_differ and c == d.c1 and r < p:
        return Reason.ENDPOINT_C1_SMALL_R
    if d.slopes_equal and r < min(p, q) and c == d.c0:
        return Reason.EQUAL_SLOPES_SMALL_R
    if a == mn and b == p + mn and r < q and c == mn:
        return Reason.ETA_ZERO_SMALL_R
    if slopes_differ and not theta_condition_holds(d.theta_c, params):
        return Reason.THETA_CONDITION_FAILS
    raise AssertionError(
        f"no necessity reason applies to a non-embedding instance: {params}"
    )


def classify(params: Params) -> Verdict:
    """Full-space verdict: Embeds with a case tag, or DoesNotEmbed with
    the first applicable necessity reason."""
    validate_full_space(params)
    d = derive(params)

    if _r_in_range(params, d):
        cond = _case_conditions(params, d)
        for case in _CASE_PRIORITY:
            if cond[case]:
                return Verdict(Decision.EMBEDS, case, None, d)

    return Verdict(Decision.DOES_NOT_EMBED, None, _failure_reason(params, d), d)


# ---------------------------------------------------------------------------
# radial subspace characterization
# ---------------------------------------------------------------------------

def classify_radial(params: Params) -> Verdict:
    """Verdict for the subspace of radially symmetric functions.

    Valid for every q, r > 0 with p >= 1.  The conditions are those of the
    full-space theorem transplanted to dimension one: with
    theta_breve = (1 - q/r)(q/p' + 1)^-1,

      (i)   same weak side, slopes differ, c strictly between c0 and c1,
            theta_c >= theta_breve (vacuous when q >= r);
      (ii)  strictly opposite sides, c strictly between c0 and -N,
            theta_c >= theta_breve;
      (iii) r >= p, side condition of case IV, c = c1 (a pure
            radial-derivative bound holds);
      (iv)  r = q and c = c0, or p != q, min{p,q} <= r <= max{p,q},
            slopes equal and nonzero, c = c0;
      (v)   a = -N, b = p - N, r > q, c = -N (multiplicative bound with
            exponent theta_breve).

    There is no r <= max{p*, q} gate: the radial problem behaves like
    dimension one, where the critical exponent is infinite.
    """
    validate_radial(params)
    d = derive(params)
    p, q, r = params.p, params.q, params.r
    a, b, c = params.a, params.b, params.c
    mn = Fraction(-params.n)
    slopes_differ = not d.slopes_equal

    cond = {
        Case.IV: (r == q and c == d.c0)
        or (
            p != q
            and min(p, q) <= r <= max(p, q)
            and d.slopes_equal
            and d.eta != 0
            and c == d.c0
        ),
        Case.III: r >= p and _side_for_c1_endpoint(params) and c == d.c1,
        Case.V: a == mn and b == p + mn and r > q and c == mn,
        Case.I: (
            _same_side(params)
            and slopes_differ
            and _strictly_between(c, d.c0, d.c1)
            and d.theta_c >= d.theta_breve
        ),
        Case.II: (
            _opposite_strict(params)
            and _strictly_between(c, d.c0, mn)
            and d.theta_c >= d.theta_breve
        ),
    }
    for case in (Case.IV, Case.III, Case.V, Case.I, Case.II):
        if cond[case]:
            return Verdict(Decision.EMBEDS, case, None, d)

    # the radial problem is the one-dimensional full problem with shifted
    # weights; the necessity reason is read off the reduction
    reduced = _reduced_one_dim(params)
    reason = _failure_reason(reduced, derive(reduced))
    return Verdict(Decision.DOES_NOT_EMBED, None, reason, d)


def _reduced_one_dim(params: Params) -> Params:
    """The radial problem in dimension N is the full problem at N = 1 with
    weights shifted by N - 1."""
    shift = params.n - 1
    return Params(
        n=1,
        p=params.p,
        q=params.q,
        r=params.r,
        a=params.a + shift,
        b=params.b + shift,
        c=params.c + shift,
    )


def radial_reduction(params: Params) -> Params:
    """Public alias used by tests: radial classification in dimension N
    agrees with full-space classification of this reduced tuple."""
    return _reduced_one_dim(params)


# ---------------------------------------------------------------------------
# zero-spherical-mean subspace (sufficient conditions only)
# ---------------------------------------------------------------------------

def classify_w0(params: Params) -> W0Result:
    """Sufficient conditions for the subspace of functions with vanishing
    spherical mean to embed into L^r(|x|^c dx).

    Distinct slopes: c must lie in the closed hull of c0, c1; either
    r = q with c = c0, or c != c0 with the theta-condition; and
    theta_c r/p + (1 - theta_c) r/q >= 1.  Equal slopes: c = c0 and
    min{p,q} <= r <= max{p*, q}.  Anything else is Unknown, not a refusal:
    the criterion is one-sided.
    """
    validate_full_space(params)
    if params.q < 1 or params.r < 1:
        raise ValueError("the zero-mean criterion requires p, q, r >= 1")
    d = derive(params)
    p, q, r = params.p, params.q, params.r

    if d.slopes_equal:
        if params.c == d.c0 and min(p, q) <= r and ext_le(r, ext_max(d.p_star, q)):
            return W0Result.EMBEDS
        return W0Result.UNKNOWN

    if not _in_hull(params.c, d.c0, d.c1):
        return W0Result.UNKNOWN
    theta = d.theta_c
    first = (r == q and params.c == d.c0) or (
        params.c != d.c0 and theta_condition_holds(theta, params)
    )
    second = theta * r / p + (1 - theta) * r / q >= 1
    return W0Result.EMBEDS if (first and second) else W0Result.UNKNOWN


def auto_theta_condition_check(params: Params) -> bool:
    """True iff r <= min{p*, q}; in that regime the theta-condition holds
    automatically for every c in the hull (self-test invariant)."""
    d = derive(params)
    if d.slopes_equal:
        raise ValueError("auto theta check requires distinct slopes")
    return ext_le(params.r, ext_min(d.p_star, params.q))
