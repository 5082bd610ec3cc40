"""Full-space, radial, and zero-mean classifiers."""

import random
from fractions import Fraction

import pytest

from ckn.classify import (
    Case,
    Decision,
    Reason,
    W0Result,
    auto_theta_condition_check,
    classify,
    classify_radial,
    classify_w0,
    radial_reduction,
)
from ckn.derived import derive, theta_condition_holds
from ckn.params import Params, kelvin_params

from conftest import random_params
from oracle_unweighted import unweighted_embeds

F = Fraction


def make(n, p, q, r, a, b, c):
    return Params(n=n, p=F(p), q=F(q), r=F(r), a=F(a), b=F(b), c=F(c))


# ---------------------------------------------------------------------------
# reference verdicts
# ---------------------------------------------------------------------------

def test_identity_embedding_case_iii():
    v = classify(make(3, 2, 2, 2, 0, 0, 0))
    assert v.decision is Decision.EMBEDS
    assert v.case is Case.III


def test_gradient_endpoint_case_iv():
    v = classify(make(3, 2, 2, 4, 0, 0, -1))
    assert v.decision is Decision.EMBEDS
    assert v.case is Case.IV


def test_r_out_of_range():
    v = classify(make(3, 2, 2, 7, 0, 0, 0))
    assert v.decision is Decision.DOES_NOT_EMBED
    assert v.reason is Reason.R_OUT_OF_RANGE


def test_exceptional_case_vi():
    v = classify(make(2, 2, 2, 4, -2, 0, -2))
    assert v.decision is Decision.EMBEDS
    assert v.case is Case.VI


def test_interior_case_i():
    v = classify(make(3, 2, 2, 2, 0, 0, -1))
    assert v.decision is Decision.EMBEDS
    assert v.case is Case.I


def test_opposite_sides_case_ii():
    # a = 0 > -3 and b - p = -4 < -3; c0 = 0, window (-3, 0)
    v = classify(make(3, 2, 2, 2, 0, -2, -1))
    assert v.decision is Decision.EMBEDS
    assert v.case is Case.II


def test_hardy_tuple_reports_trivial_case_by_priority():
    # r = q and c = a also holds here, and case III wins the tag priority
    v = classify(make(3, 2, 2, 2, -2, 0, -2))
    assert v.decision is Decision.EMBEDS
    assert v.case is Case.III


def test_equal_slopes_case_v():
    # equal slopes 1/2, q < r < p so neither III nor IV applies
    v = classify(make(3, 4, 2, 3, -2, 3, "-3/2"))
    assert v.decision is Decision.EMBEDS
    assert v.case is Case.V


def test_endpoint_c0_wrong_r():
    # c0 = 4*(3/2) - 3 = 3
    v = classify(make(3, 2, 2, 4, 0, 0, 3))
    assert v.decision is Decision.DOES_NOT_EMBED
    assert v.reason is Reason.ENDPOINT_C0_WRONG_R


def test_endpoint_c1_small_r():
    v = classify(make(3, 2, 2, 1, -4, "-501/500", "-3001/1000"))
    assert v.decision is Decision.DOES_NOT_EMBED
    assert v.reason is Reason.ENDPOINT_C1_SMALL_R


def test_c_outside_hull():
    v = classify(make(3, 2, 2, 2, 0, 0, -3))
    assert v.decision is Decision.DOES_NOT_EMBED
    assert v.reason is Reason.C_OUTSIDE_HULL


def test_opposite_side_window_violation():
    # a = 0, b - p = -4: hull [-4, 0], window (-3, 0]; c = -3 is excluded
    v = classify(make(3, 2, 2, 2, 0, -2, -3))
    assert v.decision is Decision.DOES_NOT_EMBED
    assert v.reason is Reason.C_OUTSIDE_OPPOSITE_SIDE_WINDOW


def test_equal_slopes_small_r():
    v = classify(make(3, 2, 3, 1, "-3/2", 0, "-5/2"))
    assert v.decision is Decision.DOES_NOT_EMBED
    assert v.reason is Reason.EQUAL_SLOPES_SMALL_R


def test_eta_zero_small_r():
    v = classify(make(2, 2, 4, 3, -2, 0, -2))
    assert v.decision is Decision.DOES_NOT_EMBED
    assert v.reason is Reason.ETA_ZERO_SMALL_R


def test_theta_condition_fails():
    v = classify(make(3, 1, 8, 8, 0, 0, "39/4"))
    assert v.decision is Decision.DOES_NOT_EMBED
    assert v.reason is Reason.THETA_CONDITION_FAILS


def test_invalid_exponents_rejected():
    with pytest.raises(ValueError):
        classify(make(3, "1/2", 2, 2, 0, 0, 0))
    with pytest.raises(ValueError):
        classify(make(2, 2, "1/2", 2, 0, 0, 0))
    # sub-unit q, r are fine in dimension one
    classify(make(1, 2, "1/2", "3/4", 0, 0, 0))


# ---------------------------------------------------------------------------
# unweighted oracle (independently coded case list, a = b = 0)
# ---------------------------------------------------------------------------

def _quarters(lo, hi):
    k = lo * 4
    while k <= hi * 4:
        yield F(k, 4)
        k += 1


def test_unweighted_oracle_spot_grid():
    mismatches = []
    for n in (1, 2, 3):
        for p in (F(1), F(3, 2), F(2), F(4)):
            for q in (F(1), F(2), F(3)):
                for r in (F(1), F(2), F(7, 2), F(6)):
                    for c in _quarters(-n - 2, 2):
                        got = classify(make(n, p, q, r, 0, 0, c)).embeds
                        want = unweighted_embeds(n, p, q, r, c)
                        if got != want:
                            mismatches.append((n, p, q, r, c, got, want))
    assert not mismatches, mismatches[:8]


# ---------------------------------------------------------------------------
# metamorphic and structural properties
# ---------------------------------------------------------------------------

def test_kelvin_metamorphic_random_sample():
    rng = random.Random(7)
    for _ in range(400):
        params = random_params(rng)
        v = classify(params)
        vk = classify(kelvin_params(params))
        assert v.decision == vk.decision, params
        assert v.case == vk.case, params
        assert v.reason == vk.reason, params


def test_endpoint_laws_random_sample():
    rng = random.Random(11)
    checked = 0
    while checked < 150:
        params = random_params(rng, require_distinct_slopes=True)
        d = derive(params)
        if params.r != params.q:
            v0 = classify(params.with_c(d.c0))
            if v0.decision is Decision.DOES_NOT_EMBED:
                # the c0 endpoint can also fall out of the opposite-side
                # window or the r-range before the endpoint law applies
                assert v0.reason in (
                    Reason.ENDPOINT_C0_WRONG_R,
                    Reason.R_OUT_OF_RANGE,
                    Reason.C_OUTSIDE_OPPOSITE_SIDE_WINDOW,
                )
            else:
                pytest.fail(f"c0 with r != q must not embed: {params}")
        if params.r < params.p:
            v1 = classify(params.with_c(d.c1))
            assert v1.decision is Decision.DOES_NOT_EMBED
        checked += 1


def test_auto_theta_condition():
    assert auto_theta_condition_check(make(3, 2, 2, 2, 0, 0, 0)) is True
    assert auto_theta_condition_check(make(3, 2, 2, 6, 0, 0, 0)) is False
    assert auto_theta_condition_check(make(1, 1, 5, 5, 0, 0, 0)) is True


def test_auto_theta_condition_implies_hull_condition():
    rng = random.Random(13)
    for _ in range(200):
        params = random_params(rng, require_distinct_slopes=True)
        if not auto_theta_condition_check(params):
            continue
        d = derive(params)
        for k in range(0, 9):
            theta = F(k, 8)
            assert theta_condition_holds(theta, params), (params, theta)


# ---------------------------------------------------------------------------
# radial classifier
# ---------------------------------------------------------------------------

def test_radial_exceptional_case():
    v = classify_radial(make(2, 2, 1, 2, -2, 0, -2))
    assert v.decision is Decision.EMBEDS
    assert v.case is Case.V
    assert v.derived.theta_breve == F(1, 3)


def test_radial_gradient_endpoint():
    v = classify_radial(make(3, 2, 2, 4, 0, 0, -1))
    assert v.decision is Decision.EMBEDS
    assert v.case is Case.III


def test_radial_allows_sub_unit_exponents():
    v = classify_radial(make(3, 2, "1/2", "1/3", 0, 0, 0))
    assert v.decision in (Decision.EMBEDS, Decision.DOES_NOT_EMBED)


def test_radial_dominates_full_space():
    rng = random.Random(17)
    for _ in range(300):
        params = random_params(rng)
        if classify(params).embeds:
            assert classify_radial(params).embeds, params


def test_radial_matches_one_dimensional_reduction():
    rng = random.Random(19)
    for _ in range(400):
        params = random_params(rng)
        reduced = radial_reduction(params)
        assert classify_radial(params).embeds == classify(reduced).embeds, params


# ---------------------------------------------------------------------------
# zero-spherical-mean sufficient conditions
# ---------------------------------------------------------------------------

def test_w0_gradient_endpoint_instance():
    assert classify_w0(make(3, 2, 2, 4, 0, 0, -1)) is W0Result.EMBEDS


def test_w0_equal_slopes_range():
    # equal slopes, r = p: sufficient branch
    assert classify_w0(make(3, 2, 2, 2, -2, 0, -2)) is W0Result.EMBEDS


def test_w0_unknown_when_norm_balance_fails():
    # small r with small theta_c: theta r/p + (1-theta) r/q < 1
    params = make(3, 2, 4, 1, 0, 0, "-73/32")
    d = derive(params)
    assert 0 < d.theta_c < F(1, 3)
    assert classify_w0(params) is W0Result.UNKNOWN


def test_w0_embeds_implies_full_space_or_unknown_sanity():
    rng = random.Random(23)
    for _ in range(200):
        params = random_params(rng)
        if params.q < 1 or params.r < 1:
            continue
        result = classify_w0(params)
        assert result in (W0Result.EMBEDS, W0Result.UNKNOWN)
