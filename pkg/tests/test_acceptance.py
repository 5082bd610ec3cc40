"""Acceptance suite: one test per criterion, each printing a PASS line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines and timings.  Every tolerance is pinned here; nothing is deferred
to later calibration.
"""

import math
import random
import time
from fractions import Fraction

from ckn.admissible import ThetaSetKind, admissible_set, theta_set
from ckn.classify import Reason, classify
from ckn.derived import derive, theta_condition_holds
from ckn.params import Params, kelvin_params
from ckn.probes import (
    default_verification_family,
    default_w0_family,
    falsify_instance,
    log_window_theta_probe,
    verify_instance,
)
from conftest import random_params
from oracle_unweighted import unweighted_embeds

F = Fraction


def _report(criterion: int, message: str) -> None:
    print(f"PASS criterion {criterion}: {message}")


# ---------------------------------------------------------------------------
# 1. exact interpolation identity on random tuples
# ---------------------------------------------------------------------------

def test_criterion_1_exact_identity_suite():
    rng = random.Random(101)
    start = time.perf_counter()
    count = 0
    while count < 1000:
        params = random_params(rng, require_distinct_slopes=True)
        d = derive(params)
        theta = d.theta_c
        n, r = params.n, params.r
        assert (params.c + n) / r == theta * d.slope_b + (1 - theta) * d.slope_a
        assert d.theta_of(d.c0) == 0
        assert d.theta_of(d.c1) == 1
        count += 1
    elapsed = time.perf_counter() - start
    assert elapsed < 1.0, f"identity suite took {elapsed:.2f}s"
    _report(1, f"interpolation identity exact on 1000 tuples in {elapsed:.2f}s")


# ---------------------------------------------------------------------------
# 2. Kelvin metamorphic suite
# ---------------------------------------------------------------------------

def test_criterion_2_kelvin_metamorphic_suite():
    rng = random.Random(202)
    start = time.perf_counter()
    for _ in range(1000):
        params = random_params(rng)
        v = classify(params)
        vk = classify(kelvin_params(params))
        assert v.decision == vk.decision, params
        assert v.case == vk.case, params
        assert v.reason == vk.reason, params
    elapsed = time.perf_counter() - start
    assert elapsed < 1.0, f"Kelvin suite took {elapsed:.2f}s"
    _report(2, f"classification Kelvin-invariant on 1000 tuples in {elapsed:.2f}s")


# ---------------------------------------------------------------------------
# 3. unweighted-case oracle over the full grid
# ---------------------------------------------------------------------------

def test_criterion_3_unweighted_oracle_grid():
    start = time.perf_counter()
    ps = [F(1), F(3, 2), F(2), F(3), F(4)]
    rs = [F(k, 2) for k in range(2, 17)]
    mismatches = 0
    total = 0
    for n in (1, 2, 3, 5):
        cs = [F(k, 4) for k in range(4 * (-n - 2), 9)]
        for p in ps:
            for q in ps:
                for r in rs:
                    for c in cs:
                        params = Params(n, p, q, r, F(0), F(0), c)
                        got = classify(params).embeds
                        want = unweighted_embeds(n, p, q, r, c)
                        total += 1
                        if got != want:
                            mismatches += 1
    elapsed = time.perf_counter() - start
    assert mismatches == 0
    _report(3, f"zero mismatches against the unweighted oracle on {total} grid points in {elapsed:.1f}s")


# ---------------------------------------------------------------------------
# 4. interval / classifier consistency with endpoint flags
# ---------------------------------------------------------------------------

def test_criterion_4_interval_classify_consistency():
    rng = random.Random(404)
    start = time.perf_counter()
    instances = [random_params(rng) for _ in range(200)]
    checked = 0
    for params in instances:
        d = derive(params)
        result = admissible_set(params)
        lo = min(d.c0, d.c1) - 1
        hi = max(d.c0, d.c1) + 1
        step = (hi - lo) / 399
        grid = [lo + k * step for k in range(400)]
        for c in grid:
            member = result.contains(c)
            embeds = classify(params.with_c(c)).embeds
            assert member == embeds, (params, c)
            checked += 1
        # endpoint inclusion flags agree with the classifier pointwise
        if result.interval is not None:
            iv = result.interval
            assert classify(params.with_c(iv.lo)).embeds == iv.lo_included, params
            assert classify(params.with_c(iv.hi)).embeds == iv.hi_included, params
        for point in result.isolated_points:
            assert classify(params.with_c(point)).embeds, params
    elapsed = time.perf_counter() - start
    _report(4, f"zero mismatches on {checked} grid memberships plus endpoint flags in {elapsed:.1f}s")


# ---------------------------------------------------------------------------
# 5. automatic theta-condition in the small-r regime
# ---------------------------------------------------------------------------

def test_criterion_5_auto_theta_condition():
    from ckn.classify import auto_theta_condition_check

    rng = random.Random(404)  # same instance stream as criterion 4
    instances = [random_params(rng) for _ in range(200)]
    violations = 0
    checked = 0
    for params in instances:
        d = derive(params)
        if d.slopes_equal or not auto_theta_condition_check(params):
            continue
        # every c in the hull corresponds to theta in [0, 1]
        for k in range(41):
            theta = F(k, 40)
            if not theta_condition_holds(theta, params):
                violations += 1
            checked += 1
    assert violations == 0
    assert checked > 0
    _report(5, f"theta-condition automatic on {checked} hull points, zero violations")


# ---------------------------------------------------------------------------
# 6. multiplicative verification: dilation invariance of theta_c
# ---------------------------------------------------------------------------

def _sample_single_theta_instances(count: int, seed: int):
    rng = random.Random(seed)
    found = []
    while len(found) < count:
        params = random_params(rng, require_distinct_slopes=True)
        if params.n < 2:
            continue  # keep quadrature in the well-exercised regime
        result = admissible_set(params)
        if result.interval is None:
            continue
        iv = result.interval
        span = iv.hi - iv.lo
        if span == 0:
            continue
        c = iv.lo + span * F(rng.randint(1, 7), 8)
        params = params.with_c(c)
        verdict = classify(params)
        if not verdict.embeds:
            continue
        ts = theta_set(params)
        if ts.kind is not ThetaSetKind.SINGLE:
            continue
        found.append((params, ts.theta))
    return found


def test_criterion_6_multiplicative_dilation_invariance():
    start = time.perf_counter()
    instances = _sample_single_theta_instances(50, seed=606)
    family_size = 2  # one bump, one power tail per instance
    worst = 0.0
    for params, theta in instances:
        family = [
            default_verification_family(params)[1],
            default_verification_family(params)[4],
        ]
        report = verify_instance(params, theta, family=family)
        assert report.ok, (params, report.failure)
        assert math.isfinite(report.max_ratio)
        assert report.defect <= 1e-6, (params, report.defect)
        worst = max(worst, report.defect)
    elapsed = time.perf_counter() - start
    assert elapsed < 30.0, f"criterion 6 took {elapsed:.1f}s"
    _report(6, f"50 instances dilation-invariant (worst defect {worst:.2e}) in {elapsed:.1f}s")


# ---------------------------------------------------------------------------
# 7. Hardy fixture: pure gradient bound, ratio bounded
# ---------------------------------------------------------------------------

def test_criterion_7_hardy_fixture():
    params = Params(3, F(2), F(2), F(2), F(-2), F(0), F(-2))
    assert classify(params).embeds
    ts = theta_set(params)
    assert ts.contains(F(1))
    report = verify_instance(params, F(1), family=default_verification_family(params, 8))
    assert report.ok, report.failure
    assert math.isfinite(report.max_ratio)
    _report(7, f"Hardy ratio bounded over 8 members (max ratio {report.max_ratio:.4f})")


# ---------------------------------------------------------------------------
# 8. falsification fixtures, one per reason
# ---------------------------------------------------------------------------

FALSIFY_FIXTURES = {
    Reason.R_OUT_OF_RANGE: Params(3, F(2), F(2), F(7), F(0), F(0), F(0)),
    Reason.C_OUTSIDE_HULL: Params(3, F(2), F(2), F(2), F(0), F(0), F(-3)),
    Reason.C_OUTSIDE_OPPOSITE_SIDE_WINDOW: Params(3, F(2), F(2), F(2), F(0), F(-2), F(-3)),
    Reason.ENDPOINT_C0_WRONG_R: Params(3, F(2), F(2), F(4), F(0), F(0), F(3)),
    Reason.ENDPOINT_C1_SMALL_R: Params(3, F(2), F(2), F(1), F(-4), F(-51, 50), F(-301, 100)),
    Reason.EQUAL_SLOPES_SMALL_R: Params(3, F(2), F(3), F(1), F(-3, 2), F(0), F(-5, 2)),
    Reason.ETA_ZERO_SMALL_R: Params(2, F(1), F(3), F(1), F(-2), F(-1), F(-2)),
    Reason.THETA_CONDITION_FAILS: Params(3, F(1), F(8), F(8), F(0), F(0), F(39, 4)),
}


def test_criterion_8_falsification_suite():
    start = time.perf_counter()
    lines = []
    for reason, params in FALSIFY_FIXTURES.items():
        verdict = classify(params)
        assert verdict.reason is reason, (reason, verdict.reason)
        report = falsify_instance(params)
        assert report.ok, (reason, report.failure)
        assert report.certificate or report.crossed_at <= 40, reason
        lines.append(
            f"{reason.value}:{'certificate' if report.certificate else report.crossed_at}"
        )
    elapsed = time.perf_counter() - start
    assert elapsed < 60.0, f"criterion 8 took {elapsed:.1f}s"
    _report(8, f"all 8 witness traces certified or crossed 1e3 ({', '.join(lines)}) in {elapsed:.1f}s")


# ---------------------------------------------------------------------------
# 9. exceptional equal-slope fixture: embedding without any exponent
# ---------------------------------------------------------------------------

def test_criterion_9_exceptional_fixture():
    start = time.perf_counter()
    params = Params(2, F(2), F(2), F(4), F(-2), F(0), F(-2))
    verdict = classify(params)
    assert verdict.embeds and verdict.case.value == "VI"
    assert theta_set(params).kind is ThetaSetKind.EMPTY

    for k in range(11):
        probe = log_window_theta_probe(params, k / 10.0)
        assert probe.crossed, f"theta={k / 10} did not cross"
        assert probe.max_ratio > 1e3

    report = verify_instance(params, F(1, 4), family=default_verification_family(params))
    assert report.ok
    additive = max(
        m.norms.target.value / (m.norms.source.value + m.norms.grad.value)
        for m in report.members
    )
    assert additive < 50.0
    elapsed = time.perf_counter() - start
    _report(
        9,
        f"embeds(VI), empty exponent set, all 11 grid exponents exceed 1e3, "
        f"additive ratio bounded ({additive:.3f}) in {elapsed:.1f}s",
    )


# ---------------------------------------------------------------------------
# 10. zero-spherical-mean probe on the gradient-endpoint fixture
# ---------------------------------------------------------------------------

def test_criterion_10_w0_probe():
    params = Params(3, F(2), F(2), F(4), F(0), F(0), F(-1))
    from ckn.classify import W0Result, classify_w0

    assert classify_w0(params) is W0Result.EMBEDS
    family = default_w0_family(params, 6)
    report = verify_instance(params, F(1), family=family)
    assert report.ok, report.failure
    assert math.isfinite(report.max_ratio)
    _report(10, f"first-harmonic gradient-bound ratios bounded (max {report.max_ratio:.4f})")
