#!/usr/bin/env python3
"""Run the shipped verification and falsification fixtures and print a table.

Usage:
    python3 scripts/fixture_gallery.py
"""

import sys
import time
from fractions import Fraction as F
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from ckn.admissible import theta_set
from ckn.classify import classify
from ckn.params import Params
from ckn.probes import (
    default_verification_family,
    default_w0_family,
    falsify_instance,
    log_window_theta_probe,
    verify_instance,
)

VERIFY_FIXTURES = [
    ("interior interpolation", Params(3, F(2), F(2), F(2), F(0), F(0), F(-1)), F(1, 2), None),
    ("gradient endpoint", Params(3, F(2), F(2), F(4), F(0), F(0), F(-1)), F(1), None),
    ("weighted Hardy", Params(3, F(2), F(2), F(2), F(-2), F(0), F(-2)), F(1), None),
    ("zero-mean harmonics", Params(3, F(2), F(2), F(4), F(0), F(0), F(-1)), F(1), "w0"),
]

FALSIFY_FIXTURES = [
    ("r beyond range", Params(3, F(2), F(2), F(7), F(0), F(0), F(0))),
    ("c below hull", Params(3, F(2), F(2), F(2), F(0), F(0), F(-3))),
    ("outside window", Params(3, F(2), F(2), F(2), F(0), F(-2), F(-3))),
    ("c0 endpoint, r != q", Params(3, F(2), F(2), F(4), F(0), F(0), F(3))),
    ("c1 endpoint, r < p", Params(3, F(2), F(2), F(1), F(-4), F(-51, 50), F(-301, 100))),
    ("equal slopes, small r", Params(3, F(2), F(3), F(1), F(-3, 2), F(0), F(-5, 2))),
    ("zero slope, small r", Params(2, F(1), F(3), F(1), F(-2), F(-1), F(-2))),
    ("theta condition fails", Params(3, F(1), F(8), F(8), F(0), F(0), F(39, 4))),
]


def main() -> int:
    print("== verification fixtures (multiplicative ratio scans) ==")
    print(f"{'fixture':26s} {'case':5s} {'theta':6s} {'max ratio':>10s} {'scale defect':>13s}")
    for name, params, theta, mode in VERIFY_FIXTURES:
        verdict = classify(params)
        family = (
            default_w0_family(params) if mode == "w0" else default_verification_family(params)
        )
        t0 = time.perf_counter()
        report = verify_instance(params, theta, family=family)
        dt = time.perf_counter() - t0
        status = "ok" if report.ok else f"FAILED: {report.failure}"
        print(
            f"{name:26s} {verdict.case.value:5s} {float(theta):<6.3g} "
            f"{report.max_ratio:>10.4g} {report.defect:>13.3e}  [{dt:.2f}s {status}]"
        )

    print()
    print("== falsification fixtures (witness traces) ==")
    print(f"{'fixture':26s} {'reason':28s} {'outcome':>22s}")
    for name, params in FALSIFY_FIXTURES:
        verdict = classify(params)
        t0 = time.perf_counter()
        report = falsify_instance(params)
        dt = time.perf_counter() - t0
        if report.certificate:
            outcome = "divergence certificate"
        elif report.ok:
            outcome = f"crossed 1e3 at index {report.crossed_at}"
        else:
            outcome = f"FAILED: {report.failure}"
        print(f"{name:26s} {verdict.reason.value:28s} {outcome:>22s}  [{dt:.2f}s]")

    print()
    print("== exceptional instance: embedding without a multiplicative exponent ==")
    exc = Params(2, F(2), F(2), F(4), F(-2), F(0), F(-2))
    verdict = classify(exc)
    print(f"classifies {verdict.decision.value} (case {verdict.case.value}), "
          f"exponent set: {theta_set(exc).kind.value}")
    for k in (0, 2, 5, 8, 10):
        probe = log_window_theta_probe(exc, k / 10.0)
        print(f"  theta = {k/10:.1f}: log-window ratio reaches {probe.max_ratio:.4g} "
              f"({'diverges' if probe.crossed else 'bounded'})")
    return 0


if __name__ == "__main__":
    sys.exit(main())
