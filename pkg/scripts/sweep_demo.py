#!/usr/bin/env python3
"""Sweep demonstrations: admissible windows recovered by brute classification.

Two classic pictures:
  * sweeping c at fixed (N, p, q, r, a, b) recovers the admissible
    interval of the target weight;
  * sweeping r in the unweighted case c = 0, p < N recovers the window
    [min(p*, q), max(p*, q)] of admissible integrabilities.

Usage:
    python3 scripts/sweep_demo.py
"""

import sys
from fractions import Fraction as F
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from ckn.admissible import admissible_set
from ckn.classify import classify
from ckn.params import Params


def sweep_c() -> None:
    base = Params(3, F(2), F(2), F(2), F(0), F(0), F(0))
    lo, hi, step = F(-3), F(1), F(1, 100)
    embedded = []
    c = lo
    while c <= hi:
        if classify(base.with_c(c)).embeds:
            embedded.append(c)
        c += step
    interval = admissible_set(base).interval
    print("sweep of the target weight c at (N, p, q, r, a, b) = (3, 2, 2, 2, 0, 0):")
    print(f"  grid points embedding: [{embedded[0]}, {embedded[-1]}] "
          f"({len(embedded)} of {int((hi - lo) / step) + 1})")
    print(f"  exact admissible interval: [{interval.lo}, {interval.hi}] "
          f"(closed: {interval.lo_included and interval.hi_included})")
    assert embedded[0] == interval.lo and embedded[-1] == interval.hi


def sweep_r() -> None:
    n, p, q = 3, F(2), F(2)
    print()
    print("sweep of r in the unweighted case (a = b = c = 0, N = 3, p = q = 2):")
    window = []
    r = F(1)
    while r <= 8:
        params = Params(n, p, q, r, F(0), F(0), F(0))
        verdict = classify(params)
        if verdict.embeds:
            window.append((r, verdict.case.value))
        r += F(1, 4)
    print(f"  embedding window: r in [{window[0][0]}, {window[-1][0]}]"
          f"  (critical exponent Np/(N-p) = 6)")
    cases = {}
    for r, case in window:
        cases.setdefault(case, []).append(r)
    for case, values in sorted(cases.items()):
        print(f"  case {case}: r in [{values[0]}, {values[-1]}]")
    assert window[0][0] == p and window[-1][0] == F(6)


def main() -> int:
    sweep_c()
    sweep_r()
    return 0


if __name__ == "__main__":
    sys.exit(main())
