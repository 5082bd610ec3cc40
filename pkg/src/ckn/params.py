"""Parameter tuples (N, p, q, r, a, b, c) and the Kelvin reflection.

A tuple describes the source space (functions with |x|^{a/q} u in L^q and
|x|^{b/p} grad u in L^p on the punctured space) and the target L^r space
with weight |x|^c.  Validity is mode dependent: the full-space classifier
needs p >= 1 and, for N >= 2, q, r >= 1; the radial classifier only needs
p >= 1 with q, r > 0.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction

from .rational import format_rational


@dataclass(frozen=True)
class Params:
    n: int
    p: Fraction
    q: Fraction
    r: Fraction
    a: Fraction
    b: Fraction
    c: Fraction

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"dimension n must be an integer >= 1, got {self.n!r}")
        for name in ("p", "q", "r", "a", "b", "c"):
            value = getattr(self, name)
            if not isinstance(value, Fraction):
                raise ValueError(f"{name} must be a Fraction, got {value!r}")
        for name in ("p", "q", "r"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be > 0, got {getattr(self, name)}")

    def with_c(self, c: Fraction) -> "Params":
        return replace(self, c=c)

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "p": format_rational(self.p),
            "q": format_rational(self.q),
            "r": format_rational(self.r),
            "a": format_rational(self.a),
            "b": format_rational(self.b),
            "c": format_rational(self.c),
        }


def validate_full_space(params: Params) -> None:
    """Exponent ranges for the full-space classifier: p,q,r >= 1, except
    that q, r may drop below 1 in dimension one."""
    if params.p < 1:
        raise ValueError(f"full-space classification requires p >= 1, got p={params.p}")
    if params.n >= 2 and (params.q < 1 or params.r < 1):
        raise ValueError(
            "full-space classification requires q, r >= 1 when n >= 2, "
            f"got q={params.q}, r={params.r}"
        )


def validate_radial(params: Params) -> None:
    """The radial classifier allows any q, r > 0 but still needs p >= 1."""
    if params.p < 1:
        raise ValueError(f"radial classification requires p >= 1, got p={params.p}")


def kelvin_params(params: Params) -> Params:
    """Parameter reflection induced by inversion x -> x/|x|^2.

    (N, p, q, r, a, b, c) -> (N, p, q, r, -2N-a, 2p-2N-b, -2N-c).
    Applying it twice is the identity; both weight slopes change sign, so
    slope equality and every classification outcome are preserved.
    """
    n2 = 2 * params.n
    return replace(
        params,
        a=-n2 - params.a,
        b=2 * params.p - n2 - params.b,
        c=-n2 - params.c,
    )
