"""Function families with certified hypotheses, plus the sampled checker.

Certification records WHY a family satisfies the generalized-convexity
hypothesis (analytic construction, nonnegative-convex argument, constant
second derivative) and the sampled checker provides reproducible
numerical evidence on top.  One deliberately non-convex family is
included for identity testing only and certifies nothing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import DomainError
from .identity import FunctionTriple

__all__ = ["FunctionFamily", "is_s_convex_sampled", "builtin_families",
           "family_by_label"]

# Kronecker (additive recurrence) generators from the R3 sequence: the
# documented default seed is 0 and every draw is a pure function of
# (seed, index).
_R3 = 1.2207440846057596  # real root of x**4 = x + 1
_GENERATORS = (1.0 / _R3, 1.0 / _R3 ** 2, 1.0 / _R3 ** 3)

_VIOLATION_TOL = 1e-10


def _seed_offsets(seed: int, dims: int):
    """Deterministic offsets in [0, 1) derived from an integer seed."""
    state = (seed & 0xFFFFFFFFFFFFFFFF) or 0x9E3779B97F4A7C15
    out = []
    for _ in range(dims):
        state = (state * 6364136223846793005 + 1442695040888963407) % 2 ** 64
        out.append((state >> 11) / float(2 ** 53))
    return out


def _low_discrepancy(n: int, seed: int, dims: int = 3):
    offs = _seed_offsets(seed, dims)
    idx = np.arange(1, n + 1, dtype=float)
    return [np.mod(offs[d] + idx * _GENERATORS[d], 1.0) for d in range(dims)]


def is_s_convex_sampled(g, s: float, domain: tuple[float, float], n: int,
                        seed: int = 0):
    """Sampled test of g(w*x + (1-w)*y) <= w**s g(x) + (1-w)**s g(y).

    Returns (passed, worst_violation, witness) where the witness is the
    (x, y, w) triple attaining the worst violation.  Sampling is a fixed
    low-discrepancy sequence, so failures reproduce exactly.
    """
    if n < 100:
        raise DomainError(f"need at least 100 samples, got {n}")
    lo, hi = domain
    if not (math.isfinite(lo) and math.isfinite(hi)) or not 0.0 <= lo < hi:
        raise DomainError(f"domain must sit inside [0, inf), got {domain}")
    if not 0.0 < s <= 1.0:
        raise DomainError(f"s must lie in (0, 1], got {s}")

    u1, u2, u3 = _low_discrepancy(n, seed)
    x = lo + u1 * (hi - lo)
    y = lo + u2 * (hi - lo)
    w = u3
    gx = np.asarray(g(x), dtype=float)
    gy = np.asarray(g(y), dtype=float)
    gz = np.asarray(g(w * x + (1.0 - w) * y), dtype=float)
    if not (np.all(np.isfinite(gx)) and np.all(np.isfinite(gy))
            and np.all(np.isfinite(gz))):
        raise DomainError("sampled function produced non-finite values")
    violation = gz - w ** s * gx - (1.0 - w) ** s * gy
    i = int(np.argmax(violation))
    worst = float(violation[i])
    return worst <= _VIOLATION_TOL, worst, (float(x[i]), float(y[i]), float(w[i]))


@dataclass(frozen=True)
class FunctionFamily:
    """A function triple plus the hypothesis certificates it carries.

    ``cert_pairs`` is None when the certification argument covers every
    (s, q) with s in (0, 1] and q >= 1, or an explicit tuple of pairs for
    construction-specific certificates.  ``certification`` names the
    analytic reason; "none" marks identity-only entries.
    """

    label: str
    triple: FunctionTriple
    certification: str              # construction | nonnegative-convex | constant | none
    cert_pairs: tuple[tuple[float, float], ...] | None
    d4_sup: Callable | None = None  # sup |f''''| over (a, b), when finite

    @property
    def domain(self) -> tuple[float, float]:
        return self.triple.domain

    def is_certified(self, s: float, q: float) -> bool:
        if self.certification == "none":
            return False
        if self.cert_pairs is None:
            return 0.0 < s <= 1.0 and q >= 1.0
        return any(abs(s - cs) <= 1e-12 and abs(q - cq) <= 1e-12
                   for cs, cq in self.cert_pairs)

    def second_derivative_power(self, q: float):
        """|f''|**q as an array-friendly callable (the certified object)."""
        d2 = self.triple.d2
        return lambda u: np.abs(d2(u)) ** q


def builtin_families(lo: float = 0.0, hi: float = 1.0,
                     power_s: float = 0.5, power_q: float = 2.0):
    """The built-in corpus on [lo, hi] (exponential capped at 1.5).

    The power-match entry is built so |f''|**q equals u**s exactly for
    (power_s, power_q) and is certified for that single pair.
    """
    if not 0.0 <= lo < hi:
        raise DomainError(f"need 0 <= lo < hi, got [{lo}, {hi}]")
    r = power_s / power_q
    if not 0.0 < r <= 1.0:
        raise DomainError(f"power-match exponent s/q must lie in (0, 1], got {r}")

    dom = (lo, hi)
    exp_dom = (lo, min(hi, 1.5)) if lo < 1.5 else dom

    power = FunctionFamily(
        label="power_match",
        triple=FunctionTriple(
            f=lambda u, r=r: u ** (r + 2.0) / ((r + 1.0) * (r + 2.0)),
            d1=lambda u, r=r: u ** (r + 1.0) / (r + 1.0),
            d2=lambda u, r=r: u ** r,
            domain=dom,
            label="power_match",
        ),
        certification="construction",
        cert_pairs=((power_s, power_q),),
    )
    cubic = FunctionFamily(
        label="cubic",
        triple=FunctionTriple(
            f=lambda u: u ** 3,
            d1=lambda u: 3.0 * u ** 2,
            d2=lambda u: 6.0 * u,
            domain=dom,
            label="cubic",
        ),
        certification="nonnegative-convex",
        cert_pairs=None,
        d4_sup=lambda a, b: 0.0,
    )
    quadratic = FunctionFamily(
        label="quadratic",
        triple=FunctionTriple(
            f=lambda u: u ** 2,
            d1=lambda u: 2.0 * u,
            d2=lambda u: 2.0 + 0.0 * u,
            domain=dom,
            label="quadratic",
        ),
        certification="constant",
        cert_pairs=None,
        d4_sup=lambda a, b: 0.0,
    )
    exponential = FunctionFamily(
        label="exponential",
        triple=FunctionTriple(
            f=np.exp,
            d1=np.exp,
            d2=np.exp,
            domain=exp_dom,
            label="exponential",
        ),
        certification="nonnegative-convex",
        cert_pairs=None,
        d4_sup=lambda a, b: math.exp(b),
    )
    affine = FunctionFamily(
        label="affine",
        triple=FunctionTriple(
            f=lambda u: 1.0 + u,
            d1=lambda u: 1.0 + 0.0 * u,
            d2=lambda u: 0.0 * u,
            domain=dom,
            label="affine",
        ),
        certification="constant",
        cert_pairs=None,
        d4_sup=lambda a, b: 0.0,
    )
    sin_blend = FunctionFamily(
        label="sin_plus_linear",
        triple=FunctionTriple(
            f=lambda u: np.sin(u) + 2.0 * u,
            d1=lambda u: np.cos(u) + 2.0,
            d2=lambda u: -np.sin(u),
            domain=dom,
            label="sin_plus_linear",
        ),
        certification="none",
        cert_pairs=(),
        d4_sup=lambda a, b: 1.0,
    )
    return [power, cubic, quadratic, exponential, affine, sin_blend]


def family_by_label(label: str, **kwargs) -> FunctionFamily:
    for fam in builtin_families(**kwargs):
        if fam.label == label:
            return fam
    raise DomainError(f"unknown family {label!r}")
