"""Closed-form kernel constants and their brute-force quadrature oracles.

Every bound constant in this package is a moment of the piecewise kernel
t * |(alpha+1)*lam - t**alpha| on [0, 1]:

    C1(alpha, lam)       weight 1
    C2(alpha, lam, s)    weight t**s
    C3(alpha, lam, s)    weight (1-t)**s
    C4(alpha, lam, p)    the p-th power t**p * |(alpha+1)*lam - t**alpha|**p
    H1/H2/H3(lam[, s])   the alpha = 1 specializations, kept as their own
                         closed forms so C/H agreement is a real cross-check

Each closed form is paired with ``kernel_oracle``, which integrates the
defining expression directly, splitting at the kink ((alpha+1)*lam)**(1/alpha)
so every panel sees a smooth sign-definite integrand.  The oracle is
normative: two quoted variants that disagree with it (``h3_printed`` and
``c4_printed_simpson``, plus the quoted Simpson endpoint weight 27/972)
are retained exactly so the audit can flag them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError
from .quad import integrate
from .specfun import beta_fn, hyp2f1, inc_beta

__all__ = [
    "KernelAudit",
    "c1",
    "c2",
    "c3",
    "c4",
    "h1",
    "h2",
    "h3",
    "h3_printed",
    "c4_printed_simpson",
    "PRINTED_SIMPSON_ENDPOINT_WEIGHT",
    "kernel_oracle",
    "KERNEL_NAMES",
]

KERNEL_NAMES = ("C1", "C2", "C3", "C4", "H1", "H2", "H3")

# Quoted endpoint weight of the classical Simpson-point bound at s = 1;
# the defining integral gives 37/972, so the audit must flag this value.
PRINTED_SIMPSON_ENDPOINT_WEIGHT = 27.0 / 972.0


def _check(alpha=None, lam=None, s=None, p=None):
    if alpha is not None and not (math.isfinite(alpha) and alpha > 0.0):
        raise DomainError(f"alpha must be > 0, got {alpha}")
    if lam is not None and not (math.isfinite(lam) and 0.0 <= lam <= 1.0):
        raise DomainError(f"lam must lie in [0, 1], got {lam}")
    if s is not None and not (math.isfinite(s) and 0.0 < s <= 1.0):
        raise DomainError(f"s must lie in (0, 1], got {s}")
    if p is not None and not (math.isfinite(p) and p >= 1.0):
        raise DomainError(f"p must be >= 1, got {p}")


def _inc_beta_clipped(a0, x, y):
    """Incomplete Beta extended by continuity to a0 = 0 and a0 >= 1."""
    if a0 <= 0.0:
        return 0.0
    if a0 >= 1.0:
        return beta_fn(x, y)
    return inc_beta(a0, x, y)


def c1(alpha: float, lam: float) -> float:
    """First moment of t*|(alpha+1)*lam - t**alpha| on [0, 1]."""
    _check(alpha=alpha, lam=lam)
    c = (alpha + 1.0) * lam
    if c <= 1.0:
        return alpha * c ** (1.0 + 2.0 / alpha) / (alpha + 2.0) - c / 2.0 \
            + 1.0 / (alpha + 2.0)
    return c / 2.0 - 1.0 / (alpha + 2.0)


def c2(alpha: float, lam: float, s: float) -> float:
    """Moment of t*|(alpha+1)*lam - t**alpha| weighted by t**s."""
    _check(alpha=alpha, lam=lam, s=s)
    c = (alpha + 1.0) * lam
    if c <= 1.0:
        return (2.0 * alpha * c ** ((alpha + s + 2.0) / alpha)
                / ((s + 2.0) * (alpha + s + 2.0))
                - c / (s + 2.0) + 1.0 / (alpha + s + 2.0))
    return c / (s + 2.0) - 1.0 / (alpha + s + 2.0)


def c3(alpha: float, lam: float, s: float) -> float:
    """Moment of t*|(alpha+1)*lam - t**alpha| weighted by (1-t)**s.

    The split-branch form is assembled with the sign pattern that matches
    the defining integral (verified against the oracle), using incomplete
    Beta values at the kink abscissa.
    """
    _check(alpha=alpha, lam=lam, s=s)
    c = (alpha + 1.0) * lam
    if c > 1.0:
        return c * beta_fn(2.0, s + 1.0) - beta_fn(alpha + 2.0, s + 1.0)
    k = c ** (1.0 / alpha) if c > 0.0 else 0.0
    return (beta_fn(alpha + 2.0, s + 1.0) - c * beta_fn(2.0, s + 1.0)
            + 2.0 * c * _inc_beta_clipped(k, 2.0, s + 1.0)
            - 2.0 * _inc_beta_clipped(k, alpha + 2.0, s + 1.0))


def c4(alpha: float, lam: float, p: float) -> float:
    """p-th power moment of t*|(alpha+1)*lam - t**alpha| on [0, 1]."""
    _check(alpha=alpha, lam=lam, p=p)
    c = (alpha + 1.0) * lam
    if lam == 0.0:
        return 1.0 / (p * (alpha + 1.0) + 1.0)
    if c <= 1.0:
        first = (c ** ((1.0 + (alpha + 1.0) * p) / alpha) / alpha
                 * beta_fn((1.0 + p) / alpha, 1.0 + p))
        zz = 1.0 - c
        if zz <= 0.0:
            return first
        second = (zz ** (p + 1.0) / (alpha * (p + 1.0))
                  * hyp2f1(1.0 - (1.0 + p) / alpha, 1.0, p + 2.0, zz))
        return first + second
    return (c ** ((p * (alpha + 1.0) + 1.0) / alpha) / alpha
            * _inc_beta_clipped(1.0 / c, (1.0 + p) / alpha, 1.0 + p))


def h1(lam: float) -> float:
    """Order-one kernel moment, split at lam = 1/2."""
    _check(lam=lam)
    if lam <= 0.5:
        return (8.0 * lam ** 3 - 3.0 * lam + 1.0) / 3.0
    return (3.0 * lam - 1.0) / 3.0


def h2(lam: float, s: float) -> float:
    """Order-one kernel moment weighted by t**s, split at lam = 1/2."""
    _check(lam=lam, s=s)
    if lam <= 0.5:
        return (2.0 * (2.0 * lam) ** (s + 3.0) / ((s + 2.0) * (s + 3.0))
                - 2.0 * lam / (s + 2.0) + 1.0 / (s + 3.0))
    return 2.0 * lam / (s + 2.0) - 1.0 / (s + 3.0)


def h3(lam: float, s: float) -> float:
    """Order-one kernel moment weighted by (1-t)**s, oracle-consistent form."""
    _check(lam=lam, s=s)
    if lam > 0.5:
        return 2.0 * lam * beta_fn(2.0, s + 1.0) - beta_fn(3.0, s + 1.0)
    k = 2.0 * lam
    return (beta_fn(3.0, s + 1.0) - 2.0 * lam * beta_fn(2.0, s + 1.0)
            + 4.0 * lam * _inc_beta_clipped(k, 2.0, s + 1.0)
            - 2.0 * _inc_beta_clipped(k, 3.0, s + 1.0))


def h3_printed(lam: float, s: float) -> float:
    """Quoted variant of ``h3`` whose first branch flips the two leading
    signs relative to the defining integral; retained for auditing only."""
    _check(lam=lam, s=s)
    if lam > 0.5:
        return 2.0 * lam * beta_fn(2.0, s + 1.0) - beta_fn(3.0, s + 1.0)
    k = 2.0 * lam
    return (2.0 * lam * beta_fn(2.0, s + 1.0) - beta_fn(3.0, s + 1.0)
            + 4.0 * lam * _inc_beta_clipped(k, 2.0, s + 1.0)
            - 2.0 * _inc_beta_clipped(k, 3.0, s + 1.0))


def c4_printed_simpson(p: float) -> float:
    """Quoted Simpson-point specialization of ``c4`` (alpha=1, lam=1/3)
    that omits the 1/(p+1) factor on its hypergeometric term; retained
    for auditing only."""
    _check(p=p)
    return ((2.0 / 3.0) ** (1.0 + 2.0 * p) * beta_fn(1.0 + p, 1.0 + p)
            + (1.0 / 3.0) ** (1.0 + p) * hyp2f1(-p, 1.0, p + 2.0, 1.0 / 3.0))


def _split_point(alpha, lam):
    c = (alpha + 1.0) * lam
    if c <= 0.0:
        return 0.0
    if c >= 1.0:
        return 1.0
    return c ** (1.0 / alpha)


def kernel_oracle(kernel_name: str, alpha: float | None = None,
                  lam: float | None = None, s: float | None = None,
                  p: float | None = None, tol: float = 1e-11) -> float:
    """Brute-force value of a kernel's defining integral.

    The integration interval is split at the kink abscissa whenever it
    falls inside (0, 1), so each adaptive pass certifies a smooth,
    sign-definite piece.
    """
    name = kernel_name.upper()
    if name.startswith("H"):
        if lam is None:
            raise DomainError("H-kernel oracles need lam")
        alpha = 1.0
    if name not in KERNEL_NAMES:
        raise DomainError(f"unknown kernel {kernel_name!r}")
    _check(alpha=alpha, lam=lam,
           s=s if name in ("C2", "C3", "H2", "H3") else None,
           p=p if name == "C4" else None)

    c = (alpha + 1.0) * lam
    if name in ("C1", "H1"):
        weight = lambda t: 1.0 + 0.0 * t
    elif name in ("C2", "H2"):
        if s is None:
            raise DomainError(f"{name} oracle needs s")
        weight = lambda t: t ** s
    elif name in ("C3", "H3"):
        if s is None:
            raise DomainError(f"{name} oracle needs s")
        weight = lambda t: (1.0 - t) ** s
    else:
        if p is None:
            raise DomainError("C4 oracle needs p")
        integrand = lambda t: t ** p * abs(c - t ** alpha) ** p
        return _split_integrate(integrand, alpha, lam, tol)

    integrand = lambda t: t * abs(c - t ** alpha) * weight(t)
    return _split_integrate(integrand, alpha, lam, tol)


def _split_integrate(integrand, alpha, lam, tol):
    k = _split_point(alpha, lam)
    if 0.0 < k < 1.0:
        left = integrate(integrand, 0.0, k, tol / 2.0)
        right = integrate(integrand, k, 1.0, tol / 2.0)
        return left.value + right.value
    return integrate(integrand, 0.0, 1.0, tol).value


@dataclass(frozen=True)
class KernelAudit:
    """One closed-form-vs-oracle showdown at a single parameter point."""

    kernel_name: str
    alpha: float | None
    lam: float
    s: float | None
    p: float | None
    closed_form: float
    oracle: float
    abs_diff: float
    flagged: bool

    @classmethod
    def build(cls, kernel_name, closed_form, oracle, tol=1e-9,
              alpha=None, lam=None, s=None, p=None):
        diff = abs(closed_form - oracle)
        return cls(kernel_name, alpha, lam, s, p, closed_form, oracle,
                   diff, diff > tol)
