"""The unified two-term functional and its second-derivative identity.

``i_f_lhs`` evaluates the four-term combination of point values, a first
derivative, and two fractional-order integral terms; ``i_f_rhs``
evaluates the equivalent pair of weighted second-derivative integrals.
``check_identity`` measures their disagreement, which should sit at
quadrature level for any twice-differentiable function — no convexity of
any kind is required here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import DomainError
from .fracint import rl_left_quad, rl_right_quad
from .quad import integrate
from .specfun import gamma_fn

__all__ = ["EvalParams", "FunctionTriple", "FunctionalParts",
           "functional_parts", "i_f_lhs", "i_f_rhs", "check_identity",
           "identity_holds"]

_DEFAULT_QUAD_TOL = 1e-11


@dataclass(frozen=True)
class EvalParams:
    """Full parameter tuple of one evaluation point.

    Invariants: 0 <= a < b, x in [a, b], lam in [0, 1], alpha > 0,
    s in (0, 1], q >= 1.  The conjugate exponent p = q/(q-1) is exposed
    as a property and is None at q = 1.
    """

    a: float
    b: float
    x: float
    lam: float
    alpha: float
    s: float = 1.0
    q: float = 1.0

    def __post_init__(self):
        vals = (self.a, self.b, self.x, self.lam, self.alpha, self.s, self.q)
        if not all(math.isfinite(v) for v in vals):
            raise DomainError(f"parameters must be finite, got {self}")
        if self.a < 0.0:
            raise DomainError(f"interval must sit inside [0, inf), got a={self.a}")
        if not self.a < self.b:
            raise DomainError(f"need a < b, got a={self.a}, b={self.b}")
        if not self.a <= self.x <= self.b:
            raise DomainError(f"x={self.x} outside [{self.a}, {self.b}]")
        if not 0.0 <= self.lam <= 1.0:
            raise DomainError(f"lam must lie in [0, 1], got {self.lam}")
        if not self.alpha > 0.0:
            raise DomainError(f"alpha must be > 0, got {self.alpha}")
        if not 0.0 < self.s <= 1.0:
            raise DomainError(f"s must lie in (0, 1], got {self.s}")
        if not self.q >= 1.0:
            raise DomainError(f"q must be >= 1, got {self.q}")

    @property
    def p(self) -> float | None:
        """Conjugate exponent of q, or None when q = 1."""
        if self.q == 1.0:
            return None
        return self.q / (self.q - 1.0)

    @property
    def midpoint(self) -> float:
        return 0.5 * (self.a + self.b)


@dataclass(frozen=True)
class FunctionTriple:
    """A scalar function bundled with its first two derivatives."""

    f: Callable
    d1: Callable
    d2: Callable
    domain: tuple[float, float]
    label: str

    def derivative_mismatch(self, n: int = 20, step_scale: float = 1e-5):
        """Worst central-difference disagreement of (f, d1) and (d1, d2).

        Sampled at ``n`` interior points with step step_scale*(hi-lo);
        each disagreement is scaled by max(1, |exact|).
        """
        lo, hi = self.domain
        h = step_scale * (hi - lo)
        pts = np.linspace(lo + 2 * h, hi - 2 * h, n)
        worst = 0.0
        for exact_fn, base_fn in ((self.d1, self.f), (self.d2, self.d1)):
            for u in pts:
                fd = (float(base_fn(u + h)) - float(base_fn(u - h))) / (2 * h)
                exact = float(exact_fn(u))
                worst = max(worst, abs(fd - exact) / max(1.0, abs(exact)))
        return worst


@dataclass(frozen=True)
class FunctionalParts:
    """Functional value with enough detail to rebuild the display forms."""

    value: float
    quad_err: float
    j_minus: float       # kernel (t-a)**(alpha-1) integrated over [a, x]
    j_plus: float        # kernel (b-t)**(alpha-1) integrated over [x, b]
    j_scale: float       # Gamma(alpha+1)/(b-a)
    point_terms: float   # the three non-integral terms combined


def functional_parts(fn: FunctionTriple, params: EvalParams,
                     tol: float = _DEFAULT_QUAD_TOL) -> FunctionalParts:
    """Evaluate the functional exactly as displayed, tracking quad error.

    The two fractional terms are the right-type operator on [a, x]
    evaluated at a and the left-type operator on [x, b] evaluated at b;
    at x = a or x = b the corresponding term vanishes together with its
    (x-a)/(b-x) prefactors, so no 0*inf arises.
    """
    a, b, x, lam, al = params.a, params.b, params.x, params.lam, params.alpha
    w = b - a
    ax = x - a
    bx = b - x

    t1 = (1.0 - lam) * ((ax ** al + bx ** al) / w) * float(fn.f(x))
    t2 = lam * ((ax ** al * float(fn.f(a)) + bx ** al * float(fn.f(b))) / w)
    t3 = (1.0 / (al + 1.0) - lam) * ((bx ** (al + 1.0) - ax ** (al + 1.0)) / w) \
        * float(fn.d1(x))

    jm = rl_right_quad(fn.f, x, al, a, tol) if x > a else None
    jp = rl_left_quad(fn.f, x, al, b, tol) if x < b else None
    j_minus = jm.value if jm else 0.0
    j_plus = jp.value if jp else 0.0
    j_err = (jm.abs_error_estimate if jm else 0.0) \
        + (jp.abs_error_estimate if jp else 0.0)

    scale = gamma_fn(al + 1.0) / w
    value = t1 + t2 + t3 - scale * (j_minus + j_plus)
    return FunctionalParts(value, scale * j_err, j_minus, j_plus, scale,
                           t1 + t2 + t3)


def i_f_lhs(fn: FunctionTriple, params: EvalParams,
            tol: float = _DEFAULT_QUAD_TOL) -> float:
    """The displayed four-term functional."""
    return functional_parts(fn, params, tol).value


def i_f_rhs(fn: FunctionTriple, params: EvalParams,
            tol: float = _DEFAULT_QUAD_TOL) -> float:
    """The two weighted second-derivative integrals of the identity.

    Each integral is smooth in t (no absolute value) and is evaluated
    adaptively; a vanishing interval prefactor skips its integral, which
    reproduces the dedicated single-term forms at x = a and x = b.
    """
    a, b, x, lam, al = params.a, params.b, params.x, params.lam, params.alpha
    w = b - a
    c = (al + 1.0) * lam
    total = 0.0
    for endpoint, width in ((a, x - a), (b, b - x)):
        pref = width ** (al + 2.0) / ((al + 1.0) * w)
        if pref == 0.0:
            continue
        d2 = fn.d2
        integrand = lambda t, e=endpoint: t * (c - t ** al) * d2(t * x + (1.0 - t) * e)
        total += pref * integrate(integrand, 0.0, 1.0, tol).value
    return total


def check_identity(fn: FunctionTriple, params: EvalParams,
                   tol: float = _DEFAULT_QUAD_TOL) -> float:
    """Absolute residual between the two sides of the identity.

    ``tol`` is the quadrature tolerance used on both routes; callers
    compare the residual against their own acceptance threshold (scaled
    by max(1, |lhs|) for large-magnitude functions).
    """
    lhs = i_f_lhs(fn, params, tol)
    rhs = i_f_rhs(fn, params, tol)
    return abs(lhs - rhs)


def identity_holds(fn: FunctionTriple, params: EvalParams,
                   residual_tol: float = 1e-8,
                   quad_tol: float = _DEFAULT_QUAD_TOL) -> bool:
    """True when the residual passes at ``residual_tol`` (magnitude-scaled)."""
    lhs = i_f_lhs(fn, params, quad_tol)
    rhs = i_f_rhs(fn, params, quad_tol)
    return abs(lhs - rhs) <= residual_tol * max(1.0, abs(lhs))
