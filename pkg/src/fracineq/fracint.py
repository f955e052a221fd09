"""Left and right fractional-order integral operators.

The order-alpha left operator at base a applies the kernel
(x-t)**(alpha-1)/Gamma(alpha) on [a, x]; the right operator at base b
applies (t-x)**(alpha-1)/Gamma(alpha) on [x, b].  The kernel's endpoint
singularity for alpha < 1 is removed exactly by the power-weight
substitution in the quadrature layer, which also keeps alpha >= 1 on a
single uniform code path.
"""

from __future__ import annotations

import math

from .errors import DomainError
from .quad import QuadResult, integrate_endpoint_power
from .specfun import gamma_fn

__all__ = ["rl_left", "rl_right", "rl_left_quad", "rl_right_quad"]

_DEFAULT_TOL = 1e-11


def _check_order(alpha):
    if not (math.isfinite(alpha) and alpha >= 0.0):
        raise DomainError(f"fractional order must be >= 0, got {alpha}")


def rl_left_quad(f, a, alpha, x, tol=_DEFAULT_TOL) -> QuadResult:
    """Left operator with the quadrature error estimate attached."""
    _check_order(alpha)
    if not (math.isfinite(a) and math.isfinite(x)) or x < a:
        raise DomainError(f"need x >= a, got a={a}, x={x}")
    if alpha == 0.0:  # order zero is the identity
        return QuadResult(float(f(x)), 0.0, 0)
    if x == a:  # empty kernel support; limit is 0 for alpha > 0
        return QuadResult(0.0, 0.0, 0)
    res = integrate_endpoint_power(f, a, x, alpha - 1.0, "upper", tol)
    g = gamma_fn(alpha)
    return QuadResult(res.value / g, res.abs_error_estimate / g, res.subdivisions)


def rl_right_quad(f, b, alpha, x, tol=_DEFAULT_TOL) -> QuadResult:
    """Right operator with the quadrature error estimate attached."""
    _check_order(alpha)
    if not (math.isfinite(b) and math.isfinite(x)) or x > b:
        raise DomainError(f"need x <= b, got b={b}, x={x}")
    if alpha == 0.0:
        return QuadResult(float(f(x)), 0.0, 0)
    if x == b:
        return QuadResult(0.0, 0.0, 0)
    res = integrate_endpoint_power(f, x, b, alpha - 1.0, "lower", tol)
    g = gamma_fn(alpha)
    return QuadResult(res.value / g, res.abs_error_estimate / g, res.subdivisions)


def rl_left(f, a, alpha, x, tol=_DEFAULT_TOL) -> float:
    """Order-alpha integral of f from base a, evaluated at x >= a."""
    return rl_left_quad(f, a, alpha, x, tol).value


def rl_right(f, b, alpha, x, tol=_DEFAULT_TOL) -> float:
    """Order-alpha integral of f from base b, evaluated at x <= b."""
    return rl_right_quad(f, b, alpha, x, tol).value
