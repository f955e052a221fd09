"""Bound evaluators, inequality checks, and reduction comparisons.

Right-hand sides come in three flavors: the two general bounds (power-mean
route for q >= 1, Hoelder route for q > 1), their midpoint corollary
transcriptions, and the classical reference bounds used for comparisons.
Left-hand sides are always computed twice — from the unified functional
and from the displayed combination of point values and integral terms —
and a record is only emitted when the two routes agree.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import kernels
from .corpus import FunctionFamily
from .errors import CrossCheckError, DomainError
from .identity import EvalParams, FunctionTriple, functional_parts
from .quad import integrate
from .specfun import beta_fn, hyp2f1, inc_beta

__all__ = [
    "VerificationRecord", "ComparisonRecord",
    "bound_power_mean", "bound_holder", "corollary_rhs",
    "target_lhs", "target_lhs_err", "classical_rhs", "check_inequality", "reduction_check",
    "hadamard_record", "simpson_bound_printed_weights",
    "BOUND_IDS", "LHS_FORMS", "CLASSICAL_IDS", "REDUCTION_IDS",
]

_DEFAULT_QUAD_TOL = 1e-11
_DEFAULT_MARGIN_TOL = 1e-8
_ROUTE_AGREEMENT = 1e-9
_TIE_TOL = 1e-12

LHS_FORMS = (
    "general",
    "midpoint_frac", "simpson_frac", "trapezoid_frac",
    "midpoint_classical", "simpson_classical", "trapezoid_classical",
    "park_H",
)

# bound id -> (route, lhs form, pinned lam or None, pinned alpha or None)
BOUND_IDS = {
    "power_mean_general": ("power_mean", "general", None, None),
    "power_mean_midpoint_frac": ("power_mean", "midpoint_frac", 0.0, None),
    "power_mean_simpson_frac": ("power_mean", "simpson_frac", 1.0 / 3.0, None),
    "power_mean_trapezoid_frac": ("power_mean", "trapezoid_frac", 1.0, None),
    "power_mean_midpoint_classical": ("power_mean", "midpoint_classical", 0.0, 1.0),
    "power_mean_simpson_classical": ("power_mean", "simpson_classical", 1.0 / 3.0, 1.0),
    "power_mean_trapezoid_classical": ("power_mean", "trapezoid_classical", 1.0, 1.0),
    "holder_general": ("holder", "general", None, None),
    "holder_midpoint_frac": ("holder", "midpoint_frac", 0.0, None),
    "holder_simpson_frac": ("holder", "simpson_frac", 1.0 / 3.0, None),
    "holder_trapezoid_frac": ("holder", "trapezoid_frac", 1.0, None),
    "holder_midpoint_classical": ("holder", "midpoint_classical", 0.0, 1.0),
    "holder_simpson_classical": ("holder", "simpson_classical", 1.0 / 3.0, 1.0),
    "holder_trapezoid_classical": ("holder", "trapezoid_classical", 1.0, 1.0),
}

CLASSICAL_IDS = (
    "simpson_prior",           # Simpson functional via convex |f''|**q (59/133 weights)
    "weighted_classical",      # lam-weighted classical bound, oracle-consistent H3
    "weighted_classical_printed",  # same with the quoted H3 first branch
    "park_weighted",           # Hoelder-type classical bound parameterized by r
    "hadamard_upper",
    "simpson_fourth_deriv",
)

REDUCTION_IDS = ("classical_weighted_match", "holder_park_match",
                 "simpson_comparison")


@dataclass(frozen=True)
class VerificationRecord:
    """Outcome of one inequality instance."""

    which: str
    params: EvalParams
    function_label: str
    lhs: float
    rhs: float
    margin: float
    status: str               # holds | violated | indeterminate
    tolerance: float

    @classmethod
    def build(cls, which, params, label, lhs, rhs, lhs_err, tolerance):
        margin = rhs - lhs
        if margin >= -tolerance:
            status = "holds"
        elif 2.0 * lhs_err <= -margin:
            # only call it a violation when quadrature noise cannot
            # plausibly account for the negative margin
            status = "violated"
        else:
            status = "indeterminate"
        return cls(which, params, label, lhs, rhs, margin, status, tolerance)


@dataclass(frozen=True)
class ComparisonRecord:
    """Two bounds evaluated on the same configuration."""

    bound_a: str
    bound_b: str
    params: EvalParams
    function_label: str
    value_a: float
    value_b: float
    tighter: str              # a | b | tie

    @classmethod
    def build(cls, bound_a, bound_b, params, label, value_a, value_b):
        if abs(value_a - value_b) <= _TIE_TOL:
            tighter = "tie"
        else:
            tighter = "a" if value_a < value_b else "b"
        return cls(bound_a, bound_b, params, label, value_a, value_b, tighter)


def _d2_triplet(fn: FunctionTriple, params: EvalParams, q: float):
    dm = abs(float(fn.d2(params.x))) ** q
    da = abs(float(fn.d2(params.a))) ** q
    db = abs(float(fn.d2(params.b))) ** q
    return dm, da, db


def bound_power_mean(fn: FunctionTriple, params: EvalParams) -> float:
    """General power-mean-route bound on |functional| for q >= 1."""
    a, b, x, lam, al = params.a, params.b, params.x, params.lam, params.alpha
    s, q = params.s, params.q
    k1 = kernels.c1(al, lam)
    k2 = kernels.c2(al, lam, s)
    k3 = kernels.c3(al, lam, s)
    dm, da, db = _d2_triplet(fn, params, q)
    pref_a = (x - a) ** (al + 2.0) / ((al + 1.0) * (b - a))
    pref_b = (b - x) ** (al + 2.0) / ((al + 1.0) * (b - a))
    inner_a = (dm * k2 + da * k3) ** (1.0 / q)
    inner_b = (dm * k2 + db * k3) ** (1.0 / q)
    return k1 ** (1.0 - 1.0 / q) * (pref_a * inner_a + pref_b * inner_b)


def bound_holder(fn: FunctionTriple, params: EvalParams) -> float:
    """General Hoelder-route bound on |functional| for q > 1."""
    if params.q <= 1.0:
        raise DomainError("the Hoelder-route bound needs q > 1")
    a, b, x, lam, al = params.a, params.b, params.x, params.lam, params.alpha
    s, q = params.s, params.q
    p = params.p
    k4 = kernels.c4(al, lam, p)
    dm, da, db = _d2_triplet(fn, params, q)
    pref_a = (x - a) ** (al + 2.0) / ((al + 1.0) * (b - a))
    pref_b = (b - x) ** (al + 2.0) / ((al + 1.0) * (b - a))
    inner_a = ((dm + da) / (s + 1.0)) ** (1.0 / q)
    inner_b = ((dm + db) / (s + 1.0)) ** (1.0 / q)
    return k4 ** (1.0 / p) * (pref_a * inner_a + pref_b * inner_b)


def _display_scale(params: EvalParams) -> float:
    """Factor 2**(alpha-1)/(b-a)**(alpha-1) applied to midpoint displays."""
    return (2.0 / (params.b - params.a)) ** (params.alpha - 1.0)


def corollary_rhs(fn: FunctionTriple, params: EvalParams, bound_id: str) -> float:
    """Independently transcribed closed form of a midpoint corollary bound.

    These are the display-scaled right-hand sides; each must agree with
    _display_scale(params) times the matching general bound (that algebra
    check is part of the test suite).
    """
    route, form, lam0, alpha0 = _lookup_bound(bound_id)
    if form == "general":
        return (bound_power_mean if route == "power_mean" else bound_holder)(fn, params)
    a, b, al = params.a, params.b, params.alpha
    s, q = params.s, params.q
    w = b - a
    dm, da, db = _d2_triplet(fn, params, q)

    if route == "power_mean":
        if form == "midpoint_frac":
            base = w ** 2 / (8.0 * (al + 1.0)) * (1.0 / (al + 2.0)) ** (1.0 - 1.0 / q)
            wa = beta_fn(al + 2.0, s + 1.0)
            inner = lambda de: (dm / (al + s + 2.0) + de * wa) ** (1.0 / q)
        elif form == "simpson_frac":
            base = w ** 2 / (8.0 * (al + 1.0)) \
                * kernels.c1(al, 1.0 / 3.0) ** (1.0 - 1.0 / q)
            k2 = kernels.c2(al, 1.0 / 3.0, s)
            k3 = kernels.c3(al, 1.0 / 3.0, s)
            inner = lambda de: (dm * k2 + de * k3) ** (1.0 / q)
        elif form == "trapezoid_frac":
            base = w ** 2 / (8.0 * (al + 1.0)) \
                * (al * (al + 3.0) / (2.0 * (al + 2.0))) ** (1.0 - 1.0 / q)
            mid_w = al * (al + s + 3.0) / ((s + 2.0) * (al + s + 2.0))
            end_w = (al + 1.0) * beta_fn(2.0, s + 1.0) - beta_fn(al + 2.0, s + 1.0)
            inner = lambda de: (dm * mid_w + de * end_w) ** (1.0 / q)
        elif form == "midpoint_classical":
            base = w ** 2 / 16.0 * (1.0 / 3.0) ** (1.0 - 1.0 / q)
            wa = beta_fn(3.0, s + 1.0)
            inner = lambda de: (dm / (s + 3.0) + de * wa) ** (1.0 / q)
        elif form == "simpson_classical":
            base = w ** 2 / 162.0 * (81.0 / 8.0) ** (1.0 / q)
            k2 = kernels.c2(1.0, 1.0 / 3.0, s)
            k3 = kernels.c3(1.0, 1.0 / 3.0, s)
            inner = lambda de: (dm * k2 + de * k3) ** (1.0 / q)
        else:  # trapezoid_classical
            base = w ** 2 / 16.0 * (2.0 / 3.0) ** (1.0 - 1.0 / q)
            mid_w = (s + 4.0) / ((s + 2.0) * (s + 3.0))
            end_w = 2.0 * beta_fn(2.0, s + 1.0) - beta_fn(3.0, s + 1.0)
            inner = lambda de: (dm * mid_w + de * end_w) ** (1.0 / q)
        return base * (inner(da) + inner(db))

    # Hoelder route
    if params.q <= 1.0:
        raise DomainError("the Hoelder-route corollaries need q > 1")
    p = params.p
    inner = lambda de: ((dm + de) / (s + 1.0)) ** (1.0 / q)
    pair = inner(da) + inner(db)
    if form == "midpoint_frac":
        return w ** 2 / (8.0 * (al + 1.0)) \
            * (1.0 / (p * (al + 1.0) + 1.0)) ** (1.0 / p) * pair
    if form == "simpson_frac":
        return w ** 2 / (8.0 * (al + 1.0)) * kernels.c4(al, 1.0 / 3.0, p) ** (1.0 / p) * pair
    if form == "trapezoid_frac":
        k4 = ((1.0 + al) ** ((p * (al + 1.0) + 1.0) / al) / al
              * inc_beta(1.0 / (1.0 + al), (1.0 + p) / al, 1.0 + p))
        return w ** 2 / (8.0 * (al + 1.0)) * k4 ** (1.0 / p) * pair
    if form == "midpoint_classical":
        return w ** 2 / 16.0 * (1.0 / (2.0 * p + 1.0)) ** (1.0 / p) * pair
    if form == "simpson_classical":
        return w ** 2 / 16.0 * kernels.c4(1.0, 1.0 / 3.0, p) ** (1.0 / p) * pair
    # trapezoid_classical
    return w ** 2 / 4.0 * (2.0 * inc_beta(0.5, 1.0 + p, 1.0 + p)) ** (1.0 / p) * pair


def _lookup_bound(bound_id):
    try:
        return BOUND_IDS[bound_id]
    except KeyError:
        raise DomainError(f"unknown bound id {bound_id!r}") from None


def _check_form_params(form, params):
    mid = params.midpoint
    if form == "general":
        return
    pins = {
        "midpoint_frac": (0.0, None), "simpson_frac": (1.0 / 3.0, None),
        "trapezoid_frac": (1.0, None),
        "midpoint_classical": (0.0, 1.0), "simpson_classical": (1.0 / 3.0, 1.0),
        "trapezoid_classical": (1.0, 1.0),
        "park_H": (None, 1.0),
    }
    lam0, alpha0 = pins[form]
    if abs(params.x - mid) > 1e-12 * (params.b - params.a):
        raise DomainError(f"form {form!r} needs x at the midpoint")
    if lam0 is not None and abs(params.lam - lam0) > 1e-12:
        raise DomainError(f"form {form!r} pins lam={lam0}, got {params.lam}")
    if alpha0 is not None and abs(params.alpha - alpha0) > 1e-12:
        raise DomainError(f"form {form!r} pins alpha={alpha0}, got {params.alpha}")
    if form == "park_H" and params.lam >= 0.5:
        raise DomainError("park form needs lam < 1/2 (r = 2/(1-2*lam) >= 2)")


def target_lhs_err(fn: FunctionTriple, params: EvalParams, form: str,
                    tol: float = _DEFAULT_QUAD_TOL):
    """(displayed LHS, quadrature error bound), dual-route checked."""
    if form not in LHS_FORMS:
        raise DomainError(f"unknown lhs form {form!r}")
    _check_form_params(form, params)

    parts = functional_parts(fn, params, tol)
    if form == "general":
        return abs(parts.value), parts.quad_err

    scale = _display_scale(params)
    route_functional = scale * abs(parts.value)
    a, b, lam = params.a, params.b, params.lam
    m = params.midpoint
    fa, fm, fb = float(fn.f(a)), float(fn.f(m)), float(fn.f(b))
    bracket = scale * parts.j_scale * (parts.j_minus + parts.j_plus)

    if form.startswith("midpoint"):
        displayed = abs(fm - bracket)
    elif form.startswith("simpson"):
        displayed = abs((fa + 4.0 * fm + fb) / 6.0 - bracket)
    elif form.startswith("trapezoid"):
        displayed = abs(0.5 * (fa + fb) - bracket)
    else:  # park_H
        displayed = abs((1.0 - lam) * fm + lam * 0.5 * (fa + fb) - bracket)

    err = scale * parts.quad_err
    if abs(displayed - route_functional) > _ROUTE_AGREEMENT * max(1.0, displayed):
        raise CrossCheckError(
            f"display route {displayed!r} disagrees with functional route "
            f"{route_functional!r} for form {form!r}"
        )
    return displayed, err


def target_lhs(fn: FunctionTriple, params: EvalParams, form: str,
               tol: float = _DEFAULT_QUAD_TOL) -> float:
    """Absolute value of the displayed left-hand quantity for ``form``."""
    return target_lhs_err(fn, params, form, tol)[0]


def simpson_bound_printed_weights(fn: FunctionTriple, params: EvalParams) -> float:
    """Classical Simpson bound assembled with the QUOTED s = 1 weights
    (59/972 and 27/972); kept so the tightness claim can be evaluated
    under both the quoted and the oracle-corrected constant."""
    q = params.q
    w = params.b - params.a
    dm, da, db = _d2_triplet(fn, params, q)
    inner = lambda de: (59.0 / 972.0 * dm
                        + kernels.PRINTED_SIMPSON_ENDPOINT_WEIGHT * de) ** (1.0 / q)
    return w ** 2 / 16.0 * (8.0 / 81.0) ** (1.0 - 1.0 / q) * (inner(da) + inner(db))


def classical_rhs(family: FunctionFamily, params: EvalParams, which: str,
                  quad_tol: float = _DEFAULT_QUAD_TOL) -> float:
    """Right-hand side of one of the classical reference bounds."""
    fn = family.triple
    a, b, lam = params.a, params.b, params.lam
    s, q = params.s, params.q
    w = b - a
    dm, da, db = _d2_triplet(fn, params, q)

    if which == "simpson_prior":
        inner = lambda d_first, d_second: \
            ((59.0 * d_first + 133.0 * d_second) / 192.0) ** (1.0 / q)
        return w ** 2 / 162.0 * (inner(da, db) + inner(db, da))

    if which in ("weighted_classical", "weighted_classical_printed"):
        h3 = kernels.h3_printed if which.endswith("printed") else kernels.h3
        k1 = kernels.h1(lam)
        k2 = kernels.h2(lam, s)
        k3 = h3(lam, s)
        inner = lambda de: (dm * k2 + de * k3) ** (1.0 / q)
        return w ** 2 / 16.0 * k1 ** (1.0 - 1.0 / q) * (inner(da) + inner(db))

    if which == "park_weighted":
        if params.q <= 1.0:
            raise DomainError("the park-type bound needs q > 1")
        if lam >= 0.5:
            raise DomainError("the park-type bound needs lam < 1/2")
        p = params.p
        r = 2.0 / (1.0 - 2.0 * lam)
        bracket = (((r - 2.0) / r) ** (2.0 * p + 1.0) * beta_fn(1.0 + p, 1.0 + p)
                   + 2.0 ** (p + 1.0) / (r ** (p + 1.0) * (p + 1.0))
                   * hyp2f1(-p, 1.0, p + 2.0, 2.0 / r))
        inner = lambda de: ((dm + de) / (s + 1.0)) ** (1.0 / q)
        return w ** 2 / 16.0 * bracket ** (1.0 / p) * (inner(da) + inner(db))

    if which == "hadamard_upper":
        return 0.5 * (float(fn.f(a)) + float(fn.f(b)))

    if which == "simpson_fourth_deriv":
        if family.d4_sup is None:
            raise DomainError(
                f"family {family.label!r} carries no fourth-derivative bound"
            )
        return family.d4_sup(a, b) * w ** 2 / 2880.0

    raise DomainError(f"unknown classical bound {which!r}")


def check_inequality(family: FunctionFamily, params: EvalParams, bound_id: str,
                     margin_tol: float = _DEFAULT_MARGIN_TOL,
                     quad_tol: float = _DEFAULT_QUAD_TOL) -> VerificationRecord:
    """Evaluate one bound instance on a certified family."""
    route, form, _, _ = _lookup_bound(bound_id)
    if not family.is_certified(params.s, params.q):
        raise DomainError(
            f"family {family.label!r} is not certified for "
            f"(s={params.s}, q={params.q})"
        )
    fn = family.triple
    lhs, lhs_err = target_lhs_err(fn, params, form, quad_tol)
    if form == "general":
        rhs = (bound_power_mean if route == "power_mean" else bound_holder)(fn, params)
    else:
        rhs = corollary_rhs(fn, params, bound_id)
    return VerificationRecord.build(bound_id, params, family.label, lhs, rhs,
                                    lhs_err, margin_tol)


def hadamard_record(family: FunctionFamily, interval=None,
                    tol: float = 1e-10,
                    quad_tol: float = _DEFAULT_QUAD_TOL):
    """Both halves of the classical double inequality for a convex family.

    Returns two VerificationRecords: midpoint value <= average integral,
    and average integral <= endpoint average.
    """
    a, b = interval if interval is not None else family.domain
    fn = family.triple
    params = EvalParams(a=a, b=b, x=0.5 * (a + b), lam=0.0, alpha=1.0)
    res = integrate(fn.f, a, b, quad_tol)
    avg = res.value / (b - a)
    avg_err = res.abs_error_estimate / (b - a)
    fm = float(fn.f(params.x))
    upper = 0.5 * (float(fn.f(a)) + float(fn.f(b)))
    lower_rec = VerificationRecord.build(
        "hadamard_lower", params, family.label, fm, avg, avg_err, tol)
    upper_rec = VerificationRecord.build(
        "hadamard_upper", params, family.label, avg, upper, avg_err, tol)
    return lower_rec, upper_rec


def reduction_check(which: str, families=None, interval=(0.0, 1.0),
                    grid=None, quad_tol: float = _DEFAULT_QUAD_TOL):
    """Comparison records for one of the documented specializations."""
    a, b = interval
    records = []

    if which == "holder_park_match":
        rs = grid if grid is not None else (2.5, 3.0, 4.0, 8.0)
        ps = (1.5, 2.0, 3.0)
        for r in rs:
            lam = 0.5 - 1.0 / r
            for p in ps:
                va = kernels.c4(1.0, lam, p)
                vb = (((r - 2.0) / r) ** (2.0 * p + 1.0) * beta_fn(1.0 + p, 1.0 + p)
                      + 2.0 ** (p + 1.0) / (r ** (p + 1.0) * (p + 1.0))
                      * hyp2f1(-p, 1.0, p + 2.0, 2.0 / r))
                q = p / (p - 1.0)
                params = EvalParams(a=a, b=b, x=0.5 * (a + b), lam=lam,
                                    alpha=1.0, s=1.0, q=q)
                records.append(ComparisonRecord.build(
                    "holder_kernel", "park_kernel", params, f"r={r:g}", va, vb))
        return records

    if families is None:
        raise DomainError(f"reduction {which!r} needs function families")

    if which == "classical_weighted_match":
        pts = grid if grid is not None else [
            (lam, s, q)
            for lam in (0.1, 0.3, 0.5, 0.7, 0.9)
            for s in (0.5, 1.0)
            for q in (1.0, 2.0)
        ]
        for fam in families:
            for lam, s, q in pts:
                if not fam.is_certified(s, q):
                    continue
                params = EvalParams(a=a, b=b, x=0.5 * (a + b), lam=lam,
                                    alpha=1.0, s=s, q=q)
                va = bound_power_mean(fam.triple, params)
                vb = classical_rhs(fam, params, "weighted_classical")
                records.append(ComparisonRecord.build(
                    "midpoint_power_mean", "weighted_classical", params,
                    fam.label, va, vb))
        return records

    if which == "simpson_comparison":
        qs = grid if grid is not None else (1.0, 1.5, 2.0, 3.0)
        for fam in families:
            for q in qs:
                if not fam.is_certified(1.0, q):
                    continue
                params = EvalParams(a=a, b=b, x=0.5 * (a + b), lam=1.0 / 3.0,
                                    alpha=1.0, s=1.0, q=q)
                corrected = corollary_rhs(fam.triple, params,
                                          "power_mean_simpson_classical")
                printed = simpson_bound_printed_weights(fam.triple, params)
                prior = classical_rhs(fam, params, "simpson_prior")
                records.append(ComparisonRecord.build(
                    "simpson_power_mean", "simpson_prior", params,
                    fam.label, corrected, prior))
                records.append(ComparisonRecord.build(
                    "simpson_power_mean_printed", "simpson_prior", params,
                    fam.label, printed, prior))
        return records

    raise DomainError(f"unknown reduction {which!r}")
