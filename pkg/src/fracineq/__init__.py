"""Numerical verification laboratory for fractional midpoint/Simpson/
trapezoid-type inequalities under generalized convexity.

Every closed-form constant carries an independent brute-force quadrature
oracle, the two-sided functional identity is checked on a grid of smooth
functions, and the inequality bounds are swept over certified function
families.  See the harness module (or the ``fracineq`` CLI) for report
generation.
"""

__version__ = "0.1.0"

from .errors import (ConvergenceError, CrossCheckError, DomainError,
                     NonFiniteError)
from .quad import QuadResult, integrate, integrate_endpoint_power
from .specfun import beta_fn, gamma_fn, hyp2f1, inc_beta, log_gamma
from .fracint import rl_left, rl_right
from .kernels import (KernelAudit, c1, c2, c3, c4, h1, h2, h3, h3_printed,
                      c4_printed_simpson, kernel_oracle)
from .identity import (EvalParams, FunctionTriple, check_identity, i_f_lhs,
                       i_f_rhs, identity_holds)
from .corpus import FunctionFamily, builtin_families, is_s_convex_sampled
from .theorems import (ComparisonRecord, VerificationRecord, bound_holder,
                       bound_power_mean, check_inequality, classical_rhs,
                       reduction_check, target_lhs)

__all__ = [
    "ConvergenceError", "CrossCheckError", "DomainError", "NonFiniteError",
    "QuadResult", "integrate", "integrate_endpoint_power",
    "beta_fn", "gamma_fn", "hyp2f1", "inc_beta", "log_gamma",
    "rl_left", "rl_right",
    "KernelAudit", "c1", "c2", "c3", "c4", "h1", "h2", "h3",
    "h3_printed", "c4_printed_simpson", "kernel_oracle",
    "EvalParams", "FunctionTriple", "check_identity", "i_f_lhs", "i_f_rhs",
    "identity_holds",
    "FunctionFamily", "builtin_families", "is_s_convex_sampled",
    "ComparisonRecord", "VerificationRecord", "bound_holder",
    "bound_power_mean", "check_inequality", "classical_rhs",
    "reduction_check", "target_lhs",
    "__version__",
]
