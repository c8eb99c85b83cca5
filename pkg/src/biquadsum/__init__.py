"""Exact-arithmetic toolkit for pairs of integers whose sum is a perfect
square and whose sum of squares is a perfect fourth power (a biquadrate).

The solutions come from rational points on the curve
t²u² + 2tu − 1 = t² + 2u², walked by alternating Vieta jumps from the
seed (3/2, 1); each point is cleared to integers and certified exactly.
"""

from .chain import (
    ChainNode,
    constraint_residual,
    generate_chain,
    radical_t,
    radical_u,
    seed,
    solve_t_from_u,
    solve_u_from_t,
    vieta_next_t,
    vieta_next_u,
)
from .exact import (
    format_rational,
    fourth_root,
    isqrt,
    normalize,
    parse_rational,
    rational_arith,
    rational_sqrt,
)
from .oracle import (
    AuditFinding,
    ParamStack,
    brute_force_search,
    errata_audit,
    param_stack_check,
)
from .solutions import (
    CertificateBundle,
    IntegerSolution,
    RationalSolution,
    certificate,
    enumerate_solutions,
    scale_to_integers,
    xy_from_pair,
)

__all__ = [
    "ChainNode",
    "constraint_residual",
    "generate_chain",
    "radical_t",
    "radical_u",
    "seed",
    "solve_t_from_u",
    "solve_u_from_t",
    "vieta_next_t",
    "vieta_next_u",
    "format_rational",
    "fourth_root",
    "isqrt",
    "normalize",
    "parse_rational",
    "rational_arith",
    "rational_sqrt",
    "AuditFinding",
    "ParamStack",
    "brute_force_search",
    "errata_audit",
    "param_stack_check",
    "CertificateBundle",
    "IntegerSolution",
    "RationalSolution",
    "certificate",
    "enumerate_solutions",
    "scale_to_integers",
    "xy_from_pair",
]

__version__ = "0.1.0"
