"""From on-curve pairs (t, u) to certified solutions of the problem.

An on-curve pair produces a rational pair (x, y) with

    x = t⁴u⁴ − 6t²u² + 1        y = 4tu(t²u² − 1)

satisfying x + y = (t² − 2u²)² and, unconditionally, x² + y² = (t²u² + 1)⁴.
Clearing denominators by S⁴ (where tu = R/S in lowest terms) yields an
integer solution with certificate roots a (of X + Y) and b (of X² + Y²).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .chain import constraint_residual, generate_chain, radical_t, radical_u
from .exact import fourth_root, isqrt


@dataclass(frozen=True)
class RationalSolution:
    x: Fraction
    y: Fraction


@dataclass(frozen=True)
class CertificateBundle:
    """Identity witnesses for a pair (t, u).

    A = t² + 2u² and B = 2tu satisfy A² − 2B² = sum_root² unconditionally;
    on-curve, sum_root² equals x + y and quartic_root⁴ equals x² + y².
    """

    A: Fraction
    B: Fraction
    sum_root: Fraction
    quartic_root: Fraction
    rad_t: Fraction
    rad_u: Fraction


@dataclass(frozen=True)
class IntegerSolution:
    """Denominator-cleared solution with verified certificate roots.

    X + Y = a² and X² + Y² = b⁴, both re-checked by exact multiplication
    before construction.  R/S is tu in canonical form (S > 0, coprime).
    """

    X: int
    Y: int
    R: int
    S: int
    a: int
    b: int


def xy_from_pair(t: Fraction, u: Fraction) -> RationalSolution:
    """Exact (x, y) for any rationals t, u (on-curve or not)."""
    tu_sq = (t * u) ** 2
    x = tu_sq * tu_sq - 6 * tu_sq + 1
    y = 4 * t * u * (tu_sq - 1)
    return RationalSolution(x, y)


def certificate(t: Fraction, u: Fraction) -> CertificateBundle:
    """Identity witnesses; A² − 2B² = sum_root² holds for all t, u."""
    return CertificateBundle(
        A=t * t + 2 * u * u,
        B=2 * t * u,
        sum_root=t * t - 2 * u * u,
        quartic_root=t * t * u * u + 1,
        rad_t=radical_t(t, u),
        rad_u=radical_u(t, u),
    )


def scale_to_integers(t: Fraction, u: Fraction) -> IntegerSolution:
    """Clear denominators of an on-curve pair into an integer solution.

    The quartic formulas in (r, s) are degree-4 homogeneous, so replacing
    r = tu = R/S, s = 1 by the integer pair (R, S) scales x and y by S⁴
    and preserves both certificate shapes.
    """
    r = t * u
    if r == 0:
        raise ValueError("degenerate parameter")
    if constraint_residual(t, u) != 0:
        raise ValueError("constraint violated")
    R, S = r.numerator, r.denominator
    X = R**4 - 6 * R * R * S * S + S**4
    Y = 4 * R * S * (R * R - S * S)
    b = R * R + S * S

    a_rational = abs(S * S * (t * t - 2 * u * u))
    if a_rational.denominator != 1:
        raise ValueError("constraint violated")
    a = a_rational.numerator

    if X + Y != a * a or X * X + Y * Y != b**4:
        raise ValueError("certificate verification failed")
    root, exact = isqrt(X + Y)
    assert exact and root == a
    root, exact = fourth_root(X * X + Y * Y)
    assert exact and root == b
    return IntegerSolution(X=X, Y=Y, R=R, S=S, a=a, b=b)


def enumerate_solutions(depth: int, positive_only: bool) -> list[IntegerSolution]:
    """Integer solutions from every chain node up to depth, deduplicated.

    Each chain node is an adjacent (t, u) combination (consecutive nodes
    share one coordinate).  Deduplication key is the unordered pair
    {X, Y}; degenerate tu = 0 pairs are skipped (none occur on this
    chain).
    """
    seen: set[frozenset[int]] = set()
    out: list[IntegerSolution] = []
    for node in generate_chain(depth):
        if node.t * node.u == 0:
            continue
        sol = scale_to_integers(node.t, node.u)
        key = frozenset((sol.X, sol.Y))
        if key in seen:
            continue
        seen.add(key)
        if positive_only and (sol.X <= 0 or sol.Y <= 0):
            continue
        out.append(sol)
    return out
