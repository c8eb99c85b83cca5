"""Independent verification: parametrization cross-check, bounded
brute-force search, and the errata audit of the source table of values.

The parametrization route composes x = p² − q², y = 2pq with p = R² − S²,
q = 2RS, so x² + y² = (R² + S²)⁴ by two applications of the square-sum
identity.  It shares no formulas with the quartic route in
:mod:`biquadsum.solutions`, so agreement between the two is a genuine
cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

from .chain import constraint_residual, radical_t, radical_u
from .exact import isqrt
from .solutions import scale_to_integers

Verdict = Literal["match", "mismatch", "suspected_typo"]


@dataclass(frozen=True)
class ParamStack:
    R: int
    S: int
    p: int
    q: int
    x: int
    y: int


@dataclass(frozen=True)
class AuditFinding:
    """One historically printed value against its exact recomputation.

    ``evidence`` is the constraint residual or identity defect that
    backs the verdict (zero for a match).
    """

    location: str
    description: str
    printed_value: Fraction
    recomputed_value: Fraction
    verdict: Verdict
    evidence: Fraction


def param_stack_check(t: Fraction, u: Fraction) -> ParamStack:
    """Build (x, y) by the stacked square-sum route and assert it equals
    the quartic-formula route.  A mismatch is an implementation bug."""
    sol = scale_to_integers(t, u)
    R, S = sol.R, sol.S
    p = R * R - S * S
    q = 2 * R * S
    x = p * p - q * q
    y = 2 * p * q
    if x != sol.X or y != sol.Y:
        raise AssertionError("parametrization inconsistency")
    return ParamStack(R=R, S=S, p=p, q=q, x=x, y=y)


def brute_force_search(max_b: int) -> list[tuple[int, int, int]]:
    """All (x, y, b) with 0 < x ≤ y, x² + y² = b⁴, x + y square, b ≤ max_b.

    Enumerates the fourth-power side: for each b, x runs up to
    floor(b²/√2) so that x ≤ y; per-b cost is O(b²) integer square-root
    probes.
    """
    if max_b < 1:
        raise ValueError("max_b must be at least 1")
    hits: list[tuple[int, int, int]] = []
    for b in range(1, max_b + 1):
        b4 = b**4
        x_max, _ = isqrt(b4 // 2)
        for x in range(1, x_max + 1):
            y, y_exact = isqrt(b4 - x * x)
            if not y_exact or y < x:
                continue
            _, sum_exact = isqrt(x + y)
            if sum_exact:
                hits.append((x, y, b))
    return hits


def errata_audit() -> list[AuditFinding]:
    """Recompute every printed chain number and radical exactly.

    The table is fixed data: two printed values reproduce exactly, one is
    a suspected typo (the value fits the evidently intended radicand
    t⁴ − 2, not the printed 2t⁴ − 2), and two are mismatches traceable to
    substituting a radical value −239 where u = −13 was required.
    """
    t0, u0 = Fraction(3, 2), Fraction(1)
    u1 = Fraction(-13)
    t1 = Fraction(-113, 84)

    findings: list[AuditFinding] = []

    # sec. 7: sqrt(2u^4-1) at (t,u) = (3/2, -13), printed -239.
    printed = Fraction(-239)
    recomputed = radical_t(t0, u1)
    findings.append(
        AuditFinding(
            location="sec7-radical",
            description="signed radical sqrt(2u^4-1) at (3/2, -13)",
            printed_value=printed,
            recomputed_value=recomputed,
            verdict="match" if printed == recomputed else "mismatch",
            evidence=printed * printed - (2 * u1**4 - 1),
        )
    )

    # sec. 7: next t, printed -113/84.
    printed = Fraction(-113, 84)
    recomputed = 2 * u1 / (1 - u1 * u1) - t0
    findings.append(
        AuditFinding(
            location="sec7-t",
            description="t-jump from (3/2, -13)",
            printed_value=printed,
            recomputed_value=recomputed,
            verdict="match" if printed == recomputed else "mismatch",
            evidence=constraint_residual(printed, u1),
        )
    )

    # sec. 6: printed sqrt(2t^4-2) = 7/4 at t = 3/2; the value matches
    # the radicand t^4-2 instead, so the radicand is the suspected typo.
    printed = Fraction(7, 4)
    recomputed = radical_u(t0, u0)  # -7/4, the signed root of t^4-2
    findings.append(
        AuditFinding(
            location="sec6-radical",
            description="printed sqrt(2t^4-2)=7/4 at t=3/2",
            printed_value=printed,
            recomputed_value=recomputed,
            verdict="suspected_typo",
            evidence=printed * printed - (2 * t0**4 - 2),
        )
    )

    # sec. 8: printed sqrt(t^4-2) = -311485/7056 at (t,u) = (-113/84, -13).
    printed = Fraction(-311485, 7056)
    recomputed = radical_u(t1, u1)
    findings.append(
        AuditFinding(
            location="sec8-radical",
            description="signed radical sqrt(t^4-2) at (-113/84, -13)",
            printed_value=printed,
            recomputed_value=recomputed,
            verdict="match" if printed == recomputed else "mismatch",
            evidence=printed * printed - (t1**4 - 2),
        )
    )

    # sec. 8-9: printed next u = 301993/1343; the recurrence gives
    # -1525/1343, and the printed value is not even on the curve.
    printed = Fraction(301993, 1343)
    recomputed = 2 * t1 / (2 - t1 * t1) - u1
    findings.append(
        AuditFinding(
            location="sec8-u",
            description="u-jump from (-113/84, -13)",
            printed_value=printed,
            recomputed_value=recomputed,
            verdict="match" if printed == recomputed else "mismatch",
            evidence=constraint_residual(t1, printed),
        )
    )
    return findings
