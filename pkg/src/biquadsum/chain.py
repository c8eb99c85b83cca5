"""Vieta-jump chain over the constraint curve t²u² + 2tu − 1 = t² + 2u².

Every rational point (t, u) on this curve yields a pair of numbers whose
sum is a perfect square and whose sum of squares is a perfect fourth
power (see :mod:`biquadsum.solutions`).  Starting from the seed
(t, u) = (3/2, 1), alternating Vieta jumps in u and in t walk an infinite
chain of on-curve points.

A Vieta jump fixes one coordinate and replaces the other root of the
constraint, read as a quadratic in the free coordinate, via the
root-sum relation:

    t' = 2u/(1 - u²) - t        u' = 2t/(2 - t²) - u
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

from .exact import rational_sqrt

Provenance = Literal["seed", "u_jump", "t_jump"]
Branch = Literal["plus", "minus"]

SEED_T = Fraction(3, 2)
SEED_U = Fraction(1)


@dataclass(frozen=True)
class ChainNode:
    """One (t, u) state of the chain, with the jump that produced it."""

    index: int
    t: Fraction
    u: Fraction
    produced_by: Provenance


def constraint_residual(t: Fraction, u: Fraction) -> Fraction:
    """t²u² + 2tu − 1 − t² − 2u²; zero exactly when (t, u) is on-curve."""
    return t * t * u * u + 2 * t * u - 1 - t * t - 2 * u * u


def radical_t(t: Fraction, u: Fraction) -> Fraction:
    """Signed radical t(1 − u²) − u; squares to 2u⁴ − 1 on-curve."""
    return t * (1 - u * u) - u


def radical_u(t: Fraction, u: Fraction) -> Fraction:
    """Signed radical u(2 − t²) − t; squares to t⁴ − 2 on-curve."""
    return u * (2 - t * t) - t


def vieta_next_t(t: Fraction, u: Fraction) -> Fraction:
    """Other root in t of the constraint at fixed u: 2u/(1 − u²) − t."""
    if u * u == 1:
        raise ValueError("t-jump singular at u=±1")
    return 2 * u / (1 - u * u) - t


def vieta_next_u(t: Fraction, u: Fraction) -> Fraction:
    """Other root in u of the constraint at fixed t: 2t/(2 − t²) − u."""
    if t * t == 2:  # unreachable for rational t; guarded anyway
        raise ValueError("u-jump singular at t²=2")
    return 2 * t / (2 - t * t) - u


def solve_t_from_u(u: Fraction, branch: Branch) -> Fraction:
    """Closed-form t = (u ± √(2u⁴−1))/(1 − u²) for an on-curve u.

    At u = ±1 the denominator vanishes; the perturbation limit gives
    t = ±3/2 there, independent of branch.
    """
    if u == 1:
        return Fraction(3, 2)
    if u == -1:
        return Fraction(-3, 2)
    root = rational_sqrt(2 * u**4 - 1)
    if root is None:
        raise ValueError("off-curve u")
    if branch == "plus":
        return (u + root) / (1 - u * u)
    return (u - root) / (1 - u * u)


def solve_u_from_t(t: Fraction, branch: Branch) -> Fraction:
    """Closed-form u = (t ± √(t⁴−2))/(2 − t²) for an on-curve t."""
    radicand = t**4 - 2
    if radicand < 0:
        raise ValueError("off-curve t")
    root = rational_sqrt(radicand)
    if root is None:
        raise ValueError("off-curve t")
    if branch == "plus":
        return (t + root) / (2 - t * t)
    return (t - root) / (2 - t * t)


def seed() -> ChainNode:
    """The chain origin (t, u) = (3/2, 1)."""
    return ChainNode(0, SEED_T, SEED_U, "seed")


def generate_chain(depth: int) -> list[ChainNode]:
    """Nodes 0..depth of the chain, alternating u-jump then t-jump.

    The first jump is in u (the seed's t-jump is singular at u = 1); each
    node pairs the newest t with the newest u and lies on the curve
    exactly.
    """
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    nodes = [seed()]
    t, u = SEED_T, SEED_U
    for index in range(1, depth + 1):
        if index % 2 == 1:
            u = vieta_next_u(t, u)
            nodes.append(ChainNode(index, t, u, "u_jump"))
        else:
            t = vieta_next_t(t, u)
            nodes.append(ChainNode(index, t, u, "t_jump"))
    return nodes
