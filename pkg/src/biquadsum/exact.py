"""Exact integer and rational arithmetic primitives.

Everything here is arbitrary precision and exact: Python ints carry the
integer quantities and ``fractions.Fraction`` carries the rationals
(canonical form -- positive denominator, lowest terms -- is enforced by
the Fraction constructor itself).  No floating point is used anywhere;
the chain values outgrow any machine float within a few steps.
"""

from __future__ import annotations

import math
from fractions import Fraction


def normalize(num: int, den: int) -> Fraction:
    """Canonical rational num/den: positive denominator, lowest terms."""
    if den == 0:
        raise ZeroDivisionError("division by zero")
    return Fraction(num, den)


def rational_arith(op: str, a: Fraction, b: Fraction) -> Fraction:
    """Exact field operation; ``op`` is one of add/sub/mul/div."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if b == 0:
            raise ZeroDivisionError("division by zero")
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def isqrt(n: int) -> tuple[int, bool]:
    """Floor square root of n with an exactness flag.

    Returns (root, exact) with root = floor(sqrt(n)) and exact true iff
    root**2 == n.  Delegates to math.isqrt, which is integer-only.
    """
    if n < 0:
        raise ValueError("negative radicand")
    root = math.isqrt(n)
    return root, root * root == n


def fourth_root(n: int) -> tuple[int, bool]:
    """Floor fourth root of n with an exactness flag."""
    if n < 0:
        raise ValueError("negative radicand")
    root = math.isqrt(math.isqrt(n))
    # floor(sqrt(floor(sqrt(n)))) can overshoot by at most the final
    # increment; re-multiply to pin the floor exactly.
    while (root + 1) ** 4 <= n:
        root += 1
    while root**4 > n:
        root -= 1
    return root, root**4 == n


def rational_sqrt(q: Fraction) -> Fraction | None:
    """Exact nonnegative square root of a canonical rational, if it exists.

    Because q is in lowest terms, q is a rational square iff numerator and
    denominator are each perfect squares.  Returns None otherwise.
    """
    if q < 0:
        raise ValueError("negative radicand")
    num_root, num_exact = isqrt(q.numerator)
    if not num_exact:
        return None
    den_root, den_exact = isqrt(q.denominator)
    if not den_exact:
        return None
    return Fraction(num_root, den_root)


def parse_integer(text: str) -> int:
    """Parse a decimal integer string (no scientific notation)."""
    try:
        return int(text.strip(), 10)
    except ValueError:
        raise ValueError(f"not a decimal integer: {text!r}") from None


def parse_rational(text: str) -> Fraction:
    """Parse 'num/den' or plain decimal-integer form into a Fraction."""
    text = text.strip()
    if "/" in text:
        num_s, _, den_s = text.partition("/")
        return normalize(parse_integer(num_s), parse_integer(den_s))
    return Fraction(parse_integer(text))


def format_rational(q: Fraction) -> str:
    """Exact 'num/den' string, or plain integer when den == 1."""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"
