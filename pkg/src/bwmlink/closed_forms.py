"""Closed forms for powers of a single braid generator in the trace algebra.

Any power of a generator g is a combination a + b*g + c*e of the identity,
the generator and its cap-cup companion e, where the coefficients are
integer Laurent polynomials in r and s.  Iterating

    g^(m+1) = b_m + (a_m + b_m (s - s^-1)) g
              + (-b_m r^-1 (s - s^-1) + c_m r^-1) e

ascends from g^1 = g, and the inverse step derived from
g^-1 = g - (s - s^-1)(1 - e) descends below zero.  These rows drive the
closed-form invariant of the two-strand torus links, the independent oracle
for the skein engine.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .laurent import (DELTA, X_NUM, LaurentPoly2, LocalizedPoly, RationalFn2,
                      loop_value, r_pow)

_ONE = LaurentPoly2.const(1)
_ZERO = LaurentPoly2()
_R_INV = r_pow(-1)


@dataclass(frozen=True)
class GeneratorPower:
    """Coefficients of g^m in the basis {1, g, e}."""

    m: int
    a: LaurentPoly2
    b: LaurentPoly2
    c: LaurentPoly2


@lru_cache(maxsize=None)
def _row(m: int) -> tuple[LaurentPoly2, LaurentPoly2, LaurentPoly2]:
    if m == 0:
        return _ONE, _ZERO, _ZERO
    if m > 0:
        a, b, c = _row(m - 1)
        return b, a + b * DELTA, -b * _R_INV * DELTA + c * _R_INV
    a, b, c = _row(m + 1)
    return b - a * DELTA, a, a * DELTA + c * r_pow(1)


def generator_power(m: int) -> GeneratorPower:
    """The basis coefficients of the m-th power of a generator."""
    a, b, c = _row(m)
    return GeneratorPower(m, a, b, c)


def generator_power_trace(m: int) -> RationalFn2:
    """Trace of g^m: a_m + (b_m r + c_m) / x, with x the loop value.

    1/x is not representable over powers of (s - s^-1) alone, so the value
    is a genuine rational function with denominator r - r^-1 + s - s^-1.
    """
    a, b, c = _row(m)
    num = a * X_NUM + (b * r_pow(1) + c) * DELTA
    return RationalFn2(num, X_NUM)


def torus2_invariant(m: int) -> LocalizedPoly:
    """Normalized invariant of the closure of the m-th power of a single
    generator on two strands: r^-m (a_m x + b_m r + c_m)."""
    a, b, c = _row(m)
    return r_pow(-m) * (a * loop_value() + b * r_pow(1) + c)


def parity_check(m: int) -> bool:
    """Every term of a_m and c_m has total degree congruent to m mod 2, and
    every term of b_m congruent to m+1."""
    a, b, c = _row(m)

    def all_parity(p: LaurentPoly2, parity: int) -> bool:
        return all((ra + sb) % 2 == parity for ra, sb, _ in p.terms())

    return (all_parity(a, m % 2) and all_parity(c, m % 2)
            and all_parity(b, (m + 1) % 2))


def symmetry_check(m: int) -> bool:
    """Whether the two-strand torus invariant is unchanged under
    (r, s) -> (-r, -s)."""
    value = torus2_invariant(m)
    return value.flip_vars() == value
