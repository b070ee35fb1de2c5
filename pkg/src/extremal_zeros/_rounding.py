"""Conversion of mpmath intervals to doubles rounded in a chosen direction."""

from __future__ import annotations

import math
from contextlib import contextmanager
from fractions import Fraction

from mpmath import iv, mpf

INTERVAL_BITS = 160


@contextmanager
def interval_precision(bits: int = INTERVAL_BITS):
    # mpmath keeps interval precision on a shared context
    saved = iv.prec
    iv.prec = bits
    try:
        yield iv
    finally:
        iv.prec = saved


def _exact(x) -> Fraction:
    m, e = mpf(x).man_exp
    return Fraction(m) * (Fraction(2) ** e)


def upper_float(interval) -> float:
    """Smallest-ish double >= the interval's upper endpoint."""
    hi = _exact(interval.b)
    f = float(hi)
    if Fraction(f) < hi:
        f = math.nextafter(f, math.inf)
    return f


def lower_float(interval) -> float:
    lo = _exact(interval.a)
    f = float(lo)
    if Fraction(f) > lo:
        f = math.nextafter(f, -math.inf)
    return f
