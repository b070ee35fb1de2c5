"""Truncated Laurent series in q with exact rational coefficients.

A series is stored as ``(lead, coeffs, trunc)``: coefficient ``coeffs[i]``
belongs to ``q**(lead + i)`` and everything above ``q**trunc`` is unknown.
The zero series carries no coefficients and ``lead == trunc + 1``, which lets
the multiplication truncation rule treat it as "valuation > trunc".
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from numbers import Rational
from typing import Callable, Iterable, Mapping, Sequence, Union

Scalar = Union[int, Fraction]


class NotInvertibleError(ArithmeticError):
    pass


def _to_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    raise TypeError(f"exact rational coefficient required, got {type(c).__name__}")


@dataclass(frozen=True)
class LaurentQSeries:
    lead: int
    coeffs: tuple[Fraction, ...]
    trunc: int

    def __post_init__(self):
        if self.coeffs and len(self.coeffs) != self.trunc - self.lead + 1:
            raise ValueError("coeffs length must equal trunc - lead + 1")
        if self.coeffs and self.coeffs[0] == 0:
            raise ValueError("leading coefficient must be nonzero; use LaurentQSeries.make")
        if not self.coeffs and self.lead != self.trunc + 1:
            raise ValueError("zero series must have lead == trunc + 1")

    @classmethod
    def make(cls, lead: int, coeffs: Iterable, trunc: int) -> "LaurentQSeries":
        """Normalize arbitrary input: drop coefficients above ``trunc``, pad
        missing ones with zero and strip leading zeros."""
        cs = [_to_fraction(c) for c in coeffs]
        n = trunc - lead + 1
        if n <= 0:
            return cls.zero(trunc)
        cs = cs[:n] + [Fraction(0)] * (n - len(cs))
        start = 0
        while start < n and cs[start] == 0:
            start += 1
        if start == n:
            return cls.zero(trunc)
        return cls(lead + start, tuple(cs[start:]), trunc)

    @classmethod
    def zero(cls, trunc: int) -> "LaurentQSeries":
        return cls(trunc + 1, (), trunc)

    @classmethod
    def constant(cls, c: Scalar, trunc: int) -> "LaurentQSeries":
        return cls.make(0, [c], trunc)

    @classmethod
    def monomial(cls, c: Scalar, exponent: int, trunc: int) -> "LaurentQSeries":
        return cls.make(exponent, [c], trunc)

    # -- access ----------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, n: int) -> Fraction:
        if n > self.trunc:
            raise IndexError(f"coefficient of q^{n} is beyond truncation O(q^{self.trunc + 1})")
        if n < self.lead:
            return Fraction(0)
        return self.coeffs[n - self.lead]

    def coefficient(self, n: int) -> Fraction:
        return self[n]

    def coefficients(self, lo: int, hi: int) -> list[Fraction]:
        return [self[n] for n in range(lo, hi + 1)]

    def items(self):
        return ((self.lead + i, c) for i, c in enumerate(self.coeffs))

    def truncate(self, trunc: int) -> "LaurentQSeries":
        if trunc >= self.trunc:
            return self
        return LaurentQSeries.make(self.lead, self.coeffs, trunc)

    def shift(self, m: int) -> "LaurentQSeries":
        """Multiply by ``q**m``."""
        if self.is_zero():
            return LaurentQSeries.zero(self.trunc + m)
        return LaurentQSeries(self.lead + m, self.coeffs, self.trunc + m)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    # -- arithmetic ------------------------------------------------------
    def __add__(self, other):
        if isinstance(other, LaurentQSeries):
            return add(self, other)
        return self._add_scalar(_to_fraction(other))

    __radd__ = __add__

    def __neg__(self):
        return LaurentQSeries(self.lead, tuple(-c for c in self.coeffs), self.trunc)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, LaurentQSeries):
            return mul(self, other)
        return self.scale(_to_fraction(other))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return invert(self) ** (-e)
        result = LaurentQSeries.constant(1, self.trunc - self.lead) if e == 0 else self
        for _ in range(e - 1):
            result = mul(result, self)
        return result

    def scale(self, c: Scalar) -> "LaurentQSeries":
        c = _to_fraction(c)
        if c == 0:
            return LaurentQSeries.zero(self.trunc)
        return LaurentQSeries(self.lead, tuple(c * x for x in self.coeffs), self.trunc)

    def _add_scalar(self, c: Fraction) -> "LaurentQSeries":
        if c == 0 or self.trunc < 0:
            return self
        return add(self, LaurentQSeries.constant(c, self.trunc))

    def __repr__(self):
        terms = [f"{c}*q^{n}" for n, c in self.items() if c != 0]
        body = " + ".join(terms) if terms else "0"
        return f"{body} + O(q^{self.trunc + 1})"


def add(s: LaurentQSeries, t: LaurentQSeries) -> LaurentQSeries:
    trunc = min(s.trunc, t.trunc)
    if s.is_zero() and t.is_zero():
        return LaurentQSeries.zero(trunc)
    lead = min(s.lead, t.lead)
    out = [Fraction(0)] * max(trunc - lead + 1, 0)
    for src in (s, t):
        for n, c in src.items():
            if n > trunc:
                break
            out[n - lead] += c
    return LaurentQSeries.make(lead, out, trunc)


def _integer_view(cs: Sequence[Fraction]) -> tuple[list[int], int]:
    d = lcm(*(c.denominator for c in cs)) if cs else 1
    return [c.numerator * (d // c.denominator) for c in cs], d


def mul(s: LaurentQSeries, t: LaurentQSeries) -> LaurentQSeries:
    # s = S + O(q^{s.trunc+1}), S has valuation s.lead; the unknown parts meet
    # the known leading terms first.
    trunc = min(s.lead + t.trunc, t.lead + s.trunc)
    lead = s.lead + t.lead
    if s.is_zero() or t.is_zero():
        return LaurentQSeries.zero(trunc)
    n = trunc - lead + 1
    if n <= 0:
        return LaurentQSeries.zero(trunc)
    # convolve over common-denominator integers; Fraction per term is too slow
    a, da = _integer_view(s.coeffs[:n])
    b, db = _integer_view(t.coeffs[:n])
    out = [0] * n
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j in range(min(len(b), n - i)):
            out[i + j] += x * b[j]
    den = da * db
    return LaurentQSeries.make(lead, (Fraction(v, den) for v in out), trunc)


def invert(s: LaurentQSeries) -> LaurentQSeries:
    """Multiplicative inverse, solved coefficient by coefficient."""
    if s.is_zero():
        raise NotInvertibleError("not invertible: zero series")
    # relative precision of s is trunc - lead; the inverse keeps it
    rel = s.trunc - s.lead
    c0 = s.coeffs[0]
    inv0 = 1 / c0
    out = [inv0]
    for m in range(1, rel + 1):
        acc = Fraction(0)
        for i in range(1, m + 1):
            acc += s.coeffs[i] * out[m - i]
        out.append(-acc * inv0)
    return LaurentQSeries.make(-s.lead, out, -s.lead + rel)


def product_expansion(
    exponent_of: Union[Mapping[int, int], Callable[[int], int]], N: int
) -> LaurentQSeries:
    """Expand ``prod_{n>=1} (1 - q^n)^{e_n}`` through ``q^N``.

    ``exponent_of`` is either a mapping (missing keys mean 0) or a callable.
    Each factor is applied by in-place multiplication or division by
    ``(1 - q^n)``, so the arithmetic stays in integers.
    """
    if callable(exponent_of):
        get = exponent_of
    else:
        get = lambda n: exponent_of.get(n, 0)  # noqa: E731
    c = [0] * (N + 1)
    if N >= 0:
        c[0] = 1
    for n in range(1, N + 1):
        e = get(n)
        if e > 0:
            for _ in range(e):
                for i in range(N, n - 1, -1):
                    c[i] -= c[i - n]
        elif e < 0:
            for _ in range(-e):
                for i in range(n, N + 1):
                    c[i] += c[i - n]
    return LaurentQSeries.make(0, c, N)
