"""Dense univariate polynomials over the rationals."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence


@dataclass(frozen=True)
class RatPoly:
    """``coeffs[i]`` is the coefficient of ``y**i``; no trailing zeros."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if self.coeffs and self.coeffs[-1] == 0:
            raise ValueError("trailing zero coefficient; use RatPoly.make")

    @classmethod
    def make(cls, coeffs: Iterable) -> "RatPoly":
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        return cls(tuple(cs))

    @classmethod
    def from_descending(cls, coeffs: Sequence) -> "RatPoly":
        return cls.make(reversed(list(coeffs)))

    @classmethod
    def monomial(cls, degree: int, c=1) -> "RatPoly":
        return cls.make([0] * degree + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_monic(self) -> bool:
        return self.leading == 1

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def descending(self) -> list[Fraction]:
        return list(reversed(self.coeffs))

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    # -- arithmetic ------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, RatPoly):
            other = RatPoly.make([other])
        n = max(len(self.coeffs), len(other.coeffs))
        return RatPoly.make(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return RatPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, RatPoly):
            c = Fraction(other)
            return RatPoly.make(c * x for x in self.coeffs)
        if self.is_zero() or other.is_zero():
            return RatPoly(())
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return RatPoly.make(out)

    __rmul__ = __mul__

    def derivative(self) -> "RatPoly":
        return RatPoly.make(i * c for i, c in enumerate(self.coeffs) if i)

    def divmod(self, other: "RatPoly") -> tuple["RatPoly", "RatPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs) + 1
        if dq <= 0:
            return RatPoly(()), self
        quot = [Fraction(0)] * dq
        lead = other.leading
        d = other.degree
        for i in range(dq - 1, -1, -1):
            c = rem[i + d] / lead
            quot[i] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[i + j] -= c * b
        return RatPoly.make(quot), RatPoly.make(rem[:d])

    def __mod__(self, other):
        return self.divmod(other)[1]

    def monic(self) -> "RatPoly":
        return self * (1 / self.leading)

    def primitive(self) -> "RatPoly":
        """Integer multiple with coprime coefficients; the sign is kept."""
        if self.is_zero():
            return self
        d = lcm(*(c.denominator for c in self.coeffs))
        ints = [c.numerator * (d // c.denominator) for c in self.coeffs]
        g = 0
        for v in ints:
            g = gcd(g, v)
        return RatPoly(tuple(Fraction(v // g) for v in ints))

    # -- evaluation ------------------------------------------------------
    def __call__(self, y) -> Fraction:
        """Exact Horner evaluation at a rational (or float, taken exactly)."""
        y = Fraction(y)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * y + c
        return acc

    def sign_at(self, y) -> int:
        v = self(y)
        return (v > 0) - (v < 0)

    def eval_float(self, y: float) -> float:
        """Value at a double, computed exactly from the binary value of ``y``
        and rounded once; cancellation in huge coefficients costs nothing."""
        return float(self(Fraction(y)))

    def abs_scale(self, y: float) -> float:
        """sum |c_i| |y|^i, the natural scale for residuals at ``y``."""
        ay = abs(Fraction(y))
        return float(sum(abs(c) * ay**i for i, c in enumerate(self.coeffs)))

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("y" if i == 1 else f"y^{i}")
            if mono and abs(c) == 1:
                term = mono
            else:
                term = f"{abs(c)}{'*' if mono else ''}{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, term))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, term in parts[1:]:
            out += f" {sign} {term}"
        return out


def poly_gcd(a: RatPoly, b: RatPoly) -> RatPoly:
    while not b.is_zero():
        a, b = b, a % b
    return a.monic() if not a.is_zero() else a
