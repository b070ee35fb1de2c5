"""Faber polynomials F_k(y) with F_k(j(tau)) = q^-k + O(q).

Two independent constructions are provided and checked against each other:
elimination against powers of j, and the generating function
``sum F_k(y) q^k = E_14(q) / (Delta(q) (j(q) - y))``.
"""

from __future__ import annotations

from fractions import Fraction

from .modforms import e14_numerator, j_expansion
from .qseries import LaurentQSeries, mul, product_expansion
from .ratpoly import RatPoly

__all__ = [
    "RatPoly",
    "faber_by_reduction",
    "faber_by_genfun",
    "faber_crosscheck",
    "faber",
    "j_powers",
]


def j_powers(kmax: int, top: int = 0) -> list[LaurentQSeries]:
    """[j^0, ..., j^kmax], each exact through q^top.

    Multiplying by j costs one order of relative precision, so j itself is
    expanded to ``top + kmax``.
    """
    j = j_expansion(top + max(kmax, 1))
    powers = [LaurentQSeries.constant(1, top + kmax)]
    for _ in range(kmax):
        powers.append(mul(powers[-1], j))
    return [p.truncate(top) for p in powers]


def faber_by_reduction(k: int, powers: list[LaurentQSeries] | None = None) -> RatPoly:
    """Start from y^k and cancel the q^e coefficients, e = -k+1 .. 0, top down."""
    if k < 0:
        raise ValueError(f"Faber index must be >= 0, got {k}")
    if powers is None or len(powers) <= k:
        powers = j_powers(k)
    coeffs = [Fraction(0)] * (k + 1)
    coeffs[k] = Fraction(1)
    series = powers[k]
    for e in range(-k + 1, 1):
        c = series[e]
        if c == 0:
            continue
        m = -e
        coeffs[m] -= c
        series = series - powers[m].scale(c)
    poly = RatPoly.make(coeffs)
    if not poly.is_integral():
        raise AssertionError(f"F_{k} came out with non-integral coefficients")
    return poly


def faber_by_genfun(kmax: int) -> list[RatPoly]:
    """F_0 .. F_kmax as q-coefficients of E_14 / (Delta (j - y)).

    With j - y = q^-1 u(q), u = 1 + (744 - y) q + c(1) q^2 + ..., and
    E_14 / Delta = q^-1 g(q), the generating function is g(q) / u(q).
    The inverse of u has y-polynomial coefficients and is solved term by term.
    """
    if kmax < 0:
        raise ValueError("kmax must be >= 0")
    j = j_expansion(kmax)
    # u_n for n >= 2 is the constant c(n-1); u_1 = 744 - y
    u1 = RatPoly.make([j[0], -1])
    v = [RatPoly.make([1])]
    for n in range(1, kmax + 1):
        acc = u1 * v[n - 1]
        for i in range(2, n + 1):
            acc = acc + v[n - i] * j[i - 1]
        v.append(-acc)
    g = mul(e14_numerator(kmax), product_expansion(lambda n: -24, kmax))
    out = []
    for k in range(kmax + 1):
        acc = RatPoly(())
        for i in range(k + 1):
            gi = g[i]
            if gi:
                acc = acc + v[k - i] * gi
        out.append(acc)
    return out


def faber_crosscheck(kmax: int) -> bool:
    gen = faber_by_genfun(kmax)
    powers = j_powers(kmax)
    return all(faber_by_reduction(k, powers) == gen[k] for k in range(kmax + 1))


def faber(kmax: int) -> list[RatPoly]:
    """F_0 .. F_kmax (generating-function route, the cheaper one)."""
    return _faber_cached(kmax)[: kmax + 1]


_CACHE: list[RatPoly] = []


def _faber_cached(kmax: int) -> list[RatPoly]:
    global _CACHE
    if len(_CACHE) <= kmax:
        _CACHE = faber_by_genfun(max(kmax, 2 * len(_CACHE)))
    return _CACHE
