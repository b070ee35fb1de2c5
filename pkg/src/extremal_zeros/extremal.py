"""The modular function f_k(A; tau) = q^-k A(q) + O(q) as a polynomial in j."""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Sequence

from .faber import faber, j_powers
from .modforms import DEFAULT_ARC_TRUNC, ArcPoint, j_on_arc
from .partitions import CoeffStream, InsufficientCoefficientsError
from .qseries import LaurentQSeries
from .ratpoly import RatPoly


class TruncationError(ValueError):
    pass


@dataclass(frozen=True)
class ExtremalFunction:
    k: int
    spec: CoeffStream
    poly: RatPoly
    verified_expansion: bool = False

    def principal_part(self) -> list[Fraction]:
        """Prescribed coefficients of q^-k .. q^0, i.e. [1, a(1), ..., a(k)]."""
        return self.spec.q_series_coeffs(self.k)


def construct(spec: CoeffStream, k: int, verify: bool = False) -> ExtremalFunction:
    """P_k = F_k + sum_{n=0}^{k-1} a(k-n) F_n."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if not spec.finite and len(spec) < k:
        raise InsufficientCoefficientsError(
            f"need a(1)..a({k}), stream has {len(spec)} coefficients"
        )
    F = faber(k)
    poly = F[k]
    for n in range(k):
        a = spec.a(k - n)
        if a:
            poly = poly + F[n] * a
    f = ExtremalFunction(k, spec, poly)
    if verify:
        f = replace(f, verified_expansion=verify_principal_part(f))
    return f


def expand_in_q(poly: RatPoly, N: int) -> LaurentQSeries:
    """poly(j(tau)) as a q-series through q^N."""
    powers = j_powers(max(poly.degree, 0), N)
    out = LaurentQSeries.zero(N)
    for i, c in enumerate(poly.coeffs):
        if c:
            out = out + powers[i].scale(c)
    return out


def verify_principal_part(f: ExtremalFunction, N: int | None = None) -> bool:
    """Check that P_k(j) = q^-k A(q) + O(q) coefficient by coefficient.

    The q^0 coefficient is included and must equal a(k).
    """
    if N is None:
        N = f.k + 10
    if N < 0:
        raise TruncationError("truncation insufficient: need N >= 0 to see the q^0 term")
    series = expand_in_q(f.poly, N)
    expected = f.principal_part()
    got = series.coefficients(-f.k, 0)
    return got == expected


def residual_on_arc(
    f: ExtremalFunction, grid: Sequence[ArcPoint], N: int = DEFAULT_ARC_TRUNC
) -> list[float]:
    """R_k = |f_k(tau) exp(-2 pi k Im tau) - 2 cos(2 pi k Re tau)| at each grid point.

    Sampled numerical values: j comes from the truncated series in double
    precision, P_k is then evaluated exactly at that double.
    """
    k = f.k
    out = []
    for p in grid:
        y = j_on_arc(p, N)
        val = f.poly(Fraction(y))
        # scale before converting: P_k(j) ~ exp(2 pi k Im tau) can be huge
        damp = math.exp(-2 * math.pi * k * p.tau_im)
        scaled = float(val * Fraction(damp))
        out.append(abs(scaled - 2 * math.cos(2 * math.pi * k * p.tau_re)))
    return out


def proof_bound(M_upper: float, S_upper: float) -> float:
    """M + (2 + M) S, the bound the residual must stay under."""
    return M_upper + (2 + M_upper) * S_upper
