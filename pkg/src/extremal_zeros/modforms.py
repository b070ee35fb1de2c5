"""q-expansions of j and friends, and evaluation of j on the arc |tau| = 1."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .qseries import LaurentQSeries, mul, product_expansion

THETA_I = math.pi / 2          # tau = i,            j = 1728
THETA_RHO = 2 * math.pi / 3    # tau = exp(pi i/3) ~ exp(2 pi i/3), j = 0

DEFAULT_ARC_TRUNC = 60


class ArcEvaluationError(ArithmeticError):
    pass


def sigma(k: int, n: int) -> int:
    """Divisor power sum sigma_k(n) = sum_{d | n} d**k."""
    if n <= 0:
        raise ValueError(f"sigma needs n >= 1, got {n}")
    if k < 0:
        raise ValueError(f"sigma needs k >= 0, got {k}")
    total = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            total += d**k
            e = n // d
            if e != d:
                total += e**k
        d += 1
    return total


def _eisenstein_like(const: int, weight_minus_one: int, N: int) -> LaurentQSeries:
    return LaurentQSeries.make(
        0, [1] + [const * sigma(weight_minus_one, n) for n in range(1, N + 1)], N
    )


def e4_expansion(N: int) -> LaurentQSeries:
    return _eisenstein_like(240, 3, N)


def e14_numerator(N: int) -> LaurentQSeries:
    """1 - 24 * sum sigma_13(n) q^n, i.e. E_4^2 E_6 = E_14."""
    if N < 0:
        raise ValueError("N must be >= 0")
    return _eisenstein_like(-24, 13, N)


@lru_cache(maxsize=32)
def j_expansion(N: int) -> LaurentQSeries:
    """j = E_4^3 / (q prod (1 - q^n)^24) through q^N."""
    if N < -1:
        raise ValueError("N must be >= -1")
    M = N + 1  # the division by q shifts everything down by one
    e4 = e4_expansion(M)
    numer = mul(mul(e4, e4), e4)
    inv_eta24 = product_expansion(lambda n: -24, M)
    j = mul(numer, inv_eta24).shift(-1)
    if not j.is_integral():
        raise AssertionError("j-expansion produced a non-integral coefficient")
    return j


@lru_cache(maxsize=8)
def _j_float_coeffs(N: int) -> tuple[float, ...]:
    j = j_expansion(N)
    return tuple(float(j[n]) for n in range(-1, N + 1))


@dataclass(frozen=True)
class ArcPoint:
    """A point of the arc C = {|tau| = 1, 0 <= Re(tau) <= 1/2}.

    ``theta`` runs over [pi/2, 2pi/3]; the point is tau = exp(i(pi - theta)),
    the mirror of exp(i theta) under tau -> -conj(tau). j takes the same real
    value at both, so theta = pi/2 is i (j = 1728) and theta = 2pi/3 is the
    corner exp(pi i/3) ~ exp(2 pi i/3) (j = 0), with j decreasing in theta.
    """

    theta: float

    def __post_init__(self):
        eps = 1e-15
        if not (THETA_I - eps <= self.theta <= THETA_RHO + eps):
            raise ValueError(f"theta={self.theta} outside [pi/2, 2pi/3]")

    @property
    def tau_re(self) -> float:
        # cos(pi/2) is 6e-17 in floating point; pin the endpoint
        return 0.0 if self.theta == THETA_I else -math.cos(self.theta)

    @property
    def tau_im(self) -> float:
        return math.sin(self.theta)

    @classmethod
    def from_fraction(cls, t: float) -> "ArcPoint":
        """Point at parameter t in [0, 1] from i (t=0) to rho (t=1)."""
        return cls(THETA_I + t * (THETA_RHO - THETA_I))


def arc_grid(n: int) -> list[ArcPoint]:
    """n equally spaced points in theta, endpoints included."""
    if n < 2:
        return [ArcPoint(THETA_I)]
    return [ArcPoint.from_fraction(i / (n - 1)) for i in range(n)]


def j_coefficient_majorant(n: int) -> float:
    """Envelope |c(n)| <= exp(4 pi sqrt(n)) for the q^n coefficient of j, n >= 1."""
    return math.exp(4 * math.pi * math.sqrt(n))


def j_tail_bound(theta: float, N: int) -> float:
    """Bound on sum_{n>N} |c(n) q^n| at tau = exp(i theta) from the majorant.

    Terms exp(4 pi sqrt(n) - 2 pi n sin(theta)) have ratio at most
    exp(2 pi / sqrt(N+1) - 2 pi sin(theta)) beyond N, so a geometric sum bounds
    the tail once that ratio is below one.
    """
    s = math.sin(theta)
    m = N + 1
    ratio = math.exp(2 * math.pi / math.sqrt(m) - 2 * math.pi * s)
    if ratio >= 1:
        return math.inf
    first = math.exp(4 * math.pi * math.sqrt(m) - 2 * math.pi * m * s)
    return first / (1 - ratio)


@dataclass(frozen=True)
class ArcValue:
    value: float
    imag: float
    tail_bound: float


def evaluate_j_on_arc(p: ArcPoint, N: int = DEFAULT_ARC_TRUNC) -> ArcValue:
    """Sum the truncated j-expansion at q = exp(2 pi i tau)."""
    cs = _j_float_coeffs(N)
    x, y = p.tau_re, p.tau_im
    re_terms = []
    im_terms = []
    for idx, c in enumerate(cs):
        n = idx - 1
        if c == 0.0:
            continue
        mag = c * math.exp(-2 * math.pi * n * y)
        arg = 2 * math.pi * n * x
        re_terms.append(mag * math.cos(arg))
        im_terms.append(mag * math.sin(arg))
    return ArcValue(math.fsum(re_terms), math.fsum(im_terms), j_tail_bound(p.theta, N))


def j_on_arc(p: ArcPoint, N: int = DEFAULT_ARC_TRUNC, tol: float = 1e-9) -> float:
    """Real value of j at a point of the arc.

    Raises ArcEvaluationError if the imaginary part or the discarded tail
    exceeds ``tol``; both mean the truncation is too short.
    """
    if isinstance(p, (int, float)):
        p = ArcPoint(float(p))
    v = evaluate_j_on_arc(p, N)
    if abs(v.imag) > tol or v.tail_bound > tol:
        raise ArcEvaluationError(
            f"arc evaluation inconsistent at theta={p.theta!r}: "
            f"imag={v.imag:.3e}, tail<={v.tail_bound:.3e} (N={N})"
        )
    return v.value
