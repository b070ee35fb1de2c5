"""Certificate for the coefficient condition S < (2 - M) / (2 + M).

S = sum_{n>=1} |a(n)| exp(-pi n sqrt(3)), and M bounds
|F_n(j(tau)) exp(-2 pi n Im tau) - 2 cos(2 pi n Re tau)| on the arc.
All arithmetic is done in mpmath interval arithmetic and the final numbers
are rounded outward to doubles, so a ``True`` verdict is never an artifact
of rounding.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

from ._rounding import interval_precision, lower_float, upper_float
from .partitions import CoeffStream

M_AKN = 1.1176          # published constant, four decimals
DEFAULT_M_UPPER = 1.12  # conservative default used for certificates
DEFAULT_HYPOTHESIS_TERMS = 50


class HypothesisError(ValueError):
    pass


@dataclass(frozen=True)
class HypothesisReport:
    partial_sum: float
    tail_bound: float
    S_upper: float
    threshold: float
    M_upper: float
    terms_used: int
    verdict: bool
    source: str = "explicit"

    def to_dict(self) -> dict:
        return asdict(self)


def _threshold_interval(iv, M_upper: float):
    m = iv.mpf(M_upper)
    return (2 - m) / (2 + m)


def threshold(M_upper: float = DEFAULT_M_UPPER) -> float:
    """(2 - M)/(2 + M), rounded down."""
    if not 0 < M_upper < 2:
        raise HypothesisError(f"M_upper must lie in (0, 2), got {M_upper} (condition vacuous)")
    with interval_precision() as iv:
        return lower_float(_threshold_interval(iv, M_upper))


def _witten_tail(iv, N: int):
    """Upper bound on sum_{n>N} (5.5/n) exp(pi sqrt(2n/3) - pi n sqrt(3)).

    Consecutive terms have ratio below
    exp(pi sqrt(2/3) / (2 sqrt(n)) - pi sqrt(3)), which decreases in n, so
    the tail is at most first / (1 - r) with r taken at n = N + 1.
    """
    m = N + 1
    sqrt3 = iv.sqrt(3)
    first = iv.mpf(11) / (2 * m) * iv.exp(iv.pi * iv.sqrt(iv.mpf(2 * m) / 3) - iv.pi * m * sqrt3)
    r = iv.exp(iv.pi * iv.sqrt(iv.mpf(2) / 3) / (2 * iv.sqrt(m)) - iv.pi * sqrt3)
    if not r.b < 1:
        raise HypothesisError("tail ratio not below one")
    return first / (1 - r)


def check_hypothesis(
    spec: CoeffStream, N: int = DEFAULT_HYPOTHESIS_TERMS, M_upper: float = DEFAULT_M_UPPER
) -> HypothesisReport:
    """Bound S from above and compare with the threshold.

    Witten streams: the first N terms are summed exactly as intervals and the
    rest is bounded via a(n) <= p(n) < (5.5/n) exp(pi sqrt(2n/3)).
    Explicit streams are finite, so every listed term is summed and the tail
    is zero.
    """
    if N < 0:
        raise ValueError("N must be >= 0")
    if spec.source == "witten":
        spec = spec.extended(N)
        terms = [spec.a(n) for n in range(1, N + 1)]
    elif spec.finite:
        terms = list(spec.values)
    else:
        raise HypothesisError("cannot bound tail")
    t = threshold(M_upper)
    with interval_precision() as iv:
        sqrt3 = iv.sqrt(3)
        partial = iv.mpf(0)
        for n, a in enumerate(terms, 1):
            if a:
                partial += iv.mpf(abs(a.numerator)) / a.denominator * iv.exp(-iv.pi * n * sqrt3)
        tail = _witten_tail(iv, N) if spec.source == "witten" else iv.mpf(0)
        s_upper = upper_float(partial + tail)
        partial_f = upper_float(partial)
        tail_f = upper_float(tail)
    return HypothesisReport(
        partial_sum=partial_f,
        tail_bound=tail_f,
        S_upper=s_upper,
        threshold=t,
        M_upper=M_upper,
        terms_used=len(terms),
        verdict=s_upper < t,
        source=spec.source,
    )
