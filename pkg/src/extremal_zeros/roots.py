"""Exact Sturm counting and isolation of the real roots of P_k in (0, 1728),
followed by numerical placement of each root on the arc."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .condition import DEFAULT_M_UPPER, HypothesisReport, check_hypothesis
from .extremal import ExtremalFunction
from .modforms import THETA_I, THETA_RHO, ArcPoint, evaluate_j_on_arc
from .ratpoly import RatPoly

J_LO = Fraction(0)
J_HI = Fraction(1728)
DEFAULT_TOL = 1e-12
# below this j-resolution the double-precision series for j is pure noise
J_EVAL_FLOOR = 64 * math.ulp(1728.0)


class CertificationError(RuntimeError):
    pass


class EndpointRootError(CertificationError):
    pass


class RepeatedRootError(CertificationError):
    pass


def sturm_sequence(p: RatPoly) -> list[RatPoly]:
    """p, p', -rem(p, p'), ... kept as primitive integer polynomials.

    Rescaling by positive constants leaves every sign, hence every count,
    unchanged and keeps the coefficients small.
    """
    if p.is_zero():
        raise CertificationError("zero polynomial has no Sturm sequence")
    seq = [p.primitive(), p.derivative().primitive()]
    if seq[1].is_zero():
        return seq[:1]
    while True:
        r = seq[-2] % seq[-1]
        if r.is_zero():
            break
        seq.append((-r).primitive())
    if seq[-1].degree > 0:
        raise RepeatedRootError(
            f"repeated root: gcd(p, p') has degree {seq[-1].degree}"
        )
    return seq


def _variations(seq: list[RatPoly], x: Fraction) -> int:
    signs = [s for s in (q.sign_at(x) for q in seq) if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_count(p: RatPoly, lo, hi, seq: Optional[list[RatPoly]] = None) -> int:
    """Number of distinct real roots of p in the open interval (lo, hi)."""
    lo, hi = Fraction(lo), Fraction(hi)
    if p.is_zero():
        raise CertificationError("zero polynomial")
    if p(lo) == 0 or p(hi) == 0:
        raise EndpointRootError(f"endpoint root at {lo if p(lo) == 0 else hi}")
    if seq is None:
        seq = sturm_sequence(p)
    return _variations(seq, lo) - _variations(seq, hi)


@dataclass(frozen=True)
class Isolation:
    lo: Fraction
    hi: Fraction
    exact: Optional[Fraction] = None  # set when a bisection point hit the root


def isolate_roots(p: RatPoly, lo=J_LO, hi=J_HI) -> list[Isolation]:
    """Disjoint intervals in (lo, hi) with exactly one root each, ascending."""
    lo, hi = Fraction(lo), Fraction(hi)
    seq = sturm_sequence(p)
    total = sturm_count(p, lo, hi, seq)
    out: list[Isolation] = []
    stack = [(lo, hi, total)]
    while stack:
        a, b, n = stack.pop()
        if n == 0:
            continue
        if n == 1:
            out.append(_pull_off_boundary(p, seq, a, b, lo, hi))
            continue
        m = (a + b) / 2
        if p(m) == 0:
            # an exact rational root: record it with a tight bracket and
            # recount the two sides with m excluded
            w = (b - a) / 4
            left, right = m - w, m + w
            while p(left) == 0 or p(right) == 0 or sturm_count(p, left, right, seq) != 1:
                w /= 2
                left, right = m - w, m + w
            out.append(Isolation(left, right, exact=m))
            stack.append((right, b, sturm_count(p, right, b, seq)))
            stack.append((a, left, sturm_count(p, a, left, seq)))
            continue
        stack.append((m, b, sturm_count(p, m, b, seq)))
        stack.append((a, m, sturm_count(p, a, m, seq)))
    out.sort(key=lambda iso: iso.lo)
    return out


def _pull_off_boundary(p, seq, a, b, lo, hi) -> Isolation:
    """Shrink a one-root interval until it touches neither outer endpoint."""
    while a == lo or b == hi:
        m = (a + b) / 2
        if p(m) == 0:
            return Isolation((a + m) / 2, (m + b) / 2, exact=m)
        if sturm_count(p, a, m, seq) == 1:
            b = m
        else:
            a = m
    return Isolation(a, b)


def refine_root(p: RatPoly, interval, tol: float = DEFAULT_TOL) -> float:
    """Bisect an isolating interval on exact signs until narrower than tol."""
    if isinstance(interval, Isolation):
        if interval.exact is not None:
            return float(interval.exact)
        lo, hi = interval.lo, interval.hi
    else:
        lo, hi = (Fraction(x) for x in interval)
    if p.degree == 1:
        return float(-p.coeffs[0] / p.coeffs[1])
    s_lo = p.sign_at(lo)
    if s_lo == 0:
        return float(lo)
    tol_q = Fraction(tol)
    while hi - lo >= tol_q:
        m = (lo + hi) / 2
        s = p.sign_at(m)
        if s == 0:
            return float(m)
        if s == s_lo:
            lo = m
        else:
            hi = m
    return float((lo + hi) / 2)


def invert_j_on_arc(y: float, tol: float = DEFAULT_TOL) -> ArcPoint:
    """The arc point with j = y, by bisection on theta (j decreases in theta).

    The achievable accuracy is limited by the double-precision series for j;
    requests below ``J_EVAL_FLOOR`` are clamped to it.
    """
    if not 0 <= y <= 1728:
        raise ValueError(f"y={y} outside [0, 1728]")
    if y == 1728:
        return ArcPoint(THETA_I)
    if y == 0:
        return ArcPoint(THETA_RHO)
    lo, hi = THETA_I, THETA_RHO
    eff = max(tol, J_EVAL_FLOOR)
    best, best_err = lo, math.inf
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid in (lo, hi):
            break
        v = evaluate_j_on_arc(ArcPoint(mid)).value
        err = abs(v - y)
        if err < best_err:
            best, best_err = mid, err
        if err < eff * 1e-3:
            break
        if v > y:
            lo = mid
        else:
            hi = mid
    if best_err >= eff:
        raise CertificationError(
            f"arc inversion did not reach |j - y| < {eff:.1e} for y={y} (got {best_err:.1e})"
        )
    return ArcPoint(best)


@dataclass(frozen=True)
class CertifiedRoot:
    iso_lo: Fraction
    iso_hi: Fraction
    j_approx: float
    theta: float
    tau_re: float
    tau_im: float
    segment: int
    residual: float  # |P(j_approx)| / sum |c_i| |j_approx|^i


@dataclass(frozen=True)
class RootCertificate:
    k: int
    roots: tuple[CertifiedRoot, ...]
    corner_check: tuple[bool, bool]
    count_proof: int
    hypothesis: Optional[HypothesisReport] = None
    guaranteed: bool = True
    tol: float = DEFAULT_TOL
    notes: tuple[str, ...] = field(default_factory=tuple)

    @property
    def segments(self) -> list[int]:
        return [r.segment for r in self.roots]

    @property
    def ok(self) -> bool:
        return (
            self.count_proof == self.k
            and len(self.roots) == self.k
            and all(self.corner_check)
            and sorted(self.segments) == list(range(1, self.k + 1))
        )

    def to_dict(self) -> dict:
        hyp = self.hypothesis
        return {
            "k": self.k,
            "count": self.count_proof,
            "hypothesis": None
            if hyp is None
            else {
                "S_upper": hyp.S_upper,
                "threshold": hyp.threshold,
                "verdict": hyp.verdict,
                "partial_sum": hyp.partial_sum,
                "tail_bound": hyp.tail_bound,
                "M_upper": hyp.M_upper,
                "terms_used": hyp.terms_used,
                "source": hyp.source,
            },
            "roots": [
                {
                    "j": r.j_approx,
                    "theta": r.theta,
                    "tau_re": r.tau_re,
                    "tau_im": r.tau_im,
                    "segment": r.segment,
                    "iso_lo": str(r.iso_lo),
                    "iso_hi": str(r.iso_hi),
                    "residual": r.residual,
                }
                for r in self.roots
            ],
            "corners": list(self.corner_check),
            "guaranteed": self.guaranteed,
            "tol": self.tol,
            "notes": list(self.notes),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "RootCertificate":
        h = d.get("hypothesis")
        hyp = None if h is None else HypothesisReport(**h)
        roots = tuple(
            CertifiedRoot(
                iso_lo=Fraction(r["iso_lo"]),
                iso_hi=Fraction(r["iso_hi"]),
                j_approx=r["j"],
                theta=r["theta"],
                tau_re=r["tau_re"],
                tau_im=r["tau_im"],
                segment=r["segment"],
                residual=r["residual"],
            )
            for r in d["roots"]
        )
        return cls(
            k=d["k"],
            roots=roots,
            corner_check=tuple(d["corners"]),
            count_proof=d["count"],
            hypothesis=hyp,
            guaranteed=d["guaranteed"],
            tol=d["tol"],
            notes=tuple(d["notes"]),
        )


def _segment_of(tau_re: float, k: int, guard: float) -> Optional[int]:
    """n with (n-1)/(2k) < tau_re < n/(2k), or None inside the guard band."""
    n = math.ceil(2 * k * tau_re)
    n = min(max(n, 1), k)
    lo, hi = (n - 1) / (2 * k), n / (2 * k)
    if tau_re - lo <= guard or hi - tau_re <= guard:
        return None
    return n


def _place(p: RatPoly, iso: Isolation, k: int, tol: float) -> CertifiedRoot:
    while True:
        y = refine_root(p, iso, tol)
        pt = invert_j_on_arc(y, tol)
        seg = _segment_of(pt.tau_re, k, 10 * tol)
        if seg is not None:
            break
        if tol <= 1e-15:
            raise CertificationError(
                f"refine precision: root j~{y} sits on a segment boundary at tol={tol:.0e}"
            )
        tol /= 100
    residual = abs(p.eval_float(y)) / p.abs_scale(y)
    return CertifiedRoot(iso.lo, iso.hi, y, pt.theta, pt.tau_re, pt.tau_im, seg, residual)


def certify(
    f: ExtremalFunction,
    tol: float = DEFAULT_TOL,
    hypothesis: Optional[HypothesisReport] = None,
    require_hypothesis: bool = True,
    M_upper: float = DEFAULT_M_UPPER,
) -> RootCertificate:
    """Certify that P_k has k simple roots in (0, 1728), one per segment C_{n,k}.

    Counting and isolation are exact; refinement, arc inversion and segment
    placement are floating point. Without a true hypothesis verdict the run is
    refused unless ``require_hypothesis`` is False, in which case the
    certificate is labelled not guaranteed.
    """
    if hypothesis is None:
        hypothesis = check_hypothesis(f.spec, M_upper=M_upper)
    if not hypothesis.verdict and require_hypothesis:
        raise CertificationError("hypothesis unmet: S_upper >= threshold")
    p = f.poly
    corners = (p(J_LO) != 0, p(J_HI) != 0)
    if not all(corners):
        raise CertificationError(
            f"k={f.k}: P_k vanishes at a corner (j=0: {not corners[0]}, j=1728: {not corners[1]})"
        )
    seq = sturm_sequence(p)
    count = sturm_count(p, J_LO, J_HI, seq)
    if count != f.k:
        raise CertificationError(
            f"k={f.k}: theorem violation or hypothesis unmet: {count} roots in (0, 1728)"
        )
    isolations = isolate_roots(p, J_LO, J_HI)
    roots = tuple(_place(p, iso, f.k, tol) for iso in isolations)
    segs = sorted(r.segment for r in roots)
    if segs != list(range(1, f.k + 1)):
        raise CertificationError(f"k={f.k}: segments {segs} are not one per C_(n,k)")
    return RootCertificate(
        k=f.k,
        roots=roots,
        corner_check=corners,
        count_proof=count,
        hypothesis=hypothesis,
        guaranteed=hypothesis.verdict,
        tol=tol,
    )
