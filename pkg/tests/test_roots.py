import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from extremal_zeros.extremal import construct
from extremal_zeros.faber import faber
from extremal_zeros.modforms import THETA_I, THETA_RHO, j_on_arc
from extremal_zeros.partitions import explicit_stream, witten_stream
from extremal_zeros.ratpoly import RatPoly
from extremal_zeros.roots import (
    CertificationError,
    EndpointRootError,
    RepeatedRootError,
    RootCertificate,
    certify,
    invert_j_on_arc,
    isolate_roots,
    refine_root,
    sturm_count,
)
from oracles import count_sign_changes

W = witten_stream(60)
P = RatPoly.from_descending
Q2 = P([1, -1488, 159769])
DISC = 1488**2 - 4 * 159769


def test_discriminant():
    assert DISC == 1575068


def test_sturm_examples():
    assert sturm_count(P([1, 0, -1]), -2, 2) == 2
    assert sturm_count(P([1, -744]), 0, 1728) == 1
    assert sturm_count(Q2, 0, 1728) == 2


def test_sturm_errors():
    with pytest.raises(EndpointRootError, match="endpoint root"):
        sturm_count(P([1, -1]), 1, 3)
    with pytest.raises(CertificationError):
        sturm_count(RatPoly(()), 0, 1)
    with pytest.raises(RepeatedRootError):
        sturm_count(P([1, -2, 1]), 0, 3)


def test_isolate_linear():
    (iso,) = isolate_roots(P([1, -744]))
    assert iso.lo < 744 < iso.hi or iso.exact == 744


def test_isolate_quadratic():
    isos = isolate_roots(Q2)
    assert len(isos) == 2
    small = (1488 - math.sqrt(DISC)) / 2
    large = (1488 + math.sqrt(DISC)) / 2
    assert isos[0].lo < small < isos[0].hi
    assert isos[1].lo < large < isos[1].hi


def test_isolate_faber_5():
    isos = isolate_roots(faber(5)[5])
    assert len(isos) == 5
    assert all(0 < i.lo < i.hi < 1728 for i in isos)


def test_isolate_exact_rational_roots():
    # midpoints hit 864 and 432 exactly
    p = P([1, -1296]) * P([1, -864]) * P([1, -432])
    isos = isolate_roots(p)
    got = [refine_root(p, i) for i in isos]
    assert got[1] == 864.0
    assert got == pytest.approx([432.0, 864.0, 1296.0], abs=1e-9)


def test_refine_examples():
    assert refine_root(P([1, -744]), (0, 1728)) == 744.0
    small, large = isolate_roots(Q2)
    assert abs(refine_root(Q2, small) - (1488 - math.sqrt(DISC)) / 2) < 1e-9
    assert abs(refine_root(Q2, large) - (1488 + math.sqrt(DISC)) / 2) < 1e-9


def test_refine_stays_in_interval():
    p = faber(8)[8]
    for iso in isolate_roots(p):
        x = refine_root(p, iso, 1e-6)
        assert iso.lo <= Fraction(x) <= iso.hi


@st.composite
def separated_integer_polys(draw):
    roots = draw(st.lists(st.integers(-20, 20), min_size=1, max_size=6, unique=True))
    p = RatPoly.make([draw(st.sampled_from([1, -1, 2, 3]))])
    for r in roots:
        p = p * P([1, -r])
    lo = Fraction(draw(st.integers(-25, 24))) + Fraction(1, 2)
    hi = lo + draw(st.integers(1, 30))
    return p, lo, hi


@settings(max_examples=60, deadline=None)
@given(separated_integer_polys())
def test_sturm_matches_sign_change_oracle(case):
    p, lo, hi = case
    assert sturm_count(p, lo, hi) == count_sign_changes(p, lo, hi, samples=400)


def test_invert_corners():
    assert invert_j_on_arc(1728).theta == THETA_I
    assert invert_j_on_arc(0).theta == THETA_RHO


def test_invert_744():
    pt = invert_j_on_arc(744.0)
    assert 0 < pt.tau_re < 0.5
    assert abs(j_on_arc(pt) - 744) < 1e-10


def test_invert_rejects_out_of_range():
    with pytest.raises(ValueError):
        invert_j_on_arc(1729)


@settings(max_examples=40, deadline=None)
@given(st.floats(1.0, 1727.0))
def test_invert_round_trip(y):
    assert abs(j_on_arc(invert_j_on_arc(y)) - y) < 1e-10


def test_certify_k1():
    c = certify(construct(W, 1))
    (r,) = c.roots
    assert r.j_approx == 744.0 and r.segment == 1 and c.ok


def test_certify_k5_spread():
    c = certify(construct(W, 5))
    assert sorted(c.segments) == [1, 2, 3, 4, 5]
    js = sorted(r.j_approx for r in c.roots)
    assert js[0] < 100 and js[-1] > 1500


@pytest.mark.parametrize("k", [1, 3, 7, 12])
def test_certificate_invariants(k):
    c = certify(construct(W, k))
    assert c.count_proof == k == len(c.roots)
    assert c.corner_check == (True, True)
    ivs = sorted((r.iso_lo, r.iso_hi) for r in c.roots)
    assert all(a[1] <= b[0] for a, b in zip(ivs, ivs[1:]))
    p = c.roots and construct(W, k).poly
    for r in c.roots:
        assert (r.segment - 1) / (2 * k) < r.tau_re < r.segment / (2 * k)
        assert r.residual < 1e-6
        assert p.sign_at(r.iso_lo) * p.sign_at(r.iso_hi) == -1
        assert r.iso_lo <= Fraction(r.j_approx) <= r.iso_hi


def test_certificate_dict_round_trip():
    c = certify(construct(W, 4))
    assert RootCertificate.from_dict(c.to_dict()) == c


def test_certify_refuses_unmet_hypothesis():
    f = construct(explicit_stream([0, 10**9]), 2)
    with pytest.raises(CertificationError, match="hypothesis unmet"):
        certify(f)


def test_certify_reports_count_mismatch():
    # a huge a(1) drags a root out of (0, 1728)
    f = construct(explicit_stream([10**6]), 1)
    with pytest.raises(CertificationError, match="theorem violation"):
        certify(f, require_hypothesis=False)


def test_corner_root_detected():
    f = construct(explicit_stream([744]), 1)  # P_1 = y
    with pytest.raises(CertificationError, match="corner"):
        certify(f, require_hypothesis=False)
