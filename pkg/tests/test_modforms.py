import math

import pytest

from extremal_zeros.modforms import (
    THETA_I,
    THETA_RHO,
    ArcEvaluationError,
    ArcPoint,
    arc_grid,
    e14_numerator,
    evaluate_j_on_arc,
    j_coefficient_majorant,
    j_expansion,
    j_on_arc,
    sigma,
)
from oracles import j_coefficients_naive


@pytest.mark.parametrize("k,n,expected", [(3, 1, 1), (3, 2, 9), (13, 2, 8193), (0, 12, 6), (1, 12, 28)])
def test_sigma(k, n, expected):
    assert sigma(k, n) == expected


def test_sigma_rejects_nonpositive():
    with pytest.raises(ValueError):
        sigma(3, 0)


def test_j_leading_coefficients():
    j = j_expansion(2)
    assert (j[-1], j[0], j[1]) == (1, 744, 196884)
    assert j[2] == 21493760


def test_j_matches_naive_oracle():
    N = 30
    j = j_expansion(N)
    assert [int(j[n]) for n in range(-1, N + 1)] == j_coefficients_naive(N)


def test_j_truncated_below_constant_term():
    j = j_expansion(-1)
    assert j.lead == -1 and j.trunc == -1 and j[-1] == 1


def test_j_integral_and_stable():
    a, b = j_expansion(40), j_expansion(45)
    assert a.is_integral()
    assert a.coefficients(-1, 40) == b.coefficients(-1, 40)


def test_e14_numerator():
    e = e14_numerator(3)
    assert e[0] == 1 and e[1] == -24 and e[2] == -24 * 8193


def test_majorant_dominates_coefficients():
    j = j_expansion(200)
    for n in range(1, 201):
        assert abs(j[n]) <= j_coefficient_majorant(n), n


def test_arc_point_geometry():
    for p in arc_grid(50):
        assert abs(p.tau_re**2 + p.tau_im**2 - 1) < 1e-15
        assert 0 <= p.tau_re <= 0.5 + 1e-15
        assert math.sqrt(3) / 2 - 1e-15 <= p.tau_im <= 1


def test_arc_point_rejects_off_arc_theta():
    with pytest.raises(ValueError):
        ArcPoint(1.0)


def test_j_at_corners():
    assert abs(j_on_arc(ArcPoint(THETA_I)) - 1728) < 1e-9
    assert abs(j_on_arc(ArcPoint(THETA_RHO))) < 1e-9


def test_j_at_corners_high_truncation_oracle():
    # more terms change nothing at this precision
    for theta in (THETA_I, THETA_RHO, 1.8):
        a = evaluate_j_on_arc(ArcPoint(theta), 30).value
        b = evaluate_j_on_arc(ArcPoint(theta), 120).value
        assert abs(a - b) < 1e-10


def test_j_real_on_arc():
    for p in arc_grid(100):
        assert abs(evaluate_j_on_arc(p).imag) < 1e-9


def test_j_decreasing_on_arc():
    vals = [j_on_arc(p) for p in arc_grid(1000)]
    assert all(a > b for a, b in zip(vals, vals[1:]))


def test_short_truncation_is_flagged():
    with pytest.raises(ArcEvaluationError, match="arc evaluation inconsistent"):
        j_on_arc(ArcPoint(1.8), N=2)
