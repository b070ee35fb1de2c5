"""Exit criteria, one test per criterion; a PASS/FAIL summary line for each is
printed at the end of the pytest run."""

import math
import time

import pytest

from extremal_zeros.condition import check_hypothesis, threshold
from extremal_zeros.extremal import construct, expand_in_q, proof_bound, residual_on_arc, verify_principal_part
from extremal_zeros.faber import faber_by_genfun, faber_by_reduction, faber_crosscheck, j_powers
from extremal_zeros.modforms import ArcPoint, arc_grid, evaluate_j_on_arc, j_on_arc
from extremal_zeros.partitions import kane_bound, partition_numbers, witten_stream
from extremal_zeros.qseries import product_expansion
from extremal_zeros.ratpoly import RatPoly
from extremal_zeros.roots import certify
from oracles import partitions_brute

M_UPPER = 1.12
W = witten_stream(60)


@pytest.mark.acceptance("1", "Faber cross-check k <= 40, F_1 and F_2 verbatim, < 30 s")
def test_faber_crosscheck():
    t0 = time.perf_counter()
    assert faber_crosscheck(40)
    elapsed = time.perf_counter() - t0
    F = faber_by_genfun(2)
    assert F[1] == RatPoly.from_descending([1, -744]) == faber_by_reduction(1)
    assert F[2] == RatPoly.from_descending([1, -1488, 159768]) == faber_by_reduction(2)
    print(f"cross-check k<=40 in {elapsed:.2f} s")
    assert elapsed < 30


@pytest.mark.acceptance("2", "Cusp condition F_k(j) = q^-k + O(q) for k <= 20, exact")
def test_cusp_condition():
    powers = j_powers(20, 2)
    for k in range(21):
        s = expand_in_q(faber_by_reduction(k, powers), 2)
        assert s.trunc >= 2
        assert s[-k] == 1
        assert all(s[e] == 0 for e in range(-k + 1, 1)), k


@pytest.mark.acceptance("3", "Principal part q^-k A(q) for witten k <= 20, incl. constant a(k)")
def test_principal_part():
    prod = product_expansion(lambda n: -1 if n >= 2 else 0, 20)
    for k in range(1, 21):
        f = construct(W, k)
        assert verify_principal_part(f), k
        s = expand_in_q(f.poly, 0)
        assert s.coefficients(-k, 0) == prod.coefficients(0, k)


@pytest.mark.acceptance("4", "Hypothesis certificate: witten S_upper < 2e-5 < threshold(1.12), N = 50")
def test_hypothesis_certificate():
    rep = check_hypothesis(W, 50, M_UPPER)
    print(f"S_upper={rep.S_upper:.6e} (tail {rep.tail_bound:.2e}) threshold={rep.threshold:.6f}")
    assert rep.S_upper < 2e-5 < rep.threshold
    assert rep.threshold == threshold(M_UPPER)
    assert rep.threshold == pytest.approx(0.28205, abs=1e-5)
    assert rep.tail_bound >= 0 and math.isfinite(rep.tail_bound)
    assert rep.verdict


@pytest.mark.acceptance("5", "Zero certification k = 1..25 (count, segments, corners), < 5 min")
def test_zero_certification():
    t0 = time.perf_counter()
    hyp = check_hypothesis(W, 50, M_UPPER)
    spread = {}
    for k in range(1, 26):
        c = certify(construct(W, k), hypothesis=hyp)
        assert c.count_proof == k and len(c.roots) == k
        assert sorted(c.segments) == list(range(1, k + 1))
        assert c.corner_check == (True, True)
        assert all(0 < r.iso_lo < r.iso_hi < 1728 for r in c.roots)
        spread[k] = sorted(r.j_approx for r in c.roots)
    elapsed = time.perf_counter() - t0
    for k in (5, 25):
        js = spread[k]
        print(f"Z_{k}: {len(js)} roots in [{js[0]:.4f}, {js[-1]:.4f}]")
        assert js[0] < 1728 / k and js[-1] > 1728 * (1 - 1 / k)
    print(f"k=1..25 certified in {elapsed:.1f} s")
    assert elapsed < 300


@pytest.mark.acceptance("6", "Spot values: k=1 root 744 exactly; k=2 roots (1488 +- sqrt 1575068)/2 within 1e-9")
def test_spot_values():
    (r,) = certify(construct(W, 1)).roots
    assert r.j_approx == 744.0
    c2 = sorted(r.j_approx for r in certify(construct(W, 2)).roots)
    d = math.sqrt(1575068)
    assert abs(c2[0] - (1488 - d) / 2) < 1e-9
    assert abs(c2[1] - (1488 + d) / 2) < 1e-9


@pytest.mark.acceptance("7", "Arc geometry: j(i)=1728, j(rho)=0 within 1e-9, decreasing, imag < 1e-9")
def test_arc_geometry():
    assert abs(j_on_arc(ArcPoint(math.pi / 2)) - 1728) < 1e-9
    assert abs(j_on_arc(ArcPoint(2 * math.pi / 3))) < 1e-9
    grid = arc_grid(1000)
    vals = [evaluate_j_on_arc(p) for p in grid]
    assert all(a.value > b.value for a, b in zip(vals, vals[1:]))
    assert max(abs(v.imag) for v in vals) < 1e-9


@pytest.mark.acceptance("8", "Sampled R_k for witten k <= 10 on 4096 points: < 2 and < M + (2+M) S_upper")
def test_proof_inequality_sampling():
    S = check_hypothesis(W, 50, M_UPPER).S_upper
    bound = proof_bound(M_UPPER, S)
    grid = arc_grid(4096)
    failures = []
    for k in range(1, 11):
        rmax = max(residual_on_arc(construct(W, k), grid))
        print(f"k={k:2d} max R_k={rmax:.6f} margin to 2: {2 - rmax:.6f}  margin to bound {bound:.6f}: {bound - rmax:+.6f}")
        if not rmax < 2:
            failures.append((k, "not < 2"))
        if not rmax < bound:
            failures.append((k, "not < M + (2+M) S"))
    assert not failures, failures


@pytest.mark.acceptance("9", "Partition oracle: p(n) vs enumeration n <= 30, Kane n <= 200, witten vs product n <= 50")
def test_partition_oracle():
    assert partition_numbers(30) == [partitions_brute(n) for n in range(31)]
    p = partition_numbers(200)
    assert all(p[n] < kane_bound(n) for n in range(1, 201))
    prod = product_expansion(lambda m: -1 if m >= 2 else 0, 50)
    assert [W.a(n) for n in range(1, 51)] == [prod[n] for n in range(1, 51)]
