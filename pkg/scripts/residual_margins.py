"""Sampled max of R_k(tau) = |f_k e^{-2 pi k Im tau} - 2 cos(2 pi k Re tau)| on the arc,
for Witten's stream and for plain Faber polynomials (the all-zero stream).

The Faber column is a sampled estimate of the constant M; its k = 1 row sits
at the corner tau = exp(pi i/3), where R_1 = 744 exp(-pi sqrt 3) - 2.
"""

import argparse

from extremal_zeros.condition import DEFAULT_M_UPPER, check_hypothesis
from extremal_zeros.extremal import construct, proof_bound, residual_on_arc
from extremal_zeros.modforms import arc_grid
from extremal_zeros.partitions import explicit_stream, witten_stream


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--kmax", type=int, default=10)
    ap.add_argument("--grid", type=int, default=4096)
    ap.add_argument("--m-upper", type=float, default=DEFAULT_M_UPPER)
    args = ap.parse_args()

    w = witten_stream(max(args.kmax, 50))
    S = check_hypothesis(w, 50, args.m_upper).S_upper
    bound = proof_bound(args.m_upper, S)
    grid = arc_grid(args.grid)
    zero = explicit_stream([])
    print(f"# M_upper={args.m_upper}  S_upper={S:.6e}  M+(2+M)S={bound:.6f}  grid={len(grid)}")
    print("k\tmax_R_witten\tmax_R_faber\tmargin_to_bound")
    for k in range(1, args.kmax + 1):
        rw = max(residual_on_arc(construct(w, k), grid))
        rf = max(residual_on_arc(construct(zero, k), grid))
        print(f"{k}\t{rw:.8f}\t{rf:.8f}\t{bound - rw:+.8f}")


if __name__ == "__main__":
    main()
