"""Brute-force reference computations, independent of the package code paths."""

from fractions import Fraction


def partitions_brute(n, max_part=None):
    """Count partitions of n by explicit recursive enumeration."""
    if max_part is None:
        max_part = n
    if n == 0:
        return 1
    return sum(partitions_brute(n - part, part) for part in range(1, min(n, max_part) + 1))


def enumerate_partitions(n, max_part=None):
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for part in range(min(n, max_part), 0, -1):
        for rest in enumerate_partitions(n - part, part):
            yield (part,) + rest


def partitions_without_ones(n):
    return sum(1 for p in enumerate_partitions(n) if 1 not in p)


def j_coefficients_naive(N):
    """c(-1) .. c(N) of j from plain integer lists: E4^3 divided by prod (1-q^n)^24."""
    M = N + 2
    e4 = [1] + [240 * sum(d**3 for d in range(1, n + 1) if n % d == 0) for n in range(1, M)]

    def polymul(a, b):
        out = [0] * M
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                if i + j < M:
                    out[i + j] += x * y
        return out

    num = polymul(polymul(e4, e4), e4)
    den = [1] + [0] * (M - 1)
    for n in range(1, M):
        factor = [0] * M
        factor[0] = 1
        factor[n] = -1
        for _ in range(24):
            den = polymul(den, factor)
    quo = [0] * M
    rem = list(num)
    for i in range(M):
        quo[i] = rem[i]  # den[0] == 1
        for j in range(i, M):
            rem[j] -= quo[i] * den[j - i]
    return quo[: N + 2]


def count_sign_changes(p, lo, hi, samples=20000):
    """Roots of p in (lo, hi) estimated by sign changes on a dense rational grid."""
    lo, hi = Fraction(lo), Fraction(hi)
    step = (hi - lo) / samples
    prev = None
    changes = 0
    for i in range(samples + 1):
        v = p(lo + i * step)
        s = (v > 0) - (v < 0)
        if s == 0:
            continue
        if prev is not None and s != prev:
            changes += 1
        prev = s
    return changes
