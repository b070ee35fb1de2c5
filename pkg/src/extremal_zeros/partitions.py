"""Partition numbers, Kane's explicit upper bound, and Witten's coefficient stream."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from pathlib import Path
from typing import Iterable

from ._rounding import interval_precision, upper_float


class InsufficientCoefficientsError(ValueError):
    pass


@lru_cache(maxsize=8)
def _partition_table(N: int) -> tuple[int, ...]:
    p = [0] * (N + 1)
    p[0] = 1
    for n in range(1, N + 1):
        total = 0
        m = 1
        while True:
            g1 = m * (3 * m - 1) // 2
            if g1 > n:
                break
            sign = 1 if m % 2 else -1
            total += sign * p[n - g1]
            g2 = m * (3 * m + 1) // 2
            if g2 <= n:
                total += sign * p[n - g2]
            m += 1
        p[n] = total
    return tuple(p)


def partition_numbers(N: int) -> list[int]:
    """p(0) .. p(N) by Euler's pentagonal number recurrence."""
    if N < 0:
        raise ValueError("N must be >= 0")
    return list(_partition_table(N))


def kane_bound(n: int) -> float:
    """(5.5/n) exp(pi sqrt(2n/3)), rounded upward to a double."""
    if n <= 0:
        raise ValueError(f"kane_bound needs n >= 1, got {n}")
    with interval_precision() as iv:
        val = iv.mpf(11) / (2 * n) * iv.exp(iv.pi * iv.sqrt(iv.mpf(2 * n) / 3))
    return upper_float(val)


@dataclass(frozen=True)
class CoeffStream:
    """Coefficients a(1), a(2), ... of A(q) = 1 + a(1) q + a(2) q^2 + ...

    An ``explicit`` stream is a finite list; a(n) = 0 past its end. A
    ``witten`` stream is a prefix of an infinite sequence and asking past the
    prefix is an error.
    """

    values: tuple[Fraction, ...]
    source: str = "explicit"

    def __post_init__(self):
        if self.source not in ("witten", "explicit"):
            raise ValueError(f"unknown stream source {self.source!r}")
        if self.source == "witten" and self.values:
            if self.values[0] != 0 or any(v < 0 for v in self.values):
                raise ValueError("witten stream must have a(1) = 0 and a(n) >= 0")

    @property
    def finite(self) -> bool:
        return self.source == "explicit"

    def __len__(self):
        return len(self.values)

    def a(self, n: int) -> Fraction:
        if n < 1:
            raise IndexError("stream is indexed from n = 1")
        if n <= len(self.values):
            return self.values[n - 1]
        if self.finite:
            return Fraction(0)
        raise InsufficientCoefficientsError(
            f"{self.source} stream has {len(self.values)} coefficients, a({n}) requested"
        )

    def q_series_coeffs(self, k: int) -> list[Fraction]:
        """[1, a(1), ..., a(k)], the coefficients of A(q) through q^k."""
        return [Fraction(1)] + [self.a(n) for n in range(1, k + 1)]

    def extended(self, N: int) -> "CoeffStream":
        """Same stream with at least N known coefficients (witten only regrows)."""
        if self.source == "witten" and len(self.values) < N:
            return witten_stream(N)
        return self


def explicit_stream(values: Iterable) -> CoeffStream:
    return CoeffStream(tuple(Fraction(v) for v in values), "explicit")


def witten_stream(N: int) -> CoeffStream:
    """a(n) = p(n) - p(n-1): partitions of n with no part equal to 1."""
    if N < 1:
        raise ValueError("N must be >= 1")
    p = _partition_table(N)
    return CoeffStream(tuple(Fraction(p[n] - p[n - 1]) for n in range(1, N + 1)), "witten")


def read_stream_file(path: str | Path) -> CoeffStream:
    """Parse lines ``n a(n)`` (rational a(n), e.g. ``3 -1/2``); ``#`` starts a comment.

    Indices not listed are zero.
    """
    entries: dict[int, Fraction] = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"{path}:{lineno}: expected 'n a(n)', got {raw!r}")
        n = int(parts[0])
        if n < 1:
            raise ValueError(f"{path}:{lineno}: index must be >= 1")
        if n in entries:
            raise ValueError(f"{path}:{lineno}: duplicate index {n}")
        entries[n] = Fraction(parts[1])
    size = max(entries, default=0)
    return explicit_stream(entries.get(n, 0) for n in range(1, size + 1))


def stream_from_spec(spec: str, N: int) -> CoeffStream:
    """``"witten"`` or a path to an explicit coefficient file."""
    if spec == "witten":
        return witten_stream(max(N, 1))
    return read_stream_file(spec)
