"""High-throughput sieving of multiplicative functions and exact summatory sums.

The workhorse is a segmented, vectorized multi-pass sieve: for every prime
p <= sqrt(N) and every power p^a, the entries with p-adic valuation exactly a
are multiplied by the prime-power value in one numpy operation.  The part of
each n coming from primes > sqrt(N) is a single prime, recovered arithmetically
as n // (smooth part), so no loop over the ~N/log N large primes is needed.

Exactness: values are int64 and bounded by ~6n for every built-in function
(sigma_e(n) <= sigma(n) < 6n for n <= 1e9; p_tilde(n) <= n * prod(1+1/p) < 5n
by the sup bound rho(p) = 1+1/p; the others are <= n), so no overflow below
the 1e8 capacity cap.  Per-segment cumulative sums stay below 6e8 * 2^22 ~
2.5e15 < 2^63; cross-segment accumulation uses Python ints (arbitrary
precision), which is where 128-bit-plus totals live.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterator

import numpy as np

from .arith import divisors, euler_phi, primes_up_to
from .dirichlet import ArithSeq
from . import expfun

SIEVE_CAP = 10**8
FULL_ARRAY_CAP = 5 * 10**7
DEFAULT_SEGMENT = 1 << 22


class CapacityError(Exception):
    """Requested range exceeds the documented sieve/memory capacity."""


@dataclass(frozen=True)
class MultiplicativeSpec:
    """A multiplicative function given by its prime-power values.

    g1_form describes g(p, 1) as a function of p, which is all the sieve
    needs for primes above sqrt(N): "const" (independent of p), "linear"
    (equal to p), or "generic" (arbitrary; disables segmented fast path).
    """

    name: str
    prime_power_value: Callable[[int, int], int]
    prime_independent: bool
    g1_form: str = "const"

    def value_at(self, fz) -> int:
        """Pointwise evaluation on a Factorization (the slow cross-check route)."""
        out = 1
        for p, a in fz.parts:
            out *= self.prime_power_value(p, a)
        return out


def _qke_pp(k: int) -> Callable[[int, int], int]:
    from .arith import is_k_free

    return lambda p, a: 1 if is_k_free(a, k) else 0


def qke_spec(k: int) -> MultiplicativeSpec:
    if k < 2:
        raise ValueError("k must be >= 2")
    return MultiplicativeSpec(f"q{k}e", _qke_pp(k), True, "const")


SPECS: dict[str, MultiplicativeSpec] = {
    "phi_e": MultiplicativeSpec("phi_e", lambda p, a: euler_phi(a), True, "const"),
    "sigma_tilde": MultiplicativeSpec(
        "sigma_tilde", expfun.sigma_tilde_pp, False, "linear"
    ),
    "p_tilde": MultiplicativeSpec("p_tilde", expfun.p_tilde_pp, False, "linear"),
    "tau_e": MultiplicativeSpec(
        "tau_e", lambda p, a: len(divisors(a)), True, "const"
    ),
    "sigma_e": MultiplicativeSpec(
        "sigma_e", lambda p, a: sum(p**c for c in divisors(a)), False, "linear"
    ),
    "q2e": qke_spec(2),
    "q3e": qke_spec(3),
}


@dataclass(frozen=True)
class SummatoryGrid:
    """Exact partial sums S(x) at increasing grid points."""

    points: tuple[tuple[int, int], ...]

    def xs(self) -> list[int]:
        return [x for x, _ in self.points]

    def sums(self) -> list[int]:
        return [s for _, s in self.points]


def _segments(
    spec: MultiplicativeSpec, N: int, seg_len: int = DEFAULT_SEGMENT
) -> Iterator[tuple[int, np.ndarray]]:
    """Yield (lo, values) with values[i] = f(lo + i), covering 1..N in order."""
    if N > SIEVE_CAP:
        raise CapacityError(f"N={N} above sieve capacity {SIEVE_CAP}")
    root = math.isqrt(N)
    small_primes = (
        [int(p) for p in primes_up_to(root).primes] if root >= 2 else []
    )
    ppv = spec.prime_power_value
    if spec.g1_form == "generic" and N > seg_len:
        raise CapacityError("generic g(p,1) form requires a single segment")

    lo = 1
    while lo <= N:
        hi = min(lo + seg_len - 1, N)
        size = hi - lo + 1
        vals = np.ones(size, dtype=np.int64)
        smooth = np.ones(size, dtype=np.int64)
        for p in small_primes:
            pa, a = p, 1
            while pa <= hi:
                start = ((lo + pa - 1) // pa) * pa
                if start <= hi:
                    idx = np.arange(start, hi + 1, pa)
                    if pa * p <= hi:
                        # keep only n with p-adic valuation exactly a
                        idx = idx[(idx // pa) % p != 0]
                    if idx.size:
                        g = ppv(p, a)
                        off = idx - lo
                        vals[off] *= g
                        smooth[off] *= pa
                pa *= p
                a += 1
        n_arr = np.arange(lo, hi + 1, dtype=np.int64)
        rem = n_arr // smooth  # 1, or the unique prime factor > sqrt(N)
        if spec.g1_form == "linear":
            vals *= rem
        elif spec.g1_form == "const":
            c = ppv(2, 1)
            if c != 1:
                vals[rem > 1] *= c
        else:
            big = rem > 1
            for p in np.unique(rem[big]):
                vals[rem == p] *= ppv(int(p), 1)
        yield lo, vals
        lo = hi + 1


def sieve_values(
    spec: MultiplicativeSpec, N: int, seg_len: int = DEFAULT_SEGMENT
) -> ArithSeq:
    """Dense values f(1..N) as an int64-backed ArithSeq."""
    if N < 1:
        raise ValueError("N must be >= 1")
    if N > FULL_ARRAY_CAP:
        raise CapacityError(f"dense output capped at {FULL_ARRAY_CAP}; use summatory()")
    out = np.zeros(N + 1, dtype=np.int64)
    for lo, vals in _segments(spec, N, seg_len):
        out[lo : lo + vals.size] = vals
    return ArithSeq(N, out)


def summatory(
    spec: MultiplicativeSpec,
    grid: list[int],
    seg_len: int = DEFAULT_SEGMENT,
) -> SummatoryGrid:
    """Exact S(x) = sum_{n<=x} f(n) at each grid point, in one streamed pass."""
    xs = sorted(set(int(x) for x in grid))
    if not xs or xs[0] < 1:
        raise ValueError("grid points must be positive integers")
    N = xs[-1]
    points = []
    total = 0
    it = iter(xs)
    nxt = next(it)
    for lo, vals in _segments(spec, N, seg_len):
        hi = lo + vals.size - 1
        cs = None
        while nxt is not None and nxt <= hi:
            if cs is None:
                cs = np.cumsum(vals)  # bounded ~2.5e15, no int64 overflow
            points.append((nxt, total + int(cs[nxt - lo])))
            nxt = next(it, None)
        total += int(cs[-1]) if cs is not None else int(np.sum(vals))
    return SummatoryGrid(tuple(points))


def summatory_value(spec: MultiplicativeSpec, x: int) -> int:
    return summatory(spec, [x]).points[0][1]


def tau13_summatory(x: int) -> int:
    """Exact sum of tau(1,3,n) for n <= x, in O(x^(1/3)) time."""
    if x < 1:
        raise ValueError("x must be >= 1")
    total = 0
    b = 1
    while b**3 <= x:
        total += x // b**3
        b += 1
    return total


def petermann_wu_sum(x: int) -> int:
    """Exact sum of m*n over m*n^2 <= x, in O(sqrt(x)) time."""
    if x < 1:
        raise ValueError("x must be >= 1")
    total = 0
    n = 1
    while n * n <= x:
        k = x // (n * n)
        total += n * (k * (k + 1) // 2)
        n += 1
    return total


def shifted_prime_sum(x: int) -> int:
    """Exact sum of phi_e(p-1) over primes p <= x."""
    if x < 2:
        return 0
    if x > FULL_ARRAY_CAP:
        raise CapacityError(f"shifted_prime_sum capped at {FULL_ARRAY_CAP}")
    vals = sieve_values(SPECS["phi_e"], x).values
    primes = primes_up_to(x).primes
    # phi_e(n) <= d(n), so the int64 partial sum cannot overflow
    return int(np.sum(vals[primes - 1]))


def parse_grid(text: str) -> list[int]:
    """Grid syntax: "x0:xmax:ratio" (geometric, xmax included) or a comma list."""
    text = text.strip()
    if ":" in text:
        fields = text.split(":")
        if len(fields) != 3:
            raise ValueError("geometric grid must be start:stop:ratio")
        x0, xmax, r = (float(f) for f in fields)
        if x0 < 1 or xmax < x0 or r <= 1:
            raise ValueError("need 1 <= start <= stop and ratio > 1")
        pts = []
        x = x0
        while x < xmax * (1 - 1e-12):
            pts.append(round(x))
            x *= r
        pts.append(round(xmax))
        return sorted(set(pts))
    return sorted(set(round(float(f)) for f in text.split(",")))
