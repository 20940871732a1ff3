"""Exact integer substrate: factorization, classical multiplicative functions, prime tables.

Everything here is exact (Python ints / int arrays) and pure.  The factorization
routine is deterministic: trial division by tabulated primes, then a
deterministic Miller-Rabin check and Brent-rho splitting for larger cofactors.
Inputs above 2**63 are rejected; big-integer values appear only downstream
(primorial harnesses construct their Factorization objects directly).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

FACTOR_LIMIT = 2**63
PRIME_TABLE_CAP = 10**8  # practical cap for the spf array (int32, ~400 MB)

_TRIAL_TABLE_LIMIT = 10**6


@dataclass(frozen=True)
class Factorization:
    """Canonical form of a positive integer as a sorted (prime, exponent) list."""

    value: int
    parts: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.value < 1:
            raise ValueError("value must be a positive integer")
        prev = 0
        prod = 1
        for p, a in self.parts:
            if p <= prev:
                raise ValueError("primes must be strictly increasing")
            if a < 1:
                raise ValueError("exponents must be >= 1")
            prev = p
            prod *= p**a
        if prod != self.value:
            raise ValueError("parts do not multiply to value")

    @classmethod
    def from_parts(cls, parts) -> "Factorization":
        parts = tuple(sorted((int(p), int(a)) for p, a in parts))
        value = 1
        for p, a in parts:
            value *= p**a
        return cls(value, parts)

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.parts)

    @property
    def exponents(self) -> tuple[int, ...]:
        return tuple(a for _, a in self.parts)


@dataclass(frozen=True)
class PrimeTable:
    """All primes <= limit plus a smallest-prime-factor array.

    spf[n] is the smallest prime dividing n (n >= 2); spf[0] = spf[1] = 0.
    The spf array is what the multiplicative sieve builds on.
    """

    limit: int
    primes: np.ndarray
    spf: np.ndarray

    def is_prime(self, n: int) -> bool:
        if n < 2 or n > self.limit:
            raise ValueError("n outside table range")
        return int(self.spf[n]) == n


def primes_up_to(limit: int) -> PrimeTable:
    """Build the complete PrimeTable for 2..limit."""
    if limit < 2:
        raise ValueError("limit must be >= 2")
    if limit > PRIME_TABLE_CAP:
        raise ValueError(f"limit above practical cap {PRIME_TABLE_CAP}")
    spf = np.zeros(limit + 1, dtype=np.int32)
    for p in range(2, math.isqrt(limit) + 1):
        if spf[p] == 0:
            sl = spf[p * p :: p]
            sl[sl == 0] = p
    # untouched entries >= 2 are prime
    rest = np.nonzero(spf == 0)[0]
    spf[rest] = rest
    spf[0] = spf[1] = 0
    idx = np.arange(limit + 1, dtype=np.int32)
    primes = np.nonzero((spf == idx) & (idx >= 2))[0].astype(np.int64)
    return PrimeTable(limit=limit, primes=primes, spf=spf)


_trial_primes: list[int] | None = None


def _get_trial_primes() -> list[int]:
    global _trial_primes
    if _trial_primes is None:
        _trial_primes = [int(p) for p in primes_up_to(_TRIAL_TABLE_LIMIT).primes]
    return _trial_primes


# Deterministic witness set: correct for all n < 3.3 * 10**24 (covers 2**63).
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic strong-pseudoprime test, exact for n <= 2**63."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _brent_rho(n: int) -> int:
    """Find a nontrivial factor of composite odd n (deterministic seed sweep)."""
    if n % 2 == 0:
        return 2
    for c in range(1, 100):
        y, m = 2, 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"rho failed to split {n}")  # not reachable for n <= 2**63


def _factor_large(n: int, out: dict[int, int]) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    d = _brent_rho(n)
    _factor_large(d, out)
    _factor_large(n // d, out)


def factor(n: int) -> Factorization:
    """Canonical factorization of n, 1 <= n <= 2**63."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > FACTOR_LIMIT:
        raise ValueError("n above the 2**63 factoring contract")
    value = n
    out: dict[int, int] = {}
    for p in _get_trial_primes():
        if p * p > n:
            break
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    if n > 1:
        if n < _TRIAL_TABLE_LIMIT**2:
            # cofactor survived trial division below its square root: prime
            out[n] = out.get(n, 0) + 1
        else:
            _factor_large(n, out)
    return Factorization(value, tuple(sorted(out.items())))


def euler_phi(a: int) -> int:
    """Euler totient: count of 1 <= c <= a coprime to a."""
    if a < 1:
        raise ValueError("a must be >= 1")
    result = a
    for p, _ in factor(a).parts:
        result -= result // p
    return result


def mobius(n: int) -> int:
    """Mobius function: 0 on non-squarefree n, else (-1)^omega(n)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    f = factor(n)
    if any(a >= 2 for _, a in f.parts):
        return 0
    return -1 if len(f.parts) % 2 else 1


def kappa(n: int) -> int:
    """Squarefree kernel: product of the distinct primes dividing n; kappa(1) = 1."""
    if n < 1:
        raise ValueError("n must be >= 1")
    k = 1
    for p, _ in factor(n).parts:
        k *= p
    return k


def is_k_free(a: int, k: int) -> bool:
    """True iff no prime q has q**k | a (k >= 2)."""
    if a < 1:
        raise ValueError("a must be >= 1")
    if k < 2:
        raise ValueError("k must be >= 2")
    return all(e < k for _, e in factor(a).parts)


def omega_counts(n: int) -> tuple[int, int]:
    """(number of distinct prime factors, number of prime-power factors)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    f = factor(n)
    return len(f.parts), sum(a for _, a in f.parts)


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    divs = [1]
    for p, a in factor(n).parts:
        divs = [d * p**e for d in divs for e in range(a + 1)]
    return sorted(divs)
