"""Exponential-divisor arithmetic functions.

Each function of the family (tau_e, sigma_e, phi_e, sigma_tilde, p_tilde,
q_k_e) is available in two independent forms: the multiplicative prime-power
formula, and a brute-force definitional oracle (suffixed ``_oracle`` or built
on ``exponential_divisors``).  The oracles are deliberately slow and capped;
the test suite cross-checks the two routes exactly.

A "d exponentially divides n" (d |_e n) means: same prime set, and each
exponent of d divides the corresponding exponent of n.  By convention
1 |_e 1, and 1 is not an exponential divisor of any n > 1.
"""

from __future__ import annotations

import math
from itertools import product

from .arith import Factorization, divisors, euler_phi, factor, is_k_free, kappa

P_TILDE_ORACLE_CAP = 10**5
PHI_E_SANDOR_CAP = 10**6


class NoCommonStructure(ValueError):
    """Raised when the greatest common exponential divisor does not exist."""


def _fz(n: int | Factorization) -> Factorization:
    return n if isinstance(n, Factorization) else factor(n)


def exponential_divisors(n: int | Factorization) -> list[int]:
    """All exponential divisors of n, ascending; [1] for n = 1."""
    f = _fz(n)
    if f.value == 1:
        return [1]
    choices = [[p**c for c in divisors(a)] for p, a in f.parts]
    return sorted(math.prod(t) for t in product(*choices))


def tau_e(n: int | Factorization) -> int:
    """Number of exponential divisors; multiplicative with tau_e(p^a) = d(a)."""
    f = _fz(n)
    return math.prod(len(divisors(a)) for _, a in f.parts)


def sigma_e(n: int | Factorization) -> int:
    """Sum of exponential divisors; multiplicative with sigma_e(p^a) = sum of p^c, c | a."""
    f = _fz(n)
    return math.prod(sum(p**c for c in divisors(a)) for p, a in f.parts)


def gcd_exponential(n: int | Factorization, m: int | Factorization) -> int:
    """Greatest common exponential divisor of n and m.

    Defined for n = m = 1 (result 1) and for n, m > 1 with identical prime
    sets; otherwise raises NoCommonStructure.
    """
    fn, fm = _fz(n), _fz(m)
    if fn.value == 1 and fm.value == 1:
        return 1
    if fn.primes != fm.primes:
        raise NoCommonStructure(
            f"({fn.value},{fm.value})_(e) does not exist: prime sets differ"
        )
    g = 1
    for (p, a), (_, b) in zip(fn.parts, fm.parts):
        g *= p ** math.gcd(a, b)
    return g


def is_exp_coprime(n: int | Factorization, m: int | Factorization) -> bool:
    """True iff n, m have the same prime set with componentwise coprime exponents.

    Total: (1,1) is exponentially coprime, (1, m>1) and mismatched prime sets
    are simply not.
    """
    fn, fm = _fz(n), _fz(m)
    if fn.primes != fm.primes:
        return False
    return all(
        math.gcd(a, b) == 1 for (_, a), (_, b) in zip(fn.parts, fm.parts)
    )


def phi_e(n: int | Factorization) -> int:
    """Product of phi over the exponents; counts divisors of n exponentially coprime to n."""
    f = _fz(n)
    return math.prod(euler_phi(a) for _, a in f.parts)


def sigma_tilde_pp(p: int, a: int) -> int:
    """sigma_tilde at a prime power: sum of p^c over 1 <= c <= a with gcd(c,a) = 1."""
    return sum(p**c for c in range(1, a + 1) if math.gcd(c, a) == 1)


def sigma_tilde(n: int | Factorization) -> int:
    """Sum of the divisors of n that are exponentially coprime to n (multiplicative form)."""
    f = _fz(n)
    return math.prod(sigma_tilde_pp(p, a) for p, a in f.parts)


def p_tilde_pp(p: int, a: int) -> int:
    """p_tilde at a prime power via the divisor form sum_{d|a} p^d phi(a/d)."""
    return sum(p**d * euler_phi(a // d) for d in divisors(a))


def p_tilde_pp_gcd(p: int, a: int) -> int:
    """Second closed form: sum_{1<=c<=a} p^gcd(c,a).  Must equal p_tilde_pp."""
    return sum(p ** math.gcd(c, a) for c in range(1, a + 1))


def p_tilde(n: int | Factorization) -> int:
    """Exponential analogue of Pillai's gcd-sum function (multiplicative form)."""
    f = _fz(n)
    return math.prod(p_tilde_pp(p, a) for p, a in f.parts)


def p_tilde_oracle(n: int) -> int:
    """Kernel-restricted gcd sum: over j with kappa(j) = kappa(n) and every
    exponent of j at most the matching exponent of n, add (j,n)_(e).

    At a prime power this is sum_{1<=c<=a} p^gcd(c,a), the Pillai-style sum
    over the range 1..p^a; in general the range is the componentwise exponent
    box, the only reading under which the sum is multiplicative and agrees
    with the prime-power table (the literal "j <= n" range first disagrees at
    n = 18, where it gives 30 against the multiplicative value 24).
    Capped at 10**5; enumerates j by walking the exponent lattice rather than
    scanning 1..n.
    """
    if isinstance(n, Factorization):
        n = n.value
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > P_TILDE_ORACLE_CAP:
        raise ValueError(f"oracle capped at {P_TILDE_ORACLE_CAP}")
    fn = factor(n)
    total = 0
    for j in _same_kernel_boxed(fn.parts):
        total += gcd_exponential(factor(j), fn)
    return total


def _same_kernel_upto(primes: tuple[int, ...], bound: int) -> list[int]:
    """All j <= bound whose prime set is exactly `primes` (j = 1 when primes is empty)."""
    vals = [1]
    for p in primes:
        nxt = []
        for v in vals:
            w = v * p
            while w <= bound:
                nxt.append(w)
                w *= p
        vals = nxt
    return vals


def _same_kernel_boxed(parts: tuple[tuple[int, int], ...]) -> list[int]:
    """All j with prime set exactly that of `parts` and exponents bounded
    componentwise by it (j = 1 when parts is empty)."""
    vals = [1]
    for p, a in parts:
        nxt = []
        for v in vals:
            w = v * p
            for _ in range(a):
                nxt.append(w)
                w *= p
        vals = nxt
    return vals


def q_k_e(n: int | Factorization, k: int) -> int:
    """Indicator of exponentially k-free integers: 1 iff every exponent is k-free."""
    if k < 2:
        raise ValueError("k must be >= 2")
    f = _fz(n)
    return 1 if all(is_k_free(a, k) for _, a in f.parts) else 0


def phi_e_sandor(n: int) -> int:
    """Sandor's count of 1 < a <= n exponentially coprime to n; 1 for n = 1.

    Not multiplicative.  The upper end is taken inclusive: a = n counts when
    n is squarefree, which is what makes phi_e_sandor(p^a) = phi(a) and
    phi_e_sandor(n) >= phi_e(n) hold (both checked in the tests).

    Note phi_e_sandor(72) = 4: the qualifying integers are 6, 12, 48 and 54
    (54 = 2*3^3 is easy to overlook, but gcd(1,3) = gcd(3,2) = 1).
    """
    if isinstance(n, Factorization):
        n = n.value
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > PHI_E_SANDOR_CAP:
        raise ValueError(f"oracle capped at {PHI_E_SANDOR_CAP}")
    if n == 1:
        return 1
    fn = factor(n)
    count = 0
    for a in _same_kernel_upto(fn.primes, n):
        if a > 1 and is_exp_coprime(factor(a), fn):
            count += 1
    return count


def phi_e_divisor_count_oracle(n: int) -> int:
    """Brute-force phi_e: number of divisors d of n with d, n exponentially coprime."""
    fn = _fz(n)
    return sum(1 for d in divisors(fn.value) if is_exp_coprime(factor(d), fn))


def sigma_tilde_oracle(n: int) -> int:
    """Brute-force sigma_tilde: sum of divisors d of n exponentially coprime to n."""
    fn = _fz(n)
    return sum(d for d in divisors(fn.value) if is_exp_coprime(factor(d), fn))
