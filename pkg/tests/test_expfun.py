import pytest

from expdiv import arith, expfun

PRIMES_TO_50 = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]


def brute_exp_divisors(n: int) -> list[int]:
    """Definition-level enumeration: same primes, each exponent divides."""
    if n == 1:
        return [1]
    fz = arith.factor(n)
    out = [1]
    for p, a in fz.parts:
        choices = [c for c in range(1, a + 1) if a % c == 0]
        out = [d * p**c for d in out for c in choices]
    return sorted(out)


def test_exponential_divisors_brute():
    for n in range(1, 500):
        assert sorted(expfun.exponential_divisors(n)) == brute_exp_divisors(n)


def test_point_functions_against_oracles():
    for n in range(1, 2001):
        divs = expfun.exponential_divisors(n)
        fz = arith.factor(n)
        assert expfun.tau_e(n) == len(divs)
        assert expfun.sigma_e(n) == sum(divs)
        assert expfun.phi_e(n) == expfun.phi_e_divisor_count_oracle(fz)
        assert expfun.sigma_tilde(n) == expfun.sigma_tilde_oracle(fz)
        assert expfun.p_tilde(n) == expfun.p_tilde_oracle(n)


def test_prime_power_tables():
    for p in (2, 3, 5, 7, 11):
        assert [expfun.sigma_tilde(p**a) for a in range(1, 5)] == [
            p, p, p + p**2, p + p**3,
        ]
        assert [expfun.p_tilde(p**a) for a in range(1, 5)] == [
            p, p + p**2, 2 * p + p**3, 2 * p + p**2 + p**4,
        ]


def test_p_tilde_dual_closed_forms():
    for p in PRIMES_TO_50:
        for a in range(1, 31):
            assert expfun.p_tilde_pp(p, a) == expfun.p_tilde_pp_gcd(p, a)


def test_gcd_exponential():
    assert expfun.gcd_exponential(72, 24) == 24
    assert expfun.gcd_exponential(1, 1) == 1
    for n in range(2, 200):
        for m in range(2, 200, 7):
            if arith.kappa(n) != arith.kappa(m):
                continue
            g = expfun.gcd_exponential(n, m)
            assert g == expfun.gcd_exponential(m, n)
            # g divides both exponentially
            for big in (n, m):
                fg, fb = arith.factor(g), arith.factor(big)
                assert fg.primes == fb.primes
                assert all(b % c == 0 for c, b in zip(fg.exponents, fb.exponents))
    with pytest.raises(expfun.NoCommonStructure):
        expfun.gcd_exponential(4, 9)
    with pytest.raises(expfun.NoCommonStructure):
        expfun.gcd_exponential(1, 2)


def test_is_exp_coprime():
    # same kernel, componentwise exponent gcd 1
    assert expfun.is_exp_coprime(72, 54)  # exponents (3,2) vs (1,3), both gcds 1
    assert expfun.is_exp_coprime(4, 8)  # gcd(2, 3) = 1
    assert not expfun.is_exp_coprime(4, 16)  # gcd(2, 4) = 2
    assert not expfun.is_exp_coprime(2, 3)  # different kernels
    assert expfun.is_exp_coprime(6, 6)  # all exponents 1


def test_phi_e_values():
    assert expfun.phi_e(1) == 1
    for p in PRIMES_TO_50:
        for a in range(1, 12):
            assert expfun.phi_e(p**a) == arith.euler_phi(a)
    assert expfun.phi_e(72) == arith.euler_phi(3) * arith.euler_phi(2)


def test_q_k_e():
    for n in range(1, 16):
        assert expfun.q_k_e(n, 2) == 1
    assert expfun.q_k_e(16, 2) == 0
    assert expfun.q_k_e(2**8, 3) == 0
    assert expfun.q_k_e(2**4, 3) == 1
    # brute force: exponents must be k-free
    for n in range(1, 3000):
        fz = arith.factor(n)
        expect = int(all(arith.is_k_free(a, 2) for _, a in fz.parts))
        assert expfun.q_k_e(n, 2) == expect


def test_phi_e_sandor_dominates_phi_e():
    for n in range(2, 2001):
        assert expfun.phi_e_sandor(n) >= expfun.phi_e(n)


def test_phi_e_sandor_values():
    assert expfun.phi_e_sandor(2) == 1  # only a = 2 itself
    assert expfun.phi_e_sandor(4) == 1  # a = 2 qualifies, a = 4 does not
    assert expfun.phi_e_sandor(72) == 4  # {6, 12, 48, 54}
