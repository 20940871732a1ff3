import pytest

from expdiv import arith, dirichlet, expfun, sieve

POINT_FNS = {
    "tau_e": expfun.tau_e,
    "sigma_e": expfun.sigma_e,
    "phi_e": expfun.phi_e,
    "sigma_tilde": expfun.sigma_tilde,
    "p_tilde": expfun.p_tilde,
    "q2e": lambda n: expfun.q_k_e(n, 2),
    "q3e": lambda n: expfun.q_k_e(n, 3),
}


@pytest.mark.parametrize("name", sorted(sieve.SPECS))
def test_sieve_values_pointwise(name):
    N = 3000
    seq = sieve.sieve_values(sieve.SPECS[name], N)
    fn = POINT_FNS[name]
    for n in range(1, N + 1):
        assert seq[n] == fn(n), (name, n)


def test_spec_value_at_matches_sieve():
    N = 500
    for name, spec in sieve.SPECS.items():
        seq = sieve.sieve_values(spec, N)
        for n in range(1, N + 1):
            assert spec.value_at(arith.factor(n)) == seq[n]


def test_summatory_streamed_matches_full_array():
    grid = [10, 137, 1000, 12345, 99999]
    g = sieve.summatory(sieve.SPECS["phi_e"], grid)
    seq = sieve.sieve_values(sieve.SPECS["phi_e"], 10**5)
    ps = dirichlet.ArithSeq(10**5, seq.values).partial_sums()
    for x, s in g.points:
        assert s == ps[x]


def test_summatory_grid_refinement_consistency():
    coarse = sieve.summatory(sieve.SPECS["sigma_tilde"], [1000, 100000])
    fine = sieve.summatory(
        sieve.SPECS["sigma_tilde"], [1000, 5000, 20000, 100000]
    )
    cd = dict(coarse.points)
    fd = dict(fine.points)
    assert cd[1000] == fd[1000] and cd[100000] == fd[100000]


def test_summatory_value_single_point():
    assert sieve.summatory_value(sieve.SPECS["phi_e"], 10) == 11


def test_tau13_summatory_against_sequence():
    t13 = dirichlet.tau13_seq(10**4)
    ps = dirichlet.ArithSeq(10**4, t13.values).partial_sums()
    for x in (1, 7, 8, 100, 999, 10**4):
        assert sieve.tau13_summatory(x) == ps[x]


def test_petermann_wu_brute():
    for x in (1, 10, 100, 2500):
        brute = sum(
            m * n
            for n in range(1, int(x**0.5) + 1)
            for m in range(1, x // (n * n) + 1)
        )
        assert sieve.petermann_wu_sum(x) == brute


def test_shifted_prime_sum_brute():
    x = 10**4
    table = arith.primes_up_to(x)
    brute = sum(expfun.phi_e(int(p) - 1) for p in table.primes if p >= 3)
    # p = 2 contributes phi_e(1) = 1
    brute += 1
    assert sieve.shifted_prime_sum(x) == brute


def test_parse_grid():
    assert sieve.parse_grid("1e4:1e7:2") == [
        10000, 20000, 40000, 80000, 160000, 320000, 640000,
        1280000, 2560000, 5120000, 10000000,
    ]
    assert sieve.parse_grid("100,200,300") == [100, 200, 300]
    with pytest.raises(ValueError):
        sieve.parse_grid("10:5:2")
    with pytest.raises(ValueError):
        sieve.parse_grid("10:100:1")


def test_capacity_errors():
    with pytest.raises(sieve.CapacityError):
        sieve.summatory_value(sieve.SPECS["phi_e"], sieve.SIEVE_CAP * 10)
    with pytest.raises(sieve.CapacityError):
        sieve.shifted_prime_sum(sieve.FULL_ARRAY_CAP * 10)


def test_qke_spec_matches_builtin():
    s4 = sieve.qke_spec(4)
    seq = sieve.sieve_values(s4, 2000)
    for n in range(1, 2001):
        assert seq[n] == expfun.q_k_e(n, 4)
