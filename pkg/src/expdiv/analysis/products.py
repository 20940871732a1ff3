"""Euler-product constants with controlled truncation error.

Two evaluation routes:

* ``euler_product``: direct truncated product over p <= P_max with a crude
  but honest tail bound (exponent tails bounded geometrically, prime tail by
  integral comparison with sum p^-alpha).

* series-accelerated: when the local factor is 1 + sum_j c_j p^(-beta j)
  with prime-independent integer coefficients, the product over p > P0 is
  pushed through the formal logarithm: sum_p log F_p = sum_k b_k P(k beta),
  with P the prime zeta function.  This is what makes 1e-8-grade error
  bounds reachable for the constant multiplying x^(1/3) (its local variable
  is p^(-1/3), so the direct product alone converges hopelessly slowly).

All internal arithmetic is mpmath at 50 decimal digits plus guard digits
scaled to the series degree.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from mpmath import mp, mpf

from ..arith import euler_phi, is_k_free, primes_up_to
from ..expfun import p_tilde_pp, sigma_tilde_pp
from .zeta import WORK_DPS, euler_gamma, prime_zeta, zeta_real


@dataclass(frozen=True)
class SeriesData:
    """Local factor 1 + sum_{j>=j0} coeff(j) * p^(-beta*j), coefficients prime-independent."""

    beta: Fraction
    j0: int
    coeff: Callable[[int], int]


@dataclass(frozen=True)
class EulerProductSpec:
    name: str
    a0: int
    # exact additive term of the local factor at (p, a), as an mpf at current precision
    local_term: Callable[[int, int], mpf]
    # decreasing upper bound on |local_term(p, a)|; ratio in a must be <= 1/2
    term_bound: Callable[[int, int], float]
    # |log F_p| <= tail_coef * p^(-tail_exponent) for p past the small primes
    tail_exponent: float
    tail_coef: float
    prefactor: Callable[[], mpf] = lambda: mpf(1)
    series: Optional[SeriesData] = None


@dataclass(frozen=True)
class ConstantResult:
    value: mpf
    error_bound: mpf
    parameters: dict

    def __str__(self):
        return f"{mp.nstr(self.value, 15)} +- {mp.nstr(self.error_bound, 3)}"


def _local_factor(spec: EulerProductSpec, p: int, a_cap: int, tiny: mpf):
    """(F_p, bound on the dropped a-tail)."""
    F = mpf(1)
    a = spec.a0
    while a <= a_cap:
        F += spec.local_term(p, a)
        nb = spec.term_bound(p, a + 1)
        if nb < tiny:
            return F, mpf(nb) * 2
        a += 1
    # geometric tail with ratio <= 1/2
    return F, mpf(spec.term_bound(p, a_cap + 1)) * 2


def euler_product(
    spec: EulerProductSpec,
    P_max: int = 10**4,
    A_max: int = 64,
    dps: int = WORK_DPS,
) -> ConstantResult:
    """Direct truncated Euler product with an explicit error bound."""
    if spec.tail_exponent <= 1:
        raise ValueError("prime tail not summable")
    with mp.workdps(dps + 10):
        tiny = mpf(10) ** (-(dps + 5))
        logsum = mpf(0)
        eps = mpf(0)
        for p in primes_up_to(max(P_max, 2)).primes:
            p = int(p)
            if p > P_max:
                break
            F, tail_a = _local_factor(spec, p, A_max, tiny)
            if F <= 0:
                raise ArithmeticError(f"nonpositive local factor at p={p}")
            logsum += mp.log(F)
            eps += tail_a / F * 2
        # sum_{p>P} p^-alpha <= integral_P^inf t^-alpha dt
        alpha = spec.tail_exponent
        eps += mpf(spec.tail_coef) * mpf(P_max) ** (1 - alpha) / (alpha - 1)
        value = spec.prefactor() * mp.exp(logsum)
        err = abs(value) * eps * mpf("1.5") + mpf(10) ** (-(dps - 10))
        return ConstantResult(+value, +err, {
            "method": "direct", "P_max": P_max, "A_max": A_max, "dps": dps,
        })


def _log_series_coeffs(series: SeriesData, J: int) -> list[mpf]:
    """b with log(1 + sum c_j x^j) = sum b_k x^k, through degree J.

    The c_j are exact integers; the recurrence k b_k = k c_k - sum j b_j c_{k-j}
    is evaluated in mpf at generous precision (relative error ~ J * 2^-prec).
    """
    c = [0] * (J + 1)
    for j in range(series.j0, J + 1):
        c[j] = series.coeff(j)
    b = [mpf(0)] * (J + 1)
    for k in range(1, J + 1):
        acc = mpf(k * c[k])
        for j in range(1, k):
            if b[j] and c[k - j]:
                acc -= j * b[j] * c[k - j]
        b[k] = acc / k
    return b


def euler_product_accelerated(
    spec: EulerProductSpec,
    P0: int = 1000,
    J: int = 120,
    dps: int = WORK_DPS,
) -> ConstantResult:
    """Direct product over p <= P0, prime-zeta log-series for the rest."""
    if spec.series is None:
        raise ValueError(f"{spec.name} has no prime-independent series form")
    series = spec.series
    beta = Fraction(series.beta)
    # Guard digits must grow with J: the tail correction at degree k is the
    # difference of two quantities of size ~2^(-k beta) that cancels down to
    # ~P0^(-k beta), and the noise is then amplified by b_k (growth up to 2^k),
    # so the per-term precision loss is linear in k.
    guard = dps + 10 + J
    with mp.workdps(guard):
        tiny = mpf(10) ** (-(dps + 5))
        logsum = mpf(0)
        eps = mpf(0)
        plist = [int(p) for p in primes_up_to(max(P0, 2)).primes if p <= P0]
        # direct part: evaluate every local factor to convergence
        for p in plist:
            F, tail_a = _local_factor(spec, p, 10**6, tiny)
            if F <= 0:
                raise ArithmeticError(f"nonpositive local factor at p={p}")
            logsum += mp.log(F)
            eps += tail_a / F * 2
        # tail part: sum_{p>P0} log F_p = sum_k b_k (P(k beta) - sum_{p<=P0} p^(-k beta))
        b = _log_series_coeffs(series, J)
        bm = mpf(beta.numerator) / beta.denominator
        tpows = {}
        for p in plist:
            t = mpf(p) ** (-bm)
            tk = t ** series.j0
            for k in range(series.j0, J + 1):
                tpows[k] = tpows.get(k, mpf(0)) + tk
                tk *= t
        x0 = mpf(P0 + 1) ** (-bm)
        for k in range(series.j0, J + 1):
            if b[k] == 0:
                continue
            # sum_{p>P0} p^(-k beta) < integral bound < P0 x0^k, so the term is
            # at most |b_k| P0 x0^k; when that is already below tiny, evaluating
            # it would only add cancellation noise amplified by b_k -- drop it
            term_cap = abs(b[k]) * x0**k * P0
            if term_cap < tiny:
                eps += term_cap
                continue
            logsum += b[k] * (prime_zeta(k * beta, dps + 10) - tpows.get(k, mpf(0)))
        # truncation of the k-series: geometric extrapolation from the last coeffs
        bmax = max(
            (abs(b[k]) for k in range(max(series.j0, J - 10), J + 1)), default=mpf(0)
        )
        ratio = x0 * 2  # assumes |b_{k+1}/b_k| <= 2, monitored by tests
        eps += bmax * x0**J * 2 / (1 - ratio)
        value = spec.prefactor() * mp.exp(logsum)
        err = abs(value) * eps * mpf("1.5") + mpf(10) ** (-(dps - 15))
        return ConstantResult(+value, +err, {
            "method": "accelerated", "P_max": P0, "A_max": J, "dps": dps,
        })


# -- the named constants ----------------------------------------------------


def _phi_diff(a: int) -> int:
    return euler_phi(a) - euler_phi(a - 1)


def _v_coeff(a: int) -> int:
    if a <= 4:
        return 0
    return (
        euler_phi(a) - euler_phi(a - 1) - euler_phi(a - 3) + euler_phi(a - 4)
    )


def _c1_spec() -> EulerProductSpec:
    return EulerProductSpec(
        name="C1",
        a0=3,
        local_term=lambda p, a: mpf(_phi_diff(a)) / mpf(p) ** a,
        term_bound=lambda p, a: min(2.0, (a + 1.0) / float(p) ** a),
        tail_exponent=3.0,
        tail_coef=4.0,  # |log F_p| <= 2 * sum (a+1) p^-a <= 4 p^-3 for p >= 3
        series=SeriesData(Fraction(1), 3, _phi_diff),
    )


def _c2_spec() -> EulerProductSpec:
    # local variable is p^(-1/3); converges only like p^(-5/3) directly
    return EulerProductSpec(
        name="C2",
        a0=5,
        local_term=lambda p, a: mpf(_v_coeff(a)) * mpf(p) ** (-mpf(a) / 3),
        term_bound=lambda p, a: 4.0 * (a + 1.0) * float(p) ** (-a / 3.0),
        tail_exponent=5.0 / 3.0,
        tail_coef=40.0,
        prefactor=lambda: zeta_real(Fraction(1, 3)),
        series=SeriesData(Fraction(1, 3), 5, _v_coeff),
    )


def _c3_spec(u: float) -> EulerProductSpec:
    uu = mpf(u)

    def term(p: int, a: int) -> mpf:
        sa = mpf(sigma_tilde_pp(p, a))
        sb = mpf(sigma_tilde_pp(p, a - 1))
        return (sa**uu - mpf(p) ** uu * sb**uu) / mpf(p) ** (a * (uu + 1))

    return EulerProductSpec(
        name="C3",
        a0=2,
        local_term=term,
        # sigma_tilde(p^a) <= p^a gives |term| <= 2 p^-a
        term_bound=lambda p, a: 2.0 / float(p) ** a,
        tail_exponent=2.0,
        tail_coef=6.0,
        prefactor=lambda: 1 / (uu + 1),
    )


def _c4_series_coeff(j: int) -> int:
    # expand sum_{a>=2} (p_tilde(p^a) - p * p_tilde(p^{a-1})) / p^{2a} in 1/p:
    # contributions +phi(a/d) at exponent 2a-d, -phi((a-1)/d) at 2a-1-d
    total = 0
    for a in range(2, j + 1):
        for d in range(1, a + 1):
            if a % d == 0 and 2 * a - d == j:
                total += euler_phi(a // d)
        for d in range(1, a):
            if (a - 1) % d == 0 and 2 * a - 1 - d == j:
                total -= euler_phi((a - 1) // d)
    return total


def _c4_spec() -> EulerProductSpec:
    def term(p: int, a: int) -> mpf:
        return mpf(p_tilde_pp(p, a) - p * p_tilde_pp(p, a - 1)) / mpf(p) ** (2 * a)

    return EulerProductSpec(
        name="C4",
        a0=2,
        local_term=term,
        # p_tilde(p^a) <= 4 p^a (rho(p) = 1+1/p sup bound), so |term| <= 8 p^-a
        term_bound=lambda p, a: 8.0 / float(p) ** a,
        tail_exponent=3.0,
        tail_coef=8.0,
        prefactor=lambda: mpf(1) / 2,
        series=SeriesData(Fraction(1), 3, _c4_series_coeff),
    )


def _c5_spec() -> EulerProductSpec:
    return EulerProductSpec(
        name="C5",
        a0=3,
        local_term=lambda p, a: mpf(euler_phi(a) - 1) / mpf(p) ** a,
        term_bound=lambda p, a: (a + 1.0) / float(p) ** a,
        tail_exponent=3.0,
        tail_coef=4.0,
        series=SeriesData(Fraction(1), 3, lambda a: euler_phi(a) - 1),
    )


def _dk_coeff(k: int) -> Callable[[int], int]:
    def coeff(a: int) -> int:
        qa = 1 if is_k_free(a, k) else 0
        qb = 1 if a >= 2 and is_k_free(a - 1, k) else (1 if a == 1 else 0)
        return qa - qb

    return coeff


def _dk_spec(k: int) -> EulerProductSpec:
    if k < 2:
        raise ValueError("k must be >= 2")
    coeff = _dk_coeff(k)
    a0 = 2**k

    return EulerProductSpec(
        name=f"D{k}",
        a0=a0,
        local_term=lambda p, a: mpf(coeff(a)) / mpf(p) ** a,
        term_bound=lambda p, a: 1.0 / float(p) ** a,
        tail_exponent=float(a0),
        tail_coef=4.0,
        series=SeriesData(Fraction(1), a0, coeff),
    )


_ACCEL_DEFAULTS: dict[str, tuple[int, int]] = {
    "C1": (1000, 120),
    "C2": (5000, 150),
    "C4": (1000, 120),
    "C5": (1000, 120),
    "Dk": (1000, 120),
}


def named_constant(
    name: str,
    u: float | None = None,
    k: int | None = None,
    P_max: int | None = None,
    A_max: int | None = None,
    dps: int = WORK_DPS,
) -> ConstantResult:
    """C1, C2, C3(u), C4, C5 or Dk(k), with value and error bound."""
    if name == "C3":
        if u is None or not u > 1 / 3:
            raise ValueError("C3 requires a fixed real u > 1/3")
        return euler_product(
            _c3_spec(u), P_max=P_max or 2 * 10**5, A_max=A_max or 64, dps=dps
        )
    if name.startswith("D"):
        if k is None:
            if len(name) > 1 and name[1:].isdigit():
                k = int(name[1:])
            else:
                raise ValueError("Dk requires k >= 2")
        spec = _dk_spec(k)
        p0, j = _ACCEL_DEFAULTS["Dk"]
        return euler_product_accelerated(
            spec, P0=P_max or p0, J=max(A_max or j, 2**k + 8), dps=dps
        )
    makers = {"C1": _c1_spec, "C2": _c2_spec, "C4": _c4_spec, "C5": _c5_spec}
    if name not in makers:
        raise ValueError(f"unknown constant {name!r}")
    p0, j = _ACCEL_DEFAULTS[name]
    return euler_product_accelerated(
        makers[name](), P0=P_max or p0, J=A_max or j, dps=dps
    )


def limsup_constant(dps: int = WORK_DPS) -> mpf:
    """(6/pi^2) e^gamma, the limsup of p_tilde(n)/(n log log n)."""
    with mp.workdps(dps + 5):
        return +(6 / mp.pi**2 * mp.exp(euler_gamma(dps)))


def mertens_ratio(y: int, dps: int = 30) -> mpf:
    """prod_{p<=y} (1+1/p) divided by (6/pi^2) e^gamma ln y; tends to 1."""
    if y < 3:
        raise ValueError("y must be >= 3")
    with mp.workdps(dps + 5):
        acc = mpf(0)
        for p in primes_up_to(y).primes:
            acc += mp.log(1 + mpf(1) / int(p))
        return +(mp.exp(acc) / (limsup_constant(dps) * mp.log(y)))
