"""Maximal-order report generators along primorial-power sequences.

Each report pairs an exact big-integer identity (checked, not fitted) with a
tabulated convergence trend that is recorded but never asserted:

* theorem4: n_k = (p_1...p_k)^2 gives p_tilde(n_k)/n_k = prod_{p<=p_k}(1+1/p)
  exactly; the ratio p_tilde/(n log log n) trends toward (6/pi^2) e^gamma.
* theorem7: n_k = (p_1...p_k)^5 gives Omega(phi_e(n_k)) = 2k exactly
  (phi(5) = 4 at every prime); the ratio to 2 ln n / (5 ln ln n) trends to 1.
* sandor: ln phi_e(n_k) * ln ln n_k / ln n_k trends toward (ln 4)/5.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


from ..arith import Factorization, euler_phi, factor, omega_counts, primes_up_to
from ..expfun import p_tilde, phi_e
from .products import limsup_constant

KMAX_CAP = 10**4


@dataclass(frozen=True)
class MaximalOrderReport:
    kind: str
    rows: tuple[dict, ...]
    exact_ok: bool
    reference_constant: float


def _primorial_factorization(k: int, exponent: int, primes) -> Factorization:
    return Factorization.from_parts((int(p), exponent) for p in primes[:k])


def _log_n(k: int, exponent: int, primes) -> float:
    return exponent * sum(math.log(int(p)) for p in primes[:k])


def big_omega_phi_e(fz: Factorization) -> int:
    """Omega(phi_e(n)) without materializing the (possibly huge) value."""
    return sum(omega_counts(euler_phi(a))[1] for _, a in fz.parts)


def maximal_order_report(kind: str, k_max: int) -> MaximalOrderReport:
    if kind not in ("theorem4", "theorem7", "sandor"):
        raise ValueError(f"unknown report kind {kind!r}")
    if not 1 <= k_max <= KMAX_CAP:
        raise ValueError(f"k_max must be in 1..{KMAX_CAP}")
    # p_10000 < 105000; a generous table covers every permitted k_max
    table = primes_up_to(max(130, int(12 * k_max * max(1, math.log(k_max + 1)))))
    primes = table.primes
    if len(primes) < k_max:
        raise ValueError("prime table too small for k_max")

    rows = []
    exact_ok = True

    if kind == "theorem4":
        ref = float(limsup_constant())
        mert = Fraction(1)
        nk = Fraction(1)
        for k in range(1, k_max + 1):
            p = int(primes[k - 1])
            mert *= Fraction(p + 1, p)
            fz = _primorial_factorization(k, 2, primes)
            exact = Fraction(p_tilde(fz), fz.value) == mert
            exact_ok &= exact
            ln_n = _log_n(k, 2, primes)
            ratio = float(mert) / math.log(ln_n) if ln_n > math.e else float("nan")
            rows.append({"k": k, "p_k": p, "exact": exact, "ratio": ratio})
    elif kind == "theorem7":
        ref = 1.0
        for k in range(1, k_max + 1):
            fz = _primorial_factorization(k, 5, primes)
            om = big_omega_phi_e(fz)
            exact = om == 2 * k
            exact_ok &= exact
            ln_n = _log_n(k, 5, primes)
            bound = 2 * ln_n / (5 * math.log(ln_n))
            rows.append({"k": k, "omega": om, "ratio": om / bound})
    else:  # sandor
        ref = math.log(4) / 5
        for k in range(1, k_max + 1):
            # phi_e((p_1...p_k)^5) = phi(5)^k = 4^k
            ln_phi = k * math.log(4)
            ln_n = _log_n(k, 5, primes)
            rows.append({"k": k, "value": ln_phi * math.log(ln_n) / ln_n})

    return MaximalOrderReport(kind, tuple(rows), exact_ok, ref)
