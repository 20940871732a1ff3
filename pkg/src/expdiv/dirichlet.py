"""Dense Dirichlet-convolution algebra over exact integers/rationals.

Sequences are defined on 1..N and stored densely.  All arithmetic is exact:
Python ints, falling back to Fraction only where an inverse demands it.  This
module carries the coefficient-level verification of the two series
factorizations used by the asymptotic theorems:

  phi_e   = v * tau(1,3,.)          (zeta(s) zeta(3s) V(s))
  p_tilde = h * w                    (zeta(s-1) zeta(2s-1) / zeta(3s-2) * W(s))

with v, f, h explicit and w extracted by triangular inversion.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, NamedTuple

from .arith import euler_phi, primes_up_to
from . import expfun


class ArithSeq:
    """Exact arithmetic sequence on 1..limit (index 0 unused).

    Values live in a plain list of Python ints/Fractions, or, for sieve
    output, a numpy int64 array (still exact; the sieve guarantees no
    overflow for its supported range).  The algebra ops normalize to lists.
    """

    __slots__ = ("limit", "values")

    def __init__(self, limit: int, values):
        if limit < 1:
            raise ValueError("limit must be >= 1")
        import numpy as np

        if not isinstance(values, np.ndarray):
            values = list(values)
        if len(values) != limit + 1:
            raise ValueError("values must have length limit+1")
        self.limit = limit
        self.values = values

    def as_list(self) -> list:
        if isinstance(self.values, list):
            return self.values
        return [int(v) for v in self.values]

    def __getitem__(self, n: int):
        if not 1 <= n <= self.limit:
            raise IndexError(f"index {n} outside 1..{self.limit}")
        return int(self.values[n]) if not isinstance(self.values, list) else self.values[n]

    def __eq__(self, other):
        return (
            isinstance(other, ArithSeq)
            and self.limit == other.limit
            and self.as_list()[1:] == other.as_list()[1:]
        )

    def __repr__(self):
        head = ", ".join(str(v) for v in self.values[1 : min(self.limit, 8) + 1])
        return f"ArithSeq(N={self.limit}: {head}, ...)"

    def partial_sums(self) -> list:
        """Exact S(n) = sum_{m<=n} f(m), index 0 = 0."""
        vals = self.as_list()
        out = [0] * (self.limit + 1)
        acc = 0
        for n in range(1, self.limit + 1):
            acc += vals[n]
            out[n] = acc
        return out


def from_function(limit: int, fn: Callable[[int], int]) -> ArithSeq:
    return ArithSeq(limit, [0] + [fn(n) for n in range(1, limit + 1)])


def convolve(f: ArithSeq, g: ArithSeq) -> ArithSeq:
    """(f*g)(n) = sum over de = n of f(d) g(e); exact, O(N log N)."""
    if f.limit != g.limit:
        raise ValueError("mismatched limits")
    N = f.limit
    out = [0] * (N + 1)
    fv, gv = f.as_list(), g.as_list()
    for d in range(1, N + 1):
        fd = fv[d]
        if fd == 0:
            continue
        for n in range(d, N + 1, d):
            out[n] += fd * gv[n // d]
    return ArithSeq(N, out)


def dirichlet_inverse(f: ArithSeq) -> ArithSeq:
    """g with f*g = delta_1.  Exact; rational entries unless f(1) = +-1.

    Triangular forward solve: g(n) = -(1/f(1)) * sum over d|n, d<n of g(d) f(n/d),
    pushing each finalized g(d) onto its multiples.
    """
    N = f.limit
    fv = f.as_list()
    f1 = fv[1]
    if f1 == 0:
        raise ValueError("f(1) must be invertible")
    inv1 = 1 if f1 == 1 else (-1 if f1 == -1 else Fraction(1, f1))
    acc = [0] * (N + 1)
    acc[1] = 1
    out = [0] * (N + 1)
    for d in range(1, N + 1):
        gd = acc[d] * inv1 if inv1 != 1 else acc[d]
        if isinstance(gd, Fraction) and gd.denominator == 1:
            gd = gd.numerator
        out[d] = gd
        if gd == 0:
            continue
        for n in range(2 * d, N + 1, d):
            acc[n] -= gd * fv[n // d]
    return ArithSeq(N, out)


def ones_seq(N: int) -> ArithSeq:
    return ArithSeq(N, [0] + [1] * N)


def delta_seq(N: int) -> ArithSeq:
    v = [0] * (N + 1)
    v[1] = 1
    return ArithSeq(N, v)


def id_seq(N: int) -> ArithSeq:
    return ArithSeq(N, list(range(N + 1)))


def cube_indicator_seq(N: int) -> ArithSeq:
    """Coefficients of zeta(3s): 1 at perfect cubes, else 0."""
    v = [0] * (N + 1)
    b = 1
    while b**3 <= N:
        v[b**3] = 1
        b += 1
    return ArithSeq(N, v)


def mobius_seq(N: int) -> ArithSeq:
    """mu(1..N) by a divisor-style sieve (inverse of ones)."""
    v = [0] * (N + 1)
    v[1] = 1
    for d in range(1, N + 1):
        md = v[d]
        if md == 0:
            continue
        for n in range(2 * d, N + 1, d):
            v[n] -= md
    return ArithSeq(N, v)


def mu3_seq(N: int) -> ArithSeq:
    """mu_3(n) = mu(m) if n = m^3, else 0."""
    mu = mobius_seq(max(1, round(N ** (1 / 3)) + 2))
    v = [0] * (N + 1)
    m = 1
    while m**3 <= N:
        v[m**3] = mu[m]
        m += 1
    return ArithSeq(N, v)


def multiplicative_seq(N: int, pp_value: Callable[[int, int], int]) -> ArithSeq:
    """Values of the multiplicative function with given prime-power values, via spf."""
    if N == 1:
        return ArithSeq(1, [0, 1])
    spf = primes_up_to(N).spf
    v = [0] * (N + 1)
    v[1] = 1
    for n in range(2, N + 1):
        p = int(spf[n])
        m = n // p
        a = 1
        while m % p == 0:
            m //= p
            a += 1
        v[n] = v[m] * pp_value(p, a)
    return ArithSeq(N, v)


def phi_e_seq(N: int) -> ArithSeq:
    return multiplicative_seq(N, lambda p, a: euler_phi(a))


def p_tilde_seq(N: int) -> ArithSeq:
    return multiplicative_seq(N, expfun.p_tilde_pp)


# -- phi_e factorization: f = mu_3 * mu, v = phi_e * f -----------------------


def f_seq(N: int) -> ArithSeq:
    """f = mu_3 * mu, computed by convolution."""
    return convolve(mu3_seq(N), mobius_seq(N))


def f_pp_closed(a: int) -> int:
    """Closed prime-power values of f: f(p)=f(p^3)=-1, f(p^4)=1, 0 otherwise."""
    return {1: -1, 3: -1, 4: 1}.get(a, 0)


def f_closed_seq(N: int) -> ArithSeq:
    return multiplicative_seq(N, lambda p, a: f_pp_closed(a))


def v_pp_closed(a: int) -> int:
    """Closed prime-power values of v: 0 for a <= 4, the four-term phi difference after."""
    if a <= 4:
        return 0
    return euler_phi(a) - euler_phi(a - 1) - euler_phi(a - 3) + euler_phi(a - 4)


class VSeqResult(NamedTuple):
    by_convolution: ArithSeq
    by_closed_form: ArithSeq
    agree: bool


def v_seq(N: int) -> VSeqResult:
    """v = phi_e * f two ways: convolution vs multiplicative closed form."""
    conv = convolve(phi_e_seq(N), f_seq(N))
    closed = multiplicative_seq(N, lambda p, a: v_pp_closed(a))
    return VSeqResult(conv, closed, conv == closed)


def tau13_seq(N: int) -> ArithSeq:
    """tau(1,3,n) = number of ways n = a*b^3."""
    return convolve(ones_seq(N), cube_indicator_seq(N))


# -- p_tilde factorization: h and the triangular extraction of w -------------


def h_seq(N: int) -> ArithSeq:
    """h(n) = sum over a b^2 c^3 = n of a*b*c^2*mu(c), by direct triple loop."""
    mu = mobius_seq(max(1, round(N ** (1 / 3)) + 2))
    v = [0] * (N + 1)
    c = 1
    while c**3 <= N:
        mc = mu[c]
        if mc != 0:
            wc = mc * c * c
            b = 1
            while b * b * c**3 <= N:
                step = b * b * c**3
                coef = wc * b
                for a in range(1, N // step + 1):
                    v[a * step] += coef * a
                b += 1
        c += 1
    return ArithSeq(N, v)


def w_seq(N: int) -> ArithSeq:
    """w with p_tilde = h * w, by triangular solve (h(1) = 1 makes it integral)."""
    h = h_seq(N)
    target = p_tilde_seq(N)
    w = [0] * (N + 1)
    # process d ascending; once w[d] is final, push its contributions forward
    acc = list(target.values)
    for d in range(1, N + 1):
        w[d] = acc[d]
        wd = w[d]
        if wd == 0:
            continue
        for n in range(2 * d, N + 1, d):
            acc[n] -= wd * h.values[n // d]
    return ArithSeq(N, w)
