"""Exact arithmetic of exponential divisors: point values, convolution
identities, summatory sieves, and asymptotic constants."""

from .arith import (
    Factorization,
    PrimeTable,
    divisors,
    euler_phi,
    factor,
    is_k_free,
    is_prime,
    kappa,
    mobius,
    omega_counts,
    primes_up_to,
)
from .expfun import (
    NoCommonStructure,
    exponential_divisors,
    gcd_exponential,
    is_exp_coprime,
    p_tilde,
    phi_e,
    phi_e_sandor,
    q_k_e,
    sigma_e,
    sigma_tilde,
    tau_e,
)
from .dirichlet import ArithSeq, convolve, dirichlet_inverse
from .sieve import (
    CapacityError,
    MultiplicativeSpec,
    SummatoryGrid,
    SPECS,
    parse_grid,
    petermann_wu_sum,
    qke_spec,
    shifted_prime_sum,
    sieve_values,
    summatory,
    summatory_value,
    tau13_summatory,
)
from .analysis import (
    ConstantResult,
    FitReport,
    MaximalOrderReport,
    euler_gamma,
    li,
    limsup_constant,
    maximal_order_report,
    named_constant,
    prime_zeta,
    residual_fit,
    zeta_real,
)

__version__ = "1.0.0"

__all__ = [
    "ArithSeq",
    "CapacityError",
    "ConstantResult",
    "Factorization",
    "FitReport",
    "MaximalOrderReport",
    "MultiplicativeSpec",
    "NoCommonStructure",
    "PrimeTable",
    "SPECS",
    "SummatoryGrid",
    "convolve",
    "dirichlet_inverse",
    "divisors",
    "euler_gamma",
    "euler_phi",
    "exponential_divisors",
    "factor",
    "gcd_exponential",
    "is_exp_coprime",
    "is_k_free",
    "is_prime",
    "kappa",
    "li",
    "limsup_constant",
    "maximal_order_report",
    "mobius",
    "named_constant",
    "omega_counts",
    "p_tilde",
    "parse_grid",
    "petermann_wu_sum",
    "phi_e",
    "phi_e_sandor",
    "prime_zeta",
    "primes_up_to",
    "q_k_e",
    "qke_spec",
    "residual_fit",
    "shifted_prime_sum",
    "sieve_values",
    "sigma_e",
    "sigma_tilde",
    "summatory",
    "summatory_value",
    "tau13_summatory",
    "tau_e",
    "zeta_real",
    "__version__",
]
