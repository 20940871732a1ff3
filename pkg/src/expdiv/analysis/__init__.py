from .zeta import euler_gamma, li, prime_zeta, recompute_euler_gamma, zeta_real
from .products import (
    ConstantResult,
    EulerProductSpec,
    SeriesData,
    euler_product,
    euler_product_accelerated,
    limsup_constant,
    mertens_ratio,
    named_constant,
)
from .fits import FitReport, residual_fit, growth_diagnostic
from .reports import MaximalOrderReport, big_omega_phi_e, maximal_order_report

__all__ = [
    "ConstantResult",
    "EulerProductSpec",
    "FitReport",
    "MaximalOrderReport",
    "SeriesData",
    "big_omega_phi_e",
    "euler_gamma",
    "euler_product",
    "euler_product_accelerated",
    "growth_diagnostic",
    "li",
    "limsup_constant",
    "maximal_order_report",
    "mertens_ratio",
    "named_constant",
    "prime_zeta",
    "recompute_euler_gamma",
    "residual_fit",
    "zeta_real",
]
