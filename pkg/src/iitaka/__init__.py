"""Exact searches behind effective Iitaka-fibration bounds for threefolds of
Kodaira dimension one."""

from .baskets import (Basket, BasketEntry, BasketError, basket_sigma, chi_mK, k_dot_c2,
                      l_of_m, lambda_from_basket, local_contribution, normalize,
                      satisfies_e3)
from .bounds import (BoundCertificate, FiberType, fiber_bound, nonrational_bound,
                     pluricanonical_threshold, theorem_table)
from .enumeration import (SearchResult, SearchWindow, brute_force_oracle,
                          enumerate_baskets, max_lambda, max_lambda_check)
from .moduli import (CaseBound, DegAWitness, HurwitzSignature, admissible_indices,
                     dega_lower_bound, eval_degA_expr, hurwitz_min_positive,
                     min_positive_degA)
from .rational import format_rational, parse_rational

__version__ = "0.1.0"

__all__ = [
    "Basket", "BasketEntry", "BasketError", "BoundCertificate", "CaseBound",
    "DegAWitness", "FiberType", "HurwitzSignature", "SearchResult", "SearchWindow",
    "admissible_indices", "basket_sigma", "brute_force_oracle", "chi_mK",
    "dega_lower_bound", "enumerate_baskets", "eval_degA_expr", "fiber_bound",
    "format_rational", "hurwitz_min_positive", "k_dot_c2", "l_of_m",
    "lambda_from_basket", "local_contribution", "max_lambda", "max_lambda_check",
    "min_positive_degA", "nonrational_bound", "normalize", "parse_rational",
    "pluricanonical_threshold", "satisfies_e3", "theorem_table",
]
