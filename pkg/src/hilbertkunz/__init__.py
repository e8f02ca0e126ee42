"""Exact generalized Hilbert-Kunz functions of hypersurfaces over prime fields."""

from .errors import HKError, PreconditionViolated
from .field import PrimeField, make_prime_field
from .polynomial import MultiPoly, parse_poly
from .quotient import HKProfile, brute_force_colength, hk_profile, mult_matrix, slice_basis
from .series import beta, lower_bound_L, m_of_q, theta_dim

__all__ = [
    "HKError", "PreconditionViolated", "PrimeField", "make_prime_field", "MultiPoly",
    "parse_poly", "HKProfile", "hk_profile", "brute_force_colength", "mult_matrix",
    "slice_basis", "beta", "lower_bound_L", "m_of_q", "theta_dim",
]
