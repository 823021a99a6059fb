"""Exact Arf, Brown, and Rochlin invariant computations."""

from ._arfkit import (
    InputError,
    arf_beta_relation_check,
    arf_of_seifert,
    beta_of_surface,
    brown_of_enhanced,
    build_surgery_scenario,
    characteristic_vector,
    classify_quadratic,
    is_even,
    is_unimodular,
    mu_from_presentation,
    mu_from_surgery,
    signature,
    van_der_blij_holds,
    verify_closed,
    verify_relative,
)

__all__ = [
    "InputError",
    "arf_beta_relation_check",
    "arf_of_seifert",
    "beta_of_surface",
    "brown_of_enhanced",
    "build_surgery_scenario",
    "characteristic_vector",
    "classify_quadratic",
    "is_even",
    "is_unimodular",
    "mu_from_presentation",
    "mu_from_surgery",
    "signature",
    "van_der_blij_holds",
    "verify_closed",
    "verify_relative",
]

__version__ = "0.1.0"
