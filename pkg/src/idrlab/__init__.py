"""idr-lab: exact arithmetic for integer functions whose difference ratios
(f(a) - f(b)) / (a - b) are always integers.

The package converts between value tables and Newton series, tests the
property two independent ways, tabulates the closed-form families that have
it, projects arbitrary tables onto it, and constructs certified
counterexamples for the near misses that lack it.
"""

from idrlab.analysis import (
    GapReport,
    PolynomialVerdict,
    PowerFactorialWitness,
    ScaledFactorialWitness,
    floored_scaled_factorial_witness,
    fractional_gap,
    polynomial_idr_check,
    power_factorial_witness,
)
from idrlab.arith import binom, is_prime, lcm_table, next_prime
from idrlab.families import (
    CfConvergents,
    ExponentialSpec,
    FactorialESpec,
    FamilyVerifyReport,
    HyperCase,
    HyperSpec,
    PolynomialSpec,
    closed_form_factorial_e,
    closed_form_hyper,
    euler_cf_convergents,
    eval_factorial_e,
    eval_hyper_family,
    eval_scaled_factorial_e,
    hyper_case,
    oracle_rounded_factorial_e,
    oracle_rounded_hyper,
    verify_convergent_gaps,
    verify_factorial_e,
    verify_hyper,
)
from idrlab.idr import (
    CriterionReport,
    LemmaReport,
    ViolationReport,
    check_idr_bruteforce,
    check_idr_newton,
    factorial_criterion,
    preimage_finiteness_probe,
    project_idr,
    table_compose,
    table_product,
    table_sum,
    verify_divisibility_lemmas,
)
from idrlab.intervals import (
    UNDECIDED,
    RationalInterval,
    enclose_exp_inv,
    enclose_hyper,
    floor_via_interval,
    halving_refiner,
)
from idrlab.newton import coeffs_from_values, values_from_coeffs

__version__ = "0.1.0"

__all__ = [
    "GapReport",
    "PolynomialVerdict",
    "PowerFactorialWitness",
    "ScaledFactorialWitness",
    "floored_scaled_factorial_witness",
    "fractional_gap",
    "polynomial_idr_check",
    "power_factorial_witness",
    "binom",
    "is_prime",
    "lcm_table",
    "next_prime",
    "CfConvergents",
    "ExponentialSpec",
    "FactorialESpec",
    "FamilyVerifyReport",
    "HyperCase",
    "HyperSpec",
    "PolynomialSpec",
    "closed_form_factorial_e",
    "closed_form_hyper",
    "euler_cf_convergents",
    "eval_factorial_e",
    "eval_hyper_family",
    "eval_scaled_factorial_e",
    "hyper_case",
    "oracle_rounded_factorial_e",
    "oracle_rounded_hyper",
    "verify_convergent_gaps",
    "verify_factorial_e",
    "verify_hyper",
    "CriterionReport",
    "LemmaReport",
    "ViolationReport",
    "check_idr_bruteforce",
    "check_idr_newton",
    "factorial_criterion",
    "preimage_finiteness_probe",
    "project_idr",
    "table_compose",
    "table_product",
    "table_sum",
    "verify_divisibility_lemmas",
    "UNDECIDED",
    "RationalInterval",
    "enclose_exp_inv",
    "enclose_hyper",
    "floor_via_interval",
    "halving_refiner",
    "coeffs_from_values",
    "values_from_coeffs",
    "__version__",
]
