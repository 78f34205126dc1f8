"""Characteristic polynomials of deformed Coxeter arrangements.

Three independent ways to get chi: a closed-form shift-operator catalog
(:mod:`coxdeform.closed_forms`), finite-field point counting with exact
interpolation (:mod:`coxdeform.ffcount`), and Möbius inversion on the
intersection poset (:mod:`coxdeform.mobius`).
"""

from .analysis import (linial_regions_closed, lemma51_numeric_check, planar_region_count,
                       poly_roots, region_count, verify_riemann)
from .closed_forms import FormulaResult, UnsupportedInterval, chi_for_spec, chi_interval
from .families import (Arrangement, FamilySpec, Hyperplane, arrangement, build, dedup_count,
                       parse_spec, rank_of, reflect)
from .ffcount import chi_interpolated, count_complement, make_plan
from .mobius import OracleTooLargeError, chi_mobius, intersection_poset
from .poly import (InexactDivisionError, InterpolationError, NonIntegralError, Poly, apply_shift,
                   exact_div, f_poly, lagrange_interpolate, phi, series_coeff, sigma_class)

__version__ = "0.1.0"

__all__ = [
    "Arrangement", "FamilySpec", "FormulaResult", "Hyperplane", "InexactDivisionError",
    "InterpolationError", "NonIntegralError", "OracleTooLargeError", "Poly", "UnsupportedInterval",
    "apply_shift", "arrangement", "build", "chi_for_spec", "chi_interpolated", "chi_interval",
    "chi_mobius", "count_complement", "dedup_count", "exact_div", "f_poly", "intersection_poset",
    "lagrange_interpolate", "lemma51_numeric_check", "linial_regions_closed", "make_plan",
    "parse_spec", "phi", "planar_region_count", "poly_roots", "rank_of", "reflect",
    "region_count", "series_coeff", "sigma_class", "verify_riemann",
]
