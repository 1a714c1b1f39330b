"""Exact SU(3) irreducible states built from two triplets of Schwinger bosons.

Coefficients are exact rationals, returned as ``fractions.Fraction``.
"""

import json
from fractions import Fraction

from . import _core
from ._core import ResourceError, coefficient_L, coefficient_l, gram_rank, irrep_dimension, suite_names

__all__ = [
    "ResourceError",
    "coefficient_L",
    "coefficient_l",
    "gram_rank",
    "irrep",
    "irrep_dimension",
    "su2_irrep",
    "suite_names",
    "tower",
    "verify",
]


def _terms(raw):
    return {(tuple(t["mono"][0]), tuple(t["mono"][1])): Fraction(t["coeff"]) for t in raw}


def irrep(upper, lower=(), method="isb"):
    """State for the given upper/lower index tuples as {(a_exp, b_exp): Fraction}."""
    data = json.loads(_core.irrep_json(list(upper), list(lower), method))
    return _terms(data["terms"])


def tower(upper, lower, rho):
    """(a†·b†)^rho on an irrep state, returned as (k, m_prime, terms)."""
    data = json.loads(_core.tower_json(list(upper), list(lower), rho))
    return Fraction(data["k"]), Fraction(data["m_prime"]), _terms(data["terms"])


def su2_irrep(indices):
    """SU(2) state for indices in {1, 2}, returned as (j, m, terms)."""
    data = json.loads(_core.su2_irrep_json(list(indices)))
    return Fraction(data["j"]), Fraction(data["m"]), _terms(data["terms"])


def verify(suite, max_total=5):
    """Runs a verification suite and returns the report as a dict."""
    return json.loads(_core.verify_json(suite, max_total))
