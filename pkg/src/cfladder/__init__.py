"""Continued fractions of real algebraic numbers and the ladder of (xi, m/xi)."""

__version__ = "0.1.0"

from .algebraic import (  # noqa: E402
    AlgebraicNumber,
    DomainError,
    IntPolynomial,
    RationalNumber,
    RootNumber,
    compare,
    floor_of,
    make_rational,
    make_root,
    moebius_step,
    nth_root,
    reciprocal_scale,
    refine,
)
from .cf import Expansion, convergent, expand, verify_identities  # noqa: E402
from .ladder import Connection, Ladder, build_ladder, verify_ladder  # noqa: E402
from .stats import kuzmin_expected, kuzmin_report  # noqa: E402

__all__ = [
    "AlgebraicNumber", "DomainError", "IntPolynomial", "RationalNumber", "RootNumber",
    "compare", "floor_of", "make_rational", "make_root", "moebius_step", "nth_root",
    "reciprocal_scale", "refine", "Expansion", "convergent", "expand", "verify_identities",
    "Connection", "Ladder", "build_ladder", "verify_ladder", "kuzmin_expected", "kuzmin_report",
]
