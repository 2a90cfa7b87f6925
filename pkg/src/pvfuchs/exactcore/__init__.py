"""Exact arithmetic substrate: rationals, series, polynomials, nullspaces."""
from .linalg import field_nullspace, rational_nullspace, rational_rank
from .multipoly import (EliminationError, MultiPoly, resultant_eliminate,
                        sylvester_matrix)
from .poly import Poly, RationalFunction, poly_gcd, poly_lcm
from .rational import (Q, as_rational, binomial, factorial, format_rational,
                       mpq, parse_rational, pochhammer)
from .series import (SeriesError, TruncatedSeries, change_variable, pfq_series,
                     pfq_terminating, series_derivative, series_product,
                     series_reciprocal)

__all__ = [
    "EliminationError", "MultiPoly", "Poly", "Q", "RationalFunction",
    "SeriesError", "TruncatedSeries", "as_rational", "binomial",
    "change_variable", "factorial", "field_nullspace", "format_rational", "mpq",
    "parse_rational", "pfq_series", "pfq_terminating", "pochhammer",
    "poly_gcd", "poly_lcm", "rational_nullspace", "rational_rank",
    "resultant_eliminate", "series_derivative", "series_product",
    "series_reciprocal", "sylvester_matrix",
]
