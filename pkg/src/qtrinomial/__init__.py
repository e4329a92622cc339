"""Exact arithmetic for refined q-trinomials and the identities built from them."""

from .catalog import CATALOG, catalog_table, evaluate, verify_instance
from .poly import ONE, Q, ZERO, LaurentPoly, TruncatedSeries, exact_div, monomial, truncate
from .qfuncs import MonomialArg, poch_finite, poch_infinite, qbinom, qpow
from .trinomials import refined_S, refined_T, round_trinomial, t_zero

__version__ = "0.1.0"
