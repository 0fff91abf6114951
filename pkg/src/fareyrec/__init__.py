"""Farey-recursive polynomial invariants of 2-bridge links.

Exact computation of the trace polynomials in Z[x, z], the character-variety
polynomials in Z[X, Z], and the Riley polynomials in Z[X], indexed by the
extended rationals, together with numeric representation checks and batch
table tooling.
"""

from .farey import (Fraction, FareyPair, Decomposition, INFINITY, ZERO, ONE,
                    NotAFareyPair, DenominatorTooSmall, reduce, farey_sum,
                    is_farey_pair, parents, decompose, boundary_sequence,
                    enumerate_range)
from .poly import (Poly, PolyParseError, parse_poly, format_poly,
                   gcd_univariate, squarefree_part, squarefree_decomposition)
from .engine import (FRFSpec, MemoStore, Family, SnapshotError, frf_value,
                     boundary_values, make_family, iter_family, trace_poly,
                     generic_poly, char_poly, riley_poly, uv_poly,
                     char_poly_from_trace, parity_bits, parity_monomial,
                     reducible_locus, TRACE_SPEC, GENERIC_SPEC)
from .words import (omega, free_reduce, ParameterPair, solve_t, parameter_pair,
                    rep_from_params, letter_images, word_image, trace_check,
                    prep_matrices, riley_roots, verify_prep, RootFindingError)
from .orbits import (MobiusMap, PHI_1, PHI_2, SIGMA, ZETA, apply,
                     send_to_infinity, stabilizer_generators, orbit_sample,
                     divides_quotient, check_factor_divides)
from .verify import CheckResult, run_suite, SUITES

__version__ = "0.1.0"
