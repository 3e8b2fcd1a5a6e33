"""Dense sphere packings from prime-ideal towers and linear codes.

The library certifies a number field, factors rational primes, embeds
powers of a prime ideal as Euclidean lattices, and bounds the center
density of the concatenation with error-correcting codes.
"""

from .errors import IdealpackError
from .numfield import (IntPolynomial, NumberField, FieldElement, define_field,
                       element_from_int, element_from_poly, element_product,
                       element_norm, complex_roots)
from .idealarith import (IdealHNF, PrimeIdealFactor, AlphabetSet, unit_ideal,
                         principal_ideal, ideal_mul, ideal_power, ideal_norm,
                         contains, factor_prime, alphabet_set,
                         select_prime_factor)
from .embedding import (EmbeddingContext, LatticeBasis, working_precision,
                        embedding_context, embed_element, lattice_basis)
from .lattice import SvpResult, lll_reduce, shortest_vector, brute_force_min
from .codes import (CodeSpec, CodeTable, entropy, entropy_clamped, gv_rate,
                    max_levels, required_distances, load_code_table,
                    best_dimension, demo_code)
from .packing import (PackingReport, AsymptoticReport, MinSqTower,
                      finite_density_report, asymptotic_lambda,
                      enumerate_packing_points, verify_min_distance,
                      exact_norm_sq, log2_ball_volume)

__version__ = "0.1.0"

__all__ = [
    "IdealpackError",
    "IntPolynomial", "NumberField", "FieldElement", "define_field",
    "element_from_int", "element_from_poly", "element_product",
    "element_norm", "complex_roots",
    "IdealHNF", "PrimeIdealFactor", "AlphabetSet", "unit_ideal",
    "principal_ideal", "ideal_mul", "ideal_power", "ideal_norm", "contains",
    "factor_prime", "alphabet_set", "select_prime_factor",
    "EmbeddingContext", "LatticeBasis", "working_precision",
    "embedding_context", "embed_element", "lattice_basis",
    "SvpResult", "lll_reduce", "shortest_vector", "brute_force_min",
    "CodeSpec", "CodeTable", "entropy", "entropy_clamped", "gv_rate",
    "max_levels", "required_distances", "load_code_table", "best_dimension",
    "demo_code",
    "PackingReport", "AsymptoticReport", "MinSqTower",
    "finite_density_report", "asymptotic_lambda",
    "enumerate_packing_points", "verify_min_distance", "exact_norm_sq",
    "log2_ball_volume",
]
