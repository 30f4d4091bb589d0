"""Exact Waring rank of binary forms.

Sylvester's algorithm with replayable certificates, the closed-form rank of
binomials, and the dihedral cover of rank-two forms through three fixed roots.
"""

from .binomial import BinomialSpec, binomial_rank, binomial_witness, monomial_rank
from .cover import (DihedralElement, RootTriple, arc_counts, cross_ratio, dihedral_act, enumerate_rank_two,
                    gamma_canonical, gamma_general, hyperbolicity_check, m_map, mobius_from_three_points,
                    orbits, partitions_equal, terracini_transversality)
from .field import (CyclotomicField, CyclotomicNumber, conjugate, cyclotomic_field, cyclotomic_polynomial,
                    is_real, root_of_unity)
from .forms import (BinaryForm, Matrix2, apolar_apply, catalecticant, distinct_root_count, divides, gl2_act,
                    hilbert_function, is_square_free, normalize_projective, product_of_linear_forms)
from .linalg import ExactMatrix, kernel
from .sylvester import (RankCertificate, SecantClass, apolar_generators, classify_secant_point,
                        initial_degree, waring_rank)

__version__ = "0.1.0"

__all__ = [
    "BinaryForm", "BinomialSpec", "CyclotomicField", "CyclotomicNumber", "DihedralElement", "ExactMatrix",
    "Matrix2", "RankCertificate", "RootTriple", "SecantClass",
    "apolar_apply", "apolar_generators", "arc_counts", "binomial_rank", "binomial_witness", "catalecticant",
    "classify_secant_point", "conjugate", "cross_ratio", "cyclotomic_field", "cyclotomic_polynomial",
    "dihedral_act", "distinct_root_count", "divides", "enumerate_rank_two", "gamma_canonical", "gamma_general",
    "gl2_act", "hilbert_function", "hyperbolicity_check", "initial_degree", "is_real", "is_square_free",
    "kernel", "m_map", "mobius_from_three_points", "monomial_rank", "normalize_projective", "orbits",
    "partitions_equal", "product_of_linear_forms", "root_of_unity", "terracini_transversality", "waring_rank",
]
