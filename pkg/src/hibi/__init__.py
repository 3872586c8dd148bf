"""Multigraded Hibi rings: lattices, Hilbert series, multidegrees, Cartwright-Sturmfels."""

from .cartwright_sturmfels import (
    CsVerdict,
    EliminationRealization,
    MatrixRealization,
    NonCsWitness,
    build_elimination_realization,
    build_matrix_realization,
    build_non_cs_witness,
    cs_check,
)
from .grading import (
    ChainGradingSpec,
    Multigrading,
    grading_from_chain,
    is_homogeneous,
    recover_chain_grading,
)
from .hilbert import (
    antichain_series_closed_form,
    eulerian_polynomial,
    hilbert_function_oracle_multichain,
    hilbert_function_oracle_sigma,
    hilbert_series,
    hilbert_series_fc,
    k_polynomial,
)
from .ideal import (
    HibiBinomial,
    PrimaryComponent,
    codim,
    hibi_generators,
    initial_ideal,
    primary_decomposition,
    verify_groebner_property,
)
from .lattice import (
    DistLattice,
    build_lattice,
    incomparable_pairs,
    join,
    join_irreducibles,
    maximal_chains,
    meet,
)
from .multidegree import MultidegreeResult, degree_specialize, multidegree_via_chains, multidegree_via_k
from .polyring import IntPolynomial, SeriesRational, parse_polynomial
from .poset import (
    Poset,
    chain_index,
    descent_stat,
    is_chain,
    is_naturally_labeled,
    linear_extensions,
    natural_relabel,
    poset_from_covers,
)

__version__ = "0.1.0"
