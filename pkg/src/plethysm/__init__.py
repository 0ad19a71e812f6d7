"""Exact plethysm of Schur functions and checks of its factorisation properties."""

from .engine import (
    NotSymmetricError,
    PlethysmCache,
    PositivityError,
    SchurExpansion,
    coefficient,
    omega_twist,
    plethysm,
    plethysm_monomial,
    schur_monomials,
    set_cache,
    to_schur,
)
from .maxterms import dominance_maximal, leading_term, max_lex, max_translex, signature
from .partitions import (
    Composition,
    Partition,
    PartitionError,
    add,
    conjugate,
    dominates,
    double_bracket,
    enumerate_partitions,
    format_partition,
    lex_compare,
    m_twist,
    parse_partition,
    translex_compare,
    union,
)
from .powersum import plethysm_powersum
from .symmetric import MonomialExpansion
from .tableaux import (
    PlethysticTableau,
    SemistandardTableau,
    enumerate_plethystic,
    enumerate_ssyt,
    kostka,
    maximal_pleth_weights,
    tableau_compare,
    tableau_weight,
)
from .verify import (
    ProductKey,
    is_homogeneous,
    is_indecomposable,
    products_equal,
    verify_square_formula,
    verify_theorem_A,
    verify_theorem_B,
)

__version__ = "0.1.0"
