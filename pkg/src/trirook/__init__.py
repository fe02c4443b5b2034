"""Exact arithmetic for the planar upper triangular rook monoid.

Element algebra and matrix forms (`elements`), orders and the ballot
bijection (`counting`), the subset-lattice module with dimension and
branching formulas (`modules`), the generators/relations presentation
with a normal-form rewriter (`words`), cross-checking sweeps (`verify`),
and a CLI (`cli`).
"""

from .counting import (
    BallotSequence,
    OrderTable,
    ballot_decode,
    ballot_encode,
    ballot_from_bits,
    binom,
    build_order_table,
    catalan,
    count_echelon,
    count_planar,
    enumerate_bn,
    enumerate_rn,
    order_bn,
    order_prn,
    order_recursive,
)
from .elements import (
    ENUM_MAX,
    N_MAX,
    PartialMap,
    RookMatrix,
    compose,
    embed,
    from_matrix,
    identity,
    in_bn,
    is_generalized_reduced_echelon,
    is_order_decreasing,
    is_order_preserving,
    make_partial_map,
    parse_element,
    print_element,
    restriction_identity,
    rook_matrix,
    to_matrix,
    zero_map,
)
from .errors import (
    BoundExceeded,
    CardinalityMismatch,
    DimensionMismatch,
    DuplicateDomain,
    DuplicateRange,
    IndexOutOfRange,
    InvalidBallot,
    InvalidRange,
    NotARookMatrix,
    NotDownClosed,
    NotInBn,
    ParseError,
    TriRookError,
)
from .modules import (
    BranchSummand,
    DimRecursion,
    ModuleVector,
    ReducedSupport,
    Subset,
    act,
    act_on_subset,
    basis_vector,
    bold,
    branch_compute,
    branch_even,
    branch_predict,
    catalan_via_gamma,
    cyclic_span,
    decompose,
    dim_cyclic,
    dim_mixed,
    dim_oracle,
    dim_recursion,
    dim_single,
    down_set,
    is_indecomposable,
    meet,
    minimal_irreducible,
    mixed_subset,
    mixed_subset_elements,
    reduced_form,
    reduced_generator_of_span,
    reduced_support,
    subset_leq,
    top_block,
)
from .words import (
    ONE,
    GeneratorSymbol,
    RelationFamilyReport,
    RelationReport,
    StandardWord,
    Word,
    check_relations,
    concrete_generator,
    e_sym,
    element_to_std,
    enumerate_standard_words,
    eval_word,
    expand_std,
    identity_std,
    l_sym,
    mul_std_left,
    mul_std_right,
    parse_word,
    rewrite,
    std_to_element,
    words_over,
    zero_std,
)

__version__ = "0.1.0"
