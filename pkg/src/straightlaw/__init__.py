"""Exact straightening of products of matrix minors into integer combinations
of standard monomials, with every identity certified against brute-force
polynomial expansion, plus an exact verifier for the linear independence of
standard monomials."""

from .indexsets import (
    EMPTY,
    IndexSet,
    MAX_GROUND,
    complement,
    full_set,
    is_good,
    laplace_sign,
    leq,
    leq_pair,
    leq_prefix,
    lt,
    multiset_content,
    parity_sign,
    perm_sign_front,
    permutation_sign,
    subsets,
    subsets_between,
    supersets,
)
from .polynomials import (
    MONOMIAL_ONE,
    Monomial,
    Polynomial,
    Variable,
    compare_monomials,
    format_monomial,
    monomial,
    mul_monomials,
    variable_key,
    xvar,
    yvar,
    zvar,
)
from .bideterminants import (
    LaplaceCombination,
    LaplaceProduct,
    Minor,
    RELATION_FAMILIES,
    check_relation,
    eval_on_permutation,
    expand_laplace,
    expand_minor,
    laplace_expansion,
    matching_permutations,
    relation_complementary,
    relation_family,
    relation_fundamental,
    relation_inclusion_exclusion,
)
from .straightening import (
    MergeMap,
    PairCombination,
    merge_map,
    straighten_laplace,
    straighten_pair,
)
from .standard import (
    MinorWord,
    WordCombination,
    canonicalize,
    content,
    expand_word,
    is_standard,
    normal_form,
)
from .independence import (
    CompletenessReport,
    IndependenceReport,
    Specialization,
    binet_cauchy_check,
    decode_leading,
    integer_rank,
    minor_leading_monomial,
    nonzero_minors,
    polynomial_rank,
    standard_words,
    verify_independence,
    verify_relation_completeness,
    word_leading_witness,
    y_minor,
    z_minor,
)
from .cli import format_expression, parse_expression

__version__ = "0.1.0"
