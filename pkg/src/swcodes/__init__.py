"""Sizes, bounds, searches and constructions for symbol-weight codes.

The symbol weight of a word is the highest frequency of any single symbol in
it; spaces and codes keyed by that statistic arise in powerline-style
channels where one symbol may be jammed at every time instant.
"""

from .compositions import (
    Composition,
    CompositionFamily,
    count_bounded_compositions,
    dplus,
    enumerate_compositions,
    hamming_distance,
    is_refinement,
    iter_compositions,
    refinement_witness,
    search_anticode,
)
from .spaces import (
    AsymptoticRegime,
    asymptotic_space_rate,
    bounded_space_size,
    constant_space_size,
    count_exact_weight_compositions,
    empirical_space_rate,
    min_symbols_at_weight,
    q_ary_entropy,
)
from .bounds import (
    BestBounds,
    BoundResult,
    CCOracle,
    NotApplicableError,
    anticode_sum_lower,
    best_bounds,
    bsw_lower_composed,
    csw_lower_composed,
    cw_lower,
    dukes_upper,
    gv_rate_lower,
    johnson_upper,
    large_weight_rate_upper,
    levenshtein_significance,
    lp_rate_upper,
    perm_anticode_lower,
    singleton_upper,
    trivial_q_regime,
)
from .codes import (
    Code,
    ball_size,
    best_coset_intersection,
    concat_construct,
    conjecture_check,
    exhaustive_optimum,
    iter_rs_csw_subcode,
    mds_weight_distribution,
    rs_code,
    symbol_weight,
    uv_construct,
)
from .galois import Field, count_monic_irreducibles, field, mobius
from .limits import EnumerationCapError

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
