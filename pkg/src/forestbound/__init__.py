"""forestbound: exact machinery for spanning-forest bounds on regular graphs.

Counting (forests, matchings, pseudo-forests, spanning trees, tree-like
walks) is exact big-integer arithmetic throughout; real-valued constants
carry certified error radii; every headline inequality can be re-verified
from the command line (``forestbound verify all``).
"""

from .bounds import (
    BoundRow,
    conjecture_constant,
    forest_growth_below_conjecture,
    matching_bound_constant,
    matching_bound_integer,
    mckay_tree_constant,
    table1,
    verify_key_inequality,
)
from .errors import GenerationError, PrecisionError, ResourceLimitError
from .exactreal import BigReal, integer_nth_root, nth_root, sqrt, to_decimal_string
from .forests import (
    ForestPolynomial,
    forest_count,
    forest_polynomial,
    forest_polynomial_oracle,
    pseudo_forest_polynomial,
    r_at_two_exact,
    r_polynomial,
    r_polynomial_regular,
    spanning_tree_count,
)
from .graphs import (
    Multigraph,
    SignAssignment,
    complete_graph,
    contract_edge,
    cycle_graph,
    delete_edge,
    disjoint_union,
    girth,
    glued_cycles,
    petersen,
    random_regular,
    two_lift,
)
from .lifts import (
    CorrelationRecord,
    DegreeProductBounds,
    LiftForestComparison,
    LiftSearchResult,
    correlation_scan,
    degree_product_bounds,
    forest_counts_with_edges,
    girth_climbing_lift,
    lift_forest_comparison,
)
from .matching import (
    PathTree,
    matching_counts,
    matching_counts_complete,
    matching_polynomial,
    path_tree,
    total_tree_like_walks,
    tree_like_closed_walks,
)
from .polynomials import IntPolynomial, count_real_roots_in, power_sums, squarefree_part
from .reporting import CheckRecord, VerificationReport

__version__ = "0.1.0"

__all__ = [
    "BigReal",
    "BoundRow",
    "CheckRecord",
    "CorrelationRecord",
    "DegreeProductBounds",
    "ForestPolynomial",
    "GenerationError",
    "IntPolynomial",
    "LiftForestComparison",
    "LiftSearchResult",
    "Multigraph",
    "PathTree",
    "PrecisionError",
    "ResourceLimitError",
    "SignAssignment",
    "VerificationReport",
    "complete_graph",
    "conjecture_constant",
    "contract_edge",
    "correlation_scan",
    "count_real_roots_in",
    "cycle_graph",
    "degree_product_bounds",
    "delete_edge",
    "disjoint_union",
    "forest_count",
    "forest_counts_with_edges",
    "forest_growth_below_conjecture",
    "forest_polynomial",
    "forest_polynomial_oracle",
    "girth",
    "girth_climbing_lift",
    "glued_cycles",
    "integer_nth_root",
    "lift_forest_comparison",
    "matching_bound_constant",
    "matching_bound_integer",
    "matching_counts",
    "matching_counts_complete",
    "matching_polynomial",
    "mckay_tree_constant",
    "nth_root",
    "path_tree",
    "petersen",
    "power_sums",
    "pseudo_forest_polynomial",
    "r_at_two_exact",
    "r_polynomial",
    "r_polynomial_regular",
    "random_regular",
    "spanning_tree_count",
    "sqrt",
    "squarefree_part",
    "table1",
    "to_decimal_string",
    "total_tree_like_walks",
    "tree_like_closed_walks",
    "two_lift",
    "verify_key_inequality",
]
