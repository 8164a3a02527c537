"""d-chromatic and star-critical Ramsey numbers for stars."""

from .coloring import ColoredGraph
from .constructions import lower_bound_coloring, star_critical_lower_coloring
from .decompositions import (
    Factorization,
    hamiltonian_decomposition,
    one_factorization,
    split_path_into_matchings,
    two_factorization,
)
from .errors import (
    BudgetExhausted,
    ColorCountMismatch,
    EvenOrder,
    HypothesisViolated,
    InternalInconsistency,
    MalformedInput,
    NotAPath,
    NotApplicable,
    OddOrder,
    OutOfTheoremRange,
    StarRamseyError,
)
from .family import EllProfile, StarFamily, ell_profile, sum_condition, window
from .formulas import (
    RamseyAnswer,
    StarCriticalAnswer,
    b_threshold,
    degree_forces_star,
    ramsey_classical,
    ramsey_general,
    ramsey_tminus1_xq,
    ramsey_uniform,
    star_critical_classical,
    star_critical_tminus1_xq,
    star_critical_uniform,
)
from .oracle import (
    OracleResult,
    SearchConfig,
    brute_force_ramsey,
    brute_force_star_critical,
    exists_avoidance_coloring,
)
from .verifier import StarWitness, color_degree_vectors, find_star, verify_no_star

__version__ = "0.1.0"
