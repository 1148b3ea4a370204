"""Hermitian matrix representations of noncommutative genus-g surface algebras.

The package constructs, verifies, and classifies the low-dimensional
representations of the deformed surface algebras defined by an even
polynomial level set, together with the polynomial analysis, graph
admissibility rules, and root isolation that drive the existence
arguments.
"""

from .errors import (
    ConstraintError,
    ConvergenceError,
    EmptyIsosurfaceError,
    ExistenceError,
    GenusRepError,
    IncompatibleParametersError,
    ParameterRangeError,
    SchemaError,
)
from .poly import RealPolynomial
from .surface import (
    SurfaceParams,
    alpha_upper_bound,
    build_G,
    build_p,
    check_M_bounds,
    check_p_zero,
    f_3d,
    f_type_i,
    level_set_C,
    max_G,
    p_hat,
    q_h,
    r_3d,
    r_h_pair,
)
from .rootfind import Bracket, isolate_real_roots, real_roots, refine
from .linalg import (
    ResidualReport,
    ab_equation_residuals,
    apply_poly,
    commutator,
    equivalence_2d,
    equivalence_2d_bruteforce,
    reduced_residuals,
    relation_residuals,
    t_ordering,
)
from .graphs import (
    GraphVerdict,
    MatrixGraph,
    count_walks,
    enumerate_small_graphs,
    forbidden_check,
    graph_of,
    is_connected,
)
from .reps import (
    Classification,
    Kind,
    RepMeta,
    Representation,
    classify,
    construct_3d_string,
    construct_type_I,
    construct_type_II,
    is_degenerate,
    one_dim_rep,
    one_dim_reps,
    transport,
    type_I_branch_points,
)

__version__ = "0.1.0"
