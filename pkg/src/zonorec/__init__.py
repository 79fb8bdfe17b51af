"""Exact cube recurrence on rhombus tilings of zonogons."""

from .zonogon import (
    ZonogonSpec,
    Tiling,
    TilingError,
    LiftError,
    RetryBudgetExceeded,
    validate_tiling,
    project,
    lift_decomposition,
    t_min,
    t_min_vertices,
    tiling_through_vertex,
    tiling_with_cube_faces,
    reflect_tiling,
    phi,
)
from .flips import (
    FlipMove,
    FlipPath,
    FlipError,
    CapExceeded,
    FundamentalForest,
    fundamental_forest,
    flippable_vertices,
    apply_flip,
    apply_move,
    move_at,
    enumerate_tilings,
    random_tiling,
    normalize_to_min,
    connect,
    connect_through,
    rhombus_chain,
    cells_2,
)
from .laurent import LaurentPoly, InexactDivision, exact_div
from .engine import (
    RATIONAL,
    LAURENT,
    TROPICAL,
    DOMAINS,
    Labeling,
    DomainError,
    ConsistencyError,
    initial_labeling,
    symbolic_labeling,
    flip_value,
    evaluate_path,
    extend_to_lattice,
    verify_cube_relations,
    exchange_polynomial,
)
from .tropical import (
    Wall,
    Cutcurve,
    canonical_cutcurve,
    validate_cutcurve,
    elementary_move,
    all_cutcurves,
    w_inequalities_hold,
    check_propagation,
    local_step_check,
)
from .spinor import (
    Vector2n,
    Spinor,
    IsotropicSubspace,
    SpinPoint,
    SpinorError,
    eps,
    eps_dual,
    inner,
    clifford_act,
    bilinear_form_B,
    make_isotropic,
    pure_spinor,
    purity_check,
    complete_isotropic_pair,
    spin_coordinates,
    verify_trbi,
    trbi_residuals,
    sign_twist,
    projection_pi,
    pfaffian,
    isotropic_from_skew,
    random_isotropic_subspace,
    random_unit_vector,
)
from .svg import render_svg

__version__ = "0.1.0"
