"""Exact invariants of weighted homogeneous isolated hypersurface
singularities: microlocal V-filtration levels, spectra, log canonical
thresholds, multiplier ideals, and degreewise Hodge-ideal slices."""

from .errors import (
    CoordinatePowerWarning,
    DegreeMismatchError,
    HomogeneityRequiredError,
    InconsistentWeightsError,
    InfiniteQuotientError,
    InvalidInputError,
    NonIsolatedSingularityError,
    NonPositiveWeightsError,
    NotWeightedHomogeneousError,
    ParseError,
    SmoothDivisorError,
    UnderdeterminedWeightsError,
    UnknownVariableError,
    VHodgeError,
)
from .groebner import (
    GREVLEX,
    GradedSlice,
    GrevlexOrder,
    IdealHandle,
    MonomialOrder,
    SliceBuilder,
    WeightedGrevlexOrder,
    buchberger,
    graded_slice,
    ideal_power,
    ideal_sum,
    minimal_monomials,
    normal_form,
    quotient_dim,
    slice_equal,
    slice_sum,
    standard_monomials,
)
from .hodge import (
    EqualityReport,
    HodgeSlice,
    PoleFraction,
    RemarkIIReport,
    counterexample_remark_ii,
    hodge_slice,
    quotient_derivative,
    verify_242,
    verify_remark_i,
    verify_theorem1,
)
from .milnor import (
    MilnorData,
    Spectrum,
    build_milnor,
    lct,
    mlct,
    reduced_bs_roots,
    spectrum,
)
from .oracles import (
    DiagonalSpec,
    as_diagonal_spec,
    bp_candidates,
    bp_spectrum,
    bp_v_generators,
    bp_v_member,
)
from .polyring import (
    Polynomial,
    Ring,
    WeightSystem,
    alpha_value,
    attainable_degrees,
    check_coordinate_powers,
    check_weighted_homogeneous,
    exact_quotient,
    infer_variables,
    infer_weights,
    monomials_of_total_degree,
    monomials_of_weighted_degree,
    parse_expression,
    partial_derivative,
)
from .vfilt import (
    JumpList,
    VLevel,
    candidate_grid,
    gr_dim_direct,
    gr_dim_formula,
    hodge_floor,
    jumping_numbers,
    multiplier_ideal,
    next_candidate,
    v_level,
    v_member,
    v_order,
)

__version__ = "0.1.0"
