"""Exact symbolic toolkit for almost Gorenstein Rees algebras over k[x,y].

Polynomial arithmetic over F_p or Q, Buchberger-based ideal algebra with
certificate tracking, monomial-ideal combinatorics (staircases, Newton
polygons, integral closure), reductions and Rees presentation ideals, and
the decision procedures themselves: witness search, socle criterion, and
the quadric-hypersurface family.
"""

from .core import (
    BlockOrder,
    GF32003,
    Grevlex,
    Lex,
    Poly,
    PrimeField,
    QQ,
    RationalField,
    RingCtx,
    field_by_name,
    format_ideal,
    format_poly,
    order_by_name,
)
from .groebner import (
    IdealHandle,
    Representation,
    groebner_basis,
    ideal,
    ideal_colon,
    ideal_contains,
    ideal_equal,
    ideal_intersect,
    ideal_power,
    ideal_product,
    ideal_sum,
    is_m_primary,
    is_member,
    is_unit_ideal,
    is_zero_ideal,
    local_equal,
    m_primary_part,
    min_gens,
    normal_form,
    poly_div_exact,
    reduced_generators,
    scale_ideal,
    vdim,
)
from .monomial import (
    MonoIdeal2,
    closure_oracle,
    integral_closure,
    is_integrally_closed,
    mono_colon,
    mono_intersect,
    mono_minimalize,
    mono_power,
    mono_product,
    newton_polygon,
)
from .rees import (
    JointReduction,
    ReductionPair,
    ReesPresentation,
    SearchFailure,
    canonical_colon,
    find_joint_reduction,
    find_parameter_reduction,
    is_reduction,
    joint_reduction_verify,
    random_combo,
    reduction_number,
    rees_base_contraction,
    rees_ideal,
    rees_substitution_check,
)
from .agcheck import (
    AGVerdict,
    FGHReport,
    GORENSTEIN,
    HypersurfaceReport,
    INCONCLUSIVE,
    NOT_AG,
    NOT_CLOSED_WARNING,
    SocleReport,
    WITNESS,
    WitnessTriple,
    ag_check,
    ag_witness_search,
    check_witness,
    hypersurface_example,
    socle_FGH,
    socle_ag_criterion,
    socle_criterion_fires,
    socle_presentation,
    verify_witness_triple,
)
from .suite import SuiteEntry, SuiteReport, run_suite

__version__ = "0.1.0"
