"""Exact computational algebra for truth-value functions of type-2 fuzzy sets."""

from .errors import DomainError, ValidationError
from .rationals import ONE, ZERO, to_rational, to_unit
from .piecewise import (
    EnvelopeThresholds,
    PiecewiseFn,
    canonicalize,
    constant,
    dumps,
    envelope_left,
    envelope_left_strict,
    envelope_right,
    envelope_right_strict,
    equals,
    evaluate,
    falling_ramp,
    from_affine,
    from_json_dict,
    in_lattice,
    indicator,
    is_convex,
    is_interval_indicator,
    is_normal,
    is_point_indicator,
    left_threshold,
    loads,
    pointwise_leq,
    pointwise_max,
    pointwise_min,
    reflect,
    right_threshold,
    rising_ramp,
    step,
    sup_value,
    thresholds,
    to_json_dict,
    unit_spike,
)
from .connectives import (
    BOUNDED_SUM,
    DRASTIC,
    DRASTIC_CONORM,
    LUKASIEWICZ,
    MAXIMUM,
    MINIMUM,
    PROBABILISTIC_SUM,
    PRODUCT,
    PROJECTION,
    ScalarConnective,
    builtin_connectives,
    check_boundary_characterization,
    check_connective_axioms,
    connective_by_name,
    dual_connective,
)
from .lattice import (
    BOTTOM,
    FULL,
    TOP,
    join,
    leq_pre,
    leq_sub,
    leq_sub_by_definition,
    meet,
    order_equivalence_check,
)
from .convolution import (
    GridFn,
    GridSpec,
    convolve_join,
    convolve_join_at,
    convolve_meet,
    convolve_meet_at,
    verify_star_forced_properties,
)
from .star import (
    COSTAR,
    JOIN,
    MEET,
    STAR,
    TruthValueOp,
    costar,
    dualize,
    resolve_operation,
    star,
    star_envelopes,
)
from .axioms import (
    GeneratorConfig,
    check_tr_axioms,
    comparable_pair,
    generate_lattice_functions,
    generate_nonlattice_functions,
    neutrality_gap_rows,
    random_normal_convex,
    random_piecewise,
    replicate_notnorm_conorm_gap,
    replicate_separation,
    separation_fixture,
    separation_rows,
    shrink_witness,
)
from .report import AxiomReport, all_passed, format_report_table, reports_to_json
from .plotting import render_svg
