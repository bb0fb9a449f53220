"""Invariants, orbit-type strata and weight recovery for linear circle actions."""

from ._core import (
    ActionSpec,
    CircleActionError,
    ExponentVector,
    GeneratorPart,
    InvariantGenerator,
    StratificationDiagram,
    check_axes_image,
    check_m2_membership,
    circle_weight,
    decompose,
    evaluate_hilbert_map,
    face_table,
    gcd_label,
    hilbert_basis,
    infer_dimensions,
    is_invariant_exponent,
    isotropy_order,
    orbit_strata,
    realize_generators,
    recover,
    recover_weights,
    rotate,
    roundtrip,
    same_orbit,
    verify,
)

__all__ = [
    "ActionSpec",
    "CircleActionError",
    "ExponentVector",
    "GeneratorPart",
    "InvariantGenerator",
    "StratificationDiagram",
    "check_axes_image",
    "check_m2_membership",
    "circle_weight",
    "decompose",
    "evaluate_hilbert_map",
    "face_table",
    "gcd_label",
    "hilbert_basis",
    "infer_dimensions",
    "is_invariant_exponent",
    "isotropy_order",
    "orbit_strata",
    "realize_generators",
    "recover",
    "recover_weights",
    "rotate",
    "roundtrip",
    "same_orbit",
    "verify",
]
