"""Hyper-dual vectors, the line correspondence and ruled surfaces built from
curves on the hyper-dual unit sphere."""

__version__ = "0.1.0"

from .scalars import (EPS, EPS_STAR, Dual, DomainError, HyperDual, derivatives,
                      derivatives_of, hd_add, hd_lift, hd_mul, hd_sqrt, jet)
from .vectors import (DualVec3, HyperDualVec3, Membership, hd_cross, hd_inner, hd_norm,
                      on_hyperdual_sphere, on_tangent_bundle, on_unit_dual_sphere,
                      on_unit_hyperdual_sphere, on_unit_tangent_bundle)
from .expr import EvalError, ParseError, parse, to_source
from .curves import (Curve3, DegenerateCurveError, HyperDualCurve, adapted_frame, circle,
                     curve_from_frame_lanes, derivative_lanes, frenet_frame, hd_arc_length,
                     helix, line)
from .study import (BaseMismatchError, Line3, MembershipError, PreconditionError,
                    RuledSurface3, build_couple, decompose, dual_det_identity_residual,
                    dual_to_line, inverse_pair, is_developable_dual, is_developable_r3,
                    line_to_dual, pair_from_unit_gamma)
from .mesh import developability_report, sample_mesh, write_curve_csv, write_obj

__all__ = [
    "BaseMismatchError",
    "Curve3",
    "DegenerateCurveError",
    "DomainError",
    "Dual",
    "DualVec3",
    "EPS",
    "EPS_STAR",
    "EvalError",
    "HyperDual",
    "HyperDualCurve",
    "HyperDualVec3",
    "Line3",
    "Membership",
    "MembershipError",
    "ParseError",
    "PreconditionError",
    "RuledSurface3",
    "adapted_frame",
    "build_couple",
    "circle",
    "curve_from_frame_lanes",
    "decompose",
    "derivative_lanes",
    "derivatives",
    "derivatives_of",
    "developability_report",
    "dual_det_identity_residual",
    "dual_to_line",
    "frenet_frame",
    "hd_add",
    "hd_arc_length",
    "hd_cross",
    "hd_inner",
    "hd_lift",
    "hd_mul",
    "hd_norm",
    "hd_sqrt",
    "helix",
    "inverse_pair",
    "is_developable_dual",
    "is_developable_r3",
    "jet",
    "line",
    "line_to_dual",
    "on_hyperdual_sphere",
    "on_tangent_bundle",
    "on_unit_dual_sphere",
    "on_unit_hyperdual_sphere",
    "on_unit_tangent_bundle",
    "pair_from_unit_gamma",
    "parse",
    "sample_mesh",
    "to_source",
    "write_curve_csv",
    "write_obj",
]
