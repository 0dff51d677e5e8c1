"""Torus-knot geometry, torsion and Verlinde numbers."""

from __future__ import annotations

from .charvar import (
    BlowupPoint,
    DegenerateProjectiveError,
    MoebiusImage,
    TorusKnot,
    TracePair,
    components,
    curve_param,
    exceptional_intersections,
    excluded_traces,
    make_knot,
    moebius_phi,
    on_blowup_surface,
    phi_red,
    reducible_trace,
    sample_curve,
    solve_trace_param,
)
from .chebyshev import (
    CurveIncidenceError,
    chebyshev_first,
    chebyshev_second,
    critical_points,
    curve_polynomials,
    evaluate_at_grid,
    incidence_polynomial,
    sine_power_sum,
    singular_points,
)
from .fusion import (
    FusionEngine,
    FusionMatrix,
    FusionTensor,
    IntegralityReport,
    d0_multi,
    d1_single_contracted,
    d_genus_via_d1,
    d_rational,
    fusion_engine,
    fusion_matrix,
    fusion_tensor,
    integrality_report,
)
from .indices import ComponentIndex, GridIndex, GridIndexError, KnotValidationError
from .smatrix import SMatrix, s_matrix, wzw_s_matrix, zagier_lemma_check
from .torsion import (
    PowerSum,
    TorsionValue,
    adjoint_torsion,
    hessian_at,
    hessian_closed_form,
    torsion_from_hessian,
    torsion_power_sum,
    torsion_s_matrix_relation_check,
    torsion_table,
)
from .verlinde import (
    MultiIndex,
    classical_verlinde_check,
    d0_one,
    d0_three,
    d0_two,
    d1_single,
    surface_knot_relation,
    verlinde_knot_trig,
    verlinde_surface,
)

__all__ = [
    "BlowupPoint",
    "ComponentIndex",
    "CurveIncidenceError",
    "DegenerateProjectiveError",
    "FusionEngine",
    "FusionMatrix",
    "FusionTensor",
    "GridIndex",
    "GridIndexError",
    "IntegralityReport",
    "KnotValidationError",
    "MoebiusImage",
    "MultiIndex",
    "PowerSum",
    "SMatrix",
    "TorsionValue",
    "TorusKnot",
    "TracePair",
    "adjoint_torsion",
    "chebyshev_first",
    "chebyshev_second",
    "classical_verlinde_check",
    "components",
    "critical_points",
    "curve_param",
    "curve_polynomials",
    "d0_multi",
    "d0_one",
    "d0_three",
    "d0_two",
    "d1_single",
    "d1_single_contracted",
    "d_genus_via_d1",
    "d_rational",
    "evaluate_at_grid",
    "exceptional_intersections",
    "excluded_traces",
    "fusion_engine",
    "fusion_matrix",
    "fusion_tensor",
    "hessian_at",
    "hessian_closed_form",
    "incidence_polynomial",
    "integrality_report",
    "make_knot",
    "moebius_phi",
    "on_blowup_surface",
    "phi_red",
    "reducible_trace",
    "s_matrix",
    "sample_curve",
    "sine_power_sum",
    "singular_points",
    "solve_trace_param",
    "surface_knot_relation",
    "torsion_from_hessian",
    "torsion_power_sum",
    "torsion_s_matrix_relation_check",
    "torsion_table",
    "verlinde_knot_trig",
    "verlinde_surface",
    "wzw_s_matrix",
    "zagier_lemma_check",
]
