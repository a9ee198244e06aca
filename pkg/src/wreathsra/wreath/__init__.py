"""Wreath products S_N x| (Z/ell)^N, induced modules and their deformations."""
from .continuation import ContinuationError, ContinuationResult, direction_for_k, newton_continue
from .deformation import (FirstOrderResult, PreconditionError, equivariant_endomorphisms,
                          first_order_deformation, linearized_residuals_vanish, tangent_matches)
from .group import WreathElement, all_elements
from .hyperplane import (AffineSubspace, Hyperplane, content_hyperplane, hyperplane,
                         hyperplane_for_partition, intersect_hyperplanes, module_hyperplanes,
                         tangent_lambda_space)
from .induced import (MAX_DIMENSION, DimensionLimitError, HypothesisError, InducedModule,
                      build_induced, check_group_relations, coset_representatives)
from .relations import DeformationParameter, check_R1_R2, parameter_at
from .trace import (TraceForm, check_trace_conditions, expected_multiplier, tensor_swap_trace,
                    trace_condition)

__all__ = [
    "AffineSubspace",
    "ContinuationError",
    "ContinuationResult",
    "DeformationParameter",
    "DimensionLimitError",
    "FirstOrderResult",
    "Hyperplane",
    "HypothesisError",
    "InducedModule",
    "MAX_DIMENSION",
    "PreconditionError",
    "TraceForm",
    "WreathElement",
    "all_elements",
    "build_induced",
    "check_R1_R2",
    "check_group_relations",
    "check_trace_conditions",
    "content_hyperplane",
    "coset_representatives",
    "direction_for_k",
    "equivariant_endomorphisms",
    "expected_multiplier",
    "first_order_deformation",
    "hyperplane",
    "hyperplane_for_partition",
    "intersect_hyperplanes",
    "linearized_residuals_vanish",
    "module_hyperplanes",
    "newton_continue",
    "parameter_at",
    "tangent_lambda_space",
    "tangent_matches",
    "tensor_swap_trace",
    "trace_condition",
]
