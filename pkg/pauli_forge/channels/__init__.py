"""
Channels: states, Pauli channels, Choi / PTM forms, dynamical maps.

Generic linear maps are passed around as evaluators: callables taking a
2^N x 2^N operator to a 2^N x 2^N operator. Imports pauli_algebra and shared only.
"""

from pauli_forge.channels.choi import (
    choi_from_ptm,
    choi_matrix,
    choi_to_evaluator,
    evaluator_from_ptm,
    is_completely_positive,
    is_trace_preserving,
    ptm_from_choi,
    ptm_from_evaluator,
    superoperator,
)
from pauli_forge.channels.dynamical_map import DynamicalMap
from pauli_forge.channels.named_maps import NAMED_MAPS, named_dynamical_map, named_map
from pauli_forge.channels.pauli_channel import PauliChannel, apply_channel, multiplier_map
from pauli_forge.channels.states import (
    BlochCoefficients,
    DensityMatrix,
    bloch_compose,
    bloch_decompose,
    partial_trace,
)

__all__ = [
    "DensityMatrix",
    "BlochCoefficients",
    "bloch_decompose",
    "bloch_compose",
    "partial_trace",
    "PauliChannel",
    "apply_channel",
    "multiplier_map",
    "choi_matrix",
    "choi_to_evaluator",
    "superoperator",
    "ptm_from_evaluator",
    "evaluator_from_ptm",
    "choi_from_ptm",
    "ptm_from_choi",
    "is_completely_positive",
    "is_trace_preserving",
    "DynamicalMap",
    "NAMED_MAPS",
    "named_map",
    "named_dynamical_map",
]
