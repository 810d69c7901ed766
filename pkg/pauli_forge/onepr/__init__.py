"""
1PR circuits: normal form, curve decompositions, fitting, synthesis, random maps.

Builds on circuits/ and channels/. Decompositions and curves are immutable;
fitting is deterministic for a given seed.
"""

from pauli_forge.onepr.decomposition import (
    OneprDecomposition,
    StateCurve,
    check_conditions,
    curve_from_decomposition,
    evaluate_decomposition,
    lift_map,
    named_decomposition,
)
from pauli_forge.onepr.fitting import decomposition_residual, fit_dynamical_map, fit_onepr
from pauli_forge.onepr.gram import curve_rank, fit_gram_ellipse, gram_circle_test
from pauli_forge.onepr.normal_form import AxisRotation, axis_to_z_normal_form
from pauli_forge.onepr.random_maps import random_onepr_map, random_unitary_with_first_row
from pauli_forge.onepr.synthesis import OneprCircuit, random_onepr_circuit, synthesize_onepr_circuit

__all__ = [
    "AxisRotation",
    "axis_to_z_normal_form",
    "OneprDecomposition",
    "StateCurve",
    "check_conditions",
    "evaluate_decomposition",
    "curve_from_decomposition",
    "lift_map",
    "named_decomposition",
    "curve_rank",
    "fit_gram_ellipse",
    "gram_circle_test",
    "fit_onepr",
    "fit_dynamical_map",
    "decomposition_residual",
    "OneprCircuit",
    "synthesize_onepr_circuit",
    "random_onepr_circuit",
    "random_onepr_map",
    "random_unitary_with_first_row",
]
