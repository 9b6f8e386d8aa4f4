"""
Simulación a nivel de matrices de las subrutinas cuánticas
"""

from .noise import NoiseSource
from .spectrum import spectrum_estimate, spectrum_multiplicities, kernel_dimension, recover_column_norm
from .pseudoinverse import (
    effective_pseudoinverse,
    draw_threshold,
    well_outcome_probability,
    EffectivePseudoinverseEstimator,
    estimate_pseudoinverse_entry
)

__all__ = [
    'NoiseSource',
    'spectrum_estimate',
    'spectrum_multiplicities',
    'kernel_dimension',
    'recover_column_norm',
    'effective_pseudoinverse',
    'draw_threshold',
    'well_outcome_probability',
    'EffectivePseudoinverseEstimator',
    'estimate_pseudoinverse_entry'
]
