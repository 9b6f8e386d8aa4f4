"""
Utilidades generales
"""

from .constants import Algorithm, NoiseMode, CountKind, RejectReason, GeneratorName, MESSAGES
from .seeding import instance_seed, child_seeds, make_rng

__all__ = [
    'Algorithm',
    'NoiseMode',
    'CountKind',
    'RejectReason',
    'GeneratorName',
    'MESSAGES',
    'instance_seed',
    'child_seeds',
    'make_rng'
]
