"""
Algoritmos de conteo y reconocimiento de caminos, con líneas base clásicas
"""

from .counting import count_paths_strongly_few, count_paths_few_endpoints, round_count, round_half_away
from .recognizer import recognize_stcon_sf
from .savitch import savitch_reachable, SavitchSearch
from . import diagnostics

__all__ = [
    'count_paths_strongly_few',
    'count_paths_few_endpoints',
    'round_count',
    'round_half_away',
    'recognize_stcon_sf',
    'savitch_reachable',
    'SavitchSearch',
    'diagnostics'
]
