"""
Cotas de norma usadas para elegir Z y certificar espectros
"""
from typing import Tuple
import numpy as np

def max_norm(m) -> float:
    """‖M‖_max: mayor valor absoluto de una entrada"""
    m = np.asarray(m, dtype=np.float64)
    return float(np.abs(m).max()) if m.size else 0.0

def max_norm_bounds(m) -> Tuple[float, float]:
    """
    Cotas certificadas ‖M‖_max ≤ σ_1(M) ≤ n·‖M‖_max

    Args:
        m: Matriz cuadrada n×n

    Returns:
        Tupla (inferior, superior)
    """
    m = np.asarray(m, dtype=np.float64)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"Se esperaba una matriz cuadrada, forma recibida: {m.shape}")
    lower = max_norm(m)
    return lower, m.shape[0] * lower
