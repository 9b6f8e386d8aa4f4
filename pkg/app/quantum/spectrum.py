"""
Estimación de todos los valores singulares de una matriz
"""
from typing import List, Tuple
import logging
import numpy as np
from app.linalg.decomposition import svd
from app.models.quantum import NoiseModel, SpectrumEstimate
from app.quantum.noise import NoiseSource

logger = logging.getLogger(__name__)

def spectrum_estimate(m, noise: NoiseModel) -> SpectrumEstimate:
    """
    Valores singulares de m con ruido acotado y fallo simulado

    Args:
        m: Matriz real
        noise: Modelo de ruido (accuracy = δ, failure_prob = ε)

    Returns:
        SpectrumEstimate con valores no crecientes; si `failed` es verdadero
        los valores no cumplen la cota de precisión
    """
    sigma = svd(m).sigma
    source = NoiseSource(noise)
    failed = bool(source.draw_failures(1)[0])
    values = source.perturb_spectrum(sigma)
    if failed:
        logger.warning(f"Fallo simulado en la estimación del espectro (ε={noise.failure_prob})")
        values = source.corrupt_spectrum(values)

    return SpectrumEstimate(
        values=tuple(float(v) for v in values),
        failed=failed,
        mode=noise.mode,
        accuracy=source.accuracy,
    )

def spectrum_multiplicities(values, tol: float = 1e-9) -> List[Tuple[float, int]]:
    """
    Agrupa valores cercanos en clústeres con su multiplicidad

    Los vectores singulares de un clúster no son únicos, por eso las
    comparaciones se hacen sobre clústeres y no sobre vectores.

    Returns:
        Lista (valor medio, multiplicidad) en orden no creciente
    """
    ordered = np.sort(np.asarray(values, dtype=np.float64))[::-1]
    clusters: List[List[float]] = []
    for v in ordered:
        if clusters and clusters[-1][-1] - v <= tol:
            clusters[-1].append(float(v))
        else:
            clusters.append([float(v)])
    return [(float(np.mean(c)), len(c)) for c in clusters]

def kernel_dimension(values, tol: float = 1e-9) -> int:
    """Número de valores singulares ≤ tol"""
    return int(np.count_nonzero(np.asarray(values) <= tol))

def recover_column_norm(p_well: float, zeta: float) -> float:
    """
    Recupera ‖M⁺_ζ̃ e_t‖ a partir de la probabilidad del resultado `well`

    p_well = ζ²·‖M⁺_ζ̃ e_t‖², así que la norma es √p_well / ζ.
    """
    if zeta <= 0:
        raise ValueError("zeta debe ser positivo")
    if p_well < 0:
        raise ValueError("La probabilidad no puede ser negativa")
    return float(np.sqrt(p_well) / zeta)
