"""
Reconocedor del lenguaje STCON_sf

⟨G, s, t, 1^k⟩ pertenece al lenguaje si N(i,j) ≤ k para todo par y existe
un camino s→t. El reconocedor trabaja sobre lay(G), que siempre es acíclico:
primero estima el espectro de su laplaciano y rechaza si algún valor es
menor que δ = 1/(2·n_lay·k); si no, lee las entradas de L⁻¹ y decide.
"""
from fractions import Fraction
from typing import Optional
import logging
import numpy as np
from app.graphs.layering import layer_graph, layered_index, layered_node
from app.linalg.laplacian import counting_laplacian
from app.models.graph import DirectedGraph
from app.models.quantum import NoiseModel
from app.models.results import RecognizerVerdict
from app.quantum.pseudoinverse import EffectivePseudoinverseEstimator
from app.quantum.spectrum import spectrum_estimate
from app.algorithms.counting import round_half_away
from app.utils.constants import (
    MESSAGES,
    RECOGNIZER_ENTRY_ACCURACY,
    RECOGNIZER_EPSILON,
    RECOGNIZER_EPSILON_PRIME,
    RejectReason
)
from app.utils.seeding import child_seeds

logger = logging.getLogger(__name__)

def _verdict(reason: RejectReason, detail, sigma_min: float, entries_read: int, parameters: dict) -> RecognizerVerdict:
    verdict = RecognizerVerdict(
        accepted=reason == RejectReason.ACCEPTED,
        reason=reason,
        detail=detail,
        sigma_min_estimate=sigma_min,
        entries_read=entries_read,
        parameters=parameters,
    )
    logger.info(MESSAGES[reason].format(detail=detail))
    return verdict

def recognize_stcon_sf(g: DirectedGraph, s: int, t: int, k: int, noise: NoiseModel,
                       seed: Optional[int] = None, strict_entry_sweep: bool = False,
                       epsilon: Fraction = RECOGNIZER_EPSILON,
                       epsilon_prime: Fraction = RECOGNIZER_EPSILON_PRIME) -> RecognizerVerdict:
    """
    Decide si ⟨g, s, t, 1^k⟩ está en STCON_sf

    lay(G) se construye con n+2 capas para que N((i,0),(i,n+1)) ≥ 2 detecte
    cualquier ciclo por i, incluidos los de longitud n.

    Args:
        g: Grafo dirigido
        s: Nodo origen
        t: Nodo destino
        k: Cota de caminos
        noise: Modelo de ruido
        seed: Semilla del algoritmo (por defecto noise.seed)
        strict_entry_sweep: Revisar todas las entradas de L⁻¹ y no solo ((i,0),(j,n+1))
        epsilon: Probabilidad de fallo de la estimación del espectro
        epsilon_prime: Probabilidad de fallo total de la lectura de entradas

    Returns:
        RecognizerVerdict; en modo exacto coincide con el predicado del oráculo
    """
    g.check_node(s, "s")
    g.check_node(t, "t")
    if k < 1:
        raise ValueError("k debe ser ≥ 1")

    n = g.n
    depth = n + 1
    lay = layer_graph(g, depth=depth)
    n_lay = lay.n
    delta = 1.0 / (2 * n_lay * k)
    spectrum_seed, threshold_seed, entry_seed = child_seeds(noise.seed if seed is None else seed, 3)
    laplacian = counting_laplacian(lay)

    parameters = {
        "k": k,
        "n_lay": n_lay,
        "depth": depth,
        "delta": delta,
        "epsilon": float(epsilon),
        "epsilon_prime": float(epsilon_prime),
        "seed": seed if seed is not None else noise.seed,
        "noise": noise.mode.value,
        "strict_entry_sweep": strict_entry_sweep,
    }

    spectrum = spectrum_estimate(
        laplacian, noise.derive(accuracy=delta, failure_prob=float(epsilon), seed=spectrum_seed)
    )
    sigma_min = spectrum.minimum
    parameters["spectrum_failed"] = spectrum.failed
    if sigma_min < delta:
        return _verdict(RejectReason.SMALL_SINGULAR_VALUE, None, sigma_min, 0, parameters)

    # ζ̃ ∈ [δ/4, 3δ/4] queda por debajo de todo σ ≥ δ: no hay truncamiento
    estimator = EffectivePseudoinverseEstimator(laplacian, delta / 2, delta / 4, seed=threshold_seed)
    parameters["zeta_realized"] = estimator.zeta_realized

    if strict_entry_sweep:
        rows = np.arange(n_lay)
        cols = np.arange(n_lay)
    else:
        rows = np.array([layered_index(i, 0, n) for i in range(n)])
        cols = np.array([layered_index(j, depth, n) for j in range(n)])
    entries_read = rows.size * cols.size
    entry_noise = noise.derive(
        accuracy=min(noise.accuracy, float(RECOGNIZER_ENTRY_ACCURACY)),
        failure_prob=float(epsilon_prime) / entries_read,
        seed=entry_seed,
    )
    values, _, failed = estimator.estimate_block(rows, cols, entry_noise)
    rounded = round_half_away(values).astype(np.int64)
    parameters["entries_failed"] = int(np.count_nonzero(failed))

    # Ciclos: N((i,0),(i,depth)) ≥ 2
    for i in range(n):
        row = i
        col = int(np.flatnonzero(cols == layered_index(i, depth, n))[0])
        if rounded[row, col] >= 2:
            return _verdict(RejectReason.CYCLE_DETECTED, i, sigma_min, entries_read, parameters)

    over = np.argwhere(rounded > k)
    if over.size:
        a, b = (int(x) for x in over[0])
        if strict_entry_sweep:
            detail = (layered_node(int(rows[a]), n), layered_node(int(cols[b]), n))
        else:
            detail = (a, b)
        return _verdict(RejectReason.ENTRY_EXCEEDS_K, detail, sigma_min, entries_read, parameters)

    st_col = int(np.flatnonzero(cols == layered_index(t, depth, n))[0])
    if rounded[s, st_col] < 1:
        return _verdict(RejectReason.NO_ST_PATH, None, sigma_min, entries_read, parameters)

    return _verdict(RejectReason.ACCEPTED, None, sigma_min, entries_read, parameters)
