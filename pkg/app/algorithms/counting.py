"""
Conteo de caminos s→t con la (pseudo)inversa del laplaciano de conteo

Para un grafo acíclico L = I - A es invertible y L⁻¹(s,t) = N(s,t). Basta
estimar esa entrada con error < 1/2 y redondear.
"""
from typing import Optional, Tuple
import logging
import numpy as np
from app.config import settings
from app.graphs.layering import layer_graph, layered_index
from app.linalg.laplacian import counting_laplacian
from app.models.graph import DirectedGraph
from app.models.quantum import NoiseModel
from app.models.results import CountResult
from app.quantum.pseudoinverse import EffectivePseudoinverseEstimator
from app.utils.constants import THEOREM1_ACCURACY, THEOREM2_EPSILON
from app.utils.exceptions import PromiseViolationSuspected
from app.utils.seeding import child_seeds

logger = logging.getLogger(__name__)

# Holgura numérica al comparar con el presupuesto de error
BUDGET_SLACK = 1e-9

def round_half_away(x):
    """Redondeo al entero más cercano, empates lejos de cero"""
    return np.sign(x) * np.floor(np.abs(x) + 0.5)

def round_count(raw_value: float, budget: float) -> Tuple[int, float]:
    """
    Redondea un conteo estimado y valida el resultado

    El margen mínimo (MARGIN_GUARD) se revisa antes que el presupuesto. Con
    los presupuestos de los algoritmos (1/3 y 2/5) el margen ya es al menos
    1/6 y 1/10, así que el resguardo sólo actúa si se configura por encima
    de esos valores.

    Args:
        raw_value: Estimación antes del redondeo
        budget: Error aditivo total admitido

    Returns:
        Tupla (conteo, margen al semientero más cercano)

    Raises:
        PromiseViolationSuspected: si la estimación no se puede redondear con confianza
    """
    count = int(round_half_away(raw_value))
    distance = abs(raw_value - count)
    margin = 0.5 - distance

    if raw_value < -budget - BUDGET_SLACK:
        raise PromiseViolationSuspected(
            f"Estimación negativa {raw_value:.6f} fuera del presupuesto {budget:.4f}",
            raw_value=raw_value, margin=margin,
        )
    if margin < settings.MARGIN_GUARD:
        raise PromiseViolationSuspected(
            f"Margen {margin:.4f} menor que {settings.MARGIN_GUARD}",
            raw_value=raw_value, margin=margin,
        )
    if distance > budget + BUDGET_SLACK:
        raise PromiseViolationSuspected(
            f"Estimación {raw_value:.6f} a {distance:.4f} del entero más cercano",
            raw_value=raw_value, margin=margin,
        )
    return max(count, 0), margin

def _split_seeds(noise: NoiseModel, seed: Optional[int]) -> Tuple[int, int]:
    """Semillas del umbral y del ruido de la entrada"""
    threshold_seed, noise_seed = child_seeds(noise.seed if seed is None else seed, 2)
    return threshold_seed, noise_seed

def count_paths_strongly_few(g: DirectedGraph, s: int, t: int, P: int, noise: NoiseModel,
                             seed: Optional[int] = None) -> CountResult:
    """
    Cuenta caminos s→t bajo la promesa fuertemente-pocos

    Promesa: g acíclico y N(i,j) ≤ P para todo par (no se verifica). Entonces
    σ_n(L) ≥ 1/(n·P) y con ζ = 1/(2nP), δ = 1/(4nP) no hay truncamiento:
    la entrada leída es L⁻¹(s,t) con error ≤ 1/3.

    Args:
        g: Grafo dirigido
        s: Nodo origen
        t: Nodo destino
        P: Cota de caminos de la promesa
        noise: Modelo de ruido de la entrada
        seed: Semilla del algoritmo (por defecto noise.seed)

    Returns:
        CountResult con el conteo redondeado

    Raises:
        PromiseViolationSuspected: si el redondeo no es confiable
    """
    g.check_node(s, "s")
    g.check_node(t, "t")
    if P < 1:
        raise ValueError("P debe ser ≥ 1")

    n = g.n
    zeta = 1.0 / (2 * n * P)
    delta = 1.0 / (4 * n * P)
    accuracy = min(noise.accuracy, float(THEOREM1_ACCURACY))
    threshold_seed, noise_seed = _split_seeds(noise, seed)

    estimator = EffectivePseudoinverseEstimator(counting_laplacian(g), zeta, delta, seed=threshold_seed)
    estimate = estimator.estimate(s, t, noise.derive(accuracy=accuracy, seed=noise_seed))

    parameters = {
        "P": P,
        "n": n,
        "zeta": zeta,
        "delta": delta,
        "epsilon": accuracy,
        "Z": estimator.Z,
        "zeta_realized": estimate.zeta_realized,
        "kept_rank": estimate.kept_rank,
        "seed": seed if seed is not None else noise.seed,
        "noise": noise.mode.value,
        "failed": estimate.failed,
    }
    count, margin = round_count(estimate.value, float(THEOREM1_ACCURACY))
    logger.info(f"Conteo fuertemente-pocos {s}→{t}: {count} (crudo {estimate.value:.6f})")
    return CountResult(
        count=count,
        raw_value=estimate.value,
        margin=margin,
        truncated_value=estimate.noiseless_value,
        layered=False,
        parameters=parameters,
    )

def count_paths_few_endpoints(g: DirectedGraph, s: int, t: int, P: int, noise: NoiseModel,
                              seed: Optional[int] = None) -> CountResult:
    """
    Cuenta caminos s→t con la promesa solo sobre los extremos

    Promesa: N(s,j) ≤ P y N(j,t) ≤ P para todo j. L puede estar mal
    condicionada; la pseudoinversa efectiva con ζ = δ = 1/(10·n²·P²) deja
    un error de truncamiento < ζ̃·n²·P² ≤ 1/5, y con precisión 1/5 en la
    entrada el error total es ≤ 2/5.

    Si g no es acíclico se cuenta sobre lay(g) entre (s,0) y (t,n), es decir
    caminos de longitud ≤ n-1.

    Raises:
        PromiseViolationSuspected: si el redondeo no es confiable
    """
    g.check_node(s, "s")
    g.check_node(t, "t")
    if P < 1:
        raise ValueError("P debe ser ≥ 1")

    layered = not g.is_acyclic()
    if layered:
        logger.info(f"Grafo con ciclos, se cuenta sobre lay(G) con {g.n * (g.n + 1)} nodos")
        work = layer_graph(g)
        source, target = s, layered_index(t, g.n, g.n)
    else:
        work, source, target = g, s, t

    n_eff = work.n
    zeta = delta = 1.0 / (10 * n_eff ** 2 * P ** 2)
    accuracy = min(noise.accuracy, float(THEOREM2_EPSILON))
    threshold_seed, noise_seed = _split_seeds(noise, seed)

    estimator = EffectivePseudoinverseEstimator(
        counting_laplacian(work), zeta, delta, Z=float(n_eff), seed=threshold_seed
    )
    estimate = estimator.estimate(source, target, noise.derive(accuracy=accuracy, seed=noise_seed))

    parameters = {
        "P": P,
        "n": g.n,
        "n_eff": n_eff,
        "zeta": zeta,
        "delta": delta,
        "epsilon": accuracy,
        "Z": estimator.Z,
        "zeta_realized": estimate.zeta_realized,
        "kept_rank": estimate.kept_rank,
        "truncation_bound": estimate.zeta_realized * n_eff ** 2 * P ** 2,
        "seed": seed if seed is not None else noise.seed,
        "noise": noise.mode.value,
        "failed": estimate.failed,
    }
    count, margin = round_count(estimate.value, 2 * float(THEOREM2_EPSILON))
    logger.info(
        f"Conteo pocos-extremos {s}→{t}: {count} (crudo {estimate.value:.6f}, "
        f"rango {estimate.kept_rank}/{n_eff})"
    )
    return CountResult(
        count=count,
        raw_value=estimate.value,
        margin=margin,
        truncated_value=estimate.noiseless_value,
        layered=layered,
        parameters=parameters,
    )
