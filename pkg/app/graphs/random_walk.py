"""
Línea base de caminata aleatoria

Simula caminantes que eligen una arista de salida uniformemente y quedan
absorbidos en nodos sin sucesores. Se usa para contrastar con el conteo
exacto: en la cadena de la figura la probabilidad de llegar al final decae
como 2^-(half-1) aunque el camino sea único.
"""
import logging
import numpy as np
import scipy.sparse as sparse
from app.config import settings
from app.linalg.laplacian import random_walk_laplacian
from app.models.graph import DirectedGraph
from app.models.results import WalkEstimate
from app.utils.seeding import make_rng

logger = logging.getLogger(__name__)

def _csr(g: DirectedGraph) -> sparse.csr_matrix:
    """Adyacencia dispersa con los sucesores de cada nodo ordenados"""
    rows = [u for u, _ in g.sorted_edges()]
    cols = [v for _, v in g.sorted_edges()]
    data = np.ones(len(rows), dtype=np.int8)
    adj = sparse.csr_matrix((data, (rows, cols)), shape=(g.n, g.n))
    adj.sort_indices()
    return adj

def _walk_batch(adj: sparse.csr_matrix, s: int, t: int, max_steps: int,
                size: int, rng: np.random.Generator) -> int:
    """Número de caminantes de un lote que visitan t"""
    indptr, indices = adj.indptr, adj.indices
    degree = np.diff(indptr)

    position = np.full(size, s, dtype=np.int64)
    alive = np.ones(size, dtype=bool)
    hit = np.zeros(size, dtype=bool)

    for _ in range(max_steps):
        alive &= degree[position] > 0
        if not alive.any():
            break
        walkers = np.flatnonzero(alive)
        current = position[walkers]
        offset = np.floor(rng.random(walkers.size) * degree[current]).astype(np.int64)
        position[walkers] = indices[indptr[current] + offset]

        arrived = walkers[position[walkers] == t]
        hit[arrived] = True
        alive[arrived] = False
    return int(hit.sum())

def exact_hit_probability(g: DirectedGraph, s: int, t: int, max_steps: int) -> float:
    """
    Probabilidad exacta de visitar t en ≤ max_steps pasos

    Propaga la distribución con la matriz de transición D⁻¹A = I - L_rw;
    la masa que llega a t se retira y la de los sumideros desaparece.
    """
    g.check_node(s, "s")
    g.check_node(t, "t")
    if s == t:
        return 1.0
    transition = np.eye(g.n) - random_walk_laplacian(g)
    mass = np.zeros(g.n)
    mass[s] = 1.0
    hit = 0.0
    for _ in range(max_steps):
        mass = mass @ transition
        hit += mass[t]
        mass[t] = 0.0
        if not mass.any():
            break
    return float(hit)

def random_walk_hit_probability(g: DirectedGraph, s: int, t: int, max_steps: int,
                                trials: int, seed: int) -> WalkEstimate:
    """
    Estima la probabilidad de que una caminata desde s visite t

    Args:
        g: Grafo dirigido
        s: Nodo de partida
        t: Nodo objetivo
        max_steps: Pasos máximos por caminante
        trials: Número de caminantes
        seed: Semilla del generador

    Returns:
        WalkEstimate con la fracción de aciertos
    """
    g.check_node(s, "s")
    g.check_node(t, "t")
    if trials < 1:
        raise ValueError("trials debe ser ≥ 1")
    if max_steps < 0:
        raise ValueError("max_steps debe ser ≥ 0")

    if s == t:
        return WalkEstimate(probability=1.0, hits=trials, trials=trials)

    adj = _csr(g)
    rng = make_rng(seed)
    hits = 0
    remaining = trials
    while remaining > 0:
        size = min(remaining, settings.WALK_BATCH_SIZE)
        hits += _walk_batch(adj, s, t, max_steps, size, rng)
        remaining -= size

    estimate = WalkEstimate(probability=hits / trials, hits=hits, trials=trials)
    logger.info(f"Caminata {s}→{t}: {hits}/{trials} aciertos (p≈{estimate.probability:.6f})")
    return estimate
