"""
Matrices asociadas a un grafo dirigido
"""
import logging
import numpy as np
from app.models.graph import DirectedGraph

logger = logging.getLogger(__name__)

def adjacency_matrix(g: DirectedGraph) -> np.ndarray:
    """Matriz de adyacencia 0/1 en punto flotante"""
    return g.adjacency().astype(np.float64)

def counting_laplacian(g: DirectedGraph) -> np.ndarray:
    """
    Laplaciano de conteo L = I - A

    Si g es acíclico, L⁻¹(i,j) = N(i,j). Con un lazo en i la diagonal vale 0.
    """
    return np.eye(g.n) - adjacency_matrix(g)

def random_walk_laplacian(g: DirectedGraph) -> np.ndarray:
    """
    Laplaciano de caminata aleatoria I - D⁻¹A

    Las filas de nodos sin sucesores quedan como la identidad (caminante absorbido).
    """
    a = adjacency_matrix(g)
    degree = a.sum(axis=1)
    safe = np.where(degree > 0, degree, 1.0)
    return np.eye(g.n) - a / safe[:, None]

def nilpotency_index(g: DirectedGraph) -> int:
    """
    Menor k con A^k = 0 en aritmética entera, o 0 si A no es nilpotente

    A es nilpotente exactamente cuando g es acíclico, y entonces k ≤ n.
    """
    a = g.adjacency().astype(object)
    power = np.eye(g.n, dtype=np.int64).astype(object)
    for k in range(1, g.n + 1):
        power = power.dot(a)
        if not power.any():
            return k
    return 0
