"""
Grafo por capas lay(G)

El nodo (i, l) se numera como i + l·n. Las capas 0..depth-1 recorren
caminos de G; la capa `depth` recoge todos ellos mediante aristas de salto.
"""
from typing import Optional, Tuple
import logging
from app.models.graph import DirectedGraph

logger = logging.getLogger(__name__)

def layered_index(node: int, layer: int, n: int) -> int:
    """Índice de (node, layer) en lay(G)"""
    return node + layer * n

def layered_node(index: int, n: int) -> Tuple[int, int]:
    """Par (node, layer) de un índice de lay(G)"""
    return index % n, index // n

def layer_graph(g: DirectedGraph, depth: Optional[int] = None) -> DirectedGraph:
    """
    Construye el grafo por capas, que siempre es acíclico

    Con depth = n (por defecto) se obtiene la definición original con
    n·(n+1) nodos: N_lay((i,0),(j,n)) cuenta los caminos de i a j de
    longitud ≤ n-1. Con depth = n+1 se cuentan caminos de longitud ≤ n,
    lo que hace visible todo ciclo de G.

    Args:
        g: Grafo de entrada (puede tener ciclos y lazos)
        depth: Índice de la capa colectora, ≥ 1

    Returns:
        DirectedGraph con n·(depth+1) nodos
    """
    n = g.n
    depth = n if depth is None else depth
    if depth < 1:
        raise ValueError("depth debe ser ≥ 1")

    edges = set()
    # Tipo 1: (i,l) → (j,l+1) para l ≤ depth-2
    for u, v in g.edges:
        for layer in range(depth - 1):
            edges.add((layered_index(u, layer, n), layered_index(v, layer + 1, n)))
    # Tipo 2: saltos (i,l) → (i,depth) para l ≤ depth-1
    for i in range(n):
        for layer in range(depth):
            edges.add((layered_index(i, layer, n), layered_index(i, depth, n)))

    logger.debug(f"lay(G) construido: n={n}, depth={depth}, aristas={len(edges)}")
    return DirectedGraph(n=n * (depth + 1), edges=frozenset(edges))
