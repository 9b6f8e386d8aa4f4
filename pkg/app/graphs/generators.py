"""
Generadores de familias de grafos para pruebas y corpus

Todos los generadores son funciones puras de sus argumentos, semilla incluida.
"""
from typing import Optional
import logging
import numpy as np
from app.models.graph import DirectedGraph
from app.utils.seeding import make_rng

logger = logging.getLogger(__name__)

# Ejemplos de Lange con etiquetas 1..n (se convierten a 0..n-1)
LANGE_EXAMPLES = {
    # unambiguo respecto a (1,6), no reach-unambiguo desde 1
    'left': (6, [(1, 2), (1, 3), (2, 4), (2, 5), (3, 5), (3, 6)]),
    # reach-unambiguo desde 1, no fuertemente unambiguo
    'middle': (7, [(1, 3), (1, 4), (2, 4), (2, 7), (3, 5), (3, 6), (4, 7)]),
    # fuertemente unambiguo
    'right': (8, [(1, 3), (1, 4), (2, 4), (2, 5), (3, 6), (3, 7), (5, 7), (5, 8)]),
}

def _relabel(g: DirectedGraph, seed: int) -> DirectedGraph:
    """Permuta las etiquetas de los nodos con una semilla"""
    perm = make_rng(seed).permutation(g.n)
    return DirectedGraph.from_edges(g.n, ((perm[u], perm[v]) for u, v in g.edges))

def gen_chain_figure1(half: int, seed: Optional[int] = None) -> DirectedGraph:
    """
    Cadena de la figura de la caminata aleatoria

    Espina 0 → 2 → … → 2·half-2; cada nodo de la espina apunta también a
    su sumidero 2i+1, y el último termina en 2·half-1.

    Args:
        half: Número de nodos de la espina, ≥ 1
        seed: Si se indica, permuta las etiquetas de los nodos

    Returns:
        DirectedGraph con 2·half nodos y a lo sumo un camino por par
    """
    if half < 1:
        raise ValueError("half debe ser ≥ 1")
    edges = []
    for i in range(half):
        spine = 2 * i
        edges.append((spine, spine + 1))
        if i < half - 1:
            edges.append((spine, spine + 2))
    g = DirectedGraph.from_edges(2 * half, edges)
    return g if seed is None else _relabel(g, seed)

def gen_diamond_chain(m: int) -> DirectedGraph:
    """
    Cadena de m diamantes con 2m+1 nodos y 2^m caminos fuente → sumidero

    El diamante i une el nodo 2i con 2i+2 de forma directa y a través de 2i+1.
    La fuente es 0 y el sumidero 2m.
    """
    if m < 1:
        raise ValueError("m debe ser ≥ 1")
    edges = []
    for i in range(m):
        left, middle, right = 2 * i, 2 * i + 1, 2 * i + 2
        edges.extend([(left, right), (left, middle), (middle, right)])
    return DirectedGraph.from_edges(2 * m + 1, edges)

def gen_random_dag(n: int, density: float, seed: int) -> DirectedGraph:
    """
    DAG aleatorio con aristas solo de índices menores a mayores

    Cada par i < j recibe una arista con probabilidad `density`; con
    density = 1 se obtiene el torneo transitivo.
    """
    if n < 1:
        raise ValueError("n debe ser ≥ 1")
    if not 0.0 <= density <= 1.0:
        raise ValueError("density debe estar en [0, 1]")
    draws = make_rng(seed).random((n, n))
    upper = np.triu(draws < density, k=1)
    rows, cols = np.nonzero(upper)
    return DirectedGraph.from_edges(n, zip(rows.tolist(), cols.tolist()))

def gen_transitive_tournament(n: int) -> DirectedGraph:
    """Torneo transitivo: i → j para todo i < j"""
    return gen_random_dag(n, 1.0, seed=0)

def gen_lange_example(which: str) -> DirectedGraph:
    """
    Ejemplos de unambigüedad de Lange ('left', 'middle', 'right')

    Las etiquetas originales 1..n se desplazan a 0..n-1.
    """
    if which not in LANGE_EXAMPLES:
        raise ValueError(f"Ejemplo desconocido: {which}. Opciones: {sorted(LANGE_EXAMPLES)}")
    n, edges = LANGE_EXAMPLES[which]
    return DirectedGraph.from_edges(n, ((u - 1, v - 1) for u, v in edges))

def gen_cycle(n: int) -> DirectedGraph:
    """Ciclo dirigido 0 → 1 → … → n-1 → 0 (con n = 1 es un lazo)"""
    if n < 1:
        raise ValueError("n debe ser ≥ 1")
    return DirectedGraph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))

def disjoint_union(g1: DirectedGraph, g2: DirectedGraph) -> DirectedGraph:
    """Unión disjunta; los nodos de g2 se desplazan en g1.n"""
    shift = g1.n
    edges = set(g1.edges) | {(u + shift, v + shift) for u, v in g2.edges}
    return DirectedGraph(n=g1.n + g2.n, edges=frozenset(edges))
