"""
Oráculo exacto de conteo de caminos N(i,j)

Independiente de la construcción por capas: los ciclos se detectan con la
condensación en componentes fuertemente conexas y los conteos se acumulan
en orden topológico inverso con enteros de precisión arbitraria.
"""
from typing import List
import logging
import networkx as nx
import numpy as np
from app.models.graph import DirectedGraph
from app.models.path_count import PathCount, PathCountMatrix

logger = logging.getLogger(__name__)

def _count_rows(g: DirectedGraph):
    """
    Calcula, para cada nodo i, la fila de conteos y la máscara de infinitos

    Returns:
        Tupla (counts, infinite) de listas indexadas por nodo; counts[i] es un
        arreglo de enteros Python y infinite[i] un arreglo booleano
    """
    n = g.n
    succ = g.successors()
    dag = nx.condensation(g.to_networkx())
    mapping = dag.graph["mapping"]

    counts: List[np.ndarray] = [None] * n
    infinite: List[np.ndarray] = [None] * n

    # Sumideros primero: cada componente solo depende de sus sucesores
    for comp in reversed(list(nx.topological_sort(dag))):
        members = sorted(dag.nodes[comp]["members"])
        cyclic = len(members) > 1 or g.has_edge(members[0], members[0])

        if not cyclic:
            i = members[0]
            row = np.zeros(n, dtype=object)
            row[i] = 1
            inf_row = np.zeros(n, dtype=bool)
            for j in succ[i]:
                row = row + counts[j]
                inf_row |= infinite[j]
            counts[i] = row
            infinite[i] = inf_row
            continue

        # Todo lo alcanzable desde un ciclo tiene infinitos caminos
        inf_row = np.zeros(n, dtype=bool)
        inf_row[members] = True
        for u in members:
            for j in succ[u]:
                if mapping[j] == comp:
                    continue
                inf_row |= infinite[j] | (counts[j] != 0)
        zero_row = np.zeros(n, dtype=object)
        for u in members:
            counts[u] = zero_row
            infinite[u] = inf_row
    return counts, infinite

def count_paths_oracle(g: DirectedGraph, cap: int) -> PathCountMatrix:
    """
    Calcula todos los conteos exactos N(i,j)

    Args:
        g: Grafo dirigido
        cap: Tope; conteos finitos mayores se reportan como desbordados

    Returns:
        PathCountMatrix con N(i,i) ≥ 1 por el camino vacío
    """
    if cap < 1:
        raise ValueError("cap debe ser ≥ 1")

    counts, infinite = _count_rows(g)
    entries = []
    for i in range(g.n):
        row = []
        for j in range(g.n):
            if infinite[i][j]:
                row.append(PathCount.infinite())
            elif counts[i][j] > cap:
                row.append(PathCount.overflow(cap))
            else:
                row.append(PathCount.finite(counts[i][j]))
        entries.append(tuple(row))

    logger.debug(f"Oráculo calculado para n={g.n}, m={g.m}")
    return PathCountMatrix(n=g.n, entries=tuple(entries))

def exact_counts(g: DirectedGraph) -> List[List[int]]:
    """
    Conteos exactos sin tope para grafos acíclicos

    Raises:
        ValueError: si el grafo tiene ciclos
    """
    if not g.is_acyclic():
        raise ValueError("exact_counts requiere un grafo acíclico")
    counts, _ = _count_rows(g)
    return [[int(c) for c in counts[i]] for i in range(g.n)]
