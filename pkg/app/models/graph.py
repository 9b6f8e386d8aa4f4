"""
Modelo de grafo dirigido
"""
from typing import Dict, FrozenSet, List, Tuple
import networkx as nx
import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

Edge = Tuple[int, int]

class DirectedGraph(BaseModel):
    """
    Grafo dirigido con nodos 0..n-1

    Las aristas son un conjunto (sin duplicados); los lazos están
    permitidos y cuentan como ciclos.
    """
    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=1, description="Número de nodos")
    edges: FrozenSet[Edge] = Field(default_factory=frozenset, description="Aristas (u, v)")

    @model_validator(mode="after")
    def validate_endpoints(self) -> "DirectedGraph":
        """Valida que los extremos estén en rango"""
        for u, v in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"Arista ({u}, {v}) fuera de rango para n={self.n}")
        return self

    @classmethod
    def from_edges(cls, n: int, edges) -> "DirectedGraph":
        """Construye un grafo a partir de cualquier iterable de pares"""
        return cls(n=n, edges=frozenset((int(u), int(v)) for u, v in edges))

    @property
    def m(self) -> int:
        """Número de aristas"""
        return len(self.edges)

    def sorted_edges(self) -> List[Edge]:
        """Aristas en orden canónico"""
        return sorted(self.edges)

    def successors(self) -> Dict[int, List[int]]:
        """Lista de sucesores ordenada por nodo"""
        succ: Dict[int, List[int]] = {i: [] for i in range(self.n)}
        for u, v in self.sorted_edges():
            succ[u].append(v)
        return succ

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self.edges

    def adjacency(self) -> np.ndarray:
        """Matriz de adyacencia 0/1 como enteros"""
        a = np.zeros((self.n, self.n), dtype=np.int64)
        for u, v in self.edges:
            a[u, v] = 1
        return a

    def to_networkx(self) -> nx.DiGraph:
        """Convierte a networkx conservando los nodos aislados"""
        g = nx.DiGraph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.sorted_edges())
        return g

    def is_acyclic(self) -> bool:
        """True si un orden topológico existe (un lazo es un ciclo)"""
        return nx.is_directed_acyclic_graph(self.to_networkx())

    def check_node(self, node: int, name: str = "node") -> int:
        """Valida un índice de nodo"""
        if not 0 <= node < self.n:
            raise ValueError(f"{name}={node} fuera de rango para n={self.n}")
        return node
