"""
Pruebas unitarias para el grafo por capas
"""
import itertools
import unittest

import networkx as nx
import numpy as np

from app.graphs.layering import layer_graph, layered_index, layered_node
from app.graphs.oracle import count_paths_oracle
from app.models.graph import DirectedGraph

def all_digraphs(n):
    """Todos los grafos dirigidos con n nodos, lazos incluidos"""
    pairs = [(i, j) for i in range(n) for j in range(n)]
    for bits in itertools.product((False, True), repeat=len(pairs)):
        yield DirectedGraph.from_edges(n, [p for p, b in zip(pairs, bits) if b])

def bounded_walks(g, max_length):
    """Σ_{l=0}^{max_length} A^l con enteros"""
    a = g.adjacency()
    total = np.eye(g.n, dtype=np.int64)
    power = total.copy()
    for _ in range(max_length):
        power = power @ a
        total = total + power
    return total

class TestLayerGraph(unittest.TestCase):
    """Pruebas para layer_graph"""

    def test_index_round_trip(self):
        """(i, l) ↔ i + l·n"""
        self.assertEqual(layered_index(2, 3, 5), 17)
        self.assertEqual(layered_node(17, 5), (2, 3))

    def test_single_edge(self):
        """0→1: lay tiene 6 nodos y un camino a (1,2) y a (0,2)"""
        lay = layer_graph(DirectedGraph.from_edges(2, [(0, 1)]))
        self.assertEqual(lay.n, 6)
        counts = count_paths_oracle(lay, cap=10)
        self.assertEqual(counts[layered_index(0, 0, 2), layered_index(1, 2, 2)].value, 1)
        self.assertEqual(counts[layered_index(0, 0, 2), layered_index(0, 2, 2)].value, 1)

    def test_single_node_self_loop(self):
        """n=1: solo la arista de salto (0,0)→(0,1)"""
        lay = layer_graph(DirectedGraph.from_edges(1, [(0, 0)]))
        self.assertEqual(lay.n, 2)
        self.assertEqual(lay.edges, frozenset({(0, 1)}))

    def test_two_cycle_needs_extra_layer(self):
        """El 2-ciclo se ve como N((0,0),(0,3)) = 2 con profundidad n+1"""
        g = DirectedGraph.from_edges(2, [(0, 1), (1, 0)])
        literal = count_paths_oracle(layer_graph(g), cap=10)
        self.assertEqual(literal[0, layered_index(0, 2, 2)].value, 1)

        deep = count_paths_oracle(layer_graph(g, depth=3), cap=10)
        self.assertEqual(deep[0, layered_index(0, 3, 2)].value, 2)

    def test_invalid_depth(self):
        with self.assertRaises(ValueError):
            layer_graph(DirectedGraph(n=2), depth=0)

    def test_exhaustive_small_graphs(self):
        """Para todo grafo con n ≤ 3: lay acíclico, conteos acotados y detección de ciclos"""
        for n in (1, 2, 3):
            for g in all_digraphs(n):
                lay = layer_graph(g)
                self.assertTrue(lay.is_acyclic())
                self.assertEqual(lay.n, n * (n + 1))

                counts = count_paths_oracle(lay, cap=10 ** 6)
                walks = bounded_walks(g, n - 1)
                for i in range(n):
                    for j in range(n):
                        self.assertEqual(counts[i, layered_index(j, n, n)].value, int(walks[i, j]))

                deep = count_paths_oracle(layer_graph(g, depth=n + 1), cap=10 ** 6)
                nxg = g.to_networkx()
                for i in range(n):
                    on_cycle = g.has_edge(i, i) or any(
                        len(c) > 1 and i in c for c in nx.strongly_connected_components(nxg)
                    )
                    closed = deep[i, layered_index(i, n + 1, n)].value
                    self.assertEqual(on_cycle, closed >= 2, f"{sorted(g.edges)} nodo {i}")

if __name__ == '__main__':
    unittest.main()
