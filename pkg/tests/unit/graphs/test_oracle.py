"""
Pruebas unitarias para el oráculo de conteo de caminos
"""
import unittest

import networkx as nx
import numpy as np
from hypothesis import given, settings, strategies as st

from app.graphs.generators import gen_diamond_chain, gen_lange_example, gen_transitive_tournament
from app.graphs.oracle import count_paths_oracle, exact_counts
from app.models.graph import DirectedGraph

def upper_triangular_graphs(max_n=7):
    """Grafos acíclicos: un bit por par i < j"""
    def build(n):
        size = n * (n - 1) // 2
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        return st.lists(st.booleans(), min_size=size, max_size=size).map(
            lambda bits: DirectedGraph.from_edges(n, [p for p, b in zip(pairs, bits) if b])
        )
    return st.integers(min_value=2, max_value=max_n).flatmap(build)

def any_graphs(max_n=5):
    """Grafos dirigidos arbitrarios, con lazos"""
    def build(n):
        pairs = [(i, j) for i in range(n) for j in range(n)]
        return st.lists(st.booleans(), min_size=n * n, max_size=n * n).map(
            lambda bits: DirectedGraph.from_edges(n, [p for p, b in zip(pairs, bits) if b])
        )
    return st.integers(min_value=1, max_value=max_n).flatmap(build)

class TestCountPathsOracle(unittest.TestCase):
    """Pruebas para count_paths_oracle"""

    def test_lange_left_counts(self):
        """N(1,6)=1 y N(1,5)=2 en el grafo izquierdo (etiquetas desde 0)"""
        counts = count_paths_oracle(gen_lange_example('left'), cap=100)
        self.assertEqual(counts[0, 5].value, 1)
        self.assertEqual(counts[0, 4].value, 2)
        self.assertTrue(counts[0, 4].is_finite)

    def test_edgeless_graph_is_identity(self):
        """Sin aristas solo existe el camino vacío"""
        counts = count_paths_oracle(DirectedGraph(n=3), cap=10)
        self.assertEqual([[counts[i, j].value for j in range(3)] for i in range(3)], [[1, 0, 0], [0, 1, 0], [0, 0, 1]])

    def test_transitive_tournament(self):
        """Torneo de 4 nodos: N(0,3) = 4"""
        counts = count_paths_oracle(gen_transitive_tournament(4), cap=100)
        self.assertEqual(counts[0, 3].value, 4)

    def test_self_loop_is_infinite(self):
        """Un lazo en 0 vuelve infinito N(0,0)"""
        counts = count_paths_oracle(DirectedGraph.from_edges(1, [(0, 0)]), cap=10)
        self.assertTrue(counts[0, 0].is_infinite)
        self.assertEqual(counts[0, 0].to_json(), "inf")

    def test_overflow_above_cap(self):
        """2^20 caminos superan el tope 10^6"""
        counts = count_paths_oracle(gen_diamond_chain(20), cap=10 ** 6)
        self.assertTrue(counts[0, 40].is_overflow)
        self.assertEqual(counts[0, 40].to_json(), ">1000000")

    def test_diamond_chain_counts(self):
        """Cinco diamantes dan 32 caminos fuente → sumidero"""
        counts = count_paths_oracle(gen_diamond_chain(5), cap=10 ** 6)
        self.assertEqual(counts[0, 10].value, 32)
        self.assertEqual(counts.max_count().value, 32)

    def test_cycle_only_infects_reachable_pairs(self):
        """Un ciclo 1 ↔ 2 no afecta pares que no pasan por él"""
        g = DirectedGraph.from_edges(4, [(0, 1), (1, 2), (2, 1), (0, 3)])
        counts = count_paths_oracle(g, cap=10)
        self.assertTrue(counts[0, 2].is_infinite)
        self.assertTrue(counts[1, 1].is_infinite)
        self.assertEqual(counts[0, 3].value, 1)
        self.assertEqual(counts[3, 1].value, 0)

    def test_invalid_cap(self):
        """El tope debe ser positivo"""
        with self.assertRaises(ValueError):
            count_paths_oracle(DirectedGraph(n=2), cap=0)

    def test_exact_counts_rejects_cycles(self):
        """exact_counts solo acepta grafos acíclicos"""
        with self.assertRaises(ValueError):
            exact_counts(DirectedGraph.from_edges(2, [(0, 1), (1, 0)]))

    @settings(max_examples=60, deadline=None)
    @given(upper_triangular_graphs())
    def test_matches_matrix_power_series(self, g):
        """En grafos acíclicos N = I + A + … + A^{n-1}"""
        a = g.adjacency().astype(object)
        total = np.eye(g.n, dtype=np.int64).astype(object)
        power = total.copy()
        for _ in range(g.n - 1):
            power = power.dot(a)
            total = total + power
        self.assertEqual(exact_counts(g), [[int(x) for x in row] for row in total])

    @settings(max_examples=60, deadline=None)
    @given(any_graphs())
    def test_infinite_exactly_through_cycles(self, g):
        """N(i,j) es infinito si y solo si un ciclo queda entre i y j"""
        nxg = g.to_networkx()
        cyclic = {u for comp in nx.strongly_connected_components(nxg) for u in comp
                  if len(comp) > 1 or g.has_edge(u, u)}
        counts = count_paths_oracle(g, cap=10 ** 6)
        for i, j, count in counts.pairs():
            through_cycle = any(
                nx.has_path(nxg, i, w) and nx.has_path(nxg, w, j) for w in cyclic
            )
            self.assertEqual(count.is_infinite, through_cycle, f"par ({i}, {j})")

if __name__ == '__main__':
    unittest.main()
