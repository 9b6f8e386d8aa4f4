"""
Pruebas unitarias para los generadores de grafos
"""
import unittest

import networkx as nx

from app.graphs.generators import (
    disjoint_union,
    gen_chain_figure1,
    gen_cycle,
    gen_diamond_chain,
    gen_lange_example,
    gen_random_dag,
    gen_transitive_tournament
)
from app.graphs.oracle import count_paths_oracle

class TestGenerators(unittest.TestCase):
    """Pruebas para las familias de grafos"""

    def test_chain_small(self):
        """half=2: aristas {1→2, 1→3, 3→4} con etiquetas desde 0"""
        g = gen_chain_figure1(2)
        self.assertEqual(g.n, 4)
        self.assertEqual(g.edges, frozenset({(0, 1), (0, 2), (2, 3)}))
        self.assertEqual(count_paths_oracle(g, cap=10)[0, 3].value, 1)

    def test_chain_relabel_is_isomorphic(self):
        """La permutación con semilla conserva la estructura"""
        base = gen_chain_figure1(6)
        relabeled = gen_chain_figure1(6, seed=11)
        self.assertEqual(relabeled.m, base.m)
        self.assertTrue(nx.is_isomorphic(base.to_networkx(), relabeled.to_networkx()))
        self.assertEqual(relabeled, gen_chain_figure1(6, seed=11))
        self.assertEqual(count_paths_oracle(relabeled, cap=10).max_count().value, 1)

    def test_chain_invalid(self):
        with self.assertRaises(ValueError):
            gen_chain_figure1(0)

    def test_diamond_chain(self):
        g = gen_diamond_chain(5)
        self.assertEqual((g.n, g.m), (11, 15))
        self.assertEqual(count_paths_oracle(g, cap=10 ** 6)[0, 10].value, 32)

    def test_random_dag_is_seeded(self):
        """Misma semilla, mismo grafo; siempre acíclico"""
        first = gen_random_dag(30, 0.2, seed=5)
        self.assertEqual(first, gen_random_dag(30, 0.2, seed=5))
        self.assertTrue(first.is_acyclic())
        self.assertTrue(all(u < v for u, v in first.edges))

    def test_random_dag_extremes(self):
        self.assertEqual(gen_random_dag(6, 0.0, seed=1).m, 0)
        self.assertEqual(gen_random_dag(6, 1.0, seed=1), gen_transitive_tournament(6))
        with self.assertRaises(ValueError):
            gen_random_dag(5, 1.5, seed=1)

    def test_tournament_counts(self):
        """N(0, n-1) = 2^{n-2}"""
        for n in range(2, 11):
            counts = count_paths_oracle(gen_transitive_tournament(n), cap=10 ** 6)
            self.assertEqual(counts[0, n - 1].value, 2 ** (n - 2))

    def test_lange_examples(self):
        self.assertEqual(gen_lange_example('left').n, 6)
        self.assertEqual(gen_lange_example('middle').n, 7)
        self.assertEqual(gen_lange_example('right').m, 8)
        with self.assertRaises(ValueError):
            gen_lange_example('top')

    def test_cycle(self):
        self.assertEqual(gen_cycle(1).edges, frozenset({(0, 0)}))
        self.assertFalse(gen_cycle(4).is_acyclic())

    def test_disjoint_union(self):
        """La cadena conserva N = 1 mientras el máximo global es 1024"""
        g = disjoint_union(gen_chain_figure1(4), gen_diamond_chain(10))
        self.assertEqual(g.n, 29)
        counts = count_paths_oracle(g, cap=10 ** 6)
        self.assertEqual(counts[0, 7].value, 1)
        self.assertEqual(counts.max_count().value, 1024)
        self.assertEqual(counts[0, 8].value, 0)

if __name__ == '__main__':
    unittest.main()
