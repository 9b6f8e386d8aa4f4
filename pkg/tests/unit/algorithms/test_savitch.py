"""
Pruebas unitarias para la alcanzabilidad de Savitch
"""
import math
import unittest

import networkx as nx
from hypothesis import given, settings, strategies as st

from app.algorithms.savitch import SavitchSearch, savitch_reachable
from app.graphs.generators import gen_chain_figure1, gen_cycle
from app.models.graph import DirectedGraph

class TestSavitch(unittest.TestCase):
    """Pruebas para savitch_reachable"""

    def test_chain(self):
        g = gen_chain_figure1(4)
        self.assertTrue(savitch_reachable(g, 0, 7))
        self.assertFalse(savitch_reachable(g, 7, 0))

    def test_depth_is_logarithmic(self):
        g = gen_cycle(9)
        result = savitch_reachable(g, 0, 8)
        self.assertTrue(result.reachable)
        self.assertEqual(result.levels, math.ceil(math.log2(9)))
        self.assertLessEqual(result.depth, result.levels)

    def test_single_node(self):
        result = savitch_reachable(DirectedGraph(n=1), 0, 0)
        self.assertTrue(result.reachable)
        self.assertEqual(result.levels, 0)

    def test_memoization_saves_calls(self):
        g = gen_cycle(8)
        plain = SavitchSearch(g).run(0, 7)
        memo = SavitchSearch(g, memoize=True).run(0, 7)
        self.assertEqual(plain.reachable, memo.reachable)
        self.assertLessEqual(memo.calls, plain.calls)

    def test_out_of_range(self):
        with self.assertRaises(ValueError):
            savitch_reachable(DirectedGraph(n=2), 0, 2)

    @settings(max_examples=40, deadline=None)
    @given(
        st.integers(min_value=1, max_value=6).flatmap(
            lambda n: st.tuples(
                st.just(n),
                st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=8),
                st.integers(0, n - 1),
                st.integers(0, n - 1),
            )
        )
    )
    def test_matches_networkx(self, case):
        n, edges, s, t = case
        g = DirectedGraph.from_edges(n, edges)
        self.assertEqual(savitch_reachable(g, s, t, memoize=True).reachable, nx.has_path(g.to_networkx(), s, t))

if __name__ == '__main__':
    unittest.main()
