"""
Pruebas unitarias para la línea base de caminata aleatoria
"""
import unittest
from unittest.mock import patch

from app.graphs.generators import gen_chain_figure1, gen_diamond_chain
from app.graphs.random_walk import exact_hit_probability, random_walk_hit_probability

class TestRandomWalk(unittest.TestCase):
    """Pruebas para la caminata sobre la cadena de la figura"""

    def setUp(self):
        self.chain = gen_chain_figure1(10)

    def test_exact_probability_decays(self):
        """El único camino 0 → 19 tiene probabilidad 2^-9"""
        self.assertAlmostEqual(exact_hit_probability(self.chain, 0, 19, 20), 2 ** -9, places=15)

    def test_exact_probability_needs_steps(self):
        """Con menos de 10 pasos no se llega"""
        self.assertEqual(exact_hit_probability(self.chain, 0, 19, 9), 0.0)

    def test_diamond_always_reaches_sink(self):
        self.assertAlmostEqual(exact_hit_probability(gen_diamond_chain(4), 0, 8, 20), 1.0)

    def test_empirical_close_to_exact(self):
        estimate = random_walk_hit_probability(self.chain, 0, 19, 20, trials=100_000, seed=3)
        exact = 2 ** -9
        se = (exact * (1 - exact) / 100_000) ** 0.5
        self.assertLess(abs(estimate.probability - exact), 5 * se)
        self.assertEqual(estimate.trials, 100_000)

    def test_seeded_reproducibility(self):
        first = random_walk_hit_probability(self.chain, 0, 5, 10, trials=5_000, seed=9)
        second = random_walk_hit_probability(self.chain, 0, 5, 10, trials=5_000, seed=9)
        self.assertEqual(first, second)

    def test_batches_do_not_change_totals(self):
        """Lotes pequeños recorren todos los caminantes"""
        with patch('app.graphs.random_walk.settings') as mock_settings:
            mock_settings.WALK_BATCH_SIZE = 7
            estimate = random_walk_hit_probability(gen_diamond_chain(3), 0, 6, 10, trials=50, seed=1)
        self.assertEqual(estimate.hits, 50)
        self.assertEqual(estimate.probability, 1.0)

    def test_source_equals_target(self):
        estimate = random_walk_hit_probability(self.chain, 4, 4, 3, trials=10, seed=0)
        self.assertEqual(estimate.probability, 1.0)

    def test_invalid_arguments(self):
        with self.assertRaises(ValueError):
            random_walk_hit_probability(self.chain, 0, 19, 20, trials=0, seed=0)
        with self.assertRaises(ValueError):
            random_walk_hit_probability(self.chain, 0, 19, -1, trials=10, seed=0)
        with self.assertRaises(ValueError):
            random_walk_hit_probability(self.chain, 0, 20, 5, trials=10, seed=0)

if __name__ == '__main__':
    unittest.main()
