"""
Pruebas unitarias para la pseudoinversa efectiva
"""
import unittest
from unittest.mock import patch

import numpy as np

from app.models.quantum import NoiseModel
from app.quantum.pseudoinverse import (
    EffectivePseudoinverseEstimator,
    draw_threshold,
    effective_pseudoinverse,
    estimate_pseudoinverse_entry,
    well_outcome_probability
)
from app.quantum.spectrum import recover_column_norm
from app.utils.exceptions import (
    SpectralBoundViolated,
    ThresholdOnSingularValue,
    ThresholdUnresolvable
)

class TestEffectivePseudoinverse(unittest.TestCase):
    """Pruebas para effective_pseudoinverse"""

    def test_truncates_small_singular_values(self):
        result = effective_pseudoinverse(np.diag([2.0, 1.0, 0.5]), 0.75)
        np.testing.assert_allclose(result, np.diag([0.5, 1.0, 0.0]), atol=1e-12)

    def test_small_threshold_is_inverse(self):
        m = np.array([[2.0, 1.0], [0.0, 1.0]])
        np.testing.assert_allclose(effective_pseudoinverse(m, 1e-3), np.linalg.inv(m), atol=1e-12)

    def test_threshold_above_spectrum_is_zero(self):
        np.testing.assert_array_equal(effective_pseudoinverse(np.eye(3), 2.0), np.zeros((3, 3)))

    def test_threshold_on_singular_value(self):
        with self.assertRaises(ThresholdOnSingularValue):
            effective_pseudoinverse(np.diag([2.0, 1.0]), 1.0)

    def test_invalid_threshold(self):
        with self.assertRaises(ValueError):
            effective_pseudoinverse(np.eye(2), 0.0)

    def test_single_edge_keeps_leading_direction(self):
        L = np.array([[1.0, -1.0], [0.0, 1.0]])
        golden = (1 + np.sqrt(5)) / 2
        v = np.array([1.0, -golden]) / np.sqrt(1 + golden ** 2)
        result = effective_pseudoinverse(L, 1.0)
        self.assertEqual(np.linalg.matrix_rank(result), 1)
        np.testing.assert_allclose(result, np.outer(v, v) @ L.T / golden ** 2, atol=1e-12)

    def test_rank_does_not_grow_with_threshold(self):
        m = np.random.default_rng(6).normal(size=(6, 6))
        ranks = [np.linalg.matrix_rank(effective_pseudoinverse(m, zeta)) for zeta in (1e-3, 0.3, 1.0, 2.0, 50.0)]
        self.assertEqual(ranks, sorted(ranks, reverse=True))

class TestDrawThreshold(unittest.TestCase):
    """Pruebas para el sorteo de ζ̃"""

    def test_zero_delta_returns_zeta(self):
        self.assertEqual(draw_threshold([2.0, 1.0], 0.5, 0.0), 0.5)

    def test_zero_delta_on_singular_value(self):
        with self.assertRaises(ThresholdUnresolvable):
            draw_threshold([2.0, 1.0], 1.0, 0.0)

    def test_draw_is_close_and_seeded(self):
        first = draw_threshold([2.0, 1.0], 0.5, 0.1, seed=3)
        self.assertLessEqual(abs(first - 0.5), 0.1)
        self.assertEqual(first, draw_threshold([2.0, 1.0], 0.5, 0.1, seed=3))

    def test_unresolvable_interval(self):
        with patch('app.quantum.pseudoinverse.settings') as mock_settings:
            mock_settings.THRESHOLD_TIE_TOL = 1e-12
            mock_settings.THRESHOLD_MAX_RETRIES = 5
            with self.assertRaises(ThresholdUnresolvable):
                draw_threshold([0.5], 0.5, 1e-13, seed=0)

class TestEstimator(unittest.TestCase):
    """Pruebas para EffectivePseudoinverseEstimator"""

    def setUp(self):
        self.m = np.random.default_rng(2).normal(size=(5, 5))

    def test_embedding_block_matches_direct(self):
        estimator = EffectivePseudoinverseEstimator(self.m, 0.3, 0.05, seed=1)
        self.assertLessEqual(abs(estimator.zeta_realized - 0.3), 0.05 + 1e-12)
        direct = effective_pseudoinverse(self.m, estimator.zeta_realized)
        np.testing.assert_allclose(estimator.block(range(5), range(5)), direct, atol=1e-9)

    def test_drops_ill_conditioned_direction(self):
        estimator = EffectivePseudoinverseEstimator(np.diag([1.0, 1e-6]), 0.01, 0.001, seed=0)
        np.testing.assert_allclose(estimator.block([0, 1], [0, 1]), np.diag([1.0, 0.0]), atol=1e-9)
        self.assertEqual(estimator.kept_rank, 1)

    def test_degenerate_spectrum(self):
        estimator = EffectivePseudoinverseEstimator(np.eye(3), 0.5, 0.1, seed=0)
        self.assertAlmostEqual(estimator.exact_entry(0, 0), 1.0)
        self.assertAlmostEqual(estimator.exact_entry(0, 1), 0.0)

    def test_spectral_bound(self):
        with self.assertRaises(SpectralBoundViolated):
            EffectivePseudoinverseEstimator(3 * np.eye(2), 0.1, 0.01, Z=1.0)

    def test_exact_estimate_is_noiseless(self):
        estimate = estimate_pseudoinverse_entry(self.m, 1, 3, 0.3, 0.05, NoiseModel.exact(), seed=1)
        self.assertEqual(estimate.value, estimate.noiseless_value)
        self.assertFalse(estimate.failed)
        self.assertEqual(estimate.zeta_requested, 0.3)

    def test_uniform_estimate_within_accuracy(self):
        estimator = EffectivePseudoinverseEstimator(self.m, 0.3, 0.05, seed=1)
        noise = NoiseModel(mode="uniform", accuracy=0.1, seed=5)
        values, exact, failed = estimator.estimate_block(range(5), range(5), noise)
        self.assertFalse(failed.any())
        self.assertLessEqual(np.abs(values - exact).max(), 0.1)

    def test_index_validation(self):
        estimator = EffectivePseudoinverseEstimator(np.eye(2), 0.5, 0.1, seed=0)
        with self.assertRaises(ValueError):
            estimator.block([0], [2])

class TestWellOutcome(unittest.TestCase):
    """Pruebas para la probabilidad del resultado well"""

    def test_identity(self):
        p = well_outcome_probability(np.eye(3), 0, 0.5, 0.5)
        self.assertAlmostEqual(p, 0.25)
        self.assertAlmostEqual(recover_column_norm(p, 0.5), 1.0)

    def test_recovers_column_norm(self):
        m = np.array([[2.0, 1.0], [0.0, 1.0]])
        p = well_outcome_probability(m, 1, 0.2, 0.2)
        expected = np.linalg.norm(np.linalg.inv(m)[:, 1])
        self.assertAlmostEqual(recover_column_norm(p, 0.2), expected)

    def test_truncated_column_has_zero_probability(self):
        self.assertEqual(well_outcome_probability(np.diag([1.0, 0.4]), 1, 0.5, 0.5), 0.0)

    def test_scaled_single_edge(self):
        L = np.array([[1.0, -1.0], [0.0, 1.0]])
        self.assertAlmostEqual(well_outcome_probability(L / 2, 1, 0.1, 0.1), 0.08)

if __name__ == '__main__':
    unittest.main()
