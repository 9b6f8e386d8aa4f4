"""
Pruebas unitarias para las verificaciones de cotas e identidades
"""
import unittest

import numpy as np

from app.algorithms import diagnostics
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
from app.linalg.laplacian import counting_laplacian

class TestDiagnostics(unittest.TestCase):
    """Pruebas para el módulo diagnostics"""

    def test_spectral_bounds_hold_under_promise(self):
        g = gen_transitive_tournament(5)
        checks = diagnostics.spectral_bounds(g, 8)
        self.assertEqual([c.name for c in checks], ["sigma_max_le_n", "sigma_min_ge_1_over_nP"])
        self.assertTrue(all(c.holds for c in checks))

    def test_spectral_bounds_on_random_dags(self):
        for seed in range(10):
            g = gen_random_dag(15, 0.2, seed)
            P = count_paths_oracle(g, cap=10 ** 9).max_count().value
            self.assertTrue(all(c.holds for c in diagnostics.spectral_bounds(g, P)))

    def test_embedding_spectrum(self):
        m = np.random.default_rng(1).normal(size=(6, 6))
        self.assertTrue(diagnostics.embedding_spectrum(m).holds)

    def test_block_identity(self):
        L = counting_laplacian(gen_diamond_chain(4))
        self.assertTrue(diagnostics.block_identity(L, 0.2, 0.05, seed=3).holds)

    def test_overlap_bounds(self):
        g = disjoint_union(gen_chain_figure1(4), gen_diamond_chain(8))
        checks = diagnostics.overlap_bounds(g, 0, 7, 1)
        self.assertTrue(all(c.holds for c in checks), [c.to_dict() for c in checks])

    def test_row_norm_identity(self):
        for g in (gen_lange_example('right'), gen_diamond_chain(5)):
            self.assertTrue(diagnostics.row_norm_identity(g, 0).holds)

    def test_inverse_residual(self):
        self.assertTrue(diagnostics.inverse_residual(gen_transitive_tournament(7)).holds)

    def test_nilpotency(self):
        self.assertTrue(diagnostics.nilpotency(gen_diamond_chain(3)).holds)
        check = diagnostics.nilpotency(gen_cycle(4))
        self.assertTrue(check.holds)
        self.assertEqual(check.value, 0.0)

    def test_to_dict(self):
        check = diagnostics.nilpotency(gen_diamond_chain(1))
        self.assertEqual(set(check.to_dict()), {"name", "holds", "value", "bound"})

if __name__ == '__main__':
    unittest.main()
