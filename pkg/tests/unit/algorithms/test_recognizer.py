"""
Pruebas unitarias para el reconocedor de STCON_sf
"""
import unittest

from hypothesis import given, settings, strategies as st

from app.algorithms.recognizer import recognize_stcon_sf
from app.graphs.generators import gen_cycle, gen_diamond_chain, gen_lange_example
from app.graphs.unambiguity import in_stcon_sf
from app.models.graph import DirectedGraph
from app.models.quantum import NoiseModel
from app.utils.constants import RejectReason

class TestRecognizer(unittest.TestCase):
    """Pruebas en modo exacto y con ruido"""

    def setUp(self):
        self.exact = NoiseModel.exact()

    def test_lange_right_is_accepted(self):
        verdict = recognize_stcon_sf(gen_lange_example('right'), 0, 6, 1, self.exact)
        self.assertTrue(verdict.accepted)
        self.assertEqual(verdict.reason, RejectReason.ACCEPTED)
        self.assertEqual(verdict.parameters["n_lay"], 8 * 10)
        self.assertEqual(verdict.entries_read, 64)

    def test_too_many_paths(self):
        """1024 caminos con k = 100: se rechaza por cualquiera de las dos vías"""
        verdict = recognize_stcon_sf(gen_diamond_chain(10), 0, 20, 100, self.exact)
        self.assertFalse(verdict.accepted)
        self.assertIn(verdict.reason, (RejectReason.SMALL_SINGULAR_VALUE, RejectReason.ENTRY_EXCEEDS_K))

    def test_entry_exceeds_k(self):
        """4 caminos con k = 3: el espectro pasa y la entrada (0,4) delata"""
        verdict = recognize_stcon_sf(gen_diamond_chain(2), 0, 4, 3, self.exact)
        self.assertEqual(verdict.reason, RejectReason.ENTRY_EXCEEDS_K)
        self.assertEqual(tuple(verdict.detail), (0, 4))

    def test_cycle_detected(self):
        verdict = recognize_stcon_sf(gen_cycle(3), 0, 1, 5, self.exact)
        self.assertEqual(verdict.reason, RejectReason.CYCLE_DETECTED)
        self.assertEqual(verdict.detail, 0)

    def test_short_cycles_are_visible(self):
        """Un 2-ciclo y un lazo se detectan gracias a la capa extra"""
        two_cycle = DirectedGraph.from_edges(2, [(0, 1), (1, 0)])
        self.assertEqual(recognize_stcon_sf(two_cycle, 0, 1, 3, self.exact).reason, RejectReason.CYCLE_DETECTED)
        loop = DirectedGraph.from_edges(1, [(0, 0)])
        self.assertEqual(recognize_stcon_sf(loop, 0, 0, 3, self.exact).reason, RejectReason.CYCLE_DETECTED)

    def test_no_st_path(self):
        verdict = recognize_stcon_sf(DirectedGraph(n=3), 0, 2, 1, self.exact)
        self.assertEqual(verdict.reason, RejectReason.NO_ST_PATH)

    def test_strict_sweep_reads_every_entry(self):
        verdict = recognize_stcon_sf(gen_lange_example('right'), 0, 6, 1, self.exact, strict_entry_sweep=True)
        self.assertTrue(verdict.accepted)
        self.assertEqual(verdict.entries_read, 80 * 80)

    def test_uniform_noise_is_reproducible(self):
        noise = NoiseModel(mode="uniform", accuracy=1 / 3, seed=7)
        g = gen_lange_example('right')
        first = recognize_stcon_sf(g, 0, 6, 1, noise)
        second = recognize_stcon_sf(g, 0, 6, 1, noise)
        self.assertEqual(first.model_dump(), second.model_dump())

    def test_invalid_k(self):
        with self.assertRaises(ValueError):
            recognize_stcon_sf(DirectedGraph(n=2), 0, 1, 0, self.exact)

    @settings(max_examples=40, deadline=None)
    @given(
        st.integers(min_value=1, max_value=4).flatmap(
            lambda n: st.tuples(
                st.just(n),
                st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=6),
                st.integers(0, n - 1),
                st.integers(0, n - 1),
                st.integers(1, 3),
            )
        )
    )
    def test_exact_mode_matches_language(self, case):
        n, edges, s, t, k = case
        g = DirectedGraph.from_edges(n, edges)
        verdict = recognize_stcon_sf(g, s, t, k, self.exact)
        self.assertEqual(verdict.accepted, in_stcon_sf(g, s, t, k))

if __name__ == '__main__':
    unittest.main()
