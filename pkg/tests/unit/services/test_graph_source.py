"""
Pruebas unitarias para la resolución de fuentes de grafos
"""
import tempfile
import unittest
from pathlib import Path

from app.graphs.generators import disjoint_union, gen_chain_figure1, gen_diamond_chain, gen_lange_example
from app.services.graph_source import build_generator, describe_graph, load_graph, parse_component, parse_value
from app.storage.edge_list import write_edge_list
from app.utils.constants import GeneratorName
from app.utils.exceptions import ConfigInvalid, IOFailure

class TestParsing(unittest.TestCase):
    """Pruebas para el análisis de la sintaxis"""

    def test_parse_value(self):
        self.assertEqual(parse_value("4"), 4)
        self.assertEqual(parse_value(" 0.25"), 0.25)
        self.assertIs(parse_value("True"), True)
        self.assertEqual(parse_value("right"), "right")

    def test_parse_component(self):
        name, params = parse_component("dag(n=20, density=0.1)")
        self.assertEqual(name, GeneratorName.DAG)
        self.assertEqual(params, {"n": 20, "density": 0.1})

    def test_component_without_params(self):
        self.assertEqual(parse_component("lange"), (GeneratorName.LANGE, {}))

    def test_unknown_generator(self):
        with self.assertRaises(ConfigInvalid):
            parse_component("grid(n=3)")

    def test_bad_syntax(self):
        with self.assertRaises(ConfigInvalid):
            parse_component("chain(half)")
        with self.assertRaises(ConfigInvalid):
            parse_component("chain(half=2")

class TestBuildGenerator(unittest.TestCase):
    """Pruebas para build_generator"""

    def test_missing_parameter(self):
        with self.assertRaises(ConfigInvalid) as ctx:
            build_generator(GeneratorName.DIAMOND, {}, None)
        self.assertEqual(ctx.exception.field, "m")

    def test_dag_requires_seed(self):
        with self.assertRaises(ConfigInvalid) as ctx:
            build_generator(GeneratorName.DAG, {"n": 5}, None)
        self.assertEqual(ctx.exception.field, "seed")

    def test_dag_is_seeded(self):
        first = build_generator(GeneratorName.DAG, {"n": 12, "density": 0.3}, 5)
        self.assertEqual(first, build_generator(GeneratorName.DAG, {"n": 12, "density": 0.3}, 5))

    def test_invalid_values(self):
        with self.assertRaises(ConfigInvalid):
            build_generator(GeneratorName.CHAIN, {"half": 0}, None)
        with self.assertRaises(ConfigInvalid):
            build_generator(GeneratorName.LANGE, {"which": "center"}, None)

    def test_relabel_uses_seed(self):
        plain = build_generator(GeneratorName.CHAIN, {"half": 5}, 3)
        relabeled = build_generator(GeneratorName.CHAIN, {"half": 5, "relabel": True}, 3)
        self.assertEqual(plain, gen_chain_figure1(5))
        self.assertEqual(relabeled, gen_chain_figure1(5, seed=3))

class TestLoadGraph(unittest.TestCase):
    """Pruebas para load_graph"""

    def test_flag_params(self):
        self.assertEqual(load_graph("diamond", {"m": 3}), gen_diamond_chain(3))

    def test_inline_params_take_precedence(self):
        self.assertEqual(load_graph("lange(which=left)", {"which": "right"}), gen_lange_example('left'))

    def test_union(self):
        g = load_graph("union:chain(half=4)+diamond(m=10)")
        self.assertEqual(g, disjoint_union(gen_chain_figure1(4), gen_diamond_chain(10)))
        self.assertEqual(describe_graph("u", g), {"source": "u", "n": 29, "m": g.m})

    def test_union_needs_two_parts(self):
        with self.assertRaises(ConfigInvalid):
            load_graph("union:chain(half=4)")

    def test_file_source(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = write_edge_list(gen_lange_example('right'), Path(tmp) / "g.txt")
            self.assertEqual(load_graph(f"file:{path}"), gen_lange_example('right'))
            with self.assertRaises(IOFailure):
                load_graph(f"file:{Path(tmp) / 'otro.txt'}")

if __name__ == '__main__':
    unittest.main()
