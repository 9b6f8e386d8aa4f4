"""
Pruebas unitarias para los modelos de experimentos
"""
import unittest

from pydantic import ValidationError

from app.models.experiment import ExperimentConfig, InstanceResult, RunReport
from app.models.quantum import NoiseModel
from app.utils.constants import Algorithm

class TestExperimentConfig(unittest.TestCase):
    """Pruebas para ExperimentConfig"""

    def test_required_fields_per_algorithm(self):
        with self.assertRaises(ValidationError):
            ExperimentConfig(algorithm="recognize", graph="lange", s=0, t=6)
        config = ExperimentConfig(algorithm="recognize", graph="lange", s=0, t=6, k=1)
        self.assertEqual(config.algorithm, Algorithm.RECOGNIZE)
        ExperimentConfig(algorithm="spectrum", graph="lange")

    def test_corpus_relaxes_required_fields(self):
        config = ExperimentConfig(algorithm="theorem1", graph="corpus", corpus="c/manifest.json")
        self.assertIsNone(config.P)

    def test_empty_graph(self):
        with self.assertRaises(ValidationError):
            ExperimentConfig(algorithm="spectrum", graph="  ")
        with self.assertRaises(ValidationError):
            ExperimentConfig(algorithm="spectrum", graph="file:")

    def test_needs_seed(self):
        self.assertFalse(ExperimentConfig(algorithm="spectrum", graph="chain").needs_seed)
        self.assertFalse(ExperimentConfig(algorithm="spectrum", graph="file:dag.txt").needs_seed)
        noisy = ExperimentConfig(
            algorithm="spectrum", graph="chain", seed=0, noise=NoiseModel(mode="uniform", seed=0)
        )
        self.assertTrue(noisy.needs_seed)
        relabel = ExperimentConfig(algorithm="spectrum", graph="chain", graph_params={"relabel": True}, seed=1)
        self.assertTrue(relabel.needs_seed)
        union = ExperimentConfig(algorithm="spectrum", graph="union:chain(half=2)+dag(n=4)", seed=2)
        self.assertTrue(union.needs_seed)

    def test_bounds(self):
        with self.assertRaises(ValidationError):
            ExperimentConfig(algorithm="recognize", graph="lange", s=0, t=6, k=0)
        with self.assertRaises(ValidationError):
            ExperimentConfig(algorithm="savitch", graph="lange", s=-1, t=6)

class TestRunReport(unittest.TestCase):
    """Pruebas para RunReport"""

    def test_deterministic_dump_drops_timing(self):
        report = RunReport(
            command="savitch",
            config={},
            instances=[InstanceResult(index=0, elapsed_ms=12.5), InstanceResult(index=1, elapsed_ms=3.0)],
            elapsed_seconds=1.2,
        )
        data = report.deterministic_dump()
        self.assertNotIn("elapsed_seconds", data)
        self.assertTrue(all("elapsed_ms" not in item for item in data["instances"]))

    def test_skipped_is_not_an_error(self):
        report = RunReport(command="bench", config={}, instances=[InstanceResult(index=0, status="skipped")])
        self.assertFalse(report.has_errors)
        report.instances.append(InstanceResult(index=1, status="error"))
        self.assertTrue(report.has_errors)

if __name__ == '__main__':
    unittest.main()
