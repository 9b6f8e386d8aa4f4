"""
Ejecución de experimentos del harness

Cada instancia se resuelve a un grafo, ejecuta el pipeline elegido una o
varias veces (repeticiones con semillas hijas) y se compara con el oráculo.
Un error en una instancia se registra en su resultado y no detiene el lote.
"""
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple
import logging
import time
import networkx as nx
import numpy as np
from pydantic import ValidationError
from app.algorithms import diagnostics
from app.algorithms.counting import count_paths_few_endpoints, count_paths_strongly_few
from app.algorithms.recognizer import recognize_stcon_sf
from app.algorithms.savitch import savitch_reachable
from app.graphs.layering import layer_graph, layered_index
from app.graphs.oracle import count_paths_oracle
from app.graphs.random_walk import exact_hit_probability, random_walk_hit_probability
from app.graphs.unambiguity import classify, in_stcon_ru, in_stcon_sf
from app.linalg.laplacian import counting_laplacian
from app.linalg.decomposition import svd
from app.models.experiment import ExperimentConfig, InstanceResult, RunReport
from app.models.graph import DirectedGraph
from app.models.results import BoundCheck
from app.quantum.spectrum import kernel_dimension, spectrum_estimate
from app.services.corpus_service import load_corpus
from app.services.graph_source import describe_graph, load_graph
from app.storage.reports import write_json
from app.utils.constants import Algorithm, SAVITCH_MEMO_THRESHOLD
from app.utils.exceptions import ConfigInvalid, FewPathsError, GraphFormatError, IOFailure
from app.utils.seeding import child_seeds, instance_seed

logger = logging.getLogger(__name__)

# Tope del oráculo al calcular valores de referencia
ORACLE_CAP = 10 ** 12

@dataclass
class InstancePlan:
    """Instancia por ejecutar: fuente del grafo, semilla y parámetros propios"""
    index: int
    source: str
    seed: Optional[int]
    overrides: Dict[str, Any] = field(default_factory=dict)
    skip_reason: Optional[str] = None

def build_config(**kwargs) -> ExperimentConfig:
    """
    Construye una configuración validada

    Raises:
        ConfigInvalid: con el campo que falló
    """
    try:
        return ExperimentConfig(**kwargs)
    except ValidationError as e:
        first = e.errors()[0]
        location = ".".join(str(part) for part in first.get("loc", ())) or None
        raise ConfigInvalid(f"Configuración inválida: {first.get('msg')}", field=location)

def repetition_seeds(seed: Optional[int], trials: int) -> List[Optional[int]]:
    """Semillas de las repeticiones de una instancia"""
    if trials == 1:
        return [seed]
    if seed is None:
        return [None] * trials
    return child_seeds(seed, trials)

def expected_count(g: DirectedGraph, s: int, t: int) -> Tuple[Any, bool]:
    """
    Valor de referencia de N(s,t) y si se calculó sobre lay(G)

    Para grafos con ciclos se cuentan los caminos de longitud ≤ n-1, que
    es lo que mide el conteo por pocos-extremos.
    """
    if g.is_acyclic():
        return count_paths_oracle(g, ORACLE_CAP)[s, t].to_json(), False
    lay = layer_graph(g)
    return count_paths_oracle(lay, ORACLE_CAP)[s, layered_index(t, g.n, g.n)].to_json(), True

def _error_record(e: Exception) -> Dict[str, Any]:
    return {"error_type": type(e).__name__, "message": getattr(e, "message", str(e))}

class ExperimentRunner:
    """Servicio que ejecuta un ExperimentConfig y produce un RunReport"""

    def __init__(self):
        self.handlers = {
            Algorithm.THEOREM1: self._run_count,
            Algorithm.THEOREM2: self._run_count,
            Algorithm.RECOGNIZE: self._run_recognize,
            Algorithm.CLASSIFY: self._run_classify,
            Algorithm.SPECTRUM: self._run_spectrum,
            Algorithm.WALK: self._run_walk,
            Algorithm.SAVITCH: self._run_savitch,
        }

    def plan(self, config: ExperimentConfig) -> List[InstancePlan]:
        """Lista canónica de instancias de la corrida"""
        if config.corpus:
            return self._plan_corpus(config)
        return [
            InstancePlan(
                index=i,
                source=config.graph,
                seed=None if config.seed is None else instance_seed(config.seed, i),
            )
            for i in range(config.instances)
        ]

    def _plan_corpus(self, config: ExperimentConfig) -> List[InstancePlan]:
        try:
            manifest, _ = load_corpus(config.corpus, verify=True)
        except (IOFailure, GraphFormatError) as e:
            raise ConfigInvalid(e.message, field="corpus")
        base = Path(config.corpus).parent
        plans = []
        for i, entry in enumerate(manifest.entries):
            overrides = {
                "s": config.s if config.s is not None else 0,
                "t": config.t if config.t is not None else entry.n - 1,
                "P": config.P if config.P is not None else entry.certified_P,
                "k": config.k if config.k is not None else 1,
            }
            skip = None
            if config.algorithm == Algorithm.THEOREM1 and not entry.promise.get("strongly_few", False):
                skip = "El grafo no cumple la promesa fuertemente-pocos"
            elif config.algorithm in (Algorithm.THEOREM1, Algorithm.THEOREM2) and overrides["P"] is None:
                skip = "Sin cota P certificada"
            seed = None if config.seed is None else instance_seed(config.seed, i)
            plans.append(InstancePlan(i, f"file:{base / entry.file}", seed, overrides, skip))
        return plans

    def validate(self, config: ExperimentConfig, plans: List[InstancePlan]) -> None:
        """
        Valida que la primera instancia se pueda construir y que s, t estén en rango

        Raises:
            ConfigInvalid: si la fuente o los índices no son válidos
        """
        if not plans:
            raise ConfigInvalid("La corrida no tiene instancias", field="instances")
        if config.corpus:
            return
        try:
            g = load_graph(plans[0].source, config.graph_params, plans[0].seed)
        except IOFailure as e:
            raise ConfigInvalid(e.message, field="graph")
        for name in ("s", "t"):
            value = getattr(config, name)
            if value is not None and value >= g.n:
                raise ConfigInvalid(f"{name}={value} fuera de rango para n={g.n}", field=name)

    def run(self, config: ExperimentConfig, command: Optional[str] = None) -> RunReport:
        """
        Ejecuta la corrida completa

        Args:
            config: Configuración validada
            command: Nombre del subcomando para el reporte

        Returns:
            RunReport con instancias en orden canónico

        Raises:
            ConfigInvalid: si la configuración no es ejecutable
        """
        started = time.perf_counter()
        plans = self.plan(config)
        self.validate(config, plans)
        logger.info(f"Iniciando {config.algorithm.value}: {len(plans)} instancias, {config.workers} hilos")

        if config.workers > 1 and len(plans) > 1:
            with ThreadPoolExecutor(max_workers=config.workers) as pool:
                results = list(pool.map(lambda plan: self.run_instance(config, plan), plans))
        else:
            results = [self.run_instance(config, plan) for plan in plans]
        results.sort(key=lambda item: item.index)

        report = RunReport(
            command=command or config.algorithm.value,
            config=config.model_dump(mode="json"),
            instances=results,
            aggregate=self.aggregate(config, results),
            elapsed_seconds=time.perf_counter() - started,
        )
        if config.out:
            write_json(report, config.out)
        return report

    def run_instance(self, config: ExperimentConfig, plan: InstancePlan) -> InstanceResult:
        """Ejecuta una instancia; los errores quedan en el resultado"""
        started = time.perf_counter()
        record = InstanceResult(index=plan.index, seed=plan.seed, graph={"source": plan.source})
        if plan.skip_reason:
            record.status = "skipped"
            record.error_message = plan.skip_reason
            return record
        try:
            g = load_graph(plan.source, config.graph_params, plan.seed)
            record.graph = describe_graph(plan.source, g)
            params = {
                "s": plan.overrides.get("s", config.s),
                "t": plan.overrides.get("t", config.t),
                "P": plan.overrides.get("P", config.P),
                "k": plan.overrides.get("k", config.k),
            }
            result, oracle, failed_runs = self.handlers[config.algorithm](g, config, params, plan.seed)
            record.result = result
            record.oracle = oracle
            if failed_runs:
                record.status = "error"
                record.error_type = "RunFailure"
                record.error_message = f"{failed_runs} repeticiones con error"
        except (FewPathsError, ValueError) as e:
            logger.error(f"Error en la instancia {plan.index} ({plan.source}): {str(e)}")
            record.status = "error"
            record.error_type = type(e).__name__
            record.error_message = getattr(e, "message", str(e))
        record.elapsed_ms = (time.perf_counter() - started) * 1000
        logger.info(f"Instancia {plan.index} terminada: {record.status}")
        return record

    def _run_count(self, g: DirectedGraph, config: ExperimentConfig, params: Dict[str, Any], seed: Optional[int]):
        s, t, P = params["s"], params["t"], params["P"]
        algorithm = count_paths_strongly_few if config.algorithm == Algorithm.THEOREM1 else count_paths_few_endpoints
        expected, on_layers = expected_count(g, s, t)

        runs, agreements, failures = [], 0, 0
        for rep_seed in repetition_seeds(seed, config.trials):
            noise = config.noise.derive(seed=rep_seed)
            try:
                result = algorithm(g, s, t, P, noise, seed=rep_seed)
            except FewPathsError as e:
                failures += 1
                runs.append(_error_record(e))
                continue
            run = result.model_dump(mode="json")
            run["agrees"] = result.count == expected
            agreements += int(run["agrees"])
            if config.algorithm == Algorithm.THEOREM2 and isinstance(expected, int):
                run["truncation"] = diagnostics.truncation_error(expected, result).to_dict()
            runs.append(run)

        oracle = {"expected": expected, "on_layers": on_layers, "agreements": agreements, "runs": len(runs)}
        return {"runs": runs}, oracle, failures

    def _run_recognize(self, g: DirectedGraph, config: ExperimentConfig, params: Dict[str, Any], seed: Optional[int]):
        s, t, k = params["s"], params["t"], params["k"]
        expected = in_stcon_sf(g, s, t, k)

        runs, agreements, failures = [], 0, 0
        for rep_seed in repetition_seeds(seed, config.trials):
            noise = config.noise.derive(seed=rep_seed)
            try:
                verdict = recognize_stcon_sf(g, s, t, k, noise, seed=rep_seed,
                                             strict_entry_sweep=config.strict_entry_sweep)
            except FewPathsError as e:
                failures += 1
                runs.append(_error_record(e))
                continue
            run = verdict.model_dump(mode="json")
            run["agrees"] = verdict.accepted == expected
            agreements += int(run["agrees"])
            runs.append(run)

        oracle = {"expected": expected, "agreements": agreements, "runs": len(runs)}
        return {"runs": runs}, oracle, failures

    def _run_classify(self, g: DirectedGraph, config: ExperimentConfig, params: Dict[str, Any], seed: Optional[int]):
        s, t, k = params["s"], params["t"], params["k"]
        result = classify(g, s, t, k).model_dump(mode="json")
        result["in_stcon_sf"] = in_stcon_sf(g, s, t, k)
        result["in_stcon_ru"] = in_stcon_ru(g, s, t)
        return result, {}, 0

    def _run_spectrum(self, g: DirectedGraph, config: ExperimentConfig, params: Dict[str, Any], seed: Optional[int]):
        laplacian = counting_laplacian(g)
        exact = svd(laplacian)

        runs = []
        for rep_seed in repetition_seeds(seed, config.trials):
            estimate = spectrum_estimate(laplacian, config.noise.derive(seed=rep_seed))
            runs.append({
                "values": list(estimate.values),
                "sigma_max": estimate.maximum,
                "sigma_min": estimate.minimum,
                "failed": estimate.failed,
            })

        oracle: Dict[str, Any] = {
            "sigma_max": exact.sigma_max,
            "sigma_min": exact.sigma_min,
            "condition": exact.sigma_max / exact.sigma_min if exact.sigma_min > 0 else None,
            "kernel_dimension": kernel_dimension(exact.sigma),
            "acyclic": g.is_acyclic(),
        }
        if oracle["acyclic"]:
            max_count = count_paths_oracle(g, ORACLE_CAP).max_count()
            oracle["max_count"] = max_count.to_json()
            if max_count.is_finite:
                checks = diagnostics.spectral_bounds(g, max_count.value)
                # σ_n ≤ 1/‖L⁻¹‖_max porque ‖L⁻¹‖₂ ≥ ‖L⁻¹‖_max
                upper = 1.0 / max_count.value
                checks.append(BoundCheck(
                    "sigma_min_le_inverse_max_count", exact.sigma_min <= upper * (1 + 1e-9), exact.sigma_min, upper
                ))
                oracle["checks"] = [c.to_dict() for c in checks]
        return {"runs": runs}, oracle, 0

    def _run_walk(self, g: DirectedGraph, config: ExperimentConfig, params: Dict[str, Any], seed: Optional[int]):
        s, t = params["s"], params["t"]
        max_steps = config.max_steps if config.max_steps is not None else g.n
        estimate = random_walk_hit_probability(g, s, t, max_steps, config.trials, seed)
        exact = exact_hit_probability(g, s, t, max_steps)
        se = float(np.sqrt(exact * (1 - exact) / config.trials))
        within = abs(estimate.probability - exact) <= 3 * se if se > 0 else estimate.probability == exact
        result = {
            "probability": estimate.probability,
            "hits": estimate.hits,
            "trials": estimate.trials,
            "max_steps": max_steps,
        }
        oracle = {"probability": exact, "standard_error": se, "within_3se": bool(within)}
        return result, oracle, 0

    def _run_savitch(self, g: DirectedGraph, config: ExperimentConfig, params: Dict[str, Any], seed: Optional[int]):
        s, t = params["s"], params["t"]
        result = savitch_reachable(g, s, t, memoize=g.n > SAVITCH_MEMO_THRESHOLD)
        expected = nx.has_path(g.to_networkx(), s, t)
        data = {"reachable": result.reachable, "depth": result.depth, "calls": result.calls, "levels": result.levels}
        return data, {"expected": expected, "agrees": result.reachable == expected}, 0

    def aggregate(self, config: ExperimentConfig, results: List[InstanceResult]) -> Dict[str, Any]:
        """Estadísticas del lote: errores, acuerdo con el oráculo y cotas violadas"""
        summary: Dict[str, Any] = {
            "instances": len(results),
            "errors": sum(1 for r in results if r.status == "error"),
            "skipped": sum(1 for r in results if r.status == "skipped"),
        }
        runs = sum(r.oracle.get("runs", 0) for r in results)
        if runs:
            agreements = sum(r.oracle.get("agreements", 0) for r in results)
            summary["runs"] = runs
            summary["agreements"] = agreements
            summary["error_rate"] = 1 - agreements / runs

        violations = 0
        for r in results:
            for check in r.oracle.get("checks", []):
                violations += int(not check["holds"])
            for run in r.result.get("runs", []):
                if "truncation" in run:
                    violations += int(not run["truncation"]["holds"])
        summary["bound_violations"] = violations

        if config.algorithm == Algorithm.WALK:
            summary["within_3se"] = sum(1 for r in results if r.oracle.get("within_3se"))
        if config.algorithm == Algorithm.SAVITCH:
            summary["agreements"] = sum(1 for r in results if r.oracle.get("agrees"))
        return summary

# Instancia global del servicio
experiment_runner = ExperimentRunner()

def run(config: ExperimentConfig) -> RunReport:
    """Ejecuta una configuración con el servicio global"""
    return experiment_runner.run(config)
