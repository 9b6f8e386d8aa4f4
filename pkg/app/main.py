"""
Interfaz de línea de comandos del harness

Subcomandos: gen, count, recognize, classify, spectrum, walk, savitch, bench.
Códigos de salida: 0 éxito, 2 configuración inválida, 3 alguna instancia falló.
"""
from pathlib import Path
from typing import Any, Dict, List, Optional
import argparse
import logging
import sys
from app.config import settings
from app.models.quantum import NoiseModel
from app.presentation.run_summary import run_summary_presenter
from app.services.corpus_service import emit_corpus
from app.services.experiment_runner import build_config, experiment_runner
from app.services.graph_source import parse_value
from app.utils.constants import (
    EXIT_CONFIG_ERROR,
    EXIT_INSTANCE_ERROR,
    EXIT_OK,
    Algorithm,
    GeneratorName,
    NoiseMode
)
from app.utils.exceptions import ConfigInvalid, IOFailure

logger = logging.getLogger(__name__)

# Parámetros de generadores que se pueden pasar como flags
GRAPH_PARAM_FLAGS = ("half", "m", "n", "density", "which", "relabel")

def parse_grid(items: Optional[List[str]]) -> Dict[str, List[Any]]:
    """
    Convierte ["half=2,4,8", "m=1..5"] en {"half": [2, 4, 8], "m": [1, 2, 3, 4, 5]}

    Raises:
        ConfigInvalid: si algún elemento no tiene la forma clave=valores
    """
    grid: Dict[str, List[Any]] = {}
    for item in items or []:
        if "=" not in item:
            raise ConfigInvalid(f"Elemento de grilla inválido: '{item}'", field="grid")
        key, raw = item.split("=", 1)
        values: List[Any] = []
        for part in filter(None, (p.strip() for p in raw.split(","))):
            if ".." in part:
                low, high = part.split("..", 1)
                values.extend(range(int(low), int(high) + 1))
            else:
                values.append(parse_value(part))
        grid[key.strip()] = values
    return grid

def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--graph", default=None, help="file:PATH | chain | diamond | dag | lange | cycle | union:A+B")
    parser.add_argument("--half", type=int, help="Tamaño de la cadena")
    parser.add_argument("--m", type=int, help="Número de diamantes")
    parser.add_argument("--n", type=int, help="Nodos del DAG aleatorio o del ciclo")
    parser.add_argument("--density", type=float, help="Densidad del DAG aleatorio")
    parser.add_argument("--which", choices=["left", "middle", "right"], help="Ejemplo de Lange")
    parser.add_argument("--relabel", action="store_true", help="Permutar etiquetas de la cadena con la semilla")
    parser.add_argument("--s", type=int, help="Nodo origen")
    parser.add_argument("--t", type=int, help="Nodo destino")
    parser.add_argument("--k", type=int, help="Cota de caminos")
    parser.add_argument("--P", type=int, help="Cota de la promesa")
    parser.add_argument("--noise", choices=[m.value for m in NoiseMode], default=NoiseMode.EXACT.value)
    parser.add_argument("--exact", action="store_true", help="Atajo de --noise exact")
    parser.add_argument("--accuracy", type=float, default=1 / 3, help="Cota de cada perturbación")
    parser.add_argument("--failure-prob", type=float, default=0.0, help="Probabilidad de fallo simulada")
    parser.add_argument("--seed", type=int, help="Semilla base")
    parser.add_argument("--trials", type=int, default=1, help="Caminantes o repeticiones")
    parser.add_argument("--max-steps", type=int, help="Pasos máximos de la caminata")
    parser.add_argument("--instances", type=int, default=1, help="Instancias (semilla + índice)")
    parser.add_argument("--workers", type=int, default=settings.DEFAULT_WORKERS, help="Hilos")
    parser.add_argument("--out", help="Ruta del reporte JSON")

def build_parser() -> argparse.ArgumentParser:
    """Parser con todos los subcomandos"""
    parser = argparse.ArgumentParser(prog="fewpaths", description="Conteo de caminos con pseudoinversas simuladas")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="Emitir un corpus de grafos")
    gen.add_argument("--generator", required=True, choices=[g.value for g in GeneratorName if g not in (GeneratorName.UNION, GeneratorName.FILE)])
    gen.add_argument("--grid", action="append", help="clave=v1,v2 o clave=a..b (repetible)")
    gen.add_argument("--seed", type=int, help="Semilla base")
    gen.add_argument("--cap", type=int, default=10 ** 6, help="Tope del oráculo")
    gen.add_argument("--out", help="Directorio del corpus")

    count = sub.add_parser("count", help="Contar caminos s→t")
    count.add_argument("--alg", choices=[Algorithm.THEOREM1.value, Algorithm.THEOREM2.value], default=Algorithm.THEOREM1.value)
    _add_common(count)

    recognize = sub.add_parser("recognize", help="Reconocer STCON_sf")
    recognize.add_argument("--strict-entry-sweep", action="store_true", help="Revisar todas las entradas de L⁻¹")
    _add_common(recognize)

    for name, help_text in (
        ("classify", "Clasificar unambigüedad con el oráculo"),
        ("spectrum", "Espectro del laplaciano de conteo"),
        ("walk", "Caminata aleatoria de referencia"),
        ("savitch", "Alcanzabilidad de Savitch"),
    ):
        _add_common(sub.add_parser(name, help=help_text))

    bench = sub.add_parser("bench", help="Ejecutar un algoritmo sobre un corpus")
    bench.add_argument("--corpus", required=True, help="Manifiesto o directorio del corpus")
    bench.add_argument("--alg", required=True, choices=[a.value for a in Algorithm])
    bench.add_argument("--strict-entry-sweep", action="store_true")
    _add_common(bench)
    return parser

def config_from_args(args: argparse.Namespace):
    """
    Traduce los argumentos a un ExperimentConfig

    Raises:
        ConfigInvalid: si la combinación de argumentos no es válida
    """
    command = args.command
    if command in ("count", "bench"):
        algorithm = args.alg
    else:
        algorithm = command

    corpus = None
    graph = args.graph
    if command == "bench":
        corpus_path = Path(args.corpus)
        corpus = str(corpus_path / "manifest.json" if corpus_path.is_dir() else corpus_path)
        graph = "corpus"
    if not graph:
        raise ConfigInvalid("--graph es obligatorio", field="graph")

    graph_params = {
        name: getattr(args, name)
        for name in GRAPH_PARAM_FLAGS
        if getattr(args, name) not in (None, False)
    }
    try:
        noise = NoiseModel(
            mode=NoiseMode.EXACT if args.exact else args.noise,
            accuracy=args.accuracy,
            failure_prob=args.failure_prob,
            seed=args.seed,
        )
    except ValueError as e:
        raise ConfigInvalid(f"Modelo de ruido inválido: {str(e)}", field="noise")

    out = args.out or str(Path(settings.OUTPUT_DIR) / f"{command}_report.json")
    return build_config(
        algorithm=algorithm,
        graph=graph,
        graph_params=graph_params,
        s=args.s,
        t=args.t,
        k=args.k,
        P=args.P,
        noise=noise,
        seed=args.seed,
        trials=args.trials,
        max_steps=args.max_steps,
        instances=args.instances,
        workers=args.workers,
        strict_entry_sweep=getattr(args, "strict_entry_sweep", False),
        out=out,
        corpus=corpus,
    )

def run_gen(args: argparse.Namespace) -> int:
    out_dir = args.out or str(Path(settings.OUTPUT_DIR) / f"corpus_{args.generator}")
    manifest = emit_corpus(args.generator, parse_grid(args.grid), args.seed, out_dir, cap=args.cap)
    print(f"📁 Corpus {manifest.generator}: {len(manifest.entries)} grafos en {out_dir}")
    for entry in manifest.entries:
        print(f"   {entry.file}: n={entry.n}, m={entry.m}, max N={entry.max_count}, "
              f"fuertemente unambiguo={entry.strongly_unambiguous}")
    return EXIT_OK

def main(argv: Optional[List[str]] = None) -> int:
    """
    Punto de entrada del CLI

    Returns:
        Código de salida
    """
    args = build_parser().parse_args(argv)
    try:
        if args.command == "gen":
            return run_gen(args)
        config = config_from_args(args)
        report = experiment_runner.run(config, command=args.command)
    except (ConfigInvalid, IOFailure) as e:
        logger.error(f"Error de configuración: {e.message}")
        print(f"❌ {e.message}", file=sys.stderr)
        return EXIT_CONFIG_ERROR

    print(run_summary_presenter.format_report(report))
    return EXIT_INSTANCE_ERROR if report.has_errors else EXIT_OK

if __name__ == "__main__":
    sys.exit(main())
