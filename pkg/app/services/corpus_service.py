"""
Generación y verificación de corpus de grafos

Un corpus es un directorio con archivos de lista de aristas y un
manifest.json con las propiedades certificadas por el oráculo.
"""
from itertools import product
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union
import logging
from app.graphs.oracle import count_paths_oracle
from app.models.experiment import CorpusEntry, CorpusManifest
from app.models.graph import DirectedGraph
from app.services.graph_source import build_generator
from app.storage.edge_list import read_edge_list, write_edge_list
from app.storage.reports import read_json, write_json
from app.utils.constants import GeneratorName
from app.utils.exceptions import ConfigInvalid
from app.utils.seeding import instance_seed

logger = logging.getLogger(__name__)

MANIFEST_NAME = "manifest.json"
DEFAULT_CAP = 10 ** 6

def certify(g: DirectedGraph, cap: int = DEFAULT_CAP) -> Dict[str, Any]:
    """
    Propiedades del grafo según el oráculo

    Returns:
        Diccionario con acyclic, max_count, certified_P, strongly_unambiguous y promise
    """
    counts = count_paths_oracle(g, cap)
    max_count = counts.max_count()
    acyclic = g.is_acyclic()
    certified = max_count.value if max_count.is_finite else None
    strongly_unambiguous = max_count.is_finite and max_count.value <= 1
    return {
        "acyclic": acyclic,
        "max_count": str(max_count.to_json()),
        "certified_P": certified,
        "strongly_unambiguous": strongly_unambiguous,
        "promise": {
            "strongly_few": acyclic and certified is not None,
            "strongly_unambiguous": strongly_unambiguous,
        },
    }

def expand_grid(grid: Dict[str, List[Any]]) -> List[Dict[str, Any]]:
    """
    Producto cartesiano de la grilla en orden canónico (claves ordenadas)

    Raises:
        ConfigInvalid: si la grilla o alguno de sus ejes está vacío
    """
    if not grid or any(len(values) == 0 for values in grid.values()):
        raise ConfigInvalid("La grilla de parámetros está vacía", field="grid")
    keys = sorted(grid)
    return [dict(zip(keys, combo)) for combo in product(*(grid[k] for k in keys))]

class CorpusService:
    """Servicio para emitir y cargar corpus"""

    def emit_corpus(self, generator: str, grid: Dict[str, List[Any]], seed: Optional[int],
                    out_dir: Union[str, Path], cap: int = DEFAULT_CAP) -> CorpusManifest:
        """
        Genera un grafo por punto de la grilla y escribe el manifiesto

        Args:
            generator: Nombre del generador
            grid: Valores por parámetro
            seed: Semilla base (punto i usa seed + i)
            out_dir: Directorio destino
            cap: Tope del oráculo

        Returns:
            CorpusManifest escrito en out_dir/manifest.json

        Raises:
            ConfigInvalid: si la grilla está vacía o el generador no existe
            IOFailure: si el directorio no se puede escribir
        """
        try:
            name = GeneratorName(generator)
        except ValueError:
            raise ConfigInvalid(f"Generador desconocido: '{generator}'", field="generator")
        points = expand_grid(grid)
        out_dir = Path(out_dir)

        entries = []
        for index, params in enumerate(points):
            point_seed = None if seed is None else instance_seed(seed, index)
            g = build_generator(name, params, point_seed)
            filename = f"{name.value}_{index:03d}.txt"
            comments = [f"generator={name.value}", f"params={params}", f"seed={point_seed}"]
            write_edge_list(g, out_dir / filename, comments)
            entries.append(CorpusEntry(
                file=filename,
                generator=name.value,
                params=params,
                seed=point_seed,
                n=g.n,
                m=g.m,
                **certify(g, cap),
            ))

        manifest = CorpusManifest(generator=name.value, grid=grid, seed=seed, cap=cap, entries=entries)
        write_json(manifest, out_dir / MANIFEST_NAME)
        logger.info(f"Corpus {name.value} con {len(entries)} grafos escrito en {out_dir}")
        return manifest

    def load_corpus(self, path: Union[str, Path], verify: bool = True) -> Tuple[CorpusManifest, List[DirectedGraph]]:
        """
        Carga un corpus y, opcionalmente, vuelve a certificar cada grafo

        Args:
            path: Directorio del corpus o ruta del manifiesto

        Raises:
            ConfigInvalid: si alguna propiedad del manifiesto no coincide con el oráculo
        """
        path = Path(path)
        manifest_path = path / MANIFEST_NAME if path.is_dir() else path
        manifest = read_json(manifest_path, CorpusManifest)

        graphs = []
        for entry in manifest.entries:
            g = read_edge_list(manifest_path.parent / entry.file)
            if verify:
                self._verify_entry(entry, g, manifest.cap)
            graphs.append(g)
        logger.info(f"Corpus cargado desde {manifest_path}: {len(graphs)} grafos")
        return manifest, graphs

    def _verify_entry(self, entry: CorpusEntry, g: DirectedGraph, cap: int) -> None:
        actual = {"n": g.n, "m": g.m, **certify(g, cap)}
        recorded = entry.model_dump()
        for key, value in actual.items():
            if recorded[key] != value:
                logger.error(f"Manifiesto inconsistente en {entry.file}: {key}={recorded[key]} vs {value}")
                raise ConfigInvalid(
                    f"{entry.file}: {key} registrado {recorded[key]} pero el oráculo da {value}",
                    field=key,
                )

# Instancia global del servicio
corpus_service = CorpusService()

def emit_corpus(generator: str, grid: Dict[str, List[Any]], seed: Optional[int],
                out_dir: Union[str, Path], cap: int = DEFAULT_CAP) -> CorpusManifest:
    return corpus_service.emit_corpus(generator, grid, seed, out_dir, cap)

def load_corpus(path: Union[str, Path], verify: bool = True) -> Tuple[CorpusManifest, List[DirectedGraph]]:
    return corpus_service.load_corpus(path, verify)
