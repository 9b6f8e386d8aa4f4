"""
Resolución de fuentes de grafos del harness

Sintaxis aceptada:
- file:PATH
- chain, diamond, dag, lange, cycle (parámetros por flags o entre paréntesis)
- chain(half=4), dag(n=20,density=0.1)
- union:chain(half=4)+diamond(m=10)
"""
from typing import Any, Dict, Optional, Tuple
import logging
import re
from app.graphs.generators import (
    disjoint_union,
    gen_chain_figure1,
    gen_cycle,
    gen_diamond_chain,
    gen_lange_example,
    gen_random_dag
)
from app.models.graph import DirectedGraph
from app.storage.edge_list import read_edge_list
from app.utils.constants import GeneratorName
from app.utils.exceptions import ConfigInvalid

logger = logging.getLogger(__name__)

_COMPONENT = re.compile(r"^(?P<name>[a-z]+)(\((?P<params>[^()]*)\))?$")

def parse_value(raw: str) -> Any:
    """Convierte un valor de parámetro a int, float, bool o str"""
    raw = raw.strip()
    lowered = raw.lower()
    if lowered in ("true", "false"):
        return lowered == "true"
    for cast in (int, float):
        try:
            return cast(raw)
        except ValueError:
            continue
    return raw

def parse_component(text: str) -> Tuple[GeneratorName, Dict[str, Any]]:
    """
    Separa 'nombre(k=v,...)' en generador y parámetros

    Raises:
        ConfigInvalid: si la sintaxis o el generador no son válidos
    """
    match = _COMPONENT.match(text.strip())
    if not match:
        raise ConfigInvalid(f"Fuente de grafo inválida: '{text}'", field="graph")
    try:
        name = GeneratorName(match.group("name"))
    except ValueError:
        raise ConfigInvalid(f"Generador desconocido: '{match.group('name')}'", field="graph")

    params: Dict[str, Any] = {}
    if match.group("params"):
        for item in match.group("params").split(","):
            if "=" not in item:
                raise ConfigInvalid(f"Parámetro sin valor en '{text}': '{item}'", field="graph")
            key, value = item.split("=", 1)
            params[key.strip()] = parse_value(value)
    return name, params

def _require(params: Dict[str, Any], key: str, name: GeneratorName):
    if key not in params:
        raise ConfigInvalid(f"El generador {name.value} requiere el parámetro '{key}'", field=key)
    return params[key]

def build_generator(name: GeneratorName, params: Dict[str, Any], seed: Optional[int]) -> DirectedGraph:
    """
    Construye un grafo a partir de un generador y sus parámetros

    Raises:
        ConfigInvalid: si faltan parámetros o son inválidos
    """
    try:
        if name == GeneratorName.CHAIN:
            relabel_seed = seed if params.get("relabel") else None
            return gen_chain_figure1(int(_require(params, "half", name)), seed=relabel_seed)
        if name == GeneratorName.DIAMOND:
            return gen_diamond_chain(int(_require(params, "m", name)))
        if name == GeneratorName.DAG:
            if seed is None:
                raise ConfigInvalid("El generador dag requiere una semilla", field="seed")
            return gen_random_dag(int(_require(params, "n", name)), float(params.get("density", 0.1)), seed)
        if name == GeneratorName.LANGE:
            return gen_lange_example(str(params.get("which", "right")))
        if name == GeneratorName.CYCLE:
            return gen_cycle(int(_require(params, "n", name)))
    except ValueError as e:
        raise ConfigInvalid(f"Parámetros inválidos para {name.value}: {str(e)}", field="graph")
    raise ConfigInvalid(f"{name.value} no es un generador", field="graph")

def load_graph(source: str, params: Optional[Dict[str, Any]] = None, seed: Optional[int] = None) -> DirectedGraph:
    """
    Resuelve una fuente de grafo

    Args:
        source: Cadena de la fuente
        params: Parámetros de flags (se combinan con los de la cadena)
        seed: Semilla de la instancia

    Returns:
        DirectedGraph
    """
    params = dict(params or {})
    if source.startswith("file:"):
        return read_edge_list(source[len("file:"):])

    if source.startswith("union:"):
        parts = [p for p in source[len("union:"):].split("+") if p.strip()]
        if len(parts) < 2:
            raise ConfigInvalid("union requiere al menos dos componentes", field="graph")
        graph = None
        for part in parts:
            name, own = parse_component(part)
            component = build_generator(name, own, seed)
            graph = component if graph is None else disjoint_union(graph, component)
        logger.debug(f"Unión construida: n={graph.n}, m={graph.m}")
        return graph

    name, own = parse_component(source)
    params.update(own)
    return build_generator(name, params, seed)

def describe_graph(source: str, g: DirectedGraph) -> Dict[str, Any]:
    """Descripción breve para los reportes"""
    return {"source": source, "n": g.n, "m": g.m}
