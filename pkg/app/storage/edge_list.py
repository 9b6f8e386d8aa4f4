"""
Formato de lista de aristas

Línea 1: "n m"; luego m líneas "u v" con nodos desde 0. Se ignoran las
líneas vacías y los comentarios que empiezan con "#".
"""
from pathlib import Path
from typing import Iterable, Optional, Union
import logging
from app.models.graph import DirectedGraph
from app.utils.exceptions import GraphFormatError, IOFailure

logger = logging.getLogger(__name__)

def _content_lines(text: str):
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield number, line

def _parse_pair(line: str, number: int, what: str):
    parts = line.split()
    if len(parts) != 2:
        raise GraphFormatError(f"Línea {number}: se esperaban dos enteros ({what})", line=number)
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise GraphFormatError(f"Línea {number}: valores no enteros en '{line}'", line=number)

def parse_edge_list(text: str) -> DirectedGraph:
    """
    Convierte texto en formato de lista de aristas a un grafo

    Raises:
        GraphFormatError: con el número de línea del problema
    """
    lines = _content_lines(text)
    header = next(lines, None)
    if header is None:
        raise GraphFormatError("Archivo vacío: falta la cabecera 'n m'", line=1)
    number, line = header
    n, m = _parse_pair(line, number, "cabecera n m")
    if n < 1 or m < 0:
        raise GraphFormatError(f"Línea {number}: cabecera inválida n={n}, m={m}", line=number)

    edges = set()
    last = number
    for number, line in lines:
        u, v = _parse_pair(line, number, "arista u v")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"Línea {number}: arista ({u}, {v}) fuera de rango para n={n}", line=number)
        if (u, v) in edges:
            raise GraphFormatError(f"Línea {number}: arista duplicada ({u}, {v})", line=number)
        edges.add((u, v))
        last = number

    if len(edges) != m:
        raise GraphFormatError(f"La cabecera declara {m} aristas pero hay {len(edges)}", line=last)
    return DirectedGraph(n=n, edges=frozenset(edges))

def format_edge_list(g: DirectedGraph, comments: Optional[Iterable[str]] = None) -> str:
    """Texto canónico: aristas ordenadas y comentarios opcionales al inicio"""
    lines = [f"# {c}" for c in comments or []]
    lines.append(f"{g.n} {g.m}")
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"

def read_edge_list(path: Union[str, Path]) -> DirectedGraph:
    """
    Lee un grafo desde un archivo

    Raises:
        IOFailure: si el archivo no se puede leer
        GraphFormatError: si el contenido es inválido
    """
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        logger.error(f"Error leyendo {path}: {str(e)}")
        raise IOFailure(f"No se pudo leer {path}: {str(e)}", path=str(path))
    return parse_edge_list(text)

def write_edge_list(g: DirectedGraph, path: Union[str, Path], comments: Optional[Iterable[str]] = None) -> Path:
    """
    Escribe un grafo en formato de lista de aristas

    Raises:
        IOFailure: si la ruta no se puede escribir
    """
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(format_edge_list(g, comments), encoding="utf-8")
    except OSError as e:
        logger.error(f"Error escribiendo {path}: {str(e)}")
        raise IOFailure(f"No se pudo escribir {path}: {str(e)}", path=str(path))
    return path
