"""
Alcanzabilidad por duplicación de punto medio (Savitch)

reach(u, v, l) decide si hay un camino u→v de longitud ≤ 2^l probando
todos los puntos medios w con reach(u, w, l-1) y reach(w, v, l-1). La
profundidad de recursión es ⌈log₂ n⌉ y cada nivel guarda O(log n) bits:
espacio O(log² n), tiempo n^O(log n).
"""
from typing import Dict, Tuple
import logging
import math
from app.models.graph import DirectedGraph
from app.models.results import ReachabilityResult

logger = logging.getLogger(__name__)

class SavitchSearch:
    """
    Búsqueda instrumentada: cuenta llamadas y la profundidad alcanzada

    Args:
        g: Grafo dirigido
        memoize: Guarda resultados por (u, v, nivel); cambia el consumo de
            espacio pero no el resultado
    """

    def __init__(self, g: DirectedGraph, memoize: bool = False):
        self.g = g
        self.levels = math.ceil(math.log2(g.n)) if g.n > 1 else 0
        self.memoize = memoize
        self.memo: Dict[Tuple[int, int, int], bool] = {}
        self.calls = 0
        self.max_depth = 0

    def reach(self, u: int, v: int, level: int, depth: int = 0) -> bool:
        self.calls += 1
        self.max_depth = max(self.max_depth, depth)
        if u == v:
            return True
        if level == 0:
            return self.g.has_edge(u, v)

        key = (u, v, level)
        if self.memoize and key in self.memo:
            return self.memo[key]

        found = any(
            self.reach(u, w, level - 1, depth + 1) and self.reach(w, v, level - 1, depth + 1)
            for w in range(self.g.n)
        )
        if self.memoize:
            self.memo[key] = found
        return found

    def run(self, s: int, t: int) -> ReachabilityResult:
        reachable = self.reach(s, t, self.levels)
        return ReachabilityResult(
            reachable=reachable,
            depth=self.max_depth,
            calls=self.calls,
            levels=self.levels,
        )

def savitch_reachable(g: DirectedGraph, s: int, t: int, memoize: bool = False) -> ReachabilityResult:
    """
    Decide si t es alcanzable desde s

    Returns:
        ReachabilityResult; `bool(result)` es la respuesta y `depth` la
        profundidad de recursión (≤ ⌈log₂ n⌉)
    """
    g.check_node(s, "s")
    g.check_node(t, "t")
    result = SavitchSearch(g, memoize=memoize).run(s, t)
    logger.debug(f"Savitch {s}→{t}: {result.reachable}, profundidad {result.depth}, llamadas {result.calls}")
    return result
