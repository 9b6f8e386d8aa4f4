"""
Clasificación de grafos según unambigüedad y fewness

- k-unambiguo respecto a (s,t): N(s,t) ≤ k
- k-reach-unambiguo respecto a s: N(s,j) ≤ k para todo j
- k-fuertemente unambiguo: N(i,j) ≤ k para todo par
"""
import logging
from app.models.graph import DirectedGraph
from app.models.path_count import PathCountMatrix, UnambiguityReport
from app.graphs.oracle import count_paths_oracle

logger = logging.getLogger(__name__)

def classify(g: DirectedGraph, s: int, t: int, k: int) -> UnambiguityReport:
    """
    Evalúa los tres predicados de unambigüedad con el oráculo

    Args:
        g: Grafo dirigido
        s: Nodo origen
        t: Nodo destino
        k: Cota de caminos

    Returns:
        UnambiguityReport con testigos para cada predicado falso
    """
    g.check_node(s, "s")
    g.check_node(t, "t")
    if k < 1:
        raise ValueError("k debe ser ≥ 1")

    counts = count_paths_oracle(g, cap=k + 1)

    st_ok = not counts[s, t].exceeds(k)
    reach_witness = next((j for j in range(g.n) if counts[s, j].exceeds(k)), None)
    strong_witness = next(((i, j) for i, j, c in counts.pairs() if c.exceeds(k)), None)

    report = UnambiguityReport(
        k=k,
        s=s,
        t=t,
        unambiguous_st=st_ok,
        st_witness=None if st_ok else (s, t),
        reach_unambiguous_s=reach_witness is None,
        reach_witness=reach_witness,
        strongly_unambiguous=strong_witness is None,
        strong_witness=strong_witness,
        infinite_detected=counts.has_infinite,
        max_count=str(counts.max_count()),
    )
    logger.debug(f"Clasificación k={k}, s={s}, t={t}: {report.model_dump()}")
    return report

def in_stcon_sf(g: DirectedGraph, s: int, t: int, k: int, counts: PathCountMatrix = None) -> bool:
    """
    Pertenencia a STCON_sf: todos los N(i,j) ≤ k y N(s,t) ≥ 1

    Args:
        counts: Conteos ya calculados con tope ≥ k (opcional)
    """
    counts = counts or count_paths_oracle(g, cap=k + 1)
    if any(c.exceeds(k) for _, _, c in counts.pairs()):
        return False
    return counts[s, t].value >= 1

def in_stcon_ru(g: DirectedGraph, s: int, t: int) -> bool:
    """Pertenencia a STCON_ru: N(s,j) ≤ 1 para todo j y N(s,t) = 1"""
    counts = count_paths_oracle(g, cap=2)
    if any(counts[s, j].exceeds(1) for j in range(g.n)):
        return False
    return counts[s, t].value == 1
