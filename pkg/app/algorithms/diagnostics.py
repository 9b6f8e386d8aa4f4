"""
Verificaciones numéricas de las cotas que sostienen los algoritmos de conteo

Cada función devuelve un BoundCheck con el peor valor observado y la cota.
"""
from typing import List
import logging
import numpy as np
from app.graphs.oracle import exact_counts
from app.linalg.embedding import hermitian_embedding
from app.linalg.laplacian import counting_laplacian, nilpotency_index
from app.linalg.decomposition import svd, symmetric_eigh
from app.models.graph import DirectedGraph
from app.models.results import BoundCheck, CountResult
from app.quantum.pseudoinverse import EffectivePseudoinverseEstimator, effective_pseudoinverse

logger = logging.getLogger(__name__)

def spectral_bounds(g: DirectedGraph, P: int, rel_tol: float = 1e-9) -> List[BoundCheck]:
    """
    σ_1(L) ≤ n y σ_n(L) ≥ 1/(n·P) bajo la promesa N(i,j) ≤ P
    """
    n = g.n
    dec = svd(counting_laplacian(g))
    upper = float(n)
    lower = 1.0 / (n * P)
    return [
        BoundCheck("sigma_max_le_n", dec.sigma_max <= upper * (1 + rel_tol), dec.sigma_max, upper),
        BoundCheck("sigma_min_ge_1_over_nP", dec.sigma_min >= lower * (1 - rel_tol), dec.sigma_min, lower),
    ]

def embedding_spectrum(m, tol: float = 1e-9) -> BoundCheck:
    """Los valores propios de H(M) son {±σ_j(M)}"""
    sigma = svd(m).sigma
    expected = np.sort(np.concatenate([sigma, -sigma]))
    values, _ = symmetric_eigh(hermitian_embedding(m))
    error = float(np.abs(np.sort(values) - expected).max()) if sigma.size else 0.0
    return BoundCheck("embedding_eigenvalues", error <= tol, error, tol)

def block_identity(m, zeta: float, delta: float = 0.0, seed: int = 0, tol: float = 1e-9) -> BoundCheck:
    """M⁺_ζ̃(s,t) = H⁺_ζ̃(s,t+n) para todos los pares"""
    estimator = EffectivePseudoinverseEstimator(m, zeta, delta, seed=seed)
    n = estimator.n
    through_embedding = estimator.block(np.arange(n), np.arange(n))
    direct = effective_pseudoinverse(m, estimator.zeta_realized)
    error = float(np.abs(through_embedding - direct).max())
    return BoundCheck("embedding_block_identity", error <= tol, error, tol)

def overlap_bounds(g: DirectedGraph, s: int, t: int, P: int, tol: float = 1e-8) -> List[BoundCheck]:
    """
    |⟨s|v_j⟩| ≤ σ_j·√n·P y |⟨u_j|t⟩| ≤ σ_j·√n·P para todo j

    Valen cuando N(s,j) ≤ P y N(j,t) ≤ P, porque v_j = σ_j·L⁻¹u_j.
    """
    dec = svd(counting_laplacian(g))
    scale = dec.sigma * np.sqrt(g.n) * P
    source_excess = float(np.max(np.abs(dec.V[s, :]) - scale))
    target_excess = float(np.max(np.abs(dec.U[t, :]) - scale))
    return [
        BoundCheck("source_overlap", source_excess <= tol, source_excess, tol),
        BoundCheck("target_overlap", target_excess <= tol, target_excess, tol),
    ]

def row_norm_identity(g: DirectedGraph, s: int, rel_tol: float = 1e-6) -> BoundCheck:
    """
    ‖(L⁻¹)ᵀe_s‖² calculada con la SVD frente a Σ_j N(s,j)² del oráculo
    """
    dec = svd(counting_laplacian(g))
    spectral = float(np.sum((dec.V[s, :] / dec.sigma) ** 2))
    combinatorial = float(sum(c * c for c in exact_counts(g)[s]))
    error = abs(spectral - combinatorial) / max(combinatorial, 1.0)
    return BoundCheck("row_norm_identity", error <= rel_tol, error, rel_tol)

def truncation_error(exact_count: int, result: CountResult) -> BoundCheck:
    """
    |L⁻¹(s,t) - L⁺_ζ̃(s,t)| < ζ̃·n²·P² para un conteo por pocos-extremos
    """
    params = result.parameters
    bound = params["zeta_realized"] * params["n_eff"] ** 2 * params["P"] ** 2
    error = abs(exact_count - result.truncated_value)
    return BoundCheck("truncation_error", error < bound, error, bound)

def inverse_residual(g: DirectedGraph, tol: float = 1e-6) -> BoundCheck:
    """‖L·N - I‖_max con N la matriz entera del oráculo (g acíclico)"""
    counts = np.array(exact_counts(g), dtype=np.float64)
    residual = float(np.abs(counting_laplacian(g) @ counts - np.eye(g.n)).max())
    return BoundCheck("inverse_residual", residual <= tol, residual, tol)

def nilpotency(g: DirectedGraph) -> BoundCheck:
    """A es nilpotente con índice ≤ n exactamente cuando g es acíclico"""
    index = nilpotency_index(g)
    holds = (index > 0) == g.is_acyclic() and index <= g.n
    return BoundCheck("nilpotency", holds, float(index), float(g.n))
