"""
Pseudoinversa efectiva M⁺_ζ y su estimación por entradas

M⁺_ζ = Σ_{σ_j ≥ ζ} σ_j⁻¹ v_j u_jᵀ invierte solo la parte bien condicionada
de M. El umbral realizado ζ̃ se sortea una vez cerca de ζ y queda fijo
para todas las entradas que se lean.
"""
from typing import Optional, Sequence, Tuple
import logging
import numpy as np
from app.config import settings
from app.linalg.embedding import hermitian_embedding
from app.linalg.norms import max_norm
from app.linalg.decomposition import svd, symmetric_eigh
from app.models.quantum import NoiseModel, PseudoinverseEstimate
from app.quantum.noise import NoiseSource
from app.utils.exceptions import (
    SpectralBoundViolated,
    ThresholdOnSingularValue,
    ThresholdUnresolvable
)
from app.utils.seeding import make_rng

logger = logging.getLogger(__name__)

# Distancia mínima a un valor singular para truncar sin ambigüedad
ON_SINGULAR_VALUE_TOL = 1e-12

def effective_pseudoinverse(m, zeta: float) -> np.ndarray:
    """
    Calcula M⁺_ζ a partir de la SVD

    Args:
        m: Matriz real
        zeta: Umbral de truncamiento, > 0

    Returns:
        Matriz de rango |{j : σ_j ≥ ζ}|

    Raises:
        ThresholdOnSingularValue: si ζ coincide con algún σ_j
    """
    if zeta <= 0:
        raise ValueError("zeta debe ser positivo")
    dec = svd(m)
    if np.any(np.abs(dec.sigma - zeta) <= ON_SINGULAR_VALUE_TOL):
        raise ThresholdOnSingularValue(
            f"El umbral ζ={zeta} coincide con un valor singular",
            {"zeta": zeta},
        )
    keep = dec.kept(zeta)
    k = len(dec.sigma)
    V = dec.V[:, :k][:, keep]
    U = dec.U[:, :k][:, keep]
    return (V / dec.sigma[keep]) @ U.T

def draw_threshold(sigma: Sequence[float], zeta: float, delta: float, seed: Optional[int] = None) -> float:
    """
    Sortea ζ̃ uniforme en [ζ-δ, ζ+δ] lejos de todo valor singular

    Args:
        sigma: Valores singulares
        zeta: Umbral pedido
        delta: Semiancho del intervalo (δ = 0 devuelve ζ)
        seed: Semilla del sorteo

    Returns:
        ζ̃ > 0 con |ζ̃ - σ_j| > THRESHOLD_TIE_TOL para todo j

    Raises:
        ThresholdUnresolvable: si se agotan los reintentos
    """
    if zeta <= 0:
        raise ValueError("zeta debe ser positivo")
    if delta < 0:
        raise ValueError("delta no puede ser negativo")

    sigma = np.asarray(sigma, dtype=np.float64)
    tol = settings.THRESHOLD_TIE_TOL

    def clear_of_spectrum(value: float) -> bool:
        return sigma.size == 0 or float(np.abs(sigma - value).min()) > tol

    if delta == 0:
        if clear_of_spectrum(zeta):
            return float(zeta)
        raise ThresholdUnresolvable(f"ζ={zeta} coincide con un valor singular y δ=0", {"zeta": zeta})

    low = max(zeta - delta, np.finfo(np.float64).tiny)
    high = zeta + delta
    rng = make_rng(seed)
    for attempt in range(settings.THRESHOLD_MAX_RETRIES):
        candidate = float(rng.uniform(low, high))
        if clear_of_spectrum(candidate):
            return candidate
        logger.warning(f"Umbral ζ̃={candidate} sobre un valor singular, reintento {attempt + 1}")

    raise ThresholdUnresolvable(
        f"No se encontró ζ̃ en [{low}, {high}] tras {settings.THRESHOLD_MAX_RETRIES} intentos",
        {"zeta": zeta, "delta": delta},
    )

def well_outcome_probability(m, t: int, zeta: float, zeta_realized: float) -> float:
    """
    Probabilidad ζ²·‖M⁺_ζ̃ e_t‖² del resultado `well`

    Está en [0, 1] cuando la matriz viene escalada con Z = 1 y ζ̃ ≥ ζ - δ.
    """
    dec = svd(m)
    if not 0 <= t < dec.U.shape[0]:
        raise ValueError(f"t={t} fuera de rango")
    keep = dec.kept(zeta_realized)
    k = len(dec.sigma)
    column = dec.U[t, :k][keep] / dec.sigma[keep]
    return float(zeta ** 2 * np.sum(column ** 2))

class EffectivePseudoinverseEstimator:
    """
    Lee entradas de M⁺_ζ̃ a través de la inmersión hermítica

    La matriz se escala por 1/Z, se forma H = [[0, Mᵀ], [M, 0]] y se trunca
    |λ| ≥ ζ̃ con el mismo umbral para valores propios positivos y negativos.
    Así M⁺_ζ̃(s,t) = H⁺_ζ̃(s, t+n)/Z.

    Args:
        m: Matriz real n×n
        zeta: Umbral pedido ζ (en las unidades de m)
        delta: Tolerancia δ del umbral (en las unidades de m)
        Z: Cota de σ_1(m); por defecto n·‖m‖_max
        seed: Semilla del sorteo de ζ̃

    Raises:
        SpectralBoundViolated: si σ_1(m) > Z
    """

    def __init__(self, m, zeta: float, delta: float, Z: Optional[float] = None, seed: Optional[int] = None):
        if zeta <= 0:
            raise ValueError("zeta debe ser positivo")
        self.m = np.asarray(m, dtype=np.float64)
        self.n = self.m.shape[0]
        self.zeta = float(zeta)
        self.delta = float(delta)

        if Z is None:
            Z = self.n * max_norm(self.m) or 1.0
        self.Z = float(Z)

        self.svd = svd(self.m)
        if self.svd.sigma_max > self.Z * (1 + 1e-12):
            raise SpectralBoundViolated(
                f"σ_1={self.svd.sigma_max} excede Z={self.Z}",
                {"sigma_max": self.svd.sigma_max, "Z": self.Z},
            )

        self.eigenvalues, self.eigenvectors = symmetric_eigh(hermitian_embedding(self.m / self.Z))

        # Ambos espectros (σ/Z y |λ|) deben quedar lejos del umbral
        scaled_sigma = np.concatenate([self.svd.sigma / self.Z, np.abs(self.eigenvalues)])
        zeta_scaled = draw_threshold(scaled_sigma, self.zeta / self.Z, self.delta / self.Z, seed)
        self.zeta_realized = zeta_scaled * self.Z

        keep = np.abs(self.eigenvalues) >= zeta_scaled
        self._kept_values = self.eigenvalues[keep]
        self._kept_vectors = self.eigenvectors[:, keep]
        self.kept_rank = self.svd.kept_rank(self.zeta_realized)
        logger.debug(
            f"Estimador listo: n={self.n}, Z={self.Z}, ζ={self.zeta}, "
            f"ζ̃={self.zeta_realized}, rango={self.kept_rank}"
        )

    def _check_indices(self, indices: np.ndarray, name: str) -> np.ndarray:
        indices = np.atleast_1d(np.asarray(indices, dtype=np.int64))
        if indices.size and (indices.min() < 0 or indices.max() >= self.n):
            raise ValueError(f"Índices {name} fuera de rango para n={self.n}")
        return indices

    def block(self, rows, cols) -> np.ndarray:
        """Submatriz sin ruido M⁺_ζ̃[rows, cols]"""
        rows = self._check_indices(rows, "rows")
        cols = self._check_indices(cols, "cols")
        left = self._kept_vectors[rows] / self._kept_values
        right = self._kept_vectors[self.n + cols]
        return left @ right.T / self.Z

    def exact_entry(self, s: int, t: int) -> float:
        """Entrada sin ruido M⁺_ζ̃(s,t)"""
        return float(self.block([s], [t])[0, 0])

    def estimate_block(self, rows, cols, noise: NoiseModel) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        """
        Submatriz con ruido; cada entrada falla de forma independiente

        Returns:
            Tupla (valores con ruido, valores sin ruido, máscara de fallos)
        """
        exact = self.block(rows, cols)
        source = NoiseSource(noise)
        failed = source.draw_failures(exact.size).reshape(exact.shape)
        values = source.perturb_entries(exact)
        values = source.corrupt_entries(values, failed)
        return values, exact, failed

    def estimate(self, s: int, t: int, noise: NoiseModel) -> PseudoinverseEstimate:
        """Estimación de la entrada (s,t) con ruido acotado"""
        values, exact, failed = self.estimate_block([s], [t], noise)
        return PseudoinverseEstimate(
            value=float(values[0, 0]),
            zeta_realized=self.zeta_realized,
            zeta_requested=self.zeta,
            delta=self.delta,
            kept_rank=self.kept_rank,
            noiseless_value=float(exact[0, 0]),
            failed=bool(failed[0, 0]),
            mode=noise.mode,
            accuracy=0.0 if noise.is_exact else noise.accuracy,
        )

def estimate_pseudoinverse_entry(m, s: int, t: int, zeta: float, delta: float, noise: NoiseModel,
                                 Z: Optional[float] = None, seed: Optional[int] = None) -> PseudoinverseEstimate:
    """
    Estima M⁺_ζ̃(s,t) con precisión aditiva noise.accuracy

    Raises:
        SpectralBoundViolated: si σ_1(m) > Z
        ThresholdUnresolvable: si no se puede sortear ζ̃
    """
    estimator = EffectivePseudoinverseEstimator(m, zeta, delta, Z=Z, seed=seed)
    return estimator.estimate(s, t, noise)
