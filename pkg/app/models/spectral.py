"""
Modelos para descomposiciones espectrales
"""
from dataclasses import dataclass
import numpy as np

@dataclass(frozen=True)
class SvdDecomposition:
    """
    Descomposición M = U · diag(sigma) · Vᵀ

    sigma está ordenado de forma no creciente; las columnas de U y V son
    u_j y v_j. Los arreglos son de solo lectura porque se comparten desde caché.
    """
    sigma: np.ndarray
    U: np.ndarray
    V: np.ndarray

    @property
    def n(self) -> int:
        return len(self.sigma)

    @property
    def sigma_max(self) -> float:
        return float(self.sigma[0]) if len(self.sigma) else 0.0

    @property
    def sigma_min(self) -> float:
        return float(self.sigma[-1]) if len(self.sigma) else 0.0

    def reconstruct(self) -> np.ndarray:
        """Recompone la matriz original"""
        k = len(self.sigma)
        return (self.U[:, :k] * self.sigma) @ self.V[:, :k].T

    def kept(self, threshold: float) -> np.ndarray:
        """Máscara de los índices con σ_j ≥ threshold"""
        return self.sigma >= threshold

    def kept_rank(self, threshold: float) -> int:
        return int(np.count_nonzero(self.kept(threshold)))
