"""
Descomposiciones densas deterministas con caché

Se usa LAPACK gesvd (bidiagonalización + QR) en lugar de gesdd para que
el mismo arreglo de entrada produzca exactamente los mismos bits.
"""
from threading import RLock
from typing import Callable, Hashable, Tuple
import hashlib
import logging
import numpy as np
import scipy.linalg
from cachetools import LRUCache
from app.config import settings
from app.models.spectral import SvdDecomposition
from app.utils.exceptions import NumericalFailure

logger = logging.getLogger(__name__)

# Tolerancia para decidir la primera componente no nula de v_j
SIGN_TOL = 1e-12

class DecompositionCache:
    """
    Caché LRU de descomposiciones indexada por el contenido de la matriz

    Las corridas con ruido repiten la misma matriz con distintas semillas;
    la descomposición se calcula una sola vez.
    """

    def __init__(self, maxsize: int):
        self.cache = LRUCache(maxsize=maxsize)
        self.lock = RLock()
        self.hits = 0
        self.misses = 0

    @staticmethod
    def key(kind: str, m: np.ndarray) -> Hashable:
        """Clave a partir de la forma y un hash de los bytes"""
        digest = hashlib.sha1(np.ascontiguousarray(m).tobytes()).hexdigest()
        return kind, m.shape, digest

    def get_or_compute(self, kind: str, m: np.ndarray, compute: Callable[[np.ndarray], object]):
        """
        Devuelve la descomposición guardada o la calcula

        Args:
            kind: Tipo de descomposición ("svd", "eigh")
            m: Matriz de entrada
            compute: Función que calcula la descomposición
        """
        cache_key = self.key(kind, m)
        with self.lock:
            if cache_key in self.cache:
                self.hits += 1
                return self.cache[cache_key]
        result = compute(m)
        with self.lock:
            self.misses += 1
            self.cache[cache_key] = result
        return result

    def clear(self) -> None:
        with self.lock:
            self.cache.clear()
            self.hits = 0
            self.misses = 0

def _as_dense(m) -> np.ndarray:
    """Convierte a float64 contiguo y valida que las entradas sean finitas"""
    arr = np.ascontiguousarray(m, dtype=np.float64)
    if arr.ndim != 2:
        raise ValueError(f"Se esperaba una matriz, forma recibida: {arr.shape}")
    if not np.isfinite(arr).all():
        raise NumericalFailure("La matriz contiene entradas no finitas", {"shape": arr.shape})
    return arr

def _readonly(*arrays: np.ndarray) -> None:
    for arr in arrays:
        arr.setflags(write=False)

def _compute_svd(m: np.ndarray) -> SvdDecomposition:
    try:
        U, sigma, Vt = scipy.linalg.svd(m, full_matrices=True, lapack_driver="gesvd")
    except np.linalg.LinAlgError as e:
        logger.error(f"Error en la SVD de una matriz {m.shape}: {str(e)}")
        raise NumericalFailure(f"La SVD no convergió: {str(e)}", {"shape": m.shape})

    V = Vt.T.copy()
    # Convención de signo: la primera componente no nula de v_j es positiva
    for j in range(len(sigma)):
        nonzero = np.flatnonzero(np.abs(V[:, j]) > SIGN_TOL)
        if nonzero.size and V[nonzero[0], j] < 0:
            V[:, j] *= -1
            U[:, j] *= -1

    _readonly(sigma, U, V)
    return SvdDecomposition(sigma=sigma, U=U, V=V)

def _compute_eigh(h: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    try:
        values, vectors = scipy.linalg.eigh(h)
    except np.linalg.LinAlgError as e:
        logger.error(f"Error en la descomposición espectral de {h.shape}: {str(e)}")
        raise NumericalFailure(f"eigh no convergió: {str(e)}", {"shape": h.shape})
    _readonly(values, vectors)
    return values, vectors

def svd(m) -> SvdDecomposition:
    """
    SVD completa M = U · diag(sigma) · Vᵀ

    Args:
        m: Matriz real (cuadrada en todos los usos)

    Returns:
        SvdDecomposition con sigma no creciente y arreglos de solo lectura

    Raises:
        NumericalFailure: si LAPACK no converge o hay entradas no finitas
    """
    return decomposition_cache.get_or_compute("svd", _as_dense(m), _compute_svd)

def symmetric_eigh(h) -> Tuple[np.ndarray, np.ndarray]:
    """
    Valores y vectores propios de una matriz simétrica (valores crecientes)

    Raises:
        NumericalFailure: si LAPACK no converge o hay entradas no finitas
    """
    return decomposition_cache.get_or_compute("eigh", _as_dense(h), _compute_eigh)

# Instancia global del caché
decomposition_cache = DecompositionCache(maxsize=settings.SVD_CACHE_SIZE)
