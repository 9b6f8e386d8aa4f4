"""
Álgebra lineal densa: laplacianos, SVD, inmersión hermítica y cotas de norma
"""

from .laplacian import adjacency_matrix, counting_laplacian, random_walk_laplacian, nilpotency_index
from .decomposition import svd, symmetric_eigh, decomposition_cache
from .embedding import hermitian_embedding
from .norms import max_norm, max_norm_bounds

__all__ = [
    'adjacency_matrix',
    'counting_laplacian',
    'random_walk_laplacian',
    'nilpotency_index',
    'svd',
    'symmetric_eigh',
    'decomposition_cache',
    'hermitian_embedding',
    'max_norm',
    'max_norm_bounds'
]
