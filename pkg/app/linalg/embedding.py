"""
Reducción al caso hermítico
"""
import numpy as np

def hermitian_embedding(m) -> np.ndarray:
    """
    Matriz de bloques H = [[0, Mᵀ], [M, 0]]

    Sus valores propios son ±σ_j(M). Con M = Σ σ_j u_j v_jᵀ, el vector
    propio de +σ_j es (v_j, u_j)/√2 y el de -σ_j es (v_j, -u_j)/√2, de modo
    que M⁺(s,t) = H⁺(s, t+n).

    Args:
        m: Matriz real n×n

    Returns:
        Matriz simétrica 2n×2n
    """
    m = np.asarray(m, dtype=np.float64)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"Se esperaba una matriz cuadrada, forma recibida: {m.shape}")
    zero = np.zeros_like(m)
    return np.block([[zero, m.T], [m, zero]])
