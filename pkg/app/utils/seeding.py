"""
Regla de división de semillas

Todas las fuentes aleatorias derivan de una semilla explícita:
- instancias de un lote usan `seed + índice`
- subrutinas de un mismo algoritmo usan flujos hijos de SeedSequence
"""
from typing import List, Optional
import numpy as np

def instance_seed(seed: int, index: int) -> int:
    """Semilla de la instancia `index` de un lote"""
    return seed + index

def child_seeds(seed: Optional[int], count: int) -> List[int]:
    """
    Deriva `count` semillas independientes a partir de una semilla

    Args:
        seed: Semilla padre (None equivale a 0)
        count: Número de semillas hijas

    Returns:
        Lista de enteros de 63 bits
    """
    sequence = np.random.SeedSequence(0 if seed is None else seed)
    return [int(child.generate_state(1, dtype=np.uint64)[0]) >> 1
            for child in sequence.spawn(count)]

def make_rng(seed: Optional[int]) -> np.random.Generator:
    """Generador PCG64 determinista"""
    return np.random.default_rng(0 if seed is None else seed)
