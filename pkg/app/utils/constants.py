"""
Constantes y mensajes del sistema
"""
from enum import Enum
from fractions import Fraction

class Algorithm(str, Enum):
    """Pipelines disponibles en el harness"""
    THEOREM1 = "theorem1"
    THEOREM2 = "theorem2"
    RECOGNIZE = "recognize"
    CLASSIFY = "classify"
    SPECTRUM = "spectrum"
    WALK = "walk"
    SAVITCH = "savitch"

class NoiseMode(str, Enum):
    """Modos del modelo de ruido"""
    EXACT = "exact"
    UNIFORM = "uniform"
    ADVERSARIAL = "adversarial"

class CountKind(str, Enum):
    """Tipos de conteo de caminos"""
    FINITE = "finite"
    INFINITE = "infinite"
    OVERFLOW = "overflow"

class RejectReason(str, Enum):
    """Motivos del veredicto del reconocedor"""
    SMALL_SINGULAR_VALUE = "small_singular_value"
    CYCLE_DETECTED = "cycle_detected"
    ENTRY_EXCEEDS_K = "entry_exceeds_k"
    NO_ST_PATH = "no_st_path"
    ACCEPTED = "accepted"

class GeneratorName(str, Enum):
    """Generadores de grafos"""
    CHAIN = "chain"
    DIAMOND = "diamond"
    DAG = "dag"
    LANGE = "lange"
    CYCLE = "cycle"
    UNION = "union"
    FILE = "file"

# Precisión del conteo con la inversa completa
THEOREM1_ACCURACY = Fraction(1, 3)

# Precisión de la entrada y del truncamiento con la pseudoinversa efectiva
THEOREM2_EPSILON = Fraction(1, 5)

# Probabilidades de error del reconocedor (espectro y entradas)
RECOGNIZER_EPSILON = Fraction(1, 6)
RECOGNIZER_EPSILON_PRIME = Fraction(1, 6)
RECOGNIZER_ENTRY_ACCURACY = Fraction(1, 3)

# Códigos de salida del CLI
EXIT_OK = 0
EXIT_CONFIG_ERROR = 2
EXIT_INSTANCE_ERROR = 3

MESSAGES = {
    RejectReason.SMALL_SINGULAR_VALUE: "Rechazado: valor singular por debajo de δ, hay más de k caminos",
    RejectReason.CYCLE_DETECTED: "Rechazado: ciclo detectado en el nodo {detail}",
    RejectReason.ENTRY_EXCEEDS_K: "Rechazado: el par {detail} tiene más de k caminos",
    RejectReason.NO_ST_PATH: "Rechazado: no hay camino de s a t",
    RejectReason.ACCEPTED: "Aceptado: todos los conteos ≤ k y existe camino s→t",
}

# Por encima de este tamaño Savitch se ejecuta con memoización
SAVITCH_MEMO_THRESHOLD = 12

# Generadores que necesitan semilla
SEEDED_GENERATORS = {GeneratorName.DAG}
