"""
Modelo de ruido que reemplaza la estimación de fase

Las salidas (valores singulares o entradas) se perturban de forma aditiva
con magnitud ≤ accuracy. El fallo con probabilidad ε se simula con una
bandera de Bernoulli y corrompe la salida de forma visible.
"""
from typing import Optional
import logging
import numpy as np
from app.models.quantum import NoiseModel
from app.utils.constants import NoiseMode
from app.utils.seeding import make_rng

logger = logging.getLogger(__name__)

class NoiseSource:
    """
    Fuente de ruido con su propio generador

    Args:
        noise: Modelo de ruido
        seed: Reemplaza a noise.seed si se indica
    """

    def __init__(self, noise: NoiseModel, seed: Optional[int] = None):
        self.noise = noise
        self.rng = make_rng(noise.seed if seed is None else seed)

    @property
    def accuracy(self) -> float:
        return 0.0 if self.noise.is_exact else self.noise.accuracy

    def draw_failures(self, size: int, failure_prob: Optional[float] = None) -> np.ndarray:
        """Banderas de fallo independientes"""
        if self.noise.is_exact:
            return np.zeros(size, dtype=bool)
        p = self.noise.failure_prob if failure_prob is None else failure_prob
        if p <= 0:
            return np.zeros(size, dtype=bool)
        return self.rng.random(size) < p

    def perturb_spectrum(self, values: np.ndarray) -> np.ndarray:
        """
        Perturba valores singulares; el resultado es no negativo y no creciente

        El modo adversarial empuja todos los valores hacia abajo, que es la
        dirección que provoca rechazos espurios por valor singular pequeño.
        """
        values = np.asarray(values, dtype=np.float64)
        mode = self.noise.mode
        if mode == NoiseMode.EXACT:
            perturbed = values.copy()
        elif mode == NoiseMode.UNIFORM:
            perturbed = values + self.rng.uniform(-self.accuracy, self.accuracy, size=values.shape)
        else:
            perturbed = values - self.accuracy
        return np.sort(np.maximum(perturbed, 0.0))[::-1]

    def corrupt_spectrum(self, values: np.ndarray) -> np.ndarray:
        """Salida de una estimación fallida: factores aleatorios en [0, 2)"""
        factors = self.rng.uniform(0.0, 2.0, size=len(values))
        logger.debug("Estimación de espectro corrompida por fallo simulado")
        return np.sort(np.asarray(values) * factors)[::-1]

    def perturb_entries(self, values: np.ndarray) -> np.ndarray:
        """
        Perturba entradas de matriz con |η| ≤ accuracy

        El modo adversarial aleja cada entrada de su entero más cercano, lo
        que minimiza el margen del redondeo.
        """
        values = np.asarray(values, dtype=np.float64)
        mode = self.noise.mode
        if mode == NoiseMode.EXACT:
            return values.copy()
        if mode == NoiseMode.UNIFORM:
            return values + self.rng.uniform(-self.accuracy, self.accuracy, size=values.shape)
        direction = np.sign(values - np.rint(values))
        direction[direction == 0] = 1.0
        return values + self.accuracy * direction

    def corrupt_entries(self, values: np.ndarray, failed: np.ndarray) -> np.ndarray:
        """Desplaza las entradas fallidas en ±[1, 2)"""
        values = np.array(values, dtype=np.float64)
        count = int(np.count_nonzero(failed))
        if count:
            shift = self.rng.uniform(1.0, 2.0, size=count)
            sign = np.where(self.rng.random(count) < 0.5, -1.0, 1.0)
            values[failed] += sign * shift
            logger.debug(f"{count} entradas corrompidas por fallo simulado")
        return values
