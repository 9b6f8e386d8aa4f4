"""
Modelos para la simulación de las subrutinas cuánticas
"""
from dataclasses import dataclass
from typing import Optional, Tuple
from pydantic import BaseModel, ConfigDict, Field, field_validator
from app.utils.constants import NoiseMode

class NoiseModel(BaseModel):
    """
    Modelo de ruido aditivo acotado

    En modo exacto se ignoran accuracy y failure_prob.
    """
    model_config = ConfigDict(frozen=True)

    mode: NoiseMode = NoiseMode.EXACT
    accuracy: float = Field(default=1 / 3, gt=0, description="Cota de cada perturbación")
    failure_prob: float = Field(default=0.0, ge=0, lt=1, description="Probabilidad de fallo")
    seed: Optional[int] = Field(default=None, description="Semilla del ruido")

    @field_validator("mode", mode="before")
    @classmethod
    def normalize_mode(cls, v):
        """Acepta el nombre del modo sin importar mayúsculas"""
        if isinstance(v, str):
            return v.strip().lower()
        return v

    @classmethod
    def exact(cls) -> "NoiseModel":
        return cls(mode=NoiseMode.EXACT)

    @property
    def is_exact(self) -> bool:
        return self.mode == NoiseMode.EXACT

    def derive(self, accuracy: float = None, failure_prob: float = None, seed: int = None) -> "NoiseModel":
        """Copia con parámetros reemplazados"""
        update = {}
        if accuracy is not None:
            update["accuracy"] = float(accuracy)
        if failure_prob is not None:
            update["failure_prob"] = float(failure_prob)
        if seed is not None:
            update["seed"] = seed
        return self.model_copy(update=update)

@dataclass(frozen=True)
class SpectrumEstimate:
    """Valores singulares estimados con bandera de fallo"""
    values: Tuple[float, ...]
    failed: bool
    mode: NoiseMode
    accuracy: float

    @property
    def minimum(self) -> float:
        return min(self.values) if self.values else 0.0

    @property
    def maximum(self) -> float:
        return max(self.values) if self.values else 0.0

@dataclass(frozen=True)
class PseudoinverseEstimate:
    """Estimación de una entrada de M⁺_ζ̃ con el umbral realizado"""
    value: float
    zeta_realized: float
    zeta_requested: float
    delta: float
    kept_rank: int
    noiseless_value: float
    failed: bool = False
    mode: NoiseMode = NoiseMode.EXACT
    accuracy: float = 0.0
