"""
Modelos de resultados de los algoritmos de conteo y reconocimiento
"""
from dataclasses import dataclass
from typing import Any, Dict, Optional
from pydantic import BaseModel, Field, model_validator
from app.utils.constants import RejectReason

class CountResult(BaseModel):
    """Conteo redondeado de caminos s→t con su valor previo al redondeo"""
    count: int = Field(..., ge=0)
    raw_value: float
    margin: float = Field(..., description="Distancia al semientero más cercano")
    truncated_value: float = Field(..., description="Entrada sin ruido de la pseudoinversa efectiva")
    layered: bool = False
    parameters: Dict[str, Any] = Field(default_factory=dict)

    @property
    def confident(self) -> bool:
        return self.margin > 0

class RecognizerVerdict(BaseModel):
    """Veredicto del reconocedor de STCON_sf"""
    accepted: bool
    reason: RejectReason
    detail: Optional[Any] = None  # nodo del ciclo o par que excede k
    sigma_min_estimate: float
    entries_read: int = 0
    parameters: Dict[str, Any] = Field(default_factory=dict)

    @model_validator(mode="after")
    def validate_reason(self) -> "RecognizerVerdict":
        """accepted es verdadero exactamente cuando el motivo es ACCEPTED"""
        if self.accepted != (self.reason == RejectReason.ACCEPTED):
            raise ValueError("accepted y reason son inconsistentes")
        return self

@dataclass(frozen=True)
class ReachabilityResult:
    """Alcanzabilidad por el método de Savitch con su profundidad de recursión"""
    reachable: bool
    depth: int
    calls: int
    levels: int

    def __bool__(self) -> bool:
        return self.reachable

@dataclass(frozen=True)
class WalkEstimate:
    """Probabilidad empírica de que una caminata aleatoria alcance t"""
    probability: float
    hits: int
    trials: int

    @property
    def standard_error(self) -> float:
        p = self.probability
        return (p * (1 - p) / self.trials) ** 0.5

    def __float__(self) -> float:
        return self.probability

@dataclass(frozen=True)
class BoundCheck:
    """Resultado de verificar numéricamente una cota o identidad"""
    name: str
    holds: bool
    value: float
    bound: float

    def to_dict(self) -> dict:
        return {"name": self.name, "holds": self.holds, "value": self.value, "bound": self.bound}
