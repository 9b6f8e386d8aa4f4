"""
Modelos de configuración y reporte de experimentos

Este módulo define la configuración de una corrida del harness, el
resultado por instancia y el reporte completo, además del manifiesto de
un corpus de grafos generados.
"""
from typing import Any, Dict, List, Optional
from pydantic import BaseModel, Field, field_validator, model_validator
from app.models.quantum import NoiseModel
from app.utils.constants import Algorithm

# Parámetros requeridos por cada algoritmo
REQUIRED_FIELDS = {
    Algorithm.THEOREM1: ("s", "t", "P"),
    Algorithm.THEOREM2: ("s", "t", "P"),
    Algorithm.RECOGNIZE: ("s", "t", "k"),
    Algorithm.CLASSIFY: ("s", "t", "k"),
    Algorithm.SPECTRUM: (),
    Algorithm.WALK: ("s", "t"),
    Algorithm.SAVITCH: ("s", "t"),
}

# Campos del reporte que dependen del reloj
TIMING_FIELDS = {"elapsed_ms", "elapsed_seconds", "started_at"}

class ExperimentConfig(BaseModel):
    """Configuración de una corrida del harness"""
    algorithm: Algorithm = Field(..., description="Pipeline a ejecutar")
    graph: str = Field(..., description="Fuente del grafo: file:PATH, chain, diamond, dag, lange, cycle o union:A+B")
    graph_params: Dict[str, Any] = Field(default_factory=dict, description="Parámetros del generador")

    s: Optional[int] = Field(None, ge=0, description="Nodo origen")
    t: Optional[int] = Field(None, ge=0, description="Nodo destino")
    k: Optional[int] = Field(None, ge=1, description="Cota de caminos del reconocedor")
    P: Optional[int] = Field(None, ge=1, description="Cota de la promesa de conteo")

    noise: NoiseModel = Field(default_factory=NoiseModel.exact, description="Modelo de ruido")
    seed: Optional[int] = Field(None, ge=0, description="Semilla base")
    trials: int = Field(1, ge=1, description="Caminantes (walk) o repeticiones por instancia")
    max_steps: Optional[int] = Field(None, ge=0, description="Pasos máximos de la caminata")
    instances: int = Field(1, ge=1, description="Instancias del generador (semilla + índice)")
    workers: int = Field(1, ge=1, description="Hilos de ejecución")
    strict_entry_sweep: bool = Field(False, description="Reconocedor revisa todas las entradas")
    out: Optional[str] = Field(None, description="Ruta del reporte JSON")
    corpus: Optional[str] = Field(None, description="Manifiesto de corpus para bench")

    @field_validator("graph")
    @classmethod
    def validate_graph(cls, v: str) -> str:
        """Valida que la fuente no esté vacía"""
        v = v.strip()
        if not v:
            raise ValueError("La fuente del grafo no puede estar vacía")
        if v.startswith("file:") and not v[len("file:"):]:
            raise ValueError("file: requiere una ruta")
        return v

    @model_validator(mode="after")
    def validate_required(self) -> "ExperimentConfig":
        """Valida los parámetros requeridos y la semilla"""
        missing = [name for name in REQUIRED_FIELDS[self.algorithm] if getattr(self, name) is None]
        if missing and self.corpus is None:
            raise ValueError(f"{self.algorithm.value} requiere: {', '.join(missing)}")
        if self.seed is None and self.needs_seed:
            raise ValueError("seed es obligatoria con ruido, generadores aleatorios o walk")
        return self

    @property
    def needs_seed(self) -> bool:
        """Ruido no exacto, generadores con azar o caminatas requieren semilla"""
        if not self.noise.is_exact or self.algorithm == Algorithm.WALK:
            return True
        if self.graph_params.get("relabel"):
            return True
        return "dag" in self.graph.split(":", 1)[-1] and not self.graph.startswith("file:")

class InstanceResult(BaseModel):
    """Resultado de una instancia de la corrida"""
    index: int
    seed: Optional[int] = None
    graph: Dict[str, Any] = Field(default_factory=dict, description="Nombre, n y m del grafo")
    status: str = "ok"
    result: Dict[str, Any] = Field(default_factory=dict)
    oracle: Dict[str, Any] = Field(default_factory=dict, description="Valor de referencia y acuerdo")
    error_type: Optional[str] = None
    error_message: Optional[str] = None
    elapsed_ms: float = 0.0

    @property
    def failed(self) -> bool:
        return self.status == "error"

class RunReport(BaseModel):
    """Reporte completo; los campos de tiempo no forman parte del contrato de determinismo"""
    command: str
    config: Dict[str, Any]
    instances: List[InstanceResult] = Field(default_factory=list)
    aggregate: Dict[str, Any] = Field(default_factory=dict)
    elapsed_seconds: float = 0.0

    @property
    def has_errors(self) -> bool:
        return any(item.failed for item in self.instances)

    def deterministic_dump(self) -> Dict[str, Any]:
        """Representación sin campos de tiempo, comparable entre corridas"""
        data = self.model_dump(mode="json", exclude={"elapsed_seconds"})
        for item in data["instances"]:
            for name in TIMING_FIELDS:
                item.pop(name, None)
        return data

class CorpusEntry(BaseModel):
    """Grafo de un corpus con sus propiedades certificadas por el oráculo"""
    file: str
    generator: str
    params: Dict[str, Any] = Field(default_factory=dict)
    seed: Optional[int] = None
    n: int = Field(..., ge=1)
    m: int = Field(..., ge=0)
    acyclic: bool
    max_count: str = Field(..., description="Máximo N(i,j): entero, 'inf' o '>cap'")
    certified_P: Optional[int] = Field(None, description="max N(i,j) si es finito")
    strongly_unambiguous: bool
    promise: Dict[str, bool] = Field(default_factory=dict)

class CorpusManifest(BaseModel):
    """Manifiesto JSON de un corpus"""
    generator: str
    grid: Dict[str, List[Any]]
    seed: Optional[int] = None
    cap: int = Field(..., ge=1, description="Tope usado por el oráculo")
    entries: List[CorpusEntry] = Field(default_factory=list)
