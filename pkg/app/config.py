"""
Configuración de la aplicación
"""
import os
import logging
from pathlib import Path
from pydantic import BaseModel, ConfigDict, Field, field_validator
from dotenv import load_dotenv

# Obtener la ruta base del proyecto
BASE_DIR = Path(__file__).resolve().parent.parent

# Cargar variables de entorno
load_dotenv(BASE_DIR / ".env")

# Configurar logging
logging.basicConfig(
    level=os.getenv("LOG_LEVEL", "INFO").upper(),
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)

logger = logging.getLogger(__name__)

class Settings(BaseModel):
    """Configuración de la aplicación"""
    model_config = ConfigDict(frozen=True)

    DEBUG: bool = Field(
        default=os.getenv("DEBUG", "false").lower() == "true",
        description="Modo debug"
    )
    LOG_LEVEL: str = Field(
        default=os.getenv("LOG_LEVEL", "INFO").upper(),
        description="Nivel de logging"
    )

    # Persistencia
    OUTPUT_DIR: str = Field(
        default=os.getenv("OUTPUT_DIR", "results"),
        description="Directorio por defecto para reportes y corpus"
    )

    # Álgebra lineal
    SVD_CACHE_SIZE: int = Field(
        default=int(os.getenv("SVD_CACHE_SIZE", "64")),
        description="Número máximo de descomposiciones en caché"
    )
    THRESHOLD_TIE_TOL: float = Field(
        default=float(os.getenv("THRESHOLD_TIE_TOL", "1e-12")),
        description="Distancia mínima entre el umbral y un valor singular"
    )
    THRESHOLD_MAX_RETRIES: int = Field(
        default=int(os.getenv("THRESHOLD_MAX_RETRIES", "64")),
        description="Reintentos al sortear el umbral efectivo"
    )

    # Algoritmos
    MARGIN_GUARD: float = Field(
        default=float(os.getenv("MARGIN_GUARD", "0.05")),
        description="Margen mínimo al redondear un conteo; actúa sobre el presupuesto si supera 0.1"
    )
    WALK_BATCH_SIZE: int = Field(
        default=int(os.getenv("WALK_BATCH_SIZE", "262144")),
        description="Caminantes simulados por lote"
    )
    DEFAULT_WORKERS: int = Field(
        default=int(os.getenv("DEFAULT_WORKERS", "1")),
        description="Hilos para ejecutar instancias en paralelo"
    )

    # Validaciones
    @field_validator("LOG_LEVEL")
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        """Valida que el nivel de logging exista"""
        if v not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
            raise ValueError(f"LOG_LEVEL inválido: {v}")
        return v

    @field_validator("SVD_CACHE_SIZE", "THRESHOLD_MAX_RETRIES", "WALK_BATCH_SIZE", "DEFAULT_WORKERS")
    @classmethod
    def validate_positive(cls, v: int) -> int:
        """Valida que los tamaños sean positivos"""
        if v < 1:
            raise ValueError("El valor debe ser un entero positivo")
        return v

    @field_validator("THRESHOLD_TIE_TOL", "MARGIN_GUARD")
    @classmethod
    def validate_tolerance(cls, v: float) -> float:
        """Valida que las tolerancias estén en (0, 0.5)"""
        if not 0 < v < 0.5:
            raise ValueError("La tolerancia debe estar en (0, 0.5)")
        return v

# Instancia global de configuración
try:
    settings = Settings()
    logger.info(f"Configuración cargada, directorio de salida: {settings.OUTPUT_DIR}")
except Exception as e:
    logger.error(f"Error cargando configuración: {str(e)}")
    raise
