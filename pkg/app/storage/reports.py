"""
Persistencia JSON de reportes y manifiestos
"""
from pathlib import Path
from typing import Type, TypeVar, Union
import json
import logging
from pydantic import BaseModel, ValidationError
from app.utils.exceptions import ConfigInvalid, IOFailure

logger = logging.getLogger(__name__)

ModelT = TypeVar("ModelT", bound=BaseModel)

def write_json(model: BaseModel, path: Union[str, Path]) -> Path:
    """
    Escribe un modelo como JSON con claves ordenadas

    Raises:
        IOFailure: si la ruta no se puede escribir
    """
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        data = model.model_dump(mode="json")
        path.write_text(json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False) + "\n", encoding="utf-8")
    except OSError as e:
        logger.error(f"Error escribiendo {path}: {str(e)}")
        raise IOFailure(f"No se pudo escribir {path}: {str(e)}", path=str(path))
    logger.info(f"JSON guardado en {path}")
    return path

def read_json(path: Union[str, Path], model: Type[ModelT]) -> ModelT:
    """
    Lee y valida un JSON con el modelo indicado

    Raises:
        IOFailure: si el archivo no se puede leer
        ConfigInvalid: si el contenido no cumple el esquema
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        logger.error(f"Error leyendo {path}: {str(e)}")
        raise IOFailure(f"No se pudo leer {path}: {str(e)}", path=str(path))
    try:
        return model.model_validate_json(text)
    except ValidationError as e:
        raise ConfigInvalid(f"{path} no cumple el esquema {model.__name__}: {str(e)}", field=str(path))
