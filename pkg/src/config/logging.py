"""
Configuración de logging
"""
import logging
import sys
from typing import Optional

from src.config.settings import settings

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def configure_logging(level: Optional[str] = None) -> None:
    """
    Instala un único handler hacia stderr

    stdout queda reservado para el reporte.

    Args:
        level: Nivel explícito; por defecto DEBUG si settings.DEBUG, si no settings.LOG_LEVEL
    """
    root = logging.getLogger("src")
    root.handlers.clear()
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    root.addHandler(handler)
    root.setLevel((level or ("DEBUG" if settings.DEBUG else settings.LOG_LEVEL)).upper())
    root.propagate = False
