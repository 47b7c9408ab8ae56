"""
Configuración por variables de entorno y logging hacia stderr
"""
from src.config.logging import configure_logging
from src.config.settings import settings

__all__ = ["configure_logging", "settings"]
