"""
Configuración de la aplicación usando variables de entorno
"""
import os
from pathlib import Path
from dotenv import load_dotenv

# Cargar variables de entorno desde .env
env_path = Path(__file__).parent.parent.parent / ".env"
load_dotenv(dotenv_path=env_path)


class Settings:
    """Clase para manejar la configuración de la aplicación"""

    # General
    DEBUG: bool = os.getenv("DEBUG", "False").lower() == "true"
    LOG_LEVEL: str = os.getenv("LOG_LEVEL", "WARNING")

    # Instancias
    FIXTURES_DIR: Path = Path(
        os.getenv("FIXTURES_DIR", str(Path(__file__).parent.parent.parent / "fixtures"))
    )
    DEFAULT_SEED: int = int(os.getenv("DEFAULT_SEED", "7"))

    # Límites de los algoritmos exactos
    SET_CHECK_MAX_DIMENSION: int = int(os.getenv("SET_CHECK_MAX_DIMENSION", "6"))
    LP_MAX_PIVOTS: int = int(os.getenv("LP_MAX_PIVOTS", "100000"))

    # Reportes
    REPORT_INDENT: int = int(os.getenv("REPORT_INDENT", "2"))

    def fixture_path(self, name: str) -> Path:
        """Ruta del archivo de instancia de un ejemplo incluido"""
        return self.FIXTURES_DIR / f"{name}.json"


# Instancia global de configuración
settings = Settings()
