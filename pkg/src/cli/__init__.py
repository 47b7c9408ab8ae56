"""
Interfaz de línea de comandos: esquemas, serialización y comandos
"""
from src.cli.commands import COMMANDS, execute, generated_instance
from src.cli.schemas import InstanceFile, Report

__all__ = ["COMMANDS", "execute", "generated_instance", "InstanceFile", "Report"]
