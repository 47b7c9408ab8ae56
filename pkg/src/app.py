"""
Configuración y creación de la interfaz de línea de comandos
"""
import argparse

from src import __version__
from src.cli.commands import COMMANDS

DESCRIPTIONS = {
    "check-ic": "Verifica convexidad integral de la tabla",
    "minimize": "Minimiza f, o f - Psi si hay función separable",
    "conjugate": "Conjugada entera de la tabla y chequeo de biconjugada",
    "subdiff": "Sistema del subdiferencial, intervalos IQ y subgradiente entero",
    "fenchel": "Certificado min = max, o reporte de brecha",
    "bisub": "Fórmulas min-max bisubmodulares y convolución con cajas",
    "verify": "Revalida un reporte contra su instancia",
}


def _common_flags() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--instance", metavar="FILE", help="Archivo de instancia JSON")
    common.add_argument("--output", metavar="FILE", help="Escribe el reporte en FILE")
    common.add_argument("--seed", type=int, help="Genera la instancia con esta semilla")
    common.add_argument("--report", metavar="FILE", help="Reporte a verificar (verify)")
    common.add_argument(
        "--mode", choices=("b", "c"), default="c", help="Condición a verificar (check-ic)"
    )
    common.add_argument("--verbose", "-v", action="store_true", help="Logging DEBUG a stderr")
    return common


def create_app() -> argparse.ArgumentParser:
    """
    Factory para crear y configurar el parser de la CLI

    Cada subcomando deja su handler en el namespace (args.handler).

    Returns:
        argparse.ArgumentParser: Parser configurado
    """
    parser = argparse.ArgumentParser(
        prog="discrete-duality",
        description="Dualidad de Fenchel discreta para funciones integralmente convexas",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = _common_flags()
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    for name, handler in COMMANDS.items():
        command = subparsers.add_parser(name, parents=[common], help=DESCRIPTIONS[name])
        if name == "bisub":
            command.add_argument(
                "subcommand", nargs="?", choices=("cgk", "fp", "conv"),
                help="Fórmula pedida; por defecto la de la instancia o cgk",
            )
        command.set_defaults(handler=handler)
    return parser
