"""
Entrypoint principal de la aplicación
"""
import logging
import sys
import time
from pathlib import Path
from typing import List, Optional

from src.app import create_app
from src.cli.commands import execute
from src.cli.serialization import dump_report
from src.config.logging import configure_logging

logger = logging.getLogger("src.main")


def main(argv: Optional[List[str]] = None) -> int:
    """
    Ejecuta un comando y escribe su reporte

    Returns:
        int: Código de salida (0, 2, 3 o 4)
    """
    options = create_app().parse_args(argv)
    configure_logging("DEBUG" if options.verbose else None)

    start = time.perf_counter_ns()
    report = execute(options)
    report.timing = {"elapsed_us": str((time.perf_counter_ns() - start) // 1000)}

    text = dump_report(report)
    if options.output:
        Path(options.output).write_text(text + "\n", encoding="utf-8")
        logger.info("Reporte escrito en %s", options.output)
    else:
        sys.stdout.write(text + "\n")
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
