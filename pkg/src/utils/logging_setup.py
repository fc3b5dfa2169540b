"""
Configuración de logging de la CLI
"""
import logging
import sys
from typing import Optional

from ..config import settings


def configure_logging(level: Optional[str] = None) -> None:
    """
    Instala un único handler sobre stderr

    stdout queda reservado para el resumen de una línea de cada comando.
    """
    root = logging.getLogger()
    for handler in list(root.handlers):
        root.removeHandler(handler)

    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(settings.LOG_FORMAT))
    root.addHandler(handler)
    root.setLevel((level or settings.LOG_LEVEL).upper())
