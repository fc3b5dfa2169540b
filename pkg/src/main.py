"""
SSVE-PY - Small-Set Vertex Expansion Toolkit
Aplicación de línea de comandos
"""
import argparse
import logging
import sys
from typing import List, NoReturn, Optional

from .config import settings
from .routers import ROUTERS
from .schemas.report import ErrorReport
from .utils.errors import SSVEError, UsageError
from .utils.io import write_report
from .utils.logging_setup import configure_logging

logger = logging.getLogger(__name__)

DEFAULT_REPORT = "report.json"


class ArgumentParser(argparse.ArgumentParser):
    """Los errores de uso se convierten en UsageError (exit 64)"""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(
        prog="ssve",
        description=f"{settings.APP_NAME} v{settings.APP_VERSION}"
    )
    parser.add_argument("--log-level", default=None, help="Nivel de logging (por defecto LOG_LEVEL)")
    parser.add_argument("--version", action="version", version=settings.APP_VERSION)
    subparsers = parser.add_subparsers(dest="command", required=True)
    for register in ROUTERS:
        register(subparsers)
    return parser


def _write_error(args: argparse.Namespace, exc: SSVEError) -> None:
    report = ErrorReport(command=args.command, **exc.to_dict())
    try:
        write_report(report, getattr(args, "out", DEFAULT_REPORT))
    except OSError:
        logger.exception("No se pudo escribir el reporte de error")


def dispatch(argv: Optional[List[str]] = None) -> int:
    """
    Ejecutar un subcomando y devolver el código de salida

    0 éxito, 1 error interno o verificación fallida, 2 entrada inválida
    o degenerada, 64 error de uso.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(exc.detail, file=sys.stderr)
        return exc.exit_code

    configure_logging(args.log_level)
    try:
        report, summary = args.handler(args)
    except SSVEError as exc:
        logger.error(f"{args.command}: {exc.detail}")
        _write_error(args, exc)
        print(f"{args.command}: error: {exc.detail}")
        return exc.exit_code
    except Exception:
        logger.exception(f"{args.command}: error interno")
        return 1

    write_report(report, args.out)
    print(summary)
    if getattr(report, "passed", True) is False:
        return 1
    return 0


def main() -> int:
    return dispatch(sys.argv[1:])


if __name__ == "__main__":
    raise SystemExit(main())
