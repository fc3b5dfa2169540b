"""
Router oracle: óptimo exacto por enumeración
"""
import argparse

from ..models.graph import Graph
from ..schemas.report import OracleReport
from ..services.oracle import exact_hsse, exact_ssve
from ..utils.io import instance_hash
from .common import HandlerResult, add_instance_flags, load_instance


def register(subparsers) -> None:
    parser = subparsers.add_parser("oracle", help="Óptimo exacto (instancias pequeñas)")
    add_instance_flags(parser)
    parser.add_argument("--delta", type=float, required=True, help="Fracción objetivo δ")
    parser.add_argument("--convention", choices=["size", "min"], default="size", help="Denominador de φV (grafos)")
    parser.add_argument("--weight-tol", type=float, default=None, help="Tolerancia relativa de peso (hipergrafos)")
    parser.add_argument("--volume", choices=["weight", "degree"], default="weight", help="Volumen del denominador (hipergrafos)")
    parser.add_argument("--out", default="report.json", help="Reporte JSON")
    parser.set_defaults(handler=handle_oracle)


def handle_oracle(args: argparse.Namespace) -> HandlerResult:
    instance = load_instance(args)
    if isinstance(instance, Graph):
        value, S = exact_ssve(instance, args.delta, args.convention)
        convention = args.convention
    else:
        value, S = exact_hsse(instance, args.delta, args.weight_tol, args.volume)
        convention = args.volume

    report = OracleReport(
        instance_hash=instance_hash(instance),
        delta=args.delta,
        value=value,
        set=S.members(),
        convention=convention
    )
    return report, f"oracle: valor={value:.6f}, |S|={S.size}"
