"""
Flags y utilidades compartidas por los routers de la CLI
"""
import argparse
from typing import Callable, Tuple, Union

from pydantic import BaseModel, ValidationError

from ..config import settings
from ..models.graph import Graph
from ..models.hypergraph import WeightedHypergraph
from ..schemas.pipeline import PipelineConfig
from ..utils.errors import InvalidInputError
from ..utils.io import read_graph, read_hypergraph

# Cada handler devuelve (reporte, resumen de una línea)
HandlerResult = Tuple[BaseModel, str]
Handler = Callable[[argparse.Namespace], HandlerResult]


def add_instance_flags(parser: argparse.ArgumentParser, allow_hypergraph: bool = True) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--graph", help="Grafo en formato de lista de aristas")
    if allow_hypergraph:
        group.add_argument("--hypergraph", help="Hipergrafo en formato JSON")


def add_run_flags(parser: argparse.ArgumentParser) -> None:
    """--delta, --rounds, --tcap, --theta, --trials, --tol, --seed, --convention"""
    parser.add_argument("--delta", type=float, required=True, help="Peso relativo objetivo δ")
    parser.add_argument("--rounds", type=int, default=settings.DEFAULT_ROUNDS, help="Grado R de la relajación (2 o 4)")
    parser.add_argument("--tcap", type=int, default=settings.DEFAULT_TCAP, help="Tamaño máximo del conjunto condicionado")
    parser.add_argument("--theta", type=float, default=None, help="Desplazamiento θ (por defecto δ^12)")
    parser.add_argument("--trials", type=int, default=settings.DEFAULT_TRIALS, help="Ensayos de redondeo")
    parser.add_argument("--tol", type=float, default=settings.SDP_TOL, help="Tolerancia del SDP")
    parser.add_argument("--seed", type=int, default=0, help="Semilla raíz")
    parser.add_argument("--convention", choices=["size", "min"], default="size", help="Denominador de φV")


def load_instance(args: argparse.Namespace) -> Union[Graph, WeightedHypergraph]:
    if getattr(args, "graph", None):
        return read_graph(args.graph)
    return read_hypergraph(args.hypergraph)


def run_config(args: argparse.Namespace, mode: str) -> PipelineConfig:
    """
    Construir la configuración efectiva desde los flags

    Raises:
        InvalidInputError: valores fuera de rango
    """
    try:
        return PipelineConfig(
            delta=args.delta,
            rounds=args.rounds,
            tcap=args.tcap,
            theta=args.theta,
            trials=args.trials,
            tol=args.tol,
            seed=args.seed,
            convention=args.convention,
            mode=mode
        )
    except ValidationError as exc:
        error = exc.errors()[0]
        field = ".".join(str(part) for part in error["loc"])
        raise InvalidInputError(f"Flag inválido --{field}: {error['msg']}") from exc
