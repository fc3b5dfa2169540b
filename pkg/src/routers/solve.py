"""
Router solve: solo la relajación SDP
"""
import argparse
import logging

from ..config import settings
from ..models.graph import Graph
from ..schemas.report import SolveReport
from ..services.generators import assignment_objective
from ..services.reductions import ssve_to_hsse
from ..services.relaxation import build_relaxation, solve_sdp
from ..services.vectors import extract_vectors
from ..utils.errors import InvalidInputError
from ..utils.io import instance_hash, read_vectors, write_vectors
from .common import HandlerResult, add_instance_flags, load_instance

logger = logging.getLogger(__name__)


def register(subparsers) -> None:
    parser = subparsers.add_parser("solve", help="Resolver la relajación SDP")
    add_instance_flags(parser)
    parser.add_argument("--delta", type=float, required=True, help="Peso relativo objetivo δ")
    parser.add_argument("--rounds", type=int, default=settings.DEFAULT_ROUNDS, help="Grado R (2 o 4)")
    parser.add_argument("--tol", type=float, default=settings.SDP_TOL, help="Tolerancia del SDP")
    parser.add_argument(
        "--basic", action="store_true", help="Relajación básica: sin cardinalidad condicionada"
    )
    parser.add_argument("--vectors-out", default=None, help="Volcar la solución vectorial (JSON)")
    parser.add_argument(
        "--vectors", default=None, help="Evaluar además el objetivo de una asignación vectorial (JSON)"
    )
    parser.add_argument("--out", default="report.json", help="Reporte JSON")
    parser.set_defaults(handler=handle_solve)


def handle_solve(args: argparse.Namespace) -> HandlerResult:
    """Un grafo se reduce antes de resolver; un hipergrafo se resuelve directamente"""
    if args.rounds not in (2, 4):
        raise InvalidInputError(f"Flag inválido --rounds: {args.rounds} (se admite 2 o 4)")
    if not (0.0 < args.delta <= 0.5):
        raise InvalidInputError(f"Flag inválido --delta: {args.delta} fuera de (0, 1/2]")

    instance = load_instance(args)
    H = ssve_to_hsse(instance)[1] if isinstance(instance, Graph) else instance

    assigned = None
    if args.vectors:
        vs = read_vectors(args.vectors)
        if vs.n != H.n:
            raise InvalidInputError(
                f"Archivo de vectores inválido: {vs.n} vectores para {H.n} vértices"
            )
        assigned = assignment_objective(H, vs, args.delta)

    problem = build_relaxation(H, args.delta, args.rounds, lifted_cardinality=not args.basic)
    pd, objective = solve_sdp(problem, args.tol)
    if args.vectors_out:
        write_vectors(extract_vectors(pd), args.vectors_out, delta=args.delta, objective=objective)

    report = SolveReport(
        instance_hash=instance_hash(instance),
        delta=args.delta,
        rounds=args.rounds,
        tol=args.tol,
        objective=objective,
        problem=problem.summary(),
        diagnostics=dict(problem.diagnostics),
        moments=pd.to_payload(),
        assignment_objective=assigned
    )
    return report, f"solve: objetivo={objective:.6f} (R={args.rounds}, lado {problem.moment_side})"
