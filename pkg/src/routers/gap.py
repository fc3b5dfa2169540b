"""
Router gap: instancias de brecha de integralidad (single | random)
"""
import argparse

from ..schemas.report import InstanceReport
from ..services.generators import assignment_objective, gap_single_edge, random_gap_hypergraph
from ..utils.io import instance_hash, write_hypergraph, write_vectors
from .common import HandlerResult


def register(subparsers) -> None:
    parser = subparsers.add_parser("gap", help="Generar instancias de brecha")
    variants = parser.add_subparsers(dest="variant", required=True)

    single = variants.add_parser("single", help="Una hiperarista sobre d vértices")
    single.add_argument("--d", type=int, required=True, help="Aridad d (δ = 1/d)")
    single.add_argument("--hypergraph-out", default="gap.json", help="Hipergrafo (JSON)")
    single.add_argument("--vectors-out", default="gap_vectors.json", help="Asignación vectorial (JSON)")
    single.add_argument("--out", default="report.json", help="Reporte JSON")
    single.set_defaults(handler=handle_single)

    random = variants.add_parser("random", help="Hipergrafo d-uniforme aleatorio")
    random.add_argument("--d", type=int, required=True, help="Aridad d (δ = 1/d)")
    random.add_argument("--n", type=int, required=True, help="Número de vértices")
    random.add_argument("--C", type=float, default=1.0, help="Constante del número de hiperaristas")
    random.add_argument("--seed", type=int, default=0, help="Semilla raíz")
    random.add_argument("--hypergraph-out", default="gap.json", help="Hipergrafo (JSON)")
    random.add_argument("--out", default="report.json", help="Reporte JSON")
    random.set_defaults(handler=handle_random)


def handle_single(args: argparse.Namespace) -> HandlerResult:
    H, vs = gap_single_edge(args.d)
    delta = 1.0 / args.d
    objective = assignment_objective(H, vs, delta)
    outputs = [
        str(write_hypergraph(H, args.hypergraph_out)),
        str(write_vectors(vs, args.vectors_out, delta=delta, objective=objective))
    ]
    report = InstanceReport(
        kind="gap",
        instance_hash=instance_hash(H),
        outputs=outputs,
        summary={"variant": "single", "d": args.d, "delta": delta, "assignment_objective": objective}
    )
    return report, f"gap single: d={args.d}, objetivo de la asignación={objective:.6f}"


def handle_random(args: argparse.Namespace) -> HandlerResult:
    H = random_gap_hypergraph(args.d, args.n, args.C, args.seed)
    report = InstanceReport(
        kind="gap",
        instance_hash=instance_hash(H),
        outputs=[str(write_hypergraph(H, args.hypergraph_out))],
        summary={"variant": "random", "d": args.d, "n": args.n, "C": args.C, "seed": args.seed, "m": H.m}
    )
    return report, f"gap random: d={args.d}, n={args.n}, |E|={H.m}"
