"""
Router de reducción (reduce): grafo → grafo simétrico → hipergrafo
"""
import argparse
import logging

from ..schemas.report import InstanceReport
from ..services.reductions import ssve_to_hsse
from ..utils.io import instance_hash, read_graph, write_graph, write_hypergraph
from .common import HandlerResult

logger = logging.getLogger(__name__)


def register(subparsers) -> None:
    parser = subparsers.add_parser("reduce", help="Reducir SSVE a HSSE")
    parser.add_argument("--graph", required=True, help="Grafo fuente")
    parser.add_argument("--hypergraph-out", default="reduced.json", help="Hipergrafo reducido (JSON)")
    parser.add_argument("--symmetric-out", default=None, help="Grafo intermedio G′ (opcional)")
    parser.add_argument("--out", default="report.json", help="Reporte JSON")
    parser.set_defaults(handler=handle_reduce)


def handle_reduce(args: argparse.Namespace) -> HandlerResult:
    """Escribir H (y opcionalmente G′) y reportar la contabilidad de pesos"""
    G = read_graph(args.graph)
    G_sym, H = ssve_to_hsse(G)
    outputs = [str(write_hypergraph(H, args.hypergraph_out))]
    if args.symmetric_out:
        outputs.append(str(write_graph(G_sym, args.symmetric_out)))

    report = InstanceReport(
        kind="reduce",
        instance_hash=instance_hash(G),
        outputs=outputs,
        summary={
            "n_source": G.n,
            "n_hypergraph": H.n,
            "m_hypergraph": H.m,
            "arity": H.arity,
            "total_edge_weight": H.total_edge_weight,
            "total_vertex_weight": H.total_vertex_weight,
            "max_vertex_degree": H.max_vertex_degree
        }
    )
    return report, f"reduce: |V_G|={G.n} → |V(H)|={H.n}, |E(H)|={H.m}, aridad {H.arity}"
