"""
Router degreduce: producto de reemplazo con un expansor de grado g
"""
import argparse

import networkx as nx

from ..schemas.report import InstanceReport
from ..services.generators import expander, replacement_product
from ..utils.errors import InvalidInputError
from ..utils.io import instance_hash, read_graph, write_graph
from .common import HandlerResult


def register(subparsers) -> None:
    parser = subparsers.add_parser("degreduce", help="Reducir el grado por producto de reemplazo")
    parser.add_argument("--graph", required=True, help="Grafo regular")
    parser.add_argument("--g", type=int, required=True, help="Grado del expansor (1 ≤ g < d)")
    parser.add_argument("--out-graph", default="product.txt", help="Grafo producto")
    parser.add_argument("--out", default="report.json", help="Reporte JSON")
    parser.set_defaults(handler=handle_degreduce)


def handle_degreduce(args: argparse.Namespace) -> HandlerResult:
    G = read_graph(args.graph)
    if not G.is_regular():
        raise InvalidInputError("degreduce requiere un grafo regular")
    product = replacement_product(G, expander(G.max_degree, args.g))

    report = InstanceReport(
        kind="degreduce",
        instance_hash=instance_hash(G),
        outputs=[str(write_graph(product, args.out_graph))],
        summary={
            "n_source": G.n,
            "degree_source": G.max_degree,
            "expander_degree": args.g,
            "n_product": product.n,
            "m_product": product.m,
            "max_degree_product": product.max_degree,
            "connected": nx.is_connected(product.to_networkx())
        }
    )
    return report, f"degreduce: {G.n} vértices de grado {G.max_degree} → {product.n} de grado {product.max_degree}"
