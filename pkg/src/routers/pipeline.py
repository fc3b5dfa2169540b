"""
Router pipeline: SSVE sobre un grafo o HSSE sobre un hipergrafo
"""
import argparse

from ..models.graph import Graph
from ..services.pipeline import full_pipeline
from .common import HandlerResult, add_instance_flags, add_run_flags, load_instance, run_config


def register(subparsers) -> None:
    parser = subparsers.add_parser("pipeline", help="Pipeline completo de redondeo")
    add_instance_flags(parser)
    add_run_flags(parser)
    parser.add_argument("--out", default="report.json", help="Reporte JSON")
    parser.set_defaults(handler=handle_pipeline)


def handle_pipeline(args: argparse.Namespace) -> HandlerResult:
    instance = load_instance(args)
    config = run_config(args, "ssve" if isinstance(instance, Graph) else "hsse")
    report = full_pipeline(instance, config)

    chosen = report.chosen
    value = chosen.phi_v if chosen.phi_v is not None else chosen.hypergraph_expansion
    valid = sum(1 for t in report.trials if t.valid)
    summary = (
        f"pipeline: |S′|={chosen.size} (k={chosen.target_size}), φ={value:.6f}, "
        f"SDP={report.sdp_value:.6f}, válidos {valid}/{len(report.trials)}"
    )
    return report, summary
