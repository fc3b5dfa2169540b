"""
Routers de verificación: verify-lemma, verify-cdf, verify-conc
"""
import argparse
import logging
from typing import List, Optional, Sequence

from ..config import settings
from ..schemas.report import VerifyReport
from ..services.generators import planted_instance
from ..services.verification import (
    CDF_COLUMNS,
    CONCENTRATION_COLUMNS,
    D_GRID,
    DELTA_GRID,
    LEMMA_COLUMNS,
    NU_FRACTIONS,
    Row,
    cdf_fact_check,
    concentration_check,
    correlation_monotonicity,
    rounding_lemma_sweep,
)
from ..utils.errors import InvalidInputError
from ..utils.io import read_graph, write_csv
from .common import HandlerResult, add_run_flags, run_config

logger = logging.getLogger(__name__)

PLANTED_N = 60
PLANTED_K = 15
PLANTED_D_MAX = 8


def register(subparsers) -> None:
    lemma = subparsers.add_parser("verify-lemma", help="Barrido Monte Carlo del lema de redondeo")
    lemma.add_argument("--d", type=int, nargs="+", default=list(D_GRID), help="Aridades del barrido")
    lemma.add_argument("--delta", type=float, nargs="+", default=list(DELTA_GRID), help="Valores de δ")
    lemma.add_argument("--nu-fraction", type=float, nargs="+", default=list(NU_FRACTIONS), help="ν como fracción de μ_1/A")
    lemma.add_argument("--samples", type=int, default=settings.MC_TRIALS, help="Muestras por celda")
    lemma.add_argument("--seed", type=int, default=0, help="Semilla raíz")
    lemma.add_argument("--csv", default="lemma.csv", help="Tabla de resultados")
    lemma.add_argument("--out", default="report.json", help="Reporte JSON")
    lemma.set_defaults(handler=handle_lemma)

    cdf = subparsers.add_parser("verify-cdf", help="Desigualdades de la CDF gaussiana")
    cdf.add_argument("--samples", type=int, default=100_000, help="Muestras Monte Carlo")
    cdf.add_argument("--seed", type=int, default=0, help="Semilla raíz")
    cdf.add_argument("--csv", default="cdf.csv", help="Tabla de resultados")
    cdf.add_argument("--out", default="report.json", help="Reporte JSON")
    cdf.set_defaults(handler=handle_cdf)

    conc = subparsers.add_parser("verify-conc", help="Concentración del peso del conjunto redondeado")
    source = conc.add_mutually_exclusive_group(required=True)
    source.add_argument("--graph", action="append", help="Grafo (repetible)")
    source.add_argument("--planted", type=int, help="Número de instancias plantadas (n=60, k=15, d≤8)")
    conc.add_argument("--planted-eps", type=float, default=0.2, help="Expansión de vértices del conjunto plantado")
    add_run_flags(conc)
    conc.add_argument("--required", type=float, default=0.8, help="Fracción mínima dentro de la ventana")
    conc.add_argument("--csv", default="concentration.csv", help="Tabla de resultados")
    conc.add_argument("--out", default="report.json", help="Reporte JSON")
    conc.set_defaults(handler=handle_concentration, trials=200, tcap=4)


def _report(kind: str, seed: int, rows: Sequence[Row], csv: Optional[str], **summary) -> VerifyReport:
    failures = sum(1 for row in rows if not row["pass"])
    return VerifyReport(
        kind=kind,
        seed=seed,
        rows=len(rows),
        failures=failures,
        passed=failures == 0,
        csv=csv,
        summary=summary
    )


def handle_lemma(args: argparse.Namespace) -> HandlerResult:
    rows = rounding_lemma_sweep(args.d, args.delta, args.nu_fraction, args.samples, args.seed)
    path = str(write_csv(rows, args.csv, LEMMA_COLUMNS))
    monotone = correlation_monotonicity(N=args.samples, seed=args.seed)
    report = _report(
        "verify-lemma",
        args.seed,
        rows,
        path,
        max_ratio=max(row["ratio"] for row in rows),
        sidedness_violations=sum(row["sidedness_violations"] for row in rows),
        max_decomposition_error=max(row["decomposition_error"] for row in rows),
        mirrored_agree=_mirrored_agree(rows),
        monotone=all(row["pass"] for row in monotone),
        monotonicity=monotone
    )
    if not report.summary["monotone"]:
        report.passed = False
    return report, f"verify-lemma: {report.rows} celdas, {report.failures} fallas, razón máx {report.summary['max_ratio']:.4f}"


def _mirrored_agree(rows: Sequence[Row]) -> bool:
    """Las celdas espejo deben reproducir p̂ de su celda original"""
    key = ("d", "delta", "nu_fraction")
    plain = {tuple(r[k] for k in key): r["p_hat"] for r in rows if not r["mirrored"]}
    return all(
        plain.get(tuple(r[k] for k in key), r["p_hat"]) == r["p_hat"]
        for r in rows if r["mirrored"]
    )


def handle_cdf(args: argparse.Namespace) -> HandlerResult:
    rows = cdf_fact_check(args.seed, args.samples)
    path = str(write_csv(rows, args.csv, CDF_COLUMNS))
    facts = sorted({row["fact"] for row in rows})
    failing = sorted({row["fact"] for row in rows if not row["pass"]})
    report = _report("verify-cdf", args.seed, rows, path, facts=facts, failing_facts=failing)
    return report, f"verify-cdf: {report.rows} filas, {report.failures} fallas"


def _instances(args: argparse.Namespace) -> List:
    if args.graph:
        return [read_graph(path) for path in args.graph]
    if args.planted < 1:
        raise InvalidInputError(f"Flag inválido --planted: {args.planted}")
    return [
        planted_instance(PLANTED_N, PLANTED_K, PLANTED_D_MAX, args.planted_eps, args.seed + index)[0]
        for index in range(args.planted)
    ]


def handle_concentration(args: argparse.Namespace) -> HandlerResult:
    instances = _instances(args)
    config = run_config(args, "ssve")
    rows = concentration_check(instances, config, trials=args.trials, required=args.required)
    path = str(write_csv(rows, args.csv, CONCENTRATION_COLUMNS))
    report = _report(
        "verify-conc",
        args.seed,
        rows,
        path,
        instances=len(instances),
        trials=args.trials,
        required=args.required,
        min_fraction=min(row["fraction"] for row in rows)
    )
    return report, f"verify-conc: {report.rows} instancias, {report.failures} por debajo de {args.required:.0%}"
