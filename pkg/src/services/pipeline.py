"""
Pipeline de punta a punta

Modo "ssve": reducir → construir → resolver → condicionar → eliminar →
desplazar → redondear (varios ensayos) → elegir → recuperar en G.
Modo "hsse": la misma cadena sobre un hipergrafo, sin reducción ni rollback.
"""
import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple, Union

import numpy as np

from ..config import settings
from ..models.graph import CutSet, Graph
from ..models.hypergraph import WeightedHypergraph
from ..models.pseudo_distribution import PseudoDistribution
from ..models.vector_solution import ShiftedSolution, VectorSolution
from ..schemas.pipeline import PipelineConfig
from ..schemas.report import ChosenSet, ConditioningTrace, DeletionSummary, RunReport, TrialRecord
from ..utils.errors import DegenerateInputError, InvalidInputError
from ..utils.io import instance_hash
from ..utils.rng import derive_seed
from .conditioning import conditioning_round, pinned_conditioning
from .expansion import hyperedge_expansion, vertex_expansion
from .information import average_mutual_information, information_diagnostics
from .oracle import target_size
from .reductions import rollback_set, ssve_to_hsse
from .relaxation import build_relaxation, solve_sdp
from .rounding import (
    alpha_observation,
    delete_heavy_edges,
    edge_cut_audit,
    edge_disagreements,
    edge_statistics,
    preprocess_report,
    preprocess_shift,
    round_trials,
)
from .vectors import extract_vectors

logger = logging.getLogger(__name__)

Instance = Union[Graph, WeightedHypergraph]


# ============================================================================
# Etapas previas al redondeo
# ============================================================================

@dataclass(frozen=True)
class PreparedRun:
    """Estado del pipeline justo antes del redondeo"""
    graph: Optional[Graph]
    hypergraph: WeightedHypergraph
    sdp_value: float
    diagnostics: Dict[str, Any]
    conditioned: PseudoDistribution
    trace: ConditioningTrace
    survivors: np.ndarray
    deletion: DeletionSummary
    vectors: VectorSolution
    shifted: ShiftedSolution


def condition_relaxation(
    H: WeightedHypergraph,
    pd: PseudoDistribution,
    config: PipelineConfig
) -> Tuple[PseudoDistribution, ConditioningTrace]:
    """
    Condicionamiento exacto si el grado lo permite (R ≥ 2·t_cap + 2), por re-resolución si no
    """
    if config.tcap == 0:
        mi = average_mutual_information(pd)
        return pd.truncate(2), ConditioningTrace(mutual_information_before=mi, mutual_information_after=mi)
    if pd.degree >= 2 * config.tcap + 2:
        return conditioning_round(pd, config.tcap, config.seed)
    conditioned, value, trace = pinned_conditioning(
        H, config.delta, config.rounds, pd, config.tcap, config.seed, config.tol
    )
    if trace.steps:
        trace.conditioned_sdp_value = value
    return conditioned, trace


def prepare_rounding(instance: Instance, config: PipelineConfig) -> PreparedRun:
    """
    Reducir, resolver, condicionar, eliminar aristas pesadas y desplazar

    Raises:
        InvalidInputError: instancia incompatible con el modo
        SolverError: el SDP no convergió
    """
    if config.mode == "ssve":
        if not isinstance(instance, Graph):
            raise InvalidInputError("El modo ssve requiere un grafo")
        G: Optional[Graph] = instance
        _, H = ssve_to_hsse(instance)
    else:
        if not isinstance(instance, WeightedHypergraph):
            raise InvalidInputError("El modo hsse requiere un hipergrafo")
        G, H = None, instance
    logger.info(f"Pipeline {config.mode}: {instance}, δ={config.delta}, R={config.rounds}, t_cap={config.tcap}")

    problem = build_relaxation(H, config.delta, config.rounds)
    pd, sdp_value = solve_sdp(problem, config.tol)
    conditioned, trace = condition_relaxation(H, pd, config)

    delta_e = edge_disagreements(H, conditioned.disagreement())
    survivors, deletion = delete_heavy_edges(H, delta_e)

    vs = extract_vectors(conditioned)
    return PreparedRun(
        graph=G,
        hypergraph=H,
        sdp_value=sdp_value,
        diagnostics=dict(problem.diagnostics),
        conditioned=conditioned,
        trace=trace,
        survivors=survivors,
        deletion=deletion,
        vectors=vs,
        shifted=preprocess_shift(vs, config.theta)
    )


# ============================================================================
# Ensayos y selección
# ============================================================================

def in_window(relative: float, delta: float, window: Tuple[float, float]) -> bool:
    low, high = window
    return low * delta <= relative <= high * delta


def _trial_records(
    H: WeightedHypergraph,
    masks: List[CutSet],
    config: PipelineConfig
) -> List[TrialRecord]:
    total = H.total_vertex_weight
    records = []
    for index, S in enumerate(masks):
        relative = H.weight(S) / total
        try:
            expansion: Optional[float] = hyperedge_expansion(H, S)
        except DegenerateInputError:
            expansion = None
        records.append(TrialRecord(
            index=index,
            seed=config.seed,
            stream="rounding",
            derived_seed=derive_seed(config.seed, "rounding", index),
            size=S.size,
            relative_weight=relative,
            expansion=expansion,
            valid=expansion is not None and in_window(relative, config.delta, settings.VALID_WINDOW),
            in_theorem_window=in_window(relative, config.delta, settings.THEOREM_WINDOW)
        ))
    return records


def choose_set(
    G: Optional[Graph],
    H: WeightedHypergraph,
    masks: List[CutSet],
    records: List[TrialRecord],
    config: PipelineConfig
) -> ChosenSet:
    """
    Elegir el ensayo válido de menor φE_H y, en modo ssve, recuperarlo en G

    Raises:
        DegenerateInputError: ningún ensayo en la ventana, o ninguno cumple
            las cotas del rollback
    """
    valid = sorted((r for r in records if r.valid), key=lambda r: (r.expansion, r.index))
    if not valid:
        logger.error(f"Ningún ensayo dentro de la ventana entre {len(records)}")
        raise DegenerateInputError(
            f"no concentrated trial: ninguno de {len(records)} ensayos cae en la ventana de peso",
            {"trials": len(records), "delta": config.delta}
        )

    if G is None:
        best = valid[0]
        S = masks[best.index]
        return ChosenSet(
            trial=best.index,
            members=S.members(),
            size=S.size,
            target_size=target_size(int(round(H.total_vertex_weight)), config.delta),
            hypergraph_expansion=best.expansion,
            convention=config.convention
        )

    k = target_size(G.n, config.delta)
    for record in valid:
        try:
            rolled = rollback_set(H, G, masks[record.index], record.expansion)
        except DegenerateInputError as exc:
            logger.info(f"Ensayo {record.index} descartado en rollback: {exc.detail}")
            continue
        return ChosenSet(
            trial=record.index,
            members=rolled.members(),
            size=rolled.size,
            target_size=k,
            hypergraph_expansion=record.expansion,
            phi_v=vertex_expansion(G, rolled, config.convention),
            convention=config.convention,
            rollback_bounds_hold=True
        )

    logger.error(f"Ningún ensayo válido cumple las cotas del rollback entre {len(valid)}")
    raise DegenerateInputError(
        "rollback precondition: ningún ensayo válido cumple las cotas del rollback",
        {"valid_trials": [r.index for r in valid], "delta": config.delta}
    )


# ============================================================================
# Pipeline completo
# ============================================================================

def full_pipeline(instance: Instance, config: PipelineConfig) -> RunReport:
    """
    Ejecutar el pipeline completo

    Args:
        instance: Graph (modo "ssve") o WeightedHypergraph (modo "hsse")
        config: Parámetros de la corrida

    Returns:
        RunReport con todas las trazas

    Raises:
        InvalidInputError: instancia incompatible con el modo
        DegenerateInputError: "no concentrated trial" u otros casos degenerados
        SolverError: el SDP no convergió
    """
    run = prepare_rounding(instance, config)
    H, ss = run.hypergraph, run.shifted

    masks = round_trials(ss, config.seed, config.trials)
    records = _trial_records(H, masks, config)
    chosen = choose_set(run.graph, H, masks, records, config)

    nu, alpha, nice = edge_statistics(H, ss, config.delta)
    report = RunReport(
        instance_hash=instance_hash(instance),
        config=config,
        n_source=H.n_source,
        n_hypergraph=H.n,
        m_hypergraph=H.m,
        sdp_value=run.sdp_value,
        sdp_diagnostics=run.diagnostics,
        conditioning=run.trace,
        deletion=run.deletion,
        preprocess=preprocess_report(run.vectors, ss),
        nice_edges=int(nice.sum()),
        gap_edges=int((~nice).sum()),
        alpha_observation_holds=alpha_observation(H, ss, nu, alpha) if H.pi is not None else None,
        trials=records,
        valid_window=settings.VALID_WINDOW,
        theorem_window=settings.THEOREM_WINDOW,
        chosen=chosen,
        edge_audit=edge_cut_audit(H, masks, run.survivors, nu, alpha, nice, config.delta),
        information=information_diagnostics(run.conditioned)
    )
    valid_count = sum(1 for r in records if r.valid)
    logger.info(
        f"Pipeline terminado: SDP={run.sdp_value:.6f}, válidos={valid_count}/{len(records)}, "
        f"|S′|={chosen.size}, φ={chosen.phi_v if chosen.phi_v is not None else chosen.hypergraph_expansion}"
    )
    return report
