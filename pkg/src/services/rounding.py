"""
Eliminación de aristas, desplazamiento θ y redondeo por hiperplano desplazado
"""
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from ..config import settings
from ..models.graph import CutSet
from ..models.hypergraph import WeightedHypergraph
from ..models.vector_solution import ShiftedSolution, VectorSolution
from ..schemas.report import DeletedEdge, DeletionSummary, EdgeAudit, PreprocessCheck
from ..utils.errors import InvalidInputError
from ..utils.rng import stream
from .gaussian import phi_inv

logger = logging.getLogger(__name__)

CLAIM_TOL = 1e-8


# ============================================================================
# Eliminación de aristas pesadas
# ============================================================================

def edge_disagreements(H: WeightedHypergraph, disagreement: np.ndarray) -> np.ndarray:
    """Δ_e = máx_{i,j∈e} Pr̃[x_i ≠ x_j] (0 para hiperaristas de un vértice)"""
    values = np.zeros(H.m)
    for index, e in enumerate(H.edges):
        if len(e) > 1:
            members = list(e)
            values[index] = float(disagreement[np.ix_(members, members)].max())
    return values


def delete_heavy_edges(
    H: WeightedHypergraph,
    delta_e: np.ndarray,
    threshold: Optional[float] = None
) -> Tuple[np.ndarray, DeletionSummary]:
    """
    Eliminar las hiperaristas con Δ_e ≥ threshold (1/10 por defecto)

    Returns:
        (máscara de sobrevivientes, resumen con el peso eliminado)
    """
    threshold = settings.DELETE_THRESHOLD if threshold is None else threshold
    delta_e = np.asarray(delta_e, dtype=np.float64)
    deleted = delta_e >= threshold
    deleted_weight = float(H.edge_weights[deleted].sum())
    weighted_sum = float(H.edge_weights @ delta_e)
    summary = DeletionSummary(
        deleted_edges=[
            DeletedEdge(edge=int(e), weight=float(H.edge_weights[e]), delta_e=float(delta_e[e]))
            for e in np.flatnonzero(deleted)
        ],
        deleted_weight=deleted_weight,
        weighted_delta_sum=weighted_sum,
        accounting_holds=deleted_weight <= weighted_sum / threshold + 1e-12
    )
    logger.info(f"Aristas eliminadas: {int(deleted.sum())} de {H.m} (peso {deleted_weight:.4f})")
    return ~deleted, summary


# ============================================================================
# Desplazamiento θ
# ============================================================================

def preprocess_shift(vs: VectorSolution, theta: float) -> ShiftedSolution:
    """
    v′_i = (v_i − θẑ)/√(1+θ²) con ẑ una coordenada nueva

    Raises:
        InvalidInputError: θ fuera de [0, 1/10]
    """
    if theta < 0 or theta > 0.1:
        raise InvalidInputError(f"θ = {theta} fuera de [0, 1/10]")
    r = vs.dimension
    zhat = np.zeros(r + 1)
    zhat[r] = 1.0
    phi = np.append(vs.phi, 0.0)
    padded = np.hstack([vs.vectors, np.zeros((vs.n, 1))])
    vectors = (padded - theta * zhat[None, :]) / math.sqrt(1.0 + theta ** 2)
    return ShiftedSolution(original=vs, theta=float(theta), phi=phi, zhat=zhat, vectors=vectors)


def _off_diagonal(matrix: np.ndarray) -> np.ndarray:
    return matrix[~np.eye(matrix.shape[0], dtype=bool)]


def preprocess_report(vs: VectorSolution, ss: ShiftedSolution) -> List[PreprocessCheck]:
    """
    Holgura máxima de cada propiedad del desplazamiento (≤ 0 significa que se cumple)
    """
    theta2 = ss.theta ** 2
    mu, mu_s = vs.mu, ss.mu
    z, z_s = vs.z, ss.z
    norms = np.linalg.norm(z_s, axis=1)
    dist = vs.squared_distances()
    dist_s = ss.squared_distances()

    checks = {
        "bias_shift": np.abs(mu - mu_s) - theta2,
        "bias_floor": np.maximum(theta2 / 10.0 - mu_s, theta2 / 10.0 - ss.mu_complement),
        "distance_scaling": np.abs(dist_s - dist / (1.0 + theta2)),
        "covariance_shift": _off_diagonal(np.abs(z_s @ z_s.T) - np.abs(z @ z.T) - theta2 / 4.0),
        "bias_lipschitz": np.abs(mu_s[:, None] - mu_s[None, :]) - 2.0 * dist_s,
    }
    if np.all(norms > 0) and vs.n > 1:
        directions = z_s / norms[:, None]
        outer = np.outer(norms, norms)
        checks["direction_closeness"] = _off_diagonal(1.0 - directions @ directions.T - dist_s / (8.0 * outer))
    small = mu_s <= 0.5
    checks["bias_norm"] = (mu_s - 4.0 * norms ** 2)[small]

    report = []
    for name, values in checks.items():
        worst = float(np.max(values)) if np.size(values) else -math.inf
        report.append(PreprocessCheck(name=name, worst=worst if math.isfinite(worst) else 0.0, holds=worst <= CLAIM_TOL))
    return report


# ============================================================================
# Redondeo
# ============================================================================

def thresholds(ss: ShiftedSolution) -> np.ndarray:
    """t_i = Φ⁻¹(μ′_i), usando 1 − μ′_i del lado superior"""
    mu, complement = ss.mu, ss.mu_complement
    return np.array([
        phi_inv(m) if m <= 0.5 else -phi_inv(c)
        for m, c in zip(mu, complement)
    ])


@dataclass(frozen=True)
class RoundingPlan:
    """Direcciones normalizadas y umbrales, calculados una vez por solución"""
    directions: np.ndarray
    thresholds: np.ndarray

    @classmethod
    def from_shifted(cls, ss: ShiftedSolution) -> "RoundingPlan":
        return cls(directions=ss.directions(), thresholds=thresholds(ss))

    def round(self, seed: int, index: int = 0) -> CutSet:
        g = stream(seed, "rounding", index).standard_normal(self.directions.shape[1])
        return CutSet(self.directions @ g <= self.thresholds)


def shifted_hyperplane_round(ss: ShiftedSolution, seed: int, index: int = 0) -> CutSet:
    """
    S = {i : ⟨g, z′_i/‖z′_i‖⟩ ≤ Φ⁻¹(μ′_i)} con g ~ N(0, I) del flujo "rounding"

    Raises:
        InvalidInputError: algún z′_i con norma cero
    """
    return RoundingPlan.from_shifted(ss).round(seed, index)


def round_trials(ss: ShiftedSolution, seed: int, trials: int, threads: Optional[int] = None) -> List[CutSet]:
    """Ensayos independientes 0..trials-1; el resultado no depende de threads"""
    plan = RoundingPlan.from_shifted(ss)
    threads = settings.SSVE_THREADS if threads is None else threads
    if threads <= 1 or trials <= 1:
        return [plan.round(seed, index) for index in range(trials)]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(lambda index: plan.round(seed, index), range(trials)))


# ============================================================================
# Estadísticas por hiperarista
# ============================================================================

def rounding_constants(d: int, delta: float, variant: str = "fix-edge") -> float:
    """
    A_{d,δ}: 64·C0·C1·ln(1/δ)·ln d (variante fix-edge) o
    16·C0·C1·ln d·ln(1/δ) (variante symmetric), con C1 = 32·C0·ln(1/δ)
    """
    c0 = settings.C0
    c1 = 32.0 * c0 * math.log(1.0 / delta)
    factor = 64.0 if variant == "fix-edge" else 16.0
    return factor * c0 * c1 * math.log(1.0 / delta) * math.log(max(d, 2))


def cut_bound(alpha: float, nu: float, d: int, delta: float, K: Optional[float] = None) -> float:
    """K·(√(α ν ln d ln(1/δ)) + d·ν·ln²(1/δ)·max(1, ln d)²)"""
    K = settings.CALIBRATION_K if K is None else K
    log_d = math.log(max(d, 2))
    log_delta = math.log(1.0 / delta)
    return K * (math.sqrt(max(alpha * nu, 0.0) * log_d * log_delta)
                + d * nu * log_delta ** 2 * max(1.0, log_d) ** 2)


def edge_statistics(
    H: WeightedHypergraph,
    ss: ShiftedSolution,
    delta: float
) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    ν_e = máx ‖v′_i − v′_j‖², α_e = máx_i mín(μ′_i, 1 − μ′_i) y la clasificación nice/gap

    Returns:
        (nu, alpha, nice)
    """
    dist = ss.squared_distances()
    small = np.minimum(ss.mu, ss.mu_complement)
    nu = np.zeros(H.m)
    alpha = np.zeros(H.m)
    nice = np.zeros(H.m, dtype=bool)
    for index, e in enumerate(H.edges):
        members = list(e)
        nu[index] = float(dist[np.ix_(members, members)].max()) if len(e) > 1 else 0.0
        alpha[index] = float(small[members].max())
        nice[index] = alpha[index] >= rounding_constants(len(e), delta) * nu[index]
    return nu, alpha, nice


def alpha_observation(H: WeightedHypergraph, ss: ShiftedSolution, nu: np.ndarray, alpha: np.ndarray) -> bool:
    """α_e ≤ μ′_{π(e)} + 2ν_e en instancias reducidas"""
    if H.pi is None:
        return True
    mu = ss.mu
    return bool(np.all(alpha <= mu[list(H.pi)] + 2.0 * nu + CLAIM_TOL))


def edge_cut_audit(
    H: WeightedHypergraph,
    masks: List[CutSet],
    survivors: np.ndarray,
    nu: np.ndarray,
    alpha: np.ndarray,
    nice: np.ndarray,
    delta: float
) -> List[EdgeAudit]:
    """Frecuencia de corte de cada hiperarista sobreviviente frente a la cota calibrada"""
    if not masks:
        return []
    stacked = np.stack([mask.mask for mask in masks])
    audit = []
    for index, e in enumerate(H.edges):
        if not survivors[index] or len(e) < 2:
            continue
        inside = stacked[:, list(e)]
        frequency = float((inside.any(axis=1) & ~inside.all(axis=1)).mean())
        bound = cut_bound(alpha[index], nu[index], len(e), delta)
        audit.append(EdgeAudit(
            edge=index, nu=float(nu[index]), alpha=float(alpha[index]), nice=bool(nice[index]),
            cut_frequency=frequency, bound=bound, within_bound=frequency <= bound
        ))
    return audit
