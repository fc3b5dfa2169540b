"""
Oráculos exactos por enumeración para instancias pequeñas
"""
import logging
import math
from itertools import combinations
from typing import Literal, Optional, Tuple

import numpy as np

from ..config import settings
from ..models.graph import CutSet, Graph
from ..models.hypergraph import WeightedHypergraph
from ..utils.errors import DegenerateInputError, InvalidInputError, OracleScaleError

logger = logging.getLogger(__name__)

TIE_TOL = 1e-12


def target_size(n: int, delta: float) -> int:
    """k = round(δn), redondeando .5 hacia arriba"""
    return int(math.floor(delta * n + 0.5))


def exact_ssve(
    G: Graph,
    delta: float,
    convention: Literal["size", "min"] = "size"
) -> Tuple[float, CutSet]:
    """
    Mínimo exacto de φV sobre los conjuntos de tamaño round(δn)

    Los conjuntos se recorren en orden lexicográfico (itertools.combinations),
    así el primer mínimo encontrado es el argmin lexicográficamente menor.

    Raises:
        OracleScaleError: n > ORACLE_MAX_N ("oracle scale")
        DegenerateInputError: k = 0, o k = n con la convención "min"
    """
    if G.n > settings.ORACLE_MAX_N:
        raise OracleScaleError(f"oracle scale: n = {G.n} > {settings.ORACLE_MAX_N}")
    if not (0.0 < delta <= 1.0):
        raise InvalidInputError(f"δ = {delta} fuera de (0, 1]")
    k = target_size(G.n, delta)
    if k == 0:
        raise DegenerateInputError("degenerate denominator: round(δn) = 0")
    denominator = k if convention == "size" else min(k, G.n - k)
    if denominator == 0:
        raise DegenerateInputError("degenerate denominator: S = V con convención min")

    neighborhoods = [sum(1 << u for u in G.adjacency[v]) for v in range(G.n)]
    best_boundary: Optional[int] = None
    best_members: Tuple[int, ...] = ()
    for members in combinations(range(G.n), k):
        inside = 0
        reach = 0
        for v in members:
            inside |= 1 << v
            reach |= neighborhoods[v]
        boundary = bin(reach & ~inside).count("1")
        if best_boundary is None or boundary < best_boundary:
            best_boundary, best_members = boundary, members
            if boundary == 0:
                break
    value = best_boundary / denominator
    logger.info(f"Oráculo SSVE: n={G.n}, k={k}, valor={value:.6f}")
    return value, CutSet.from_members(G.n, best_members)


def exact_hsse(
    H: WeightedHypergraph,
    delta: float,
    weight_tol: Optional[float] = None,
    mode: Literal["weight", "degree"] = "weight"
) -> Tuple[float, CutSet]:
    """
    Mínimo exacto de φE_H sobre los S con W(S)/W(V) ∈ δ ± weight_tol

    Args:
        weight_tol: Tolerancia relativa; por defecto (mínimo peso positivo)/(2·W(V))

    Raises:
        OracleScaleError: |V(H)| > HSSE_ORACLE_MAX_N ("oracle scale")
        DegenerateInputError: ningún subconjunto en la ventana ("infeasible weight target")
    """
    n = H.n
    if n > settings.HSSE_ORACLE_MAX_N:
        raise OracleScaleError(f"oracle scale: |V(H)| = {n} > {settings.HSSE_ORACLE_MAX_N}")
    total = H.total_vertex_weight
    if total <= 0:
        raise DegenerateInputError("zero-weight side: W(V) = 0")
    if weight_tol is None:
        weight_tol = float(H.vertex_weights[H.vertex_weights > 0].min()) / (2.0 * total)

    masks = np.arange(1 << n, dtype=np.int64)
    bits = ((masks[:, None] >> np.arange(n)[None, :]) & 1).astype(bool)
    weight = bits @ H.vertex_weights
    if mode == "weight":
        volume, volume_total = weight, total
    else:
        degrees = H.vertex_degrees().astype(np.float64)
        volume, volume_total = bits @ degrees, float(degrees.sum())
    denominator = np.minimum(volume, volume_total - volume)

    feasible = (np.abs(weight / total - delta) <= weight_tol) & (denominator > 0)
    if not feasible.any():
        raise DegenerateInputError(
            f"infeasible weight target: ningún subconjunto con W(S)/W(V) ∈ {delta} ± {weight_tol:.3g}"
        )

    boundary = np.zeros(masks.shape[0])
    for weight_e, e in zip(H.edge_weights, H.edges):
        edge_mask = sum(1 << v for v in e)
        hit = masks & edge_mask
        boundary += weight_e * ((hit != 0) & (hit != edge_mask))

    values = np.full(masks.shape[0], np.inf)
    values[feasible] = boundary[feasible] / denominator[feasible]
    value = float(values.min())
    candidates = np.flatnonzero(values <= value + TIE_TOL)
    members = min(tuple(np.flatnonzero(bits[c]).tolist()) for c in candidates)
    logger.info(f"Oráculo HSSE: |V|={n}, δ={delta}, valor={value:.6f}")
    return value, CutSet.from_members(n, members)
