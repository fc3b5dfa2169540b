"""
Condicionamiento de pseudo-distribuciones

Dos variantes:
    - exacta: usa los momentos de grado R y consume dos grados por variable
    - por re-resolución: fija las etiquetas muestreadas en la relajación y
      la vuelve a resolver (cuando el grado no alcanza para t_cap pasos)
"""
import logging
from typing import Dict, List, Optional, Tuple

import numpy as np

from ..models.hypergraph import WeightedHypergraph
from ..models.pseudo_distribution import PseudoDistribution
from ..schemas.report import ConditioningStep, ConditioningTrace
from ..utils.errors import DegenerateInputError, InvalidInputError
from ..utils.rng import stream
from .information import average_mutual_information
from .relaxation import build_relaxation, solve_sdp

logger = logging.getLogger(__name__)

MIN_PROBABILITY = 1e-6


def condition(pd: PseudoDistribution, i: int, a: int) -> PseudoDistribution:
    """Condicionar en x_i = a (ver PseudoDistribution.condition)"""
    return pd.condition(i, a, min_probability=MIN_PROBABILITY)


def sample_subset(n: int, t_cap: int, rng: np.random.Generator) -> List[int]:
    """Tamaño uniforme en {0..t_cap} y vértices uniformes sin reemplazo"""
    size = min(int(rng.integers(0, t_cap + 1)), n)
    return [int(v) for v in rng.choice(n, size=size, replace=False)] if size else []


def _sample_bit(probability_one: float, rng: np.random.Generator) -> int:
    return int(rng.random() < min(max(probability_one, 0.0), 1.0))


def conditioning_round(
    pd: PseudoDistribution,
    t_cap: int,
    seed: int
) -> Tuple[PseudoDistribution, ConditioningTrace]:
    """
    Muestrear T (|T| ≤ t_cap), muestrear x_T de la distribución local y condicionar

    Args:
        pd: Pseudo-distribución de grado ≥ 2·t_cap + 2
        t_cap: Tamaño máximo de T
        seed: Semilla raíz (flujo "conditioning")

    Returns:
        (pseudo-distribución de grado 2, traza)

    Raises:
        InvalidInputError: grado insuficiente para t_cap
        DegenerateInputError: condicionamiento degenerado
    """
    if t_cap < 0:
        raise InvalidInputError("t_cap debe ser no negativo")
    if pd.degree < 2 * t_cap + 2:
        raise InvalidInputError(
            f"Grado {pd.degree} insuficiente para t_cap={t_cap} (se requiere {2 * t_cap + 2})"
        )
    rng = stream(seed, "conditioning", 0)
    subset = sample_subset(pd.n, t_cap, rng)
    trace = ConditioningTrace(subset_size=len(subset), mutual_information_before=average_mutual_information(pd))

    current = pd
    for vertex in subset:
        mu = current.moment((vertex,))
        value = _sample_bit(mu, rng)
        probability = mu if value == 1 else 1.0 - mu
        forced = False
        if probability < MIN_PROBABILITY:
            value, probability, forced = 1 - value, 1.0 - probability, True
        current = condition(current, vertex, value)
        trace.steps.append(ConditioningStep(
            vertex=vertex, value=value, probability=float(probability), mode="exact", forced=forced
        ))

    result = current.truncate(2)
    trace.mutual_information_after = average_mutual_information(result)
    logger.info(
        f"Condicionamiento exacto: |T|={len(subset)}, "
        f"I promedio {trace.mutual_information_before:.4f} → {trace.mutual_information_after:.4f}"
    )
    return result, trace


def pinned_conditioning(
    H: WeightedHypergraph,
    delta: float,
    R: int,
    pd: PseudoDistribution,
    t_cap: int,
    seed: int,
    tol: Optional[float] = None
) -> Tuple[PseudoDistribution, float, ConditioningTrace]:
    """
    Condicionamiento por re-resolución con etiquetas fijadas

    Cada etiqueta se muestrea de la marginal actual; la relajación se vuelve
    a resolver con x_T = α fijado y la cardinalidad impuesta. Si la etiqueta
    muestreada deja el problema infactible se usa la opuesta y la traza lo
    registra.

    Returns:
        (pseudo-distribución de grado 2, valor del último SDP, traza)
    """
    rng = stream(seed, "conditioning", 0)
    subset = sample_subset(pd.n, t_cap, rng)
    trace = ConditioningTrace(subset_size=len(subset), mutual_information_before=average_mutual_information(pd))

    pins: Dict[int, int] = {}
    current = pd
    value_sdp = float("nan")
    for vertex in subset:
        mu = current.moment((vertex,))
        value = _sample_bit(mu, rng)
        forced = False
        try:
            current, value_sdp = solve_sdp(build_relaxation(H, delta, R, pins={**pins, vertex: value}), tol)
        except DegenerateInputError:
            logger.warning(f"Etiqueta x_{vertex}={value} infactible; se usa la opuesta")
            value, forced = 1 - value, True
            try:
                current, value_sdp = solve_sdp(build_relaxation(H, delta, R, pins={**pins, vertex: value}), tol)
            except DegenerateInputError as exc:
                raise DegenerateInputError(
                    f"degenerate conditioning: ambas etiquetas de x_{vertex} son infactibles",
                    {"vertex": vertex, "pins": pins}
                ) from exc
        probability = mu if value == 1 else 1.0 - mu
        pins[vertex] = value
        trace.steps.append(ConditioningStep(
            vertex=vertex, value=value, probability=float(probability), mode="pinned", forced=forced
        ))

    result = current.truncate(2) if current.degree > 2 else current
    trace.mutual_information_after = average_mutual_information(result)
    logger.info(
        f"Condicionamiento por re-resolución: |T|={len(subset)}, "
        f"I promedio {trace.mutual_information_before:.4f} → {trace.mutual_information_after:.4f}"
    )
    return result, value_sdp, trace
