"""
Numérica gaussiana: Φ, Φ⁻¹ y muestreo de ensambles correlacionados
"""
import logging
import math
from typing import Optional, Union

import numpy as np
from scipy import optimize, special

from ..models.ensemble import GaussianEnsembleSpec
from ..utils.errors import InvalidInputError
from ..utils.rng import stream

logger = logging.getLogger(__name__)

ArrayLike = Union[float, np.ndarray]

SQRT2 = math.sqrt(2.0)
PHI_INV_MAX_ITERS = 80


def phi(t: ArrayLike) -> ArrayLike:
    """
    CDF gaussiana estándar Φ(t) = ½·erfc(−t/√2)

    Raises:
        InvalidInputError: si t contiene NaN
    """
    values = np.asarray(t, dtype=np.float64)
    if np.isnan(values).any():
        raise InvalidInputError("Φ no está definida para NaN")
    result = 0.5 * special.erfc(-values / SQRT2)
    return float(result) if result.ndim == 0 else result


def density(t: ArrayLike) -> ArrayLike:
    """Densidad gaussiana estándar"""
    values = np.asarray(t, dtype=np.float64)
    result = np.exp(-0.5 * values ** 2) / math.sqrt(2.0 * math.pi)
    return float(result) if result.ndim == 0 else result


def tail_bound(p: float) -> float:
    """max(2√ln(1/p), 3): cota de |Φ⁻¹(p)| para p < ½"""
    return max(2.0 * math.sqrt(math.log(1.0 / p)), 3.0)


def _lower_inverse(p: float) -> float:
    # p ≤ ½: la raíz vive en [−tail_bound(p) − 1, 0]
    if p == 0.5:
        return 0.0
    lower = -tail_bound(p) - 1.0
    return float(optimize.brentq(
        lambda x: 0.5 * special.erfc(-x / SQRT2) - p,
        lower, 0.0,
        xtol=1e-14, rtol=4 * np.finfo(float).eps, maxiter=PHI_INV_MAX_ITERS
    ))


def phi_inv(p: float) -> float:
    """
    Inversa de la CDF gaussiana por búsqueda de raíz acotada

    Args:
        p: Probabilidad en (0, 1)

    Returns:
        t con Φ(t) = p

    Raises:
        InvalidInputError: p fuera de (0, 1) ("CDF range")
    """
    p = float(p)
    if not (0.0 < p < 1.0) or math.isnan(p):
        raise InvalidInputError(f"CDF range: p = {p} fuera de (0, 1)")
    if p <= 0.5:
        return _lower_inverse(p)
    # 1 − p es exacto en punto flotante para p ≥ ½
    return -_lower_inverse(1.0 - p)


def phi_inv_array(p: np.ndarray) -> np.ndarray:
    return np.array([phi_inv(value) for value in np.ravel(p)]).reshape(np.shape(p))


def sample_ensemble(
    ensemble: GaussianEnsembleSpec,
    samples: int = 1,
    index: int = 0,
    generator: Optional[np.random.Generator] = None
) -> np.ndarray:
    """
    Muestrear g_i = ⟨g, z̄_i⟩ con g ~ N(0, I_r)

    Args:
        ensemble: Direcciones y semilla
        samples: Número de muestras
        index: Índice del flujo (ensayo o lote)
        generator: Generador explícito; por defecto el flujo "ensemble" de la semilla

    Returns:
        Matriz samples × d
    """
    rng = generator if generator is not None else stream(ensemble.seed, "ensemble", index)
    g = rng.standard_normal((samples, ensemble.dimension))
    return g @ ensemble.directions.T
