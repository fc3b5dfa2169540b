"""
Diagnósticos de teoría de la información

Entropía binaria, información mutua por pares a partir de las distribuciones
locales, información mutua gaussiana y las desigualdades asociadas.
Logaritmos en base 2.
"""
import math
from typing import Dict

import numpy as np

from ..models.pseudo_distribution import PseudoDistribution

LOCAL_CLIP = 1e-12


def _xlogx(p: np.ndarray) -> np.ndarray:
    p = np.asarray(p, dtype=np.float64)
    out = np.zeros_like(p)
    positive = p > 0
    out[positive] = p[positive] * np.log2(p[positive])
    return out


def binary_entropy(p) -> np.ndarray:
    p = np.clip(np.asarray(p, dtype=np.float64), 0.0, 1.0)
    return -(_xlogx(p) + _xlogx(1.0 - p))


def pair_mutual_information(p00, p01, p10, p11) -> np.ndarray:
    """
    I(X;Y) para distribuciones 2 × 2 (vectorizado)

    Las probabilidades negativas por error numérico se recortan a cero y la
    distribución se renormaliza.
    """
    joint = np.stack([np.asarray(p, dtype=np.float64) for p in (p00, p01, p10, p11)], axis=-1)
    joint = np.clip(joint, 0.0, None)
    joint = joint / np.maximum(joint.sum(axis=-1, keepdims=True), LOCAL_CLIP)
    q00, q01, q10, q11 = np.moveaxis(joint, -1, 0)
    px = np.stack([q00 + q01, q10 + q11])
    py = np.stack([q00 + q10, q01 + q11])
    entropy_joint = -_xlogx(joint).sum(axis=-1)
    entropy_x = -_xlogx(px).sum(axis=0)
    entropy_y = -_xlogx(py).sum(axis=0)
    return np.clip(entropy_x + entropy_y - entropy_joint, 0.0, None)


def mutual_information_matrix(pd: PseudoDistribution) -> np.ndarray:
    """I(x_i; x_j) para todos los pares, diagonal en cero"""
    locals_ = pd.pair_locals()
    matrix = pair_mutual_information(locals_["p00"], locals_["p01"], locals_["p10"], locals_["p11"])
    np.fill_diagonal(matrix, 0.0)
    return matrix


def average_mutual_information(pd: PseudoDistribution) -> float:
    """Ex_{i<j}[I(x_i; x_j)]"""
    if pd.n < 2:
        return 0.0
    matrix = mutual_information_matrix(pd)
    upper = np.triu_indices(pd.n, k=1)
    return float(matrix[upper].mean())


def gaussian_mutual_information(correlation: np.ndarray) -> float:
    """I = −½·log₂|Σ| para un par gaussiano con matriz de correlación Σ"""
    determinant = float(np.linalg.det(np.asarray(correlation, dtype=np.float64)))
    if determinant <= 0:
        return math.inf
    return -0.5 * math.log2(determinant)


def information_diagnostics(pd: PseudoDistribution) -> Dict[str, float]:
    """
    Cotas verificadas sobre todos los pares de la pseudo-distribución

    Returns:
        máximos de I, de |Cov| − √I, de H(μ) − 2μ·log₂(1/μ) (μ ≤ ½)
        y de x·log₂(1/x) − 2√x
    """
    information = mutual_information_matrix(pd)
    covariance = pd.covariance()
    np.fill_diagonal(covariance, 0.0)
    mu = np.clip(pd.biases(), 0.0, 1.0)
    small = np.minimum(mu, 1.0 - mu)
    positive = small > 0
    entropy_slack = binary_entropy(small[positive]) - 2.0 * small[positive] * np.log2(1.0 / small[positive])
    # x·log₂(1/x) ≤ 2√x sobre los sesgos y la información mutua
    values = np.concatenate([mu[mu > 0], information[information > 0]])
    root_slack = values * np.log2(1.0 / values) - 2.0 * np.sqrt(values)
    return {
        "max_mutual_information": float(information.max()) if pd.n else 0.0,
        "min_mutual_information": float(information.min()) if pd.n else 0.0,
        "average_mutual_information": average_mutual_information(pd),
        "max_covariance_excess": float((np.abs(covariance) - np.sqrt(information)).max()) if pd.n else 0.0,
        "max_entropy_excess": float(entropy_slack.max()) if positive.any() else 0.0,
        "max_root_excess": float(root_slack.max()) if values.size else 0.0
    }
