"""
Extracción de vectores a partir del bloque de grado 2 (M = VᵀV)
"""
import logging

import numpy as np
from scipy import linalg

from ..models.pseudo_distribution import PseudoDistribution
from ..models.vector_solution import VectorSolution
from ..utils.errors import InvalidInputError

logger = logging.getLogger(__name__)

EXTRACTION_TOL = 1e-6


def gram_matrix(pd: PseudoDistribution) -> np.ndarray:
    """
    Gram de los vectores {φ̄, v_1..v_n} en la base ±1

    ⟨φ̄, v_i⟩ = 1 − 2μ_i y ⟨v_i, v_j⟩ = 1 − 2μ_i − 2μ_j + 4y_ij.
    """
    mu = pd.biases()
    Y = pd.second_moments()
    gram = np.empty((pd.n + 1, pd.n + 1))
    gram[0, 0] = 1.0
    gram[0, 1:] = gram[1:, 0] = 1.0 - 2.0 * mu
    gram[1:, 1:] = 1.0 - 2.0 * mu[:, None] - 2.0 * mu[None, :] + 4.0 * Y
    np.fill_diagonal(gram[1:, 1:], 1.0)
    return gram


def extract_vectors(pd: PseudoDistribution, tol: float = EXTRACTION_TOL) -> VectorSolution:
    """
    Factorizar el bloque de grado 2 como Gram de vectores unitarios

    La factorización es espectral; los autovalores negativos por encima de
    −tol se llevan a cero y las filas se renormalizan.

    Raises:
        InvalidInputError: matriz indefinida más allá de tol
    """
    gram = gram_matrix(pd)
    eigenvalues, eigenvectors = linalg.eigh(gram)
    if eigenvalues.min() < -tol:
        logger.error(f"Bloque de grado 2 indefinido: λ_min={eigenvalues.min():.3e}")
        raise InvalidInputError(
            "La matriz de momentos es indefinida más allá de la tolerancia",
            {"min_eigenvalue": float(eigenvalues.min())}
        )
    factor = eigenvectors * np.sqrt(np.clip(eigenvalues, 0.0, None))[None, :]
    factor /= np.linalg.norm(factor, axis=1, keepdims=True)
    # fila 0 = φ̄; se fija el signo para que el resultado sea reproducible
    pivot = int(np.argmax(np.abs(factor[0])))
    if factor[0, pivot] < 0:
        factor = -factor
    return VectorSolution(phi=factor[0], vectors=factor[1:])
