"""
Modelo de solución vectorial (VectorSolution) y su versión desplazada (ShiftedSolution)

Convención: v_i = (1 − 2μ_i)φ̄ − 2z_i, u_i = (φ̄ − v_i)/2.
"""
from dataclasses import dataclass

import numpy as np

from ..utils.errors import InvalidInputError
from .graph import _readonly


@dataclass(frozen=True, eq=False)
class VectorSolution:
    """
    Vectores unitarios v_1..v_n y vector uno φ̄ en dimensión r

    Attributes:
        phi: φ̄, vector unitario de dimensión r
        vectors: matriz n × r con v_i en la fila i
    """

    phi: np.ndarray
    vectors: np.ndarray

    def __post_init__(self):
        phi = np.asarray(self.phi, dtype=np.float64)
        vectors = np.asarray(self.vectors, dtype=np.float64)
        if vectors.ndim != 2 or phi.shape != (vectors.shape[1],):
            raise InvalidInputError("Dimensiones inconsistentes entre φ̄ y los vectores")
        object.__setattr__(self, "phi", _readonly(phi))
        object.__setattr__(self, "vectors", _readonly(vectors))

    @classmethod
    def from_u(cls, phi: np.ndarray, u: np.ndarray) -> "VectorSolution":
        """Construir desde la convención 0/1 u_i = (φ̄ − v_i)/2"""
        phi = np.asarray(phi, dtype=np.float64)
        return cls(phi=phi, vectors=phi[None, :] - 2.0 * np.asarray(u, dtype=np.float64))

    @property
    def n(self) -> int:
        return int(self.vectors.shape[0])

    @property
    def dimension(self) -> int:
        return int(self.vectors.shape[1])

    @property
    def mu(self) -> np.ndarray:
        return np.clip((1.0 - self.vectors @ self.phi) / 2.0, 0.0, 1.0)

    @property
    def mu_complement(self) -> np.ndarray:
        """1 − μ_i calculado sin cancelación"""
        return np.clip((1.0 + self.vectors @ self.phi) / 2.0, 0.0, 1.0)

    @property
    def z(self) -> np.ndarray:
        return ((1.0 - 2.0 * self.mu)[:, None] * self.phi[None, :] - self.vectors) / 2.0

    @property
    def u(self) -> np.ndarray:
        return (self.phi[None, :] - self.vectors) / 2.0

    def gram(self) -> np.ndarray:
        return self.vectors @ self.vectors.T

    def squared_distances(self) -> np.ndarray:
        """‖v_i − v_j‖² para todos los pares"""
        G = self.gram()
        diag = np.diag(G)
        return np.maximum(diag[:, None] + diag[None, :] - 2.0 * G, 0.0)

    def disagreement(self) -> np.ndarray:
        """¼‖v_i − v_j‖² = Pr̃[x_i ≠ x_j]"""
        return self.squared_distances() / 4.0

    def to_payload(self) -> dict:
        return {"phi": self.phi.tolist(), "vectors": self.vectors.tolist()}

    def __repr__(self):
        return f"<VectorSolution(n={self.n}, r={self.dimension})>"


@dataclass(frozen=True, eq=False)
class ShiftedSolution:
    """
    Solución desplazada por θ en una coordenada nueva ẑ

    Attributes:
        original: solución sin desplazar
        theta: parámetro θ
        phi: φ̄ extendido con un cero (dimensión r + 1)
        zhat: ẑ = e_{r+1}
        vectors: v′_i = (v_i − θẑ)/√(1+θ²)
    """

    original: VectorSolution
    theta: float
    phi: np.ndarray
    zhat: np.ndarray
    vectors: np.ndarray

    @property
    def n(self) -> int:
        return self.original.n

    @property
    def scale(self) -> float:
        return 1.0 / np.sqrt(1.0 + self.theta ** 2)

    @property
    def shift(self) -> float:
        """1 − 1/√(1+θ²), escrito sin cancelación para θ pequeño"""
        root = np.sqrt(1.0 + self.theta ** 2)
        return float(self.theta ** 2 / (root * (1.0 + root)))

    @property
    def mu(self) -> np.ndarray:
        """μ′_i = μ_i/√(1+θ²) + ½(1 − 1/√(1+θ²))"""
        return self.original.mu * self.scale + 0.5 * self.shift

    @property
    def mu_complement(self) -> np.ndarray:
        """1 − μ′_i = (1 − μ_i)/√(1+θ²) + ½(1 − 1/√(1+θ²))"""
        return self.original.mu_complement * self.scale + 0.5 * self.shift

    @property
    def z(self) -> np.ndarray:
        """z′_i = (z_i + (θ/2)ẑ)/√(1+θ²)"""
        padded = np.hstack([self.original.z, np.zeros((self.n, 1))])
        return (padded + 0.5 * self.theta * self.zhat[None, :]) * self.scale

    def z_norms(self) -> np.ndarray:
        return np.linalg.norm(self.z, axis=1)

    def directions(self) -> np.ndarray:
        """z̄′_i = z′_i / ‖z′_i‖"""
        z = self.z
        norms = np.linalg.norm(z, axis=1)
        if np.any(norms <= 0):
            raise InvalidInputError("z′ con norma cero; el desplazamiento θ debe ser positivo")
        return z / norms[:, None]

    def squared_distances(self) -> np.ndarray:
        G = self.vectors @ self.vectors.T
        diag = np.diag(G)
        return np.maximum(diag[:, None] + diag[None, :] - 2.0 * G, 0.0)

    def __repr__(self):
        return f"<ShiftedSolution(n={self.n}, theta={self.theta:.3e})>"
