"""
Modelo de pseudo-distribución de grado R sobre variables booleanas

Los momentos se guardan sobre monomios multilineales en la base 0/1
(y_T = Ẽ[∏_{i∈T} x_i], usando x_i² = x_i). Las cantidades en la base
±1 se derivan con X_i = 1 − 2x_i.
"""
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from ..utils.errors import DegenerateInputError, InvalidInputError

Monomial = Tuple[int, ...]


@dataclass(frozen=True)
class MonomialBasis:
    """Monomios multilineales de grado ≤ degree sobre n variables"""

    n: int
    degree: int
    monomials: Tuple[Monomial, ...] = field(repr=False)
    index: Dict[Monomial, int] = field(repr=False, compare=False, hash=False)

    @staticmethod
    def create(n: int, degree: int) -> "MonomialBasis":
        if degree < 0:
            raise InvalidInputError("El grado debe ser no negativo")
        monomials: List[Monomial] = []
        for size in range(min(degree, n) + 1):
            monomials.extend(combinations(range(n), size))
        return MonomialBasis(
            n=n,
            degree=degree,
            monomials=tuple(monomials),
            index={mono: k for k, mono in enumerate(monomials)}
        )

    def __len__(self) -> int:
        return len(self.monomials)

    @cached_property
    def rows(self) -> Tuple[Monomial, ...]:
        """Monomios que indexan la matriz de momentos (grado ≤ R/2)"""
        half = self.degree // 2
        return tuple(mono for mono in self.monomials if len(mono) <= half)

    def union(self, a: Monomial, b: Monomial) -> Monomial:
        return tuple(sorted(set(a) | set(b)))

    def positions(self) -> Dict[Monomial, List[Tuple[int, int]]]:
        """Posiciones (a ≤ b) de la matriz de momentos agrupadas por monomio"""
        rows = self.rows
        groups: Dict[Monomial, List[Tuple[int, int]]] = {}
        for a in range(len(rows)):
            for b in range(a, len(rows)):
                groups.setdefault(self.union(rows[a], rows[b]), []).append((a, b))
        return groups


def _normalize(monomial: Iterable[int]) -> Monomial:
    return tuple(sorted(set(int(i) for i in monomial)))


@dataclass(frozen=True, eq=False)
class PseudoDistribution:
    """
    Pseudo-distribución de grado R

    Attributes:
        basis: Base de monomios de grado ≤ R
        values: y_T para cada monomio de la base (y_∅ = 1)
    """

    basis: MonomialBasis
    values: np.ndarray

    def __post_init__(self):
        values = np.array(self.values, dtype=np.float64, copy=True)
        if values.shape != (len(self.basis),):
            raise InvalidInputError("Se requiere un valor por monomio de la base")
        if self.basis.degree < 2 or self.basis.degree % 2:
            raise InvalidInputError("El grado debe ser par y ≥ 2")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    # ------------------------------------------------------------------
    # Constructores
    # ------------------------------------------------------------------

    @classmethod
    def from_function(cls, n: int, degree: int, moment) -> "PseudoDistribution":
        basis = MonomialBasis.create(n, degree)
        return cls(basis, np.array([moment(mono) for mono in basis.monomials]))

    @classmethod
    def integral(cls, n: int, members: Sequence[int], degree: int = 2) -> "PseudoDistribution":
        """Distribución concentrada en el indicador de un conjunto fijo"""
        inside = np.zeros(n, dtype=bool)
        inside[list(members)] = True
        return cls.from_function(n, degree, lambda mono: float(all(inside[i] for i in mono)))

    @classmethod
    def product(cls, biases: Sequence[float], degree: int = 2) -> "PseudoDistribution":
        """Distribución producto de monedas independientes"""
        biases = np.asarray(biases, dtype=np.float64)
        return cls.from_function(len(biases), degree, lambda mono: float(np.prod(biases[list(mono)])))

    @classmethod
    def mixture(cls, supports: Sequence[Sequence[int]], probabilities: Sequence[float],
                n: int, degree: int = 2) -> "PseudoDistribution":
        """Mezcla de distribuciones enteras (una distribución real)"""
        masks = []
        for members in supports:
            mask = np.zeros(n, dtype=bool)
            mask[list(members)] = True
            masks.append(mask)
        probabilities = np.asarray(probabilities, dtype=np.float64)
        return cls.from_function(
            n, degree,
            lambda mono: float(sum(p for p, mask in zip(probabilities, masks) if all(mask[i] for i in mono)))
        )

    # ------------------------------------------------------------------
    # Momentos
    # ------------------------------------------------------------------

    @property
    def n(self) -> int:
        return self.basis.n

    @property
    def degree(self) -> int:
        return self.basis.degree

    def moment(self, monomial: Iterable[int]) -> float:
        mono = _normalize(monomial)
        if len(mono) > self.degree:
            raise InvalidInputError(f"Monomio de grado {len(mono)} excede el grado {self.degree}")
        return float(self.values[self.basis.index[mono]])

    def biases(self) -> np.ndarray:
        """μ_i = Pr̃[x_i = 1]"""
        return np.array([self.values[self.basis.index[(i,)]] for i in range(self.n)])

    def second_moments(self) -> np.ndarray:
        """Matriz Y con Y_ij = Ẽ[x_i x_j] (diagonal = μ)"""
        Y = np.diag(self.biases())
        for i, j in combinations(range(self.n), 2):
            Y[i, j] = Y[j, i] = self.values[self.basis.index[(i, j)]]
        return Y

    def degree2_block(self) -> np.ndarray:
        """Bloque de grado 2 de la matriz de momentos, lado n + 1"""
        mu = self.biases()
        block = np.empty((self.n + 1, self.n + 1))
        block[0, 0] = self.values[0]
        block[0, 1:] = block[1:, 0] = mu
        block[1:, 1:] = self.second_moments()
        return block

    def moment_matrix(self) -> np.ndarray:
        """Matriz de momentos completa indexada por monomios de grado ≤ R/2"""
        rows = self.basis.rows
        M = np.empty((len(rows), len(rows)))
        for a in range(len(rows)):
            for b in range(a, len(rows)):
                M[a, b] = M[b, a] = self.values[self.basis.index[self.basis.union(rows[a], rows[b])]]
        return M

    def min_eigenvalue(self) -> float:
        return float(np.linalg.eigvalsh(self.moment_matrix()).min())

    def disagreement(self) -> np.ndarray:
        """Pr̃[x_i ≠ x_j] = μ_i + μ_j − 2Y_ij"""
        mu = self.biases()
        return mu[:, None] + mu[None, :] - 2.0 * self.second_moments()

    def covariance(self) -> np.ndarray:
        mu = self.biases()
        return self.second_moments() - np.outer(mu, mu)

    def pair_locals(self) -> Dict[str, np.ndarray]:
        """Distribuciones locales por pares como cuatro matrices n × n"""
        mu = self.biases()
        Y = self.second_moments()
        return {
            "p11": Y,
            "p10": mu[:, None] - Y,
            "p01": mu[None, :] - Y,
            "p00": 1.0 - mu[:, None] - mu[None, :] + Y
        }

    # ------------------------------------------------------------------
    # Condicionamiento
    # ------------------------------------------------------------------

    def condition(self, i: int, a: int, min_probability: float = 1e-6) -> "PseudoDistribution":
        """
        Condicionar en x_i = a, consumiendo dos grados

        Raises:
            InvalidInputError: grado < 4
            DegenerateInputError: Pr̃[x_i = a] < min_probability ("degenerate conditioning")
        """
        if self.degree < 4:
            raise InvalidInputError("El condicionamiento requiere grado ≥ 4")
        if a not in (0, 1):
            raise InvalidInputError("El valor condicionado debe ser 0 o 1")
        mu_i = self.moment((i,))
        probability = mu_i if a == 1 else 1.0 - mu_i
        if probability < min_probability:
            raise DegenerateInputError(
                f"degenerate conditioning: Pr[x_{i} = {a}] = {probability:.3e}",
                {"vertex": i, "value": a, "probability": probability}
            )
        basis = MonomialBasis.create(self.n, self.degree - 2)
        values = np.empty(len(basis))
        for k, mono in enumerate(basis.monomials):
            joint = self.moment(mono + (i,))
            values[k] = joint / probability if a == 1 else (self.moment(mono) - joint) / probability
        return PseudoDistribution(basis, values)

    def truncate(self, degree: int) -> "PseudoDistribution":
        """Restringir a momentos de grado ≤ degree"""
        basis = MonomialBasis.create(self.n, degree)
        return PseudoDistribution(basis, np.array([self.moment(mono) for mono in basis.monomials]))

    def to_payload(self, include_matrix: Optional[bool] = None) -> dict:
        include_matrix = self.degree <= 2 if include_matrix is None else include_matrix
        payload = {"n": self.n, "degree": self.degree, "biases": self.biases().tolist()}
        if include_matrix:
            payload["moment_matrix"] = self.moment_matrix().tolist()
        return payload

    def __repr__(self):
        return f"<PseudoDistribution(n={self.n}, degree={self.degree})>"
