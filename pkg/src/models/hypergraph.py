"""
Modelo de Hipergrafo ponderado (WeightedHypergraph)
"""
from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from ..utils.errors import InvalidInputError
from .graph import CutSet, _readonly


@dataclass(frozen=True, eq=False)
class WeightedHypergraph:
    """
    Hipergrafo H = (V, E, w, W)

    Attributes:
        vertex_weights: W, un peso no negativo por vértice
        edges: hiperaristas como tuplas ordenadas de vértices
        edge_weights: w, un peso no negativo por hiperarista
        pi: correspondencia inyectiva hiperarista → vértice con pi[e] ∈ e (instancias reducidas)
        n_source: en instancias reducidas, los vértices 0..n_source-1 son V_G
    """

    vertex_weights: np.ndarray
    edges: Tuple[Tuple[int, ...], ...]
    edge_weights: np.ndarray
    pi: Optional[Tuple[int, ...]] = None
    n_source: Optional[int] = None
    arity: int = field(init=False)

    def __post_init__(self):
        W = np.asarray(self.vertex_weights, dtype=np.float64)
        w = np.asarray(self.edge_weights, dtype=np.float64)
        if W.ndim != 1:
            raise InvalidInputError("vertex_weights debe ser un vector")
        if np.any(W < 0) or np.any(w < 0):
            raise InvalidInputError("Los pesos deben ser no negativos")
        n = W.shape[0]

        edges = tuple(tuple(sorted(int(v) for v in e)) for e in self.edges)
        if len(edges) != w.shape[0]:
            raise InvalidInputError("Se requiere un peso por hiperarista")
        for index, e in enumerate(edges):
            if not e:
                raise InvalidInputError(f"La hiperarista {index} está vacía")
            if len(set(e)) != len(e):
                raise InvalidInputError(f"La hiperarista {index} repite vértices")
            if e[0] < 0 or e[-1] >= n:
                raise InvalidInputError(f"La hiperarista {index} sale del rango de vértices")

        if self.pi is not None:
            pi = tuple(int(v) for v in self.pi)
            if len(pi) != len(edges):
                raise InvalidInputError("pi debe asignar un vértice a cada hiperarista")
            if len(set(pi)) != len(pi):
                raise InvalidInputError("pi no es inyectiva")
            for index, (e, v) in enumerate(zip(edges, pi)):
                if v not in e:
                    raise InvalidInputError(f"pi({index}) = {v} no pertenece a la hiperarista")
            object.__setattr__(self, "pi", pi)

        if self.n_source is not None and not (0 <= self.n_source <= n):
            raise InvalidInputError("n_source fuera de rango")

        object.__setattr__(self, "vertex_weights", _readonly(W))
        object.__setattr__(self, "edge_weights", _readonly(w))
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "arity", max((len(e) for e in edges), default=0))

    @classmethod
    def build(
        cls,
        n: int,
        edges: Iterable[Sequence[int]],
        edge_weights: Optional[Sequence[float]] = None,
        vertex_weights: Optional[Sequence[float]] = None,
        pi: Optional[Sequence[int]] = None,
        n_source: Optional[int] = None
    ) -> "WeightedHypergraph":
        edges = [tuple(e) for e in edges]
        w = np.ones(len(edges)) if edge_weights is None else np.asarray(edge_weights, dtype=np.float64)
        W = np.ones(n) if vertex_weights is None else np.asarray(vertex_weights, dtype=np.float64)
        return cls(
            vertex_weights=W,
            edges=tuple(edges),
            edge_weights=w,
            pi=None if pi is None else tuple(pi),
            n_source=n_source
        )

    @property
    def n(self) -> int:
        return int(self.vertex_weights.shape[0])

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertex_degrees(self) -> np.ndarray:
        degrees = np.zeros(self.n, dtype=np.int64)
        for e in self.edges:
            degrees[list(e)] += 1
        return degrees

    @property
    def max_vertex_degree(self) -> int:
        return int(self.vertex_degrees().max()) if self.n else 0

    @property
    def total_vertex_weight(self) -> float:
        return float(self.vertex_weights.sum())

    @property
    def total_edge_weight(self) -> float:
        return float(self.edge_weights.sum())

    def weight(self, S: CutSet) -> float:
        return float(self.vertex_weights[S.mask].sum())

    def pair_index(self) -> List[Tuple[int, int, int]]:
        """Triples (e, i, j) con i < j para cada par dentro de cada hiperarista"""
        pairs = []
        for index, e in enumerate(self.edges):
            for a in range(len(e)):
                for b in range(a + 1, len(e)):
                    pairs.append((index, e[a], e[b]))
        return pairs

    def __repr__(self):
        return f"<WeightedHypergraph(n={self.n}, m={self.m}, r={self.arity}, reduced={self.pi is not None})>"
