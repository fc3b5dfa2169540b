"""
Modelo de Grafo (Graph) y conjuntos de corte (CutSet)
"""
from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from ..utils.errors import InvalidInputError


def _readonly(array: np.ndarray) -> np.ndarray:
    array = np.array(array, copy=True)
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class CutSet:
    """Subconjunto S ⊆ V representado como máscara booleana"""

    mask: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "mask", _readonly(np.asarray(self.mask, dtype=bool)))

    @classmethod
    def from_members(cls, n: int, members: Iterable[int]) -> "CutSet":
        mask = np.zeros(n, dtype=bool)
        for v in members:
            if v < 0 or v >= n:
                raise InvalidInputError(f"Vértice {v} fuera del rango [0, {n})")
            mask[v] = True
        return cls(mask)

    @classmethod
    def empty(cls, n: int) -> "CutSet":
        return cls(np.zeros(n, dtype=bool))

    @classmethod
    def full(cls, n: int) -> "CutSet":
        return cls(np.ones(n, dtype=bool))

    @property
    def n(self) -> int:
        return int(self.mask.shape[0])

    @property
    def size(self) -> int:
        return int(self.mask.sum())

    def members(self) -> List[int]:
        return [int(v) for v in np.flatnonzero(self.mask)]

    def complement(self) -> "CutSet":
        return CutSet(~self.mask)

    def is_empty(self) -> bool:
        return not self.mask.any()

    def __contains__(self, v: int) -> bool:
        return bool(self.mask[v])

    def __len__(self) -> int:
        return self.size

    def __eq__(self, other) -> bool:
        return isinstance(other, CutSet) and np.array_equal(self.mask, other.mask)

    def __hash__(self) -> int:
        return hash(self.mask.tobytes())

    def __repr__(self):
        return f"<CutSet(n={self.n}, members={self.members()})>"


@dataclass(frozen=True, eq=False)
class Graph:
    """
    Grafo simple no dirigido con pesos en los vértices

    Inmutable: las cantidades derivadas (grado máximo, aristas) se
    calculan una sola vez en la construcción.
    """

    n: int
    adjacency: Tuple[Tuple[int, ...], ...]
    vertex_weights: np.ndarray
    max_degree: int = field(init=False)

    def __post_init__(self):
        if self.n < 0:
            raise InvalidInputError("El número de vértices debe ser no negativo")
        if len(self.adjacency) != self.n:
            raise InvalidInputError("La lista de adyacencia no coincide con n")

        weights = np.asarray(self.vertex_weights, dtype=np.float64)
        if weights.shape != (self.n,):
            raise InvalidInputError("vertex_weights debe tener un peso por vértice")
        if np.any(weights < 0) or not np.all(np.isfinite(weights)):
            raise InvalidInputError("Los pesos de vértice deben ser reales no negativos")
        object.__setattr__(self, "vertex_weights", _readonly(weights))

        adjacency = tuple(tuple(sorted(int(u) for u in nbrs)) for nbrs in self.adjacency)
        for v, nbrs in enumerate(adjacency):
            if len(set(nbrs)) != len(nbrs):
                raise InvalidInputError(f"Arista duplicada en el vértice {v}")
            for u in nbrs:
                if u == v:
                    raise InvalidInputError(f"Lazo en el vértice {v}")
                if u < 0 or u >= self.n:
                    raise InvalidInputError(f"Vecino {u} fuera de rango en el vértice {v}")
                if v not in adjacency[u]:
                    raise InvalidInputError(f"Adyacencia no simétrica entre {v} y {u}")
        object.__setattr__(self, "adjacency", adjacency)
        object.__setattr__(self, "max_degree", max((len(nbrs) for nbrs in adjacency), default=0))

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[Tuple[int, int]],
        vertex_weights: Optional[Sequence[float]] = None
    ) -> "Graph":
        """
        Construir un grafo a partir de una lista de aristas

        Args:
            n: Número de vértices
            edges: Pares (u, v) con índices base 0
            vertex_weights: Pesos de vértice (por defecto 1 cada uno)

        Raises:
            InvalidInputError: lazos, aristas duplicadas o índices fuera de rango
        """
        neighbors: List[List[int]] = [[] for _ in range(n)]
        seen = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise InvalidInputError(f"Lazo en el vértice {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidInputError(f"Arista ({u}, {v}) fuera del rango [0, {n})")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise InvalidInputError(f"Arista duplicada {key}")
            seen.add(key)
            neighbors[u].append(v)
            neighbors[v].append(u)
        weights = np.ones(n) if vertex_weights is None else np.asarray(vertex_weights, dtype=np.float64)
        return cls(n=n, adjacency=tuple(tuple(nbrs) for nbrs in neighbors), vertex_weights=weights)

    @classmethod
    def from_networkx(cls, graph: nx.Graph, weight: str = "weight") -> "Graph":
        """Convertir un grafo de networkx (los nodos se reetiquetan en orden)"""
        nodes = sorted(graph.nodes())
        index = {node: i for i, node in enumerate(nodes)}
        edges = [(index[u], index[v]) for u, v in graph.edges() if u != v]
        weights = [float(graph.nodes[node].get(weight, 1.0)) for node in nodes]
        return cls.from_edges(len(nodes), edges, weights)

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        for v in range(self.n):
            graph.add_node(v, weight=float(self.vertex_weights[v]))
        graph.add_edges_from(self.edges())
        return graph

    def with_weights(self, vertex_weights: Sequence[float]) -> "Graph":
        return Graph(n=self.n, adjacency=self.adjacency, vertex_weights=np.asarray(vertex_weights))

    def edges(self) -> List[Tuple[int, int]]:
        """Aristas (u, v) con u < v en orden lexicográfico"""
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    @property
    def m(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return self.adjacency[v]

    def is_regular(self) -> bool:
        return self.n == 0 or all(len(nbrs) == self.max_degree for nbrs in self.adjacency)

    def weight(self, S: CutSet) -> float:
        return float(self.vertex_weights[S.mask].sum())

    def __repr__(self):
        return f"<Graph(n={self.n}, m={self.m}, d={self.max_degree})>"
