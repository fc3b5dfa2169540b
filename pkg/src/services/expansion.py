"""
Cantidades de expansión sobre grafos e hipergrafos

Todas las funciones son puras; los tipos de entrada son inmutables.
"""
from typing import Literal

import numpy as np

from ..models.graph import CutSet, Graph
from ..models.hypergraph import WeightedHypergraph
from ..utils.errors import DegenerateInputError, InvalidInputError

Convention = Literal["size", "min"]
VolumeMode = Literal["weight", "degree"]


def _check_range(n: int, S: CutSet) -> None:
    if S.n != n:
        raise InvalidInputError(f"El conjunto tiene {S.n} posiciones, se esperaban {n}")


def vertex_boundary(G: Graph, S: CutSet) -> CutSet:
    """
    Frontera de vértices ∂V(S) = {u ∈ S^c : ∃ v ∈ S, (u, v) ∈ E}

    Con S vacío la frontera es vacía.
    """
    _check_range(G.n, S)
    boundary = np.zeros(G.n, dtype=bool)
    for v in S.members():
        for u in G.adjacency[v]:
            if not S.mask[u]:
                boundary[u] = True
    return CutSet(boundary)


def vertex_expansion(G: Graph, S: CutSet, convention: Convention = "size") -> float:
    """
    Expansión de vértices φV(S)

    Args:
        G: Grafo
        S: Conjunto no vacío
        convention: "size" divide por |S|, "min" divide por min(|S|, |S^c|)

    Raises:
        DegenerateInputError: S vacío, o S = V con la convención "min"
    """
    _check_range(G.n, S)
    size = S.size
    if size == 0:
        raise DegenerateInputError("degenerate denominator: S vacío")
    boundary = vertex_boundary(G, S).size
    if convention == "size":
        return boundary / size
    if convention == "min":
        denominator = min(size, G.n - size)
        if denominator == 0:
            raise DegenerateInputError("degenerate denominator: S = V con convención min")
        return boundary / denominator
    raise InvalidInputError(f"Convención desconocida: {convention}")


def symmetric_boundary(G: Graph, S: CutSet) -> CutSet:
    """∂sym(S) = ∂V(S) ∪ ∂V(S^c)"""
    return CutSet(vertex_boundary(G, S).mask | vertex_boundary(G, S.complement()).mask)


def symmetric_vertex_expansion(G: Graph, S: CutSet) -> float:
    """ΦV(S) = w(∂sym(S)) / w(S), con pesos de vértice"""
    _check_range(G.n, S)
    denominator = G.weight(S)
    if denominator <= 0:
        raise DegenerateInputError("zero-weight side: w(S) = 0")
    return G.weight(symmetric_boundary(G, S)) / denominator


def edge_expansion(G: Graph, S: CutSet, normalization: Literal["size", "volume"] = "size") -> float:
    """
    Expansión de aristas |E(S, S^c)| normalizada por |S| o por el volumen de S
    """
    _check_range(G.n, S)
    crossing = sum(1 for u, v in G.edges() if S.mask[u] != S.mask[v])
    if normalization == "size":
        denominator = float(S.size)
    else:
        denominator = float(sum(G.degree(v) for v in S.members()))
    if denominator <= 0:
        raise DegenerateInputError("degenerate denominator: volumen nulo")
    return crossing / denominator


def cut_hyperedges(H: WeightedHypergraph, S: CutSet) -> np.ndarray:
    """Máscara de hiperaristas con vértices a ambos lados del corte"""
    _check_range(H.n, S)
    cut = np.zeros(H.m, dtype=bool)
    for index, e in enumerate(H.edges):
        inside = S.mask[list(e)]
        cut[index] = inside.any() and not inside.all()
    return cut


def hyperedge_boundary_weight(H: WeightedHypergraph, S: CutSet) -> float:
    return float(H.edge_weights[cut_hyperedges(H, S)].sum())


def volume(H: WeightedHypergraph, S: CutSet, mode: VolumeMode = "weight") -> float:
    """Volumen de S: peso W(S) o suma de grados en H"""
    if mode == "weight":
        return H.weight(S)
    return float(H.vertex_degrees()[S.mask].sum())


def hyperedge_expansion(
    H: WeightedHypergraph,
    S: CutSet,
    mode: VolumeMode = "weight",
    denominator: Literal["min", "set"] = "min"
) -> float:
    """
    Expansión de hiperaristas φE_H(S) = w(∂E(S)) / min(vol(S), vol(S^c))

    Args:
        H: Hipergrafo ponderado
        S: Conjunto de vértices
        mode: "weight" usa W(S); "degree" usa la suma de grados
        denominator: "min" (por defecto) o "set" para dividir solo por vol(S)

    Raises:
        DegenerateInputError: si algún lado tiene volumen nulo ("zero-weight side")
    """
    if denominator == "set":
        value = volume(H, S, mode)
    else:
        value = min(volume(H, S, mode), volume(H, S.complement(), mode))
    if value <= 0:
        raise DegenerateInputError("zero-weight side: vol(S) o vol(S^c) es nulo")
    return hyperedge_boundary_weight(H, S) / value
