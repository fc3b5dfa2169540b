"""
Generadores de instancias

Instancias de brecha de integralidad, hipergrafos aleatorios, producto de
reemplazo para reducir el grado, expansores pequeños e instancias plantadas.
"""
import logging
import math
from typing import Tuple

import networkx as nx
import numpy as np

from ..models.graph import CutSet, Graph
from ..models.hypergraph import WeightedHypergraph
from ..models.vector_solution import VectorSolution
from ..utils.errors import InvalidInputError
from ..utils.rng import derive_seed, stream

logger = logging.getLogger(__name__)


# ============================================================================
# Brecha de integralidad
# ============================================================================

def gap_single_edge(d: int) -> Tuple[WeightedHypergraph, VectorSolution]:
    """
    Una hiperarista sobre d vértices unitarios y la asignación vectorial
    u_i = δφ̄ + √(δ − δ²) z̄_i con δ = 1/d y z̄_i ortonormales

    Returns:
        (H, VectorSolution) en dimensión d + 1 (φ̄ = e_0, z̄_i = e_i)
    """
    if d < 2:
        raise InvalidInputError("gap_single_edge requiere d ≥ 2")
    delta = 1.0 / d
    H = WeightedHypergraph.build(n=d, edges=[tuple(range(d))])
    phi = np.zeros(d + 1)
    phi[0] = 1.0
    u = np.zeros((d, d + 1))
    u[:, 0] = delta
    u[:, 1:] = math.sqrt(delta - delta ** 2) * np.eye(d)
    return H, VectorSolution.from_u(phi, u)


def assignment_objective(H: WeightedHypergraph, vs: VectorSolution, delta: float) -> float:
    """
    Objetivo de la relajación para una asignación vectorial explícita:
    Σ_e w(e)·max_{i,j∈e} ¼‖v_i − v_j‖² / (δ·W(V))
    """
    disagreement = vs.disagreement()
    total = 0.0
    for weight, e in zip(H.edge_weights, H.edges):
        members = list(e)
        total += weight * float(disagreement[np.ix_(members, members)].max())
    return total / (delta * H.total_vertex_weight)


def random_gap_hypergraph(d: int, n: int, C: float, seed: int) -> WeightedHypergraph:
    """
    Hipergrafo d-uniforme aleatorio con r = round(C·n·log₂(1/δ)) hiperaristas, δ = 1/d

    Raises:
        InvalidInputError: d < 2, n < d o C < 1
    """
    if d < 2:
        raise InvalidInputError("random_gap_hypergraph requiere d ≥ 2")
    if n < d:
        raise InvalidInputError(f"n = {n} < d = {d}")
    if C < 1:
        raise InvalidInputError("C debe ser ≥ 1")
    r = int(round(C * n * math.log2(d)))
    rng = stream(seed, "generator", 0)
    edges = [tuple(sorted(int(v) for v in rng.choice(n, size=d, replace=False))) for _ in range(r)]
    logger.info(f"Hipergrafo de brecha: d={d}, n={n}, r={r}")
    return WeightedHypergraph.build(n=n, edges=edges)


# ============================================================================
# Expansores y producto de reemplazo
# ============================================================================

def expander(d: int, g: int) -> Graph:
    """
    Grafo g-regular sobre d vértices: completo si g = d − 1, circulante en otro caso

    Raises:
        InvalidInputError: si no existe un circulante g-regular sobre d vértices
    """
    if not (1 <= g < d):
        raise InvalidInputError(f"Se requiere 1 ≤ g < d (g={g}, d={d})")
    if g == d - 1:
        return Graph.from_networkx(nx.complete_graph(d))
    offsets = list(range(1, g // 2 + 1))
    if g % 2:
        if d % 2:
            raise InvalidInputError(f"No hay grafo {g}-regular sobre {d} vértices")
        offsets.append(d // 2)
    return Graph.from_networkx(nx.circulant_graph(d, offsets))


def replacement_product(G: Graph, H_exp: Graph) -> Graph:
    """
    Producto de reemplazo G Ⓡ H_exp

    Cada vértice v se reemplaza por una nube (v, 0..d−1) con una copia de
    H_exp; la arista (u, v) une el puerto de u hacia v con el puerto de v
    hacia u, donde el puerto es la posición del vecino en la lista ordenada.
    El vértice (v, k) tiene índice v·d + k.

    Raises:
        InvalidInputError: G no regular, H_exp no regular o H_exp.n ≠ d
    """
    if not G.is_regular():
        raise InvalidInputError("replacement_product requiere G regular")
    if not H_exp.is_regular():
        raise InvalidInputError("replacement_product requiere un expansor regular")
    d = G.max_degree
    if H_exp.n != d:
        raise InvalidInputError(f"El expansor debe tener d = {d} vértices (tiene {H_exp.n})")

    edges = []
    for v in range(G.n):
        edges.extend((v * d + a, v * d + b) for a, b in H_exp.edges())
    for u, v in G.edges():
        port_u = G.adjacency[u].index(v)
        port_v = G.adjacency[v].index(u)
        edges.append((u * d + port_u, v * d + port_v))
    product = Graph.from_edges(G.n * d, edges)
    logger.info(f"Producto de reemplazo: {G} Ⓡ {H_exp} → {product}")
    return product


def lift_set(G: Graph, S: CutSet) -> CutSet:
    """Levantar S a la unión de sus nubes en el producto de reemplazo"""
    return CutSet(np.repeat(S.mask, G.max_degree))


# ============================================================================
# Instancias plantadas
# ============================================================================

def _regular_block(degree: int, size: int, seed: int) -> nx.Graph:
    degree = max(0, min(degree, size - 1))
    if (degree * size) % 2:
        degree -= 1
    if degree <= 0:
        return nx.empty_graph(size)
    return nx.random_regular_graph(degree, size, seed=seed)


def planted_instance(n: int, k: int, d_max: int, eps: float, seed: int) -> Tuple[Graph, CutSet]:
    """
    Grafo de grado máximo ≤ d_max con un conjunto plantado de k vértices

    Dos bloques regulares aleatorios (S = {0..k−1} y el resto) unidos por
    c = max(1, round(eps·k)) aristas entre vértices distintos, así que
    |∂V(S)| = c y φV(S) = c/k.

    Returns:
        (G, S plantado)
    """
    if not (1 <= k < n):
        raise InvalidInputError(f"Se requiere 1 ≤ k < n (k={k}, n={n})")
    if d_max < 2:
        raise InvalidInputError("planted_instance requiere d_max ≥ 2")
    crossing = min(max(1, int(round(eps * k))), k, n - k)
    inside = _regular_block(d_max - 1, k, derive_seed(seed, "generator", 1) % 2**32)
    outside = _regular_block(d_max - 1, n - k, derive_seed(seed, "generator", 2) % 2**32)

    rng = stream(seed, "generator", 3)
    ports_in = rng.choice(k, size=crossing, replace=False)
    ports_out = k + rng.choice(n - k, size=crossing, replace=False)

    edges = [(int(u), int(v)) for u, v in inside.edges()]
    edges.extend((k + int(u), k + int(v)) for u, v in outside.edges())
    edges.extend((int(a), int(b)) for a, b in zip(ports_in, ports_out))
    G = Graph.from_edges(n, edges)
    logger.info(f"Instancia plantada: {G}, k={k}, frontera={crossing}")
    return G, CutSet.from_members(n, range(k))


def planted_clique_component(n: int, k: int) -> Graph:
    """Clique sobre {0..k−1} disjunta de un ciclo (o camino) sobre el resto"""
    if not (1 <= k < n):
        raise InvalidInputError(f"Se requiere 1 ≤ k < n (k={k}, n={n})")
    edges = [(u, v) for u in range(k) for v in range(u + 1, k)]
    rest = list(range(k, n))
    edges.extend(zip(rest, rest[1:]))
    if len(rest) >= 3:
        edges.append((rest[-1], rest[0]))
    return Graph.from_edges(n, edges)
