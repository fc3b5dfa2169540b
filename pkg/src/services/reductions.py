"""
Reducciones entre instancias

SSVE → grafo simétrico ponderado → hipergrafo (HSSE), el mapa canónico de
conjuntos y la recuperación (rollback) de un conjunto en el grafo original.
"""
import logging
from typing import List, Optional, Tuple

import numpy as np

from ..models.graph import CutSet, Graph
from ..models.hypergraph import WeightedHypergraph
from ..utils.errors import DegenerateInputError, InvalidInputError
from .expansion import cut_hyperedges, hyperedge_expansion, vertex_expansion

logger = logging.getLogger(__name__)

ROLLBACK_TOL = 1e-9


def vertex_to_symmetric(G: Graph) -> Graph:
    """
    Grafo bipartito G′ con V_L = V (peso w(u)) y V_R = E (peso 0)

    El vértice-arista k (índice n + k) es adyacente a los dos extremos
    de la k-ésima arista de G.edges().
    """
    n = G.n
    edges: List[Tuple[int, int]] = []
    for k, (u, v) in enumerate(G.edges()):
        edges.append((u, n + k))
        edges.append((v, n + k))
    weights = np.concatenate([G.vertex_weights, np.zeros(G.m)])
    return Graph.from_edges(n + G.m, edges, weights)


def symmetric_to_hypergraph(G_sym: Graph, n_source: Optional[int] = None) -> WeightedHypergraph:
    """
    Una hiperarista {x} ∪ N(x) por vértice x, con w(e_x) = W(x) = w′(x) y π(e_x) = x
    """
    edges = [(x,) + G_sym.neighbors(x) for x in range(G_sym.n)]
    return WeightedHypergraph.build(
        n=G_sym.n,
        edges=edges,
        edge_weights=G_sym.vertex_weights,
        vertex_weights=G_sym.vertex_weights,
        pi=list(range(G_sym.n)),
        n_source=n_source
    )


def ssve_to_hsse(G: Graph) -> Tuple[Graph, WeightedHypergraph]:
    """
    Reducir una instancia SSVE a HSSE

    Los vértices 0..n-1 de ambos resultados son V_G y los siguientes m son
    los vértices-arista. Cada vértice de G se considera con peso 1.

    Returns:
        (G_sym, H)
    """
    source = G.with_weights(np.ones(G.n))
    G_sym = vertex_to_symmetric(source)
    H = symmetric_to_hypergraph(G_sym, n_source=G.n)
    logger.info(f"Reducción: {G} → {H}")
    return G_sym, H


def canonical_image(G: Graph, S: CutSet) -> CutSet:
    """S ↦ S ∪ {vértices-arista incidentes a S}"""
    if S.n != G.n:
        raise InvalidInputError("El conjunto no pertenece al grafo fuente")
    edge_side = np.array([S.mask[u] or S.mask[v] for u, v in G.edges()], dtype=bool)
    return CutSet(np.concatenate([S.mask, edge_side]))


def source_part(H: WeightedHypergraph, S: CutSet) -> CutSet:
    """S ∩ V_G como conjunto del grafo fuente"""
    if H.n_source is None:
        raise InvalidInputError("El hipergrafo no proviene de una reducción")
    return CutSet(S.mask[:H.n_source])


def rollback_set(H: WeightedHypergraph, G: Graph, S: CutSet, eps_prime: float) -> CutSet:
    """
    Recuperar S′ ⊆ V_G a partir de un conjunto S de la instancia reducida

    S′ = (S ∩ V_G) sin los vértices cuya hiperarista está cortada. Cada
    vértice de ∂V(S′) se carga a una hiperarista cortada distinta, de modo que
    |S′| ≥ (1 − ε′)W(S) y φV(S′) ≤ ε′/(1 − ε′).

    Args:
        H: Hipergrafo reducido (ssve_to_hsse)
        G: Grafo fuente
        S: Conjunto en V(H)
        eps_prime: Cota ε′ ≥ φE_H(S)

    Raises:
        DegenerateInputError: "rollback precondition" si φE_H(S) > ε′, si S′
            queda vacío o si las cotas de tamaño y expansión no se cumplen
    """
    if H.n_source != G.n:
        raise InvalidInputError("El hipergrafo no corresponde al grafo fuente")
    expansion = hyperedge_expansion(H, S)
    if expansion > eps_prime + ROLLBACK_TOL:
        raise DegenerateInputError(
            f"rollback precondition: φE_H(S) = {expansion:.6f} > ε′ = {eps_prime:.6f}",
            {"expansion": expansion, "eps_prime": eps_prime}
        )

    cut = cut_hyperedges(H, S)
    # la hiperarista x es la del vértice x (pi = identidad)
    rolled = CutSet(source_part(H, S).mask & ~cut[:G.n])

    source_weight = H.weight(S)
    if rolled.is_empty():
        raise DegenerateInputError(
            "rollback precondition: el conjunto recuperado es vacío",
            {"weight": source_weight, "eps_prime": eps_prime}
        )
    size = rolled.size
    phi_v = vertex_expansion(G, rolled)
    lower = (1.0 - eps_prime) * source_weight
    if size < lower - ROLLBACK_TOL or size > source_weight + ROLLBACK_TOL or phi_v > 2.0 * eps_prime + ROLLBACK_TOL:
        logger.error(f"Rollback fuera de cotas: |S′|={size}, φV={phi_v:.6f}, ε′={eps_prime:.6f}")
        raise DegenerateInputError(
            "rollback precondition: cotas de tamaño o expansión violadas",
            {"size": size, "lower": lower, "upper": source_weight, "phi_v": phi_v, "eps_prime": eps_prime}
        )
    return rolled
