"""
Tests de grafos, hipergrafos y cantidades de expansión
"""
import itertools

import networkx as nx
import numpy as np
import pytest

from src.models.graph import CutSet, Graph
from src.models.hypergraph import WeightedHypergraph
from src.services.expansion import (
    cut_hyperedges,
    edge_expansion,
    hyperedge_expansion,
    symmetric_boundary,
    symmetric_vertex_expansion,
    vertex_boundary,
    vertex_expansion,
)
from src.utils.errors import DegenerateInputError, InvalidInputError

pytestmark = pytest.mark.unit


@pytest.fixture
def path3():
    """Camino 0–1–2"""
    return Graph.from_edges(3, [(0, 1), (1, 2)])


def random_graphs(count, n, p, seed):
    return [Graph.from_networkx(nx.gnp_random_graph(n, p, seed=seed + i)) for i in range(count)]


def random_sets(n, count, seed):
    rng = np.random.default_rng(seed)
    return [CutSet(rng.random(n) < 0.5) for _ in range(count)]


# ============================================================================
# TESTS DE CONSTRUCCIÓN
# ============================================================================

def test_graph_rejects_self_loop():
    """Un lazo es una entrada inválida"""
    with pytest.raises(InvalidInputError):
        Graph.from_edges(3, [(1, 1)])


def test_graph_rejects_duplicate_edge():
    """Aristas repetidas (en cualquier orden) son inválidas"""
    with pytest.raises(InvalidInputError):
        Graph.from_edges(3, [(0, 1), (1, 0)])


def test_graph_rejects_asymmetric_adjacency():
    """La adyacencia debe ser simétrica"""
    with pytest.raises(InvalidInputError):
        Graph(n=2, adjacency=((1,), ()), vertex_weights=np.ones(2))


def test_graph_max_degree(path3):
    """d es el grado máximo real"""
    assert path3.max_degree == 2
    assert path3.m == 2
    assert path3.edges() == [(0, 1), (1, 2)]


def test_graph_is_immutable(path3):
    """Los pesos no se pueden modificar después de construir"""
    with pytest.raises(ValueError):
        path3.vertex_weights[0] = 5.0


def test_networkx_roundtrip():
    """to_networkx / from_networkx preservan aristas y pesos"""
    G = Graph.from_edges(4, [(0, 1), (2, 3), (1, 2)], [1.0, 2.0, 3.0, 4.0])
    back = Graph.from_networkx(G.to_networkx())
    assert back.edges() == G.edges()
    assert np.array_equal(back.vertex_weights, G.vertex_weights)


def test_hypergraph_arity_and_pi():
    """La aridad es el tamaño máximo real y pi se valida"""
    H = WeightedHypergraph.build(n=4, edges=[(0, 1, 2), (2, 3)], pi=[0, 3])
    assert H.arity == 3
    assert H.max_vertex_degree == 2
    with pytest.raises(InvalidInputError):
        WeightedHypergraph.build(n=4, edges=[(0, 1), (2, 3)], pi=[0, 0])
    with pytest.raises(InvalidInputError):
        WeightedHypergraph.build(n=4, edges=[(0, 1), (2, 3)], pi=[2, 3])


def test_hypergraph_rejects_empty_edge():
    """Las hiperaristas no pueden ser vacías"""
    with pytest.raises(InvalidInputError):
        WeightedHypergraph.build(n=3, edges=[()])


def test_cutset_out_of_range():
    """Los miembros deben estar en el rango de vértices"""
    with pytest.raises(InvalidInputError):
        CutSet.from_members(3, [3])


# ============================================================================
# TESTS DE FRONTERA Y EXPANSIÓN DE VÉRTICES
# ============================================================================

def test_vertex_boundary_path(path3):
    """Camino, S={0} → ∂V = {1}"""
    assert vertex_boundary(path3, CutSet.from_members(3, [0])).members() == [1]


def test_vertex_boundary_full_set_is_empty(path3):
    """S = V → ∅"""
    assert vertex_boundary(path3, CutSet.full(3)).is_empty()


def test_vertex_boundary_empty_set(path3):
    """S vacío tiene frontera vacía"""
    assert vertex_boundary(path3, CutSet.empty(3)).is_empty()


def test_vertex_boundary_matches_definition():
    """La frontera coincide con un recorrido directo de la definición"""
    for G in random_graphs(50, 8, 0.35, seed=100):
        for S in random_sets(8, 4, seed=G.m):
            expected = [
                u for u in range(G.n)
                if not S.mask[u] and any(S.mask[v] for v in G.neighbors(u))
            ]
            assert vertex_boundary(G, S).members() == expected


def test_vertex_expansion_path(path3):
    """Camino, S={0} → 1.0 en ambas convenciones"""
    S = CutSet.from_members(3, [0])
    assert vertex_expansion(path3, S, "size") == 1.0
    assert vertex_expansion(path3, S, "min") == 1.0


def test_vertex_expansion_clique_pair():
    """K4 con S de dos vértices → 2/2"""
    K4 = Graph.from_networkx(nx.complete_graph(4))
    for pair in itertools.combinations(range(4), 2):
        assert vertex_expansion(K4, CutSet.from_members(4, pair)) == 1.0


def test_vertex_expansion_conventions_agree_on_small_sets():
    """Con |S| ≤ n/2 las dos convenciones coinciden"""
    for G in random_graphs(20, 10, 0.3, seed=7):
        for S in random_sets(10, 5, seed=G.m + 1):
            if 0 < S.size <= G.n // 2:
                assert vertex_expansion(G, S, "size") == vertex_expansion(G, S, "min")


def test_vertex_expansion_degenerate(path3):
    """S vacío, o S = V con convención min → "degenerate denominator" """
    with pytest.raises(DegenerateInputError, match="degenerate denominator"):
        vertex_expansion(path3, CutSet.empty(3))
    with pytest.raises(DegenerateInputError, match="degenerate denominator"):
        vertex_expansion(path3, CutSet.full(3), "min")


def test_vertex_vs_edge_expansion_sandwich():
    """φV(S) ≤ φE(S) ≤ d·φV(S)"""
    for G in random_graphs(30, 9, 0.4, seed=55):
        for S in random_sets(9, 4, seed=G.m + 3):
            if S.is_empty():
                continue
            phi_v = vertex_expansion(G, S)
            phi_e = edge_expansion(G, S)
            assert phi_v <= phi_e + 1e-12
            assert phi_e <= G.max_degree * phi_v + 1e-12


# ============================================================================
# TESTS DE EXPANSIÓN SIMÉTRICA Y DE HIPERARISTAS
# ============================================================================

def test_symmetric_vertex_expansion_path(path3):
    """Camino, S={0} → w({0,1})/w({0}) = 2"""
    assert symmetric_vertex_expansion(path3, CutSet.from_members(3, [0])) == 2.0


def test_symmetric_vertex_expansion_full_set(path3):
    """S = V → 0"""
    assert symmetric_vertex_expansion(path3, CutSet.full(3)) == 0.0


def test_symmetric_boundary_union():
    """∂sym = ∂V(S) ∪ ∂V(S^c)"""
    for G in random_graphs(20, 8, 0.3, seed=300):
        for S in random_sets(8, 3, seed=G.m + 5):
            expected = vertex_boundary(G, S).mask | vertex_boundary(G, S.complement()).mask
            assert np.array_equal(symmetric_boundary(G, S).mask, expected)


def test_symmetric_expansion_zero_weight():
    """w(S) = 0 es un error"""
    G = Graph.from_edges(2, [(0, 1)], [0.0, 1.0])
    with pytest.raises(DegenerateInputError):
        symmetric_vertex_expansion(G, CutSet.from_members(2, [0]))


def test_single_hyperedge_expansion():
    """Una hiperarista sobre [d], S = un vértice → w(e)/min(W(S), W(S^c)) = 1"""
    d = 5
    H = WeightedHypergraph.build(n=d, edges=[tuple(range(d))])
    assert hyperedge_expansion(H, CutSet.from_members(d, [0])) == 1.0
    assert cut_hyperedges(H, CutSet.from_members(d, [0])).tolist() == [True]


def test_hyperedge_expansion_uncut():
    """Sin hiperaristas cortadas el numerador es 0"""
    H = WeightedHypergraph.build(n=5, edges=[(0, 1), (2, 3)])
    assert hyperedge_expansion(H, CutSet.from_members(5, [0, 1])) == 0.0


def test_hyperedge_expansion_scale_invariant():
    """Escalar w y W a la vez no cambia φE_H"""
    H = WeightedHypergraph.build(n=4, edges=[(0, 1, 2), (1, 3)], edge_weights=[2.0, 3.0], vertex_weights=[1, 2, 3, 4])
    scaled = WeightedHypergraph.build(
        n=4, edges=H.edges, edge_weights=H.edge_weights * 7.5, vertex_weights=H.vertex_weights * 7.5
    )
    S = CutSet.from_members(4, [0, 3])
    assert hyperedge_expansion(H, S) == pytest.approx(hyperedge_expansion(scaled, S), rel=1e-15)


def test_hyperedge_expansion_zero_weight_side():
    """Un lado con peso nulo → "zero-weight side" """
    H = WeightedHypergraph.build(n=3, edges=[(0, 1, 2)], vertex_weights=[0.0, 1.0, 1.0])
    with pytest.raises(DegenerateInputError, match="zero-weight side"):
        hyperedge_expansion(H, CutSet.from_members(3, [0]))


def test_hyperedge_expansion_degree_volume():
    """Con mode="degree" el denominador es la suma de grados"""
    H = WeightedHypergraph.build(n=4, edges=[(0, 1), (1, 2), (2, 3)])
    S = CutSet.from_members(4, [0, 1])
    assert hyperedge_expansion(H, S, mode="degree") == pytest.approx(1.0 / 3.0)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
