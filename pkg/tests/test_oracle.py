"""
Tests de los oráculos exactos
"""
import itertools

import networkx as nx
import pytest

from src.models.graph import CutSet, Graph
from src.models.hypergraph import WeightedHypergraph
from src.services.expansion import hyperedge_expansion, vertex_expansion
from src.services.generators import gap_single_edge
from src.services.oracle import exact_hsse, exact_ssve, target_size
from src.utils.errors import DegenerateInputError, OracleScaleError

pytestmark = pytest.mark.unit


# ============================================================================
# TESTS DE TAMAÑO OBJETIVO
# ============================================================================

@pytest.mark.parametrize("n,delta,k", [(6, 1 / 3, 2), (5, 0.5, 3), (10, 0.25, 3), (7, 0.1, 1), (3, 0.1, 0)])
def test_target_size(n, delta, k):
    """k = round(δn) con .5 hacia arriba"""
    assert target_size(n, delta) == k


# ============================================================================
# TESTS DEL ORÁCULO SSVE
# ============================================================================

def test_cycle():
    """C6, δ = 1/3 → 1.0 con el par {0, 1}"""
    value, S = exact_ssve(Graph.from_networkx(nx.cycle_graph(6)), 1.0 / 3.0)
    assert value == 1.0
    assert S.members() == [0, 1]


def test_complete_graph():
    """K5, δ = 0.4 → 3/2"""
    value, _ = exact_ssve(Graph.from_networkx(nx.complete_graph(5)), 0.4)
    assert value == 1.5


def test_disconnected_components():
    """Dos K4 disjuntos, δ = ½ → 0"""
    G = Graph.from_networkx(nx.disjoint_union(nx.complete_graph(4), nx.complete_graph(4)))
    value, S = exact_ssve(G, 0.5)
    assert value == 0.0
    assert S.members() == [0, 1, 2, 3]


def test_matches_enumeration():
    """El oráculo coincide con evaluar φV en todos los conjuntos"""
    for seed in range(10):
        G = Graph.from_networkx(nx.gnp_random_graph(8, 0.35, seed=seed))
        for k in (1, 2, 3, 4):
            value, S = exact_ssve(G, k / 8)
            expected = min(
                vertex_expansion(G, CutSet.from_members(8, members))
                for members in itertools.combinations(range(8), k)
            )
            assert value == pytest.approx(expected)
            assert S.size == k
            assert vertex_expansion(G, S) == pytest.approx(value)


def test_min_convention():
    """Con |S| > n/2 la convención min divide por |V∖S|"""
    G = Graph.from_networkx(nx.path_graph(4))
    value_size, _ = exact_ssve(G, 0.75, "size")
    value_min, _ = exact_ssve(G, 0.75, "min")
    assert value_size == pytest.approx(1.0 / 3.0)
    assert value_min == 1.0


def test_ssve_scale():
    """n > ORACLE_MAX_N → "oracle scale" """
    with pytest.raises(OracleScaleError, match="oracle scale"):
        exact_ssve(Graph.from_networkx(nx.path_graph(25)), 0.2)


def test_ssve_degenerate():
    """k = 0, o k = n con la convención min"""
    G = Graph.from_networkx(nx.path_graph(3))
    with pytest.raises(DegenerateInputError):
        exact_ssve(G, 0.1)
    with pytest.raises(DegenerateInputError):
        exact_ssve(G, 1.0, "min")


# ============================================================================
# TESTS DEL ORÁCULO HSSE
# ============================================================================

def test_hsse_single_edge():
    """Hiperarista única, δ = 1/d → 1"""
    H, _ = gap_single_edge(4)
    value, S = exact_hsse(H, 0.25)
    assert value == 1.0
    assert S.members() == [0]


def test_hsse_matches_enumeration():
    """El oráculo coincide con evaluar φE_H en todos los conjuntos del peso objetivo"""
    H = WeightedHypergraph.build(
        n=6,
        edges=[(0, 1, 2), (2, 3), (3, 4, 5), (0, 5)],
        edge_weights=[1.0, 2.0, 0.5, 1.5]
    )
    value, S = exact_hsse(H, 0.5)
    expected = min(
        hyperedge_expansion(H, CutSet.from_members(6, members))
        for members in itertools.combinations(range(6), 3)
    )
    assert value == pytest.approx(expected)
    assert H.weight(S) == 3.0


def test_hsse_degree_volume():
    """mode="degree": camino de tres aristas, S = {0, 1} → 1/3"""
    H = WeightedHypergraph.build(n=4, edges=[(0, 1), (1, 2), (2, 3)])
    value, S = exact_hsse(H, 0.5, mode="degree")
    assert value == pytest.approx(1.0 / 3.0)
    assert S.members() == [0, 1]


def test_hsse_infeasible_target():
    """Ningún subconjunto alcanza el peso → "infeasible weight target" """
    H = WeightedHypergraph.build(n=2, edges=[(0, 1)])
    with pytest.raises(DegenerateInputError, match="infeasible weight target"):
        exact_hsse(H, 0.3, weight_tol=0.01)


def test_hsse_scale():
    """|V(H)| > HSSE_ORACLE_MAX_N → "oracle scale" """
    H = WeightedHypergraph.build(n=21, edges=[(0, 1)])
    with pytest.raises(OracleScaleError, match="oracle scale"):
        exact_hsse(H, 0.5)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
