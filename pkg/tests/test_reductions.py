"""
Tests de la reducción SSVE → HSSE, el rollback y los generadores
"""
import itertools

import networkx as nx
import numpy as np
import pytest

from src.models.graph import CutSet, Graph
from src.services.expansion import (
    edge_expansion,
    hyperedge_boundary_weight,
    hyperedge_expansion,
    symmetric_boundary,
    symmetric_vertex_expansion,
    vertex_expansion,
)
from src.services.generators import (
    assignment_objective,
    expander,
    gap_single_edge,
    lift_set,
    planted_clique_component,
    planted_instance,
    random_gap_hypergraph,
    replacement_product,
)
from src.services.oracle import exact_hsse
from src.services.reductions import (
    canonical_image,
    rollback_set,
    source_part,
    ssve_to_hsse,
    symmetric_to_hypergraph,
    vertex_to_symmetric,
)
from src.utils.errors import DegenerateInputError, InvalidInputError

pytestmark = pytest.mark.unit


@pytest.fixture
def star():
    """Estrella K1,3 con centro 0"""
    return Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])


@pytest.fixture
def path6():
    """Camino 0–1–2–3–4–5"""
    return Graph.from_edges(6, [(i, i + 1) for i in range(5)])


def weighted_random_graph(n, p, seed):
    rng = np.random.default_rng(seed)
    G = Graph.from_networkx(nx.gnp_random_graph(n, p, seed=seed))
    return G.with_weights(rng.integers(0, 4, size=n).astype(float))


# ============================================================================
# TESTS DE LA REDUCCIÓN
# ============================================================================

def test_star_reduction(star):
    """K1,3: |V(H)| = 7 y tamaños de hiperarista 4, 2 y 3"""
    G_sym, H = ssve_to_hsse(star)
    assert G_sym.n == H.n == 7
    assert H.m == 7
    sizes = [len(e) for e in H.edges]
    assert sizes[0] == 4
    assert sizes[1:4] == [2, 2, 2]
    assert sizes[4:] == [3, 3, 3]
    assert H.total_edge_weight == H.total_vertex_weight == 4.0
    assert H.arity == star.max_degree + 1


def test_single_edge_reduction():
    """K2: tres vértices y pesos que suman 2"""
    _, H = ssve_to_hsse(Graph.from_edges(2, [(0, 1)]))
    assert H.n == 3
    assert H.total_edge_weight == H.total_vertex_weight == 2.0


def test_reduction_bookkeeping():
    """Σw = ΣW = |V_G| y π biyectiva con π(e) ∈ e"""
    for seed in range(10):
        G = Graph.from_networkx(nx.gnp_random_graph(9, 0.4, seed=seed))
        _, H = ssve_to_hsse(G)
        assert H.total_edge_weight == H.total_vertex_weight == float(G.n)
        assert sorted(H.pi) == list(range(H.n))
        assert all(v in e for e, v in zip(H.edges, H.pi))
        assert H.n_source == G.n


def test_reduction_ignores_source_weights():
    """Los vértices de G cuentan con peso 1 en la reducción"""
    G = Graph.from_edges(3, [(0, 1), (1, 2)], [5.0, 0.0, 2.0])
    _, H = ssve_to_hsse(G)
    assert H.total_vertex_weight == 3.0


def test_vertex_to_symmetric_triangle():
    """K3 → bipartito 3 + 3 con 6 aristas y grado 2 en V_L"""
    G_sym = vertex_to_symmetric(Graph.from_networkx(nx.complete_graph(3)))
    assert G_sym.n == 6
    assert G_sym.m == 6
    assert G_sym.max_degree == 2
    assert [G_sym.degree(v) for v in range(3)] == [2, 2, 2]
    assert np.array_equal(G_sym.vertex_weights, [1, 1, 1, 0, 0, 0])


@pytest.mark.parametrize("seed", range(30))
def test_symmetric_to_hypergraph_exact(seed):
    """w(∂E(S)) = w(∂sym(S)) y W(S) = w(S) para todos los subconjuntos, n entre 8 y 12"""
    G = weighted_random_graph(8 + seed % 5, 0.3, seed)
    H = symmetric_to_hypergraph(G)
    for bits in itertools.product([False, True], repeat=G.n):
        S = CutSet(np.array(bits))
        assert H.weight(S) == G.weight(S)
        lhs = hyperedge_boundary_weight(H, S)
        rhs = G.weight(symmetric_boundary(G, S))
        assert abs(lhs - rhs) <= 1e-12
        if G.weight(S) > 0:
            assert abs(hyperedge_expansion(H, S, denominator="set") - symmetric_vertex_expansion(G, S)) <= 1e-12


def test_symmetric_to_hypergraph_full_set():
    """S = V → ambos lados 0"""
    G = Graph.from_edges(3, [(0, 1), (1, 2)])
    H = symmetric_to_hypergraph(G)
    assert hyperedge_boundary_weight(H, CutSet.full(3)) == 0.0
    assert symmetric_vertex_expansion(G, CutSet.full(3)) == 0.0


def test_canonical_image_completeness():
    """ΦV en G′ de la imagen canónica ≤ 2·φV_G(S)"""
    for seed in range(30):
        G = Graph.from_networkx(nx.gnp_random_graph(8, 0.35, seed=seed))
        G_sym, _ = ssve_to_hsse(G)
        rng = np.random.default_rng(seed)
        S = CutSet(rng.random(G.n) < 0.4)
        if S.is_empty():
            continue
        image = canonical_image(G, S)
        assert symmetric_vertex_expansion(G_sym, image) <= 2.0 * vertex_expansion(G, S) + 1e-12


# ============================================================================
# TESTS DEL ROLLBACK
# ============================================================================

def test_rollback_uncut_image():
    """ε′ = 0: el conjunto se recupera exacto con φV = 0"""
    G = planted_clique_component(6, 3)
    _, H = ssve_to_hsse(G)
    S = canonical_image(G, CutSet.from_members(6, [0, 1, 2]))
    assert hyperedge_expansion(H, S) == 0.0
    rolled = rollback_set(H, G, S, 0.0)
    assert rolled.members() == [0, 1, 2]
    assert vertex_expansion(G, rolled) == 0.0


def test_rollback_path(path6):
    """Camino: la imagen de {0,1,2} tiene φE = 1/3 y se recupera {0,1,2}"""
    _, H = ssve_to_hsse(path6)
    S = canonical_image(path6, CutSet.from_members(6, [0, 1, 2]))
    eps = hyperedge_expansion(H, S)
    assert eps == pytest.approx(1.0 / 3.0)
    rolled = rollback_set(H, path6, S, eps)
    assert rolled.members() == [0, 1, 2]
    assert rolled.size >= (1.0 - eps) * H.weight(S)
    assert vertex_expansion(path6, rolled) <= 2.0 * eps
    assert source_part(H, S).members() == [0, 1, 2]


def test_rollback_precondition(path6):
    """φE_H(S) > ε′ → "rollback precondition" """
    _, H = ssve_to_hsse(path6)
    S = canonical_image(path6, CutSet.from_members(6, [0, 1, 2]))
    with pytest.raises(DegenerateInputError, match="rollback precondition"):
        rollback_set(H, path6, S, 0.1)


def test_rollback_planted():
    """El rollback de la imagen del conjunto plantado respeta las cotas"""
    G, planted = planted_instance(60, 15, 8, 0.2, seed=3)
    _, H = ssve_to_hsse(G)
    S = canonical_image(G, planted)
    eps = hyperedge_expansion(H, S)
    rolled = rollback_set(H, G, S, eps)
    assert (1.0 - eps) * H.weight(S) - 1e-9 <= rolled.size <= H.weight(S)
    assert vertex_expansion(G, rolled) <= 2.0 * eps + 1e-12


# ============================================================================
# TESTS DE INSTANCIAS DE BRECHA
# ============================================================================

@pytest.mark.parametrize("d", [2, 4, 8])
def test_gap_single_edge(d):
    """Sesgos δ, ⟨uᵢ,uⱼ⟩ = δ² y objetivo de la asignación 2(1 − δ)/d"""
    H, vs = gap_single_edge(d)
    delta = 1.0 / d
    assert H.m == 1 and H.arity == d
    assert np.allclose(vs.mu, delta, atol=1e-12)
    assert np.allclose(np.linalg.norm(vs.vectors, axis=1), 1.0, atol=1e-12)
    inner = vs.u @ vs.u.T
    assert np.allclose(np.diag(inner), delta, atol=1e-12)
    off = inner[~np.eye(d, dtype=bool)]
    assert np.allclose(off, delta ** 2, atol=1e-12)
    assert vs.mu.sum() == pytest.approx(1.0)
    assert assignment_objective(H, vs, delta) == pytest.approx(2.0 * (1.0 - delta) / d, abs=1e-12)


def test_gap_exact_value():
    """d=4: la HSSE exacta a δ=1/4 vale 1"""
    H, _ = gap_single_edge(4)
    value, S = exact_hsse(H, 0.25)
    assert value == 1.0
    assert S.size == 1


def test_gap_single_edge_rejects_small_d():
    """d < 2 es inválido"""
    with pytest.raises(InvalidInputError):
        gap_single_edge(1)


def test_random_gap_hypergraph():
    """d=4, n=16, C=2 → 64 hiperaristas de tamaño 4"""
    H = random_gap_hypergraph(4, 16, 2.0, seed=1)
    assert H.m == 64
    assert all(len(e) == 4 for e in H.edges)
    assert np.all(H.edge_weights == 1.0)
    again = random_gap_hypergraph(4, 16, 2.0, seed=1)
    assert H.edges == again.edges


def test_random_gap_sampled_sets_are_cut():
    """Conjuntos de tamaño n/d muestreados cortan ≥ r/8 hiperaristas"""
    H = random_gap_hypergraph(4, 16, 2.0, seed=2)
    rng = np.random.default_rng(0)
    for _ in range(50):
        S = CutSet.from_members(16, rng.choice(16, size=4, replace=False))
        assert hyperedge_boundary_weight(H, S) >= H.m / 8


def test_random_gap_rejects_small_n():
    """n < d es inválido"""
    with pytest.raises(InvalidInputError):
        random_gap_hypergraph(5, 4, 1.0, seed=0)


# ============================================================================
# TESTS DEL PRODUCTO DE REEMPLAZO
# ============================================================================

def test_replacement_product_cycle():
    """C4 Ⓡ K2 es 2-regular sobre 8 vértices"""
    C4 = Graph.from_networkx(nx.cycle_graph(4))
    product = replacement_product(C4, expander(2, 1))
    assert product.n == 8
    assert product.is_regular()
    assert product.max_degree == 2


def test_replacement_product_regularity():
    """G 4-regular con K4 → 4-regular con n·d vértices"""
    G = Graph.from_networkx(nx.random_regular_graph(4, 10, seed=5))
    product = replacement_product(G, expander(4, 3))
    assert product.n == 40
    assert product.is_regular()
    assert product.max_degree == 4
    assert product.m == G.m + G.n * 6


def test_replacement_product_lift():
    """Levantar S por nubes divide la expansión por volumen entre g+1"""
    G = Graph.from_networkx(nx.random_regular_graph(4, 12, seed=8))
    g = 3
    product = replacement_product(G, expander(4, g))
    S = CutSet.from_members(12, [0, 1, 2, 3])
    lifted = lift_set(G, S)
    assert edge_expansion(product, lifted, "volume") == pytest.approx(
        edge_expansion(G, S, "volume") / (g + 1), abs=1e-12
    )


@pytest.mark.parametrize("seed,g", [(0, 1), (1, 2), (2, 3), (3, 3)])
def test_replacement_product_completeness(seed, g):
    """El levantamiento preserva la medida y divide la expansión por volumen entre g+1"""
    G = Graph.from_networkx(nx.random_regular_graph(4, 14, seed=seed))
    product = replacement_product(G, expander(4, g))
    rng = np.random.default_rng(seed)
    S = CutSet.from_members(G.n, rng.choice(G.n, size=5, replace=False).tolist())
    lifted = lift_set(G, S)
    assert product.max_degree == g + 1
    assert lifted.size / product.n == pytest.approx(S.size / G.n)
    assert edge_expansion(product, lifted, "volume") == pytest.approx(
        edge_expansion(G, S, "volume") / (g + 1), abs=1e-12
    )


def test_replacement_product_rejects_irregular():
    """G no regular es inválido"""
    P3 = Graph.from_edges(3, [(0, 1), (1, 2)])
    with pytest.raises(InvalidInputError):
        replacement_product(P3, expander(2, 1))


def test_expander_circulant():
    """Circulante 3-regular sobre 6 vértices; no existe sobre 5"""
    assert expander(6, 3).is_regular()
    assert expander(6, 3).max_degree == 3
    with pytest.raises(InvalidInputError):
        expander(5, 3)


# ============================================================================
# TESTS DE INSTANCIAS PLANTADAS
# ============================================================================

def test_planted_instance():
    """n=60, k=15: grado ≤ 8 y φV del plantado = 3/15"""
    G, S = planted_instance(60, 15, 8, 0.2, seed=0)
    assert G.n == 60
    assert G.max_degree <= 8
    assert S.members() == list(range(15))
    assert vertex_expansion(G, S) == pytest.approx(0.2)


def test_planted_clique_component():
    """La clique plantada está desconectada del resto"""
    G = planted_clique_component(12, 3)
    assert vertex_expansion(G, CutSet.from_members(12, [0, 1, 2])) == 0.0


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
