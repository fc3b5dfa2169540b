"""
Tests de las verificaciones numéricas (probabilidad de corte, hechos de la CDF, concentración)
"""
import numpy as np
import pytest

from src.models.ensemble import GaussianEnsembleSpec
from src.models.hypergraph import WeightedHypergraph
from src.schemas.pipeline import PipelineConfig
from src.services.gaussian import phi_inv
from src.services.generators import gap_single_edge
from src.services.verification import (
    LEMMA_COLUMNS,
    cdf_fact_check,
    check_premises,
    concentration_check,
    correlation_monotonicity,
    cut_events,
    estimate_cut_probability,
    lemma_cell,
    nice_edge_instance,
    rounding_lemma_sweep,
    wilson_interval,
)
from src.utils.errors import InvalidInputError


# ============================================================================
# TESTS DE PROBABILIDAD DE CORTE
# ============================================================================

@pytest.mark.unit
def test_wilson_interval():
    """El intervalo contiene p̂ y respeta [0, 1]"""
    low, high = wilson_interval(50, 100)
    assert low < 0.5 < high
    assert 0.5 - low == pytest.approx(high - 0.5)
    assert wilson_interval(0, 100)[0] == pytest.approx(0.0, abs=1e-12)
    assert wilson_interval(100, 100)[1] == pytest.approx(1.0, abs=1e-12)
    with pytest.raises(InvalidInputError):
        wilson_interval(0, 0)


@pytest.mark.unit
def test_cut_events():
    """Cortada si hay coordenadas a ambos lados del umbral"""
    samples = np.array([[-1.0, 1.0], [-1.0, -1.0], [2.0, 3.0]])
    assert cut_events(samples, np.zeros(2)).tolist() == [True, False, False]


@pytest.mark.unit
def test_independent_pair_probability():
    """d=2 independientes, umbral Φ⁻¹(¼) → 1 − ¼² − ¾² = 0.375"""
    ensemble = GaussianEnsembleSpec(directions=np.eye(2), seed=3)
    p_hat, (low, high) = estimate_cut_probability(ensemble, [phi_inv(0.25)] * 2, N=100_000)
    assert abs(p_hat - 0.375) < 0.01
    assert low <= p_hat <= high


@pytest.mark.unit
@pytest.mark.parametrize("d", [4, 8, 16])
def test_gap_assignment_cut_probability(d):
    """Direcciones ortonormales de la asignación de brecha: p̂ ≈ 1 − (1 − δ)^d − δ^d"""
    delta = 1.0 / d
    _, vs = gap_single_edge(d)
    directions = vs.z / np.linalg.norm(vs.z, axis=1, keepdims=True)
    assert np.allclose(directions @ directions.T, np.eye(d), atol=1e-12)
    ensemble = GaussianEnsembleSpec(directions=directions, seed=d)
    p_hat, (low, high) = estimate_cut_probability(ensemble, [phi_inv(delta)] * d, N=100_000)
    expected = 1.0 - (1.0 - delta) ** d - delta ** d
    assert abs(p_hat - expected) < 0.01
    assert low <= p_hat <= high


@pytest.mark.unit
def test_estimate_rejects_inputs():
    """N < 10⁴ o umbrales de otra dimensión"""
    ensemble = GaussianEnsembleSpec(directions=np.eye(2))
    with pytest.raises(InvalidInputError):
        estimate_cut_probability(ensemble, [0.0, 0.0], N=100)
    with pytest.raises(InvalidInputError):
        estimate_cut_probability(ensemble, [0.0, 0.0, 0.0], N=10_000)


# ============================================================================
# TESTS DE ARISTAS CONSTRUIDAS
# ============================================================================

@pytest.mark.unit
def test_zero_spread_edge_is_never_cut():
    """ν = 0 → direcciones y umbrales idénticos → p̂ = 0"""
    edge = nice_edge_instance(4, 0.25, 0.0)
    assert edge.nu == 0.0
    p_hat, _ = estimate_cut_probability(edge.ensemble(seed=1), edge.thresholds(), N=10_000)
    assert p_hat == 0.0


@pytest.mark.unit
def test_nice_edge_geometry():
    """ν alcanzado, sesgo máximo μ_1 y direcciones unitarias"""
    edge = nice_edge_instance(8, 0.1, 1e-4)
    assert edge.nu == pytest.approx(1e-4, rel=1e-6)
    assert edge.mu[0] == 0.1
    assert np.all(np.diff(edge.mu) <= 0.0)
    assert np.allclose(np.linalg.norm(edge.directions, axis=1), 1.0)


@pytest.mark.unit
def test_mirrored_edge():
    """El espejo invierte sesgos y direcciones"""
    edge = nice_edge_instance(4, 0.2, 1e-4)
    mirror = nice_edge_instance(4, 0.2, 1e-4, mirrored=True)
    assert np.allclose(mirror.mu, 1.0 - edge.mu)
    assert np.allclose(mirror.directions, -edge.directions)


@pytest.mark.unit
def test_nice_edge_rejects():
    """Parámetros fuera de rango"""
    with pytest.raises(InvalidInputError):
        nice_edge_instance(1, 0.25, 0.0)
    with pytest.raises(InvalidInputError):
        nice_edge_instance(4, 0.6, 0.0)
    with pytest.raises(InvalidInputError):
        nice_edge_instance(4, 0.25, 0.6)


@pytest.mark.unit
def test_premise_violation():
    """ν grande frente a μ_1/A → "premise violation" """
    edge = nice_edge_instance(4, 0.25, 0.01)
    with pytest.raises(InvalidInputError, match="premise violation"):
        check_premises(edge, 0.25)


# ============================================================================
# TESTS DEL BARRIDO
# ============================================================================

@pytest.mark.unit
def test_lemma_cell_passes():
    """Una celda con ν = ½·μ_1/A cumple la cota calibrada"""
    row = lemma_cell(4, 0.25, 0.5, N=20_000, seed=2, cell=0)
    assert set(row) == set(LEMMA_COLUMNS)
    assert row["sidedness_violations"] == 0
    assert row["decomposition_error"] <= 1e-10
    assert row["ratio"] <= row["K"]
    assert row["pass"]


@pytest.mark.unit
def test_sweep_mirrored_agrees():
    """La celda espejo comparte las muestras y da el mismo p̂"""
    rows = rounding_lemma_sweep(ds=[4], deltas=[0.25], nu_fractions=[0.5, 0.05], N=20_000, seed=1)
    assert len(rows) == 4
    plain = [row for row in rows if not row["mirrored"]]
    mirror = [row for row in rows if row["mirrored"]]
    for a, b in zip(plain, mirror):
        assert a["p_hat"] == b["p_hat"]
        assert b["variant"] == "symmetric"
    assert all(row["pass"] for row in rows)


@pytest.mark.unit
def test_sweep_rejects_small_N():
    """N < 10⁴ es inválido"""
    with pytest.raises(InvalidInputError):
        rounding_lemma_sweep(ds=[4], deltas=[0.25], nu_fractions=[0.5], N=500)


@pytest.mark.unit
def test_correlation_monotonicity():
    """p̂ no crece con la correlación"""
    rows = correlation_monotonicity(N=20_000, seed=4)
    assert all(row["pass"] for row in rows)
    assert rows[0]["p_hat"] > rows[-1]["p_hat"]
    information = [row["pair_information"] for row in rows]
    assert information[0] == pytest.approx(0.0, abs=1e-12)
    assert all(a < b for a, b in zip(information, information[1:]))


# ============================================================================
# TESTS DE LOS HECHOS DE LA CDF
# ============================================================================

@pytest.mark.unit
def test_cdf_facts_hold():
    """Todas las desigualdades se cumplen sobre su grilla"""
    rows = cdf_fact_check(seed=0, samples=20_000)
    failures = [row for row in rows if not row["pass"]]
    assert failures == []
    facts = {row["fact"] for row in rows}
    assert {"lipschitz", "mills_lower", "mills_upper", "inverse_bound", "left_increment",
            "right_increment", "max_tail", "max_second_moment", "max_first_moment"} <= facts


# ============================================================================
# TESTS DE CONCENTRACIÓN
# ============================================================================

@pytest.mark.integration
def test_concentration_two_blocks():
    """Dos bloques disjuntos: todo ensayo toma exactamente un bloque"""
    H = WeightedHypergraph.build(n=6, edges=[(0, 1, 2), (3, 4, 5)])
    config = PipelineConfig(delta=0.5, rounds=4, tcap=1, seed=0, mode="hsse")
    rows = concentration_check([H], config, trials=100)
    assert rows[0]["instance"] == 0
    assert rows[0]["fraction"] >= 0.8
    assert rows[0]["pass"]


@pytest.mark.unit
def test_concentration_requires_trials():
    """Menos de 100 ensayos es inválido"""
    with pytest.raises(InvalidInputError):
        concentration_check([], PipelineConfig(delta=0.25), trials=10)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
