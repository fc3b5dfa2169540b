"""
Tests del pipeline de punta a punta
"""
import networkx as nx
import numpy as np
import pytest
from pydantic import ValidationError

from src.config import settings
from src.models.graph import CutSet, Graph
from src.models.hypergraph import WeightedHypergraph
from src.schemas.pipeline import PipelineConfig
from src.services.generators import planted_clique_component, planted_instance
from src.services.verification import concentration_check
from src.schemas.report import TrialRecord
from src.services.pipeline import choose_set, full_pipeline, in_window, prepare_rounding
from src.services.reductions import ssve_to_hsse
from src.utils.errors import DegenerateInputError, InvalidInputError
from src.utils.rng import derive_seed


@pytest.fixture
def two_blocks():
    """Dos hiperaristas disjuntas de tres vértices"""
    return WeightedHypergraph.build(n=6, edges=[(0, 1, 2), (3, 4, 5)])


def make_record(index, size, relative, expansion, valid, seed=0):
    return TrialRecord(
        index=index,
        seed=seed,
        derived_seed=derive_seed(seed, "rounding", index),
        size=size,
        relative_weight=relative,
        expansion=expansion,
        valid=valid,
        in_theorem_window=valid
    )


# ============================================================================
# TESTS DE CONFIGURACIÓN
# ============================================================================

@pytest.mark.unit
def test_config_default_theta():
    """θ por defecto es δ^12"""
    config = PipelineConfig(delta=0.25)
    assert config.theta == pytest.approx(0.25 ** settings.DEFAULT_THETA_EXPONENT)
    assert config.rounds == settings.DEFAULT_ROUNDS


@pytest.mark.unit
@pytest.mark.parametrize("field,value", [("delta", 0.0), ("delta", 0.7), ("rounds", 3), ("tcap", -1), ("theta", 0.2), ("trials", 0)])
def test_config_rejects(field, value):
    """Valores fuera de rango son errores de validación"""
    payload = {"delta": 0.25, field: value}
    with pytest.raises(ValidationError):
        PipelineConfig(**payload)


@pytest.mark.unit
def test_in_window():
    """La ventana es multiplicativa sobre δ"""
    assert in_window(0.25, 0.25, (0.9, 1.1))
    assert in_window(0.27, 0.25, (0.9, 1.1))
    assert not in_window(0.3, 0.25, (0.9, 1.1))
    assert not in_window(0.26, 0.25, (0.99, 1.01))


# ============================================================================
# TESTS DEL PIPELINE
# ============================================================================

@pytest.mark.integration
def test_hsse_blocks(two_blocks):
    """Dos bloques disjuntos: el conjunto elegido es uno de los bloques"""
    config = PipelineConfig(delta=0.5, rounds=4, tcap=1, trials=16, seed=3, mode="hsse")
    report = full_pipeline(two_blocks, config)
    assert report.sdp_value <= 1e-5
    assert report.chosen.members in ([0, 1, 2], [3, 4, 5])
    assert report.chosen.hypergraph_expansion == 0.0
    assert report.chosen.target_size == 3
    assert report.chosen.phi_v is None
    assert report.n_source is None
    assert report.alpha_observation_holds is None
    assert len(report.trials) == 16
    for record in report.trials:
        assert record.seed == 3
        assert record.stream == "rounding"
        assert record.derived_seed == derive_seed(3, "rounding", record.index)
    assert len({record.derived_seed for record in report.trials}) == 16
    assert report.deletion.accounting_holds


@pytest.mark.integration
def test_pipeline_is_deterministic(two_blocks):
    """Misma entrada y semilla → mismo reporte"""
    config = PipelineConfig(delta=0.5, rounds=4, tcap=1, trials=8, seed=5, mode="hsse")
    first = full_pipeline(two_blocks, config).model_dump_json()
    second = full_pipeline(two_blocks, config).model_dump_json()
    assert first == second


@pytest.mark.unit
def test_no_concentrated_trial(two_blocks):
    """Sin ensayos en la ventana la selección falla con "no concentrated trial" """
    masks = [CutSet(np.array([True] * 6)), CutSet(np.array([True] + [False] * 5))]
    records = [make_record(0, 6, 1.0, 0.0, False), make_record(1, 1, 1 / 6, 1.0, False)]
    config = PipelineConfig(delta=0.5, mode="hsse")
    with pytest.raises(DegenerateInputError, match="no concentrated trial"):
        choose_set(None, two_blocks, masks, records, config)


@pytest.mark.unit
def test_rollback_failure_is_an_error():
    """Si ningún ensayo válido cumple las cotas del rollback la selección falla"""
    G = Graph.from_networkx(nx.path_graph(4))
    _, H = ssve_to_hsse(G)
    mask = np.zeros(H.n, dtype=bool)
    mask[[0, 1]] = True
    # φE_H real > 0: el ε′ registrado no lo acota
    records = [make_record(0, 2, 0.5, 0.0, True)]
    config = PipelineConfig(delta=0.5)
    with pytest.raises(DegenerateInputError, match="rollback precondition"):
        choose_set(G, H, [CutSet(mask)], records, config)


@pytest.mark.integration
def test_unattainable_weight_is_infeasible():
    """δ·W(V) inalcanzable con dos vértices: la relajación condicionada es infactible"""
    H = WeightedHypergraph.build(n=2, edges=[(0, 1)])
    config = PipelineConfig(delta=0.25, tcap=0, trials=8, mode="hsse")
    with pytest.raises(DegenerateInputError, match="infeasible"):
        full_pipeline(H, config)


@pytest.mark.unit
def test_mode_mismatch(two_blocks):
    """Un hipergrafo en modo ssve es inválido"""
    with pytest.raises(InvalidInputError):
        full_pipeline(two_blocks, PipelineConfig(delta=0.5, mode="ssve"))


@pytest.mark.integration
def test_pinned_conditioning_path():
    """R=2 con t_cap=2 usa el condicionamiento por re-resolución"""
    G = planted_clique_component(6, 3)
    config = PipelineConfig(delta=0.5, rounds=2, tcap=2, seed=1)
    run = prepare_rounding(G, config)
    assert run.conditioned.degree == 2
    assert all(step.mode == "pinned" for step in run.trace.steps)
    if run.trace.steps:
        assert run.trace.conditioned_sdp_value <= 1e-5
    else:
        assert run.trace.conditioned_sdp_value is None
    assert run.shifted.theta == config.theta


@pytest.mark.integration
@pytest.mark.slow
def test_planted_component_recovery():
    """Una componente plantada se recupera con φV = 0"""
    G = planted_clique_component(8, 4)
    config = PipelineConfig(delta=0.5, rounds=4, tcap=1, trials=16, seed=2)
    report = full_pipeline(G, config)
    chosen = report.chosen
    assert report.sdp_value <= 1e-5
    assert chosen.members in ([0, 1, 2, 3], [4, 5, 6, 7])
    assert chosen.phi_v == 0.0
    assert chosen.rollback_bounds_hold
    assert chosen.target_size == 4
    assert report.n_source == 8
    assert report.alpha_observation_holds is not None



# ============================================================================
# TESTS SOBRE INSTANCIAS PLANTADAS GRANDES (n = 60, k = 15, d ≤ 8)
# ============================================================================

@pytest.mark.integration
@pytest.mark.slow
def test_planted_recovery_rate():
    """Al menos la mitad de las semillas recupera |S′| ≈ k con φV ≤ 1"""
    config = PipelineConfig(delta=0.25, rounds=2, tcap=0, trials=32)
    recovered = 0
    for seed in range(4):
        G, _ = planted_instance(60, 15, 8, 0.2, seed=seed)
        try:
            report = full_pipeline(G, config.model_copy(update={"seed": seed}))
        except DegenerateInputError:
            continue
        chosen = report.chosen
        assert report.sdp_diagnostics["solver"] == settings.SDP_FALLBACK_SOLVER
        if 12 <= chosen.size <= 18 and chosen.phi_v <= 1.0:
            recovered += 1
    assert recovered >= 2


@pytest.mark.integration
@pytest.mark.slow
def test_planted_concentration():
    """Con δ = ¼ al menos el 80% de 200 ensayos cae en la ventana"""
    instances = [planted_instance(60, 15, 8, 0.2, seed=seed)[0] for seed in range(2)]
    config = PipelineConfig(delta=0.25, rounds=2, tcap=0, seed=0)
    rows = concentration_check(instances, config, trials=200, required=0.8)
    assert [row["instance"] for row in rows] == [0, 1]
    assert all(row["pass"] for row in rows)

if __name__ == "__main__":
    pytest.main([__file__, "-v"])
