"""
Verificación Monte Carlo y por grillas

    - probabilidad de corte de una hiperarista bajo redondeo gaussiano
    - barrido del lema de redondeo sobre aristas "nice" construidas
      (variante con sesgos ≤ ½ y su espejo con sesgos ≥ ½)
    - concentración del peso del conjunto redondeado
    - desigualdades de la CDF gaussiana y de máximos de gaussianas
    - monotonía de la probabilidad de corte en la correlación
"""
import logging
import math
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np
from scipy import optimize

from ..config import settings
from ..models.ensemble import GaussianEnsembleSpec
from ..models.hypergraph import WeightedHypergraph
from ..models.vector_solution import ShiftedSolution
from ..schemas.pipeline import PipelineConfig
from ..utils.errors import InvalidInputError
from ..utils.rng import stream
from .gaussian import density, phi, phi_inv, phi_inv_array, sample_ensemble, tail_bound
from .information import gaussian_mutual_information
from .pipeline import Instance, in_window, prepare_rounding
from .rounding import round_trials, rounding_constants

logger = logging.getLogger(__name__)

Row = Dict[str, object]

MIN_SAMPLES = 10_000
CONFIDENCE = 0.99
SIDEDNESS_TOL = 1e-12
DECOMPOSITION_TOL = 1e-10
ZETA_C = 4.0
MC_SLACK = 2.0

D_GRID = (4, 16, 64)
DELTA_GRID = tuple(2.0 ** -k for k in range(2, 7))
NU_FRACTIONS = (0.5, 0.05, 0.005)

LEMMA_COLUMNS = (
    "d", "delta", "nu_fraction", "variant", "mirrored", "mu1", "nu", "alpha", "samples",
    "p_hat", "ci_low", "ci_high", "bound", "ratio", "K", "sidedness_violations",
    "decomposition_error", "zeta_mean", "zeta_sq_mean", "zeta_bound", "pass"
)
CDF_COLUMNS = ("fact", "t", "eps_or_delta", "lhs", "rhs", "pass")
CONCENTRATION_COLUMNS = (
    "instance", "seed", "trials", "inside", "theorem_inside", "fraction", "mean_relative_weight", "pass"
)


# ============================================================================
# Probabilidad de corte
# ============================================================================

def wilson_interval(successes: int, trials: int, confidence: float = CONFIDENCE) -> Tuple[float, float]:
    """Intervalo de Wilson para una proporción"""
    if trials <= 0:
        raise InvalidInputError("Se requiere al menos una muestra")
    z = -phi_inv((1.0 - confidence) / 2.0)
    p = successes / trials
    denominator = 1.0 + z * z / trials
    center = (p + z * z / (2.0 * trials)) / denominator
    half = z * math.sqrt(p * (1.0 - p) / trials + z * z / (4.0 * trials * trials)) / denominator
    return max(0.0, center - half), min(1.0, center + half)


def cut_events(samples: np.ndarray, thresholds: np.ndarray) -> np.ndarray:
    """Evento {∃ i, j : g_i ≤ t_i ∧ g_j > t_j} por fila"""
    below = samples <= thresholds[None, :]
    return below.any(axis=1) & ~below.all(axis=1)


def _batches(total: int) -> Iterator[Tuple[int, int]]:
    batch = settings.MC_BATCH
    for index, start in enumerate(range(0, total, batch)):
        yield index, min(batch, total - start)


def estimate_cut_probability(
    ensemble: GaussianEnsembleSpec,
    thresholds: Sequence[float],
    N: Optional[int] = None,
    seed: Optional[int] = None
) -> Tuple[float, Tuple[float, float]]:
    """
    Estimar la probabilidad de que la hiperarista quede cortada

    Args:
        ensemble: Ensamble gaussiano de la hiperarista
        thresholds: Umbrales t_1..t_d
        N: Número de muestras (≥ 10⁴; por defecto MC_TRIALS)
        seed: Semilla; por defecto ensemble.seed

    Returns:
        (p̂, intervalo de Wilson al 99%)

    Raises:
        InvalidInputError: N < 10⁴ o umbrales de dimensión distinta a d
    """
    N = settings.MC_TRIALS if N is None else N
    if N < MIN_SAMPLES:
        raise InvalidInputError(f"Se requieren al menos {MIN_SAMPLES} muestras (N={N})")
    thresholds = np.asarray(thresholds, dtype=np.float64)
    if thresholds.shape != (ensemble.d,):
        raise InvalidInputError(f"Se esperaban {ensemble.d} umbrales")
    seed = ensemble.seed if seed is None else seed

    hits = 0
    for index, size in _batches(N):
        samples = sample_ensemble(ensemble, size, generator=stream(seed, "ensemble", index))
        hits += int(cut_events(samples, thresholds).sum())
    p_hat = hits / N
    return p_hat, wilson_interval(hits, N)


# ============================================================================
# Aristas nice construidas
# ============================================================================

@dataclass(frozen=True)
class NiceEdge:
    """
    Hiperarista construida con z̄_i = √(1−β²)·ê_0 + β·ê_i

    Los sesgos son μ_i = μ_1 − (ν/2)(i−1)/(d−1) (o 1 − μ_i en el espejo);
    ν es la máxima distancia ‖v_i − v_j‖² de los vectores unitarios
    v_i = (1 − 2μ_i)φ̄ − 2z_i.
    """
    mu: np.ndarray
    directions: np.ndarray
    vectors: np.ndarray
    beta: float
    nu: float
    mirrored: bool

    @property
    def d(self) -> int:
        return int(self.mu.shape[0])

    @property
    def alpha(self) -> float:
        return float(np.minimum(self.mu, 1.0 - self.mu).max())

    def thresholds(self) -> np.ndarray:
        return phi_inv_array(self.mu)

    def ensemble(self, seed: int = 0) -> GaussianEnsembleSpec:
        return GaussianEnsembleSpec(directions=self.directions, seed=seed)


def _edge_geometry(mu: np.ndarray, beta: float) -> Tuple[np.ndarray, np.ndarray]:
    d = mu.shape[0]
    directions = np.zeros((d, d + 1))
    directions[:, 0] = math.sqrt(1.0 - beta ** 2)
    directions[:, 1:] = beta * np.eye(d)
    # v_i vive en la base (φ̄, ê_0, …, ê_d)
    z = np.sqrt(mu * (1.0 - mu))[:, None] * directions
    vectors = np.hstack([(1.0 - 2.0 * mu)[:, None], -2.0 * z])
    return directions, vectors


def _max_distance(vectors: np.ndarray) -> float:
    diff = vectors[:, None, :] - vectors[None, :, :]
    return float((diff ** 2).sum(axis=2).max())


def nice_edge_instance(d: int, mu1: float, nu: float, mirrored: bool = False) -> NiceEdge:
    """
    Construir una hiperarista de aridad d con sesgo máximo mu1 y ν_e = nu

    β se obtiene por búsqueda de raíz sobre ν(β), creciente en β.

    Raises:
        InvalidInputError: parámetros fuera de rango o ν inalcanzable
    """
    if d < 2:
        raise InvalidInputError("Se requiere d ≥ 2")
    if not (0.0 < mu1 <= 0.5):
        raise InvalidInputError(f"μ_1 = {mu1} fuera de (0, ½]")
    if nu < 0:
        raise InvalidInputError("ν debe ser no negativo")
    mu = mu1 - (nu / 2.0) * np.arange(d) / (d - 1)
    if mu[-1] <= 0:
        raise InvalidInputError(f"ν = {nu} demasiado grande para μ_1 = {mu1}")

    def excess(beta: float) -> float:
        return _max_distance(_edge_geometry(mu, beta)[1]) - nu

    if nu == 0.0:
        beta = 0.0
    elif excess(0.0) >= 0.0:
        raise InvalidInputError(f"ν = {nu} inalcanzable: la dispersión de sesgos ya lo excede")
    else:
        beta = float(optimize.brentq(excess, 0.0, 1.0, xtol=1e-300, rtol=4 * np.finfo(float).eps, maxiter=200))

    directions, vectors = _edge_geometry(mu, beta)
    achieved = _max_distance(vectors)
    if mirrored:
        # x ↦ 1 − x: μ ↦ 1 − μ, z ↦ −z
        mu = 1.0 - mu
        directions = -directions
        vectors = -vectors
    return NiceEdge(mu=mu, directions=directions, vectors=vectors, beta=beta, nu=achieved, mirrored=mirrored)


def _lower_frame(edge: NiceEdge) -> Tuple[np.ndarray, np.ndarray]:
    """Sesgos ≤ ½ y direcciones del marco sin espejo"""
    if edge.mirrored:
        return 1.0 - edge.mu, -edge.directions
    return edge.mu, edge.directions


def check_premises(edge: NiceEdge, delta: float, variant: str = "fix-edge") -> Dict[str, float]:
    """
    Verificar las premisas del lema de redondeo y sus consecuencias (a)–(g)

    Returns:
        Holguras de cada propiedad (≤ 0 se cumple)

    Raises:
        InvalidInputError: "premise violation" si alguna no se cumple
    """
    mu, directions = _lower_frame(edge)
    d, nu = edge.d, edge.nu
    A = rounding_constants(d, delta, variant)
    c0 = settings.C0
    rho = directions[1:] @ directions[0]
    theta_m = float((1.0 - rho ** 2).max()) if d > 1 else 0.0
    t = phi_inv_array(mu)
    slack = {
        "ordering": float(np.max(np.diff(mu))) if d > 1 else 0.0,
        "half": float(mu[0] - 0.5),
        "dominance": float(max(A * nu, delta ** c0) - mu[0]),
        "bias_spread": float(np.abs(mu[:, None] - mu[None, :]).max() - 2.0 * nu),
        "bias_ratio": float((mu.max() / mu.min()) - 2.0),
        "spread_geometric": float(theta_m - 2.0 * nu / math.sqrt(mu[0] * mu[1:].min())) if d > 1 else 0.0,
        "spread_bias": float(theta_m - 2.0 * nu / mu.min()),
        "bias_floor": float(delta ** c0 - mu.min()),
        "threshold_bound": float(np.abs(t).max() - 2.0 * math.sqrt(c0 * math.log(2.0 / delta))),
        "correlation_floor": float(0.9 - rho.min()) if d > 1 else 0.0,
    }
    tol = 1e-12 * max(1.0, A * nu)
    violated = {name: value for name, value in slack.items() if value > tol}
    if violated:
        logger.error(f"Premisas violadas en la arista construida: {violated}")
        raise InvalidInputError(f"premise violation: {sorted(violated)}", {"slack": slack})
    return slack


# ============================================================================
# Descomposición g_j = ρ_j g_1 + √(1−ρ_j²) ζ_j y lados del umbral
# ============================================================================

def gaussian_decomposition(
    directions: np.ndarray,
    g: np.ndarray
) -> Tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """
    Descomponer las proyecciones respecto de la primera dirección

    Args:
        directions: d × r direcciones unitarias (b_1 en la fila 0)
        g: muestras N × r de N(0, I_r)

    Returns:
        (ρ_j, √(1−ρ_j²), ζ_j por muestra, proyecciones g_j por muestra), con
        ζ_j = ⟨g, b′_j⟩ y b′_j la componente unitaria de b_j ortogonal a b_1
        (ζ_j = 0 si b_j = b_1)
    """
    b1 = directions[0]
    rho = directions[1:] @ b1
    orthogonal = directions[1:] - rho[:, None] * b1[None, :]
    # ‖b_j − ρ_j b_1‖ = √(1 − ρ_j²) sin la cancelación de 1 − ρ_j²
    scale = np.linalg.norm(orthogonal, axis=1)
    unit = np.zeros_like(orthogonal)
    nonzero = scale > 0
    unit[nonzero] = orthogonal[nonzero] / scale[nonzero, None]
    return rho, scale, g @ unit.T, g @ directions.T


def decomposition_error(rho: np.ndarray, scale: np.ndarray, zeta: np.ndarray, samples: np.ndarray) -> float:
    """máx |ρ_j g_1 + √(1−ρ_j²) ζ_j − g_j|"""
    if samples.shape[1] < 2:
        return 0.0
    rebuilt = samples[:, :1] * rho[None, :] + zeta * scale[None, :]
    return float(np.abs(rebuilt - samples[:, 1:]).max())


def sidedness_violations(
    rho: np.ndarray,
    scale: np.ndarray,
    zeta: np.ndarray,
    samples: np.ndarray,
    thresholds: np.ndarray
) -> int:
    """
    Contar muestras que contradicen las implicaciones de lado:
    g_1 ≤ t′_d − 2a√θ̃ ⇒ g_j < t_j y g_1 ≥ t_1 + 2a√θ̃ ⇒ g_j > t_j (j ≥ 2),
    con a = máx|ζ_j|, θ̃ = máx(1 − ρ_j²) y t′_d = t_d/ρ_{j*}
    """
    if samples.shape[1] < 2:
        return 0
    j_star = int(np.argmax(scale))
    root_theta = float(scale[j_star])
    t_low = float(thresholds.min()) / float(rho[j_star])
    margin = 2.0 * np.abs(zeta).max(axis=1) * root_theta
    g1, rest, t_rest = samples[:, 0], samples[:, 1:], thresholds[None, 1:]

    lower = g1 <= t_low - margin
    upper = g1 >= thresholds[0] + margin
    bad_lower = lower & (rest > t_rest + SIDEDNESS_TOL).any(axis=1)
    bad_upper = upper & (rest < t_rest - SIDEDNESS_TOL).any(axis=1)
    return int(bad_lower.sum() + bad_upper.sum())


# ============================================================================
# Barrido del lema de redondeo
# ============================================================================

def lemma_cell(
    d: int,
    delta: float,
    nu_fraction: float,
    N: int,
    seed: int,
    cell: int,
    mirrored: bool = False
) -> Row:
    """
    Una celda del barrido: construir la arista, verificar premisas y muestrear

    La celda espejo usa las mismas muestras g que la original.
    """
    variant = "symmetric" if mirrored else "fix-edge"
    mu1 = min(delta, 0.5)
    nu_target = nu_fraction * mu1 / rounding_constants(d, delta, "fix-edge")
    edge = nice_edge_instance(d, mu1, nu_target, mirrored=mirrored)
    check_premises(edge, delta, variant)

    mu, directions = _lower_frame(edge)
    thresholds = phi_inv_array(mu)
    mirrored_thresholds = edge.thresholds()
    rng = stream(seed, "sweep", cell)
    hits = violations = 0
    worst = 0.0
    zeta_sum = zeta_sq_sum = 0.0
    for _, size in _batches(N):
        g = rng.standard_normal((size, d + 1))
        rho, scale, zeta, samples = gaussian_decomposition(directions, g)
        # el evento de corte se evalúa en el marco propio de la arista
        own = -samples if mirrored else samples
        own_thresholds = mirrored_thresholds if mirrored else thresholds
        hits += int(cut_events(own, own_thresholds).sum())
        violations += sidedness_violations(rho, scale, zeta, samples, thresholds)
        worst = max(worst, decomposition_error(rho, scale, zeta, samples))
        zeta_max = np.abs(zeta).max(axis=1) if zeta.shape[1] else np.zeros(size)
        zeta_sum += float(zeta_max.sum())
        zeta_sq_sum += float((zeta_max ** 2).sum())

    p_hat = hits / N
    low, high = wilson_interval(hits, N)
    log_d, log_delta = math.log(d), math.log(1.0 / delta)
    bound = math.sqrt(edge.alpha * edge.nu * log_d * log_delta)
    ratio = p_hat / bound if bound > 0 else (0.0 if hits == 0 else math.inf)
    zeta_mean, zeta_sq_mean = zeta_sum / N, zeta_sq_sum / N
    zeta_ok = zeta_mean <= math.sqrt(ZETA_C * log_d) and zeta_sq_mean <= ZETA_C * log_d
    passed = ratio <= settings.CALIBRATION_K and violations == 0 and worst <= DECOMPOSITION_TOL and zeta_ok
    return {
        "d": d,
        "delta": delta,
        "nu_fraction": nu_fraction,
        "variant": variant,
        "mirrored": mirrored,
        "mu1": float(edge.mu[0]),
        "nu": edge.nu,
        "alpha": edge.alpha,
        "samples": N,
        "p_hat": p_hat,
        "ci_low": low,
        "ci_high": high,
        "bound": bound,
        "ratio": ratio,
        "K": settings.CALIBRATION_K,
        "sidedness_violations": violations,
        "decomposition_error": worst,
        "zeta_mean": zeta_mean,
        "zeta_sq_mean": zeta_sq_mean,
        "zeta_bound": ZETA_C * log_d,
        "pass": passed,
    }


def rounding_lemma_sweep(
    ds: Sequence[int] = D_GRID,
    deltas: Sequence[float] = DELTA_GRID,
    nu_fractions: Sequence[float] = NU_FRACTIONS,
    N: Optional[int] = None,
    seed: int = 0,
    mirrored: Sequence[bool] = (False, True)
) -> List[Row]:
    """
    Barrer la grilla (d, δ, ν) con ν = fracción · μ_1/A_{d,δ}

    Returns:
        Una fila por celda y variante (ver LEMMA_COLUMNS)
    """
    N = settings.MC_TRIALS if N is None else N
    if N < MIN_SAMPLES:
        raise InvalidInputError(f"Se requieren al menos {MIN_SAMPLES} muestras (N={N})")
    rows = []
    cell = 0
    for d in ds:
        for delta in deltas:
            for fraction in nu_fractions:
                for flag in mirrored:
                    rows.append(lemma_cell(d, delta, fraction, N, seed, cell, mirrored=flag))
                cell += 1
    failures = sum(1 for row in rows if not row["pass"])
    logger.info(f"Barrido del lema: {len(rows)} celdas, {failures} fallas")
    return rows


# ============================================================================
# Concentración del tamaño
# ============================================================================

def size_concentration(
    H: WeightedHypergraph,
    ss: ShiftedSolution,
    delta: float,
    seed: int,
    trials: int = 200
) -> Row:
    """Fracción de ensayos cuyo peso relativo cae en la ventana [0.9, 1.1]·δ"""
    if trials < 1:
        raise InvalidInputError("Se requiere al menos un ensayo")
    total = H.total_vertex_weight
    relative = np.array([H.weight(S) / total for S in round_trials(ss, seed, trials)])
    inside = sum(in_window(r, delta, settings.VALID_WINDOW) for r in relative)
    theorem_inside = sum(in_window(r, delta, settings.THEOREM_WINDOW) for r in relative)
    return {
        "seed": seed,
        "trials": trials,
        "inside": int(inside),
        "theorem_inside": int(theorem_inside),
        "fraction": inside / trials,
        "mean_relative_weight": float(relative.mean()),
    }


def concentration_check(
    instances: Sequence[Instance],
    config: PipelineConfig,
    trials: int = 200,
    required: float = 0.8
) -> List[Row]:
    """
    Correr el pipeline hasta el desplazamiento y medir la concentración del peso

    Args:
        instances: Grafos (modo ssve) o hipergrafos (modo hsse)
        config: Configuración común; la semilla de cada instancia es config.seed + índice
        trials: Ensayos de redondeo por instancia (≥ 100)
        required: Fracción mínima dentro de la ventana

    Returns:
        Una fila por instancia (ver CONCENTRATION_COLUMNS)
    """
    if trials < 100:
        raise InvalidInputError(f"Se requieren al menos 100 ensayos (trials={trials})")
    rows = []
    for index, instance in enumerate(instances):
        run_config = config.model_copy(update={"seed": config.seed + index})
        run = prepare_rounding(instance, run_config)
        row = size_concentration(run.hypergraph, run.shifted, config.delta, run_config.seed, trials)
        row["instance"] = index
        row["pass"] = row["fraction"] >= required
        rows.append(row)
        logger.info(f"Concentración instancia {index}: {row['inside']}/{trials} en la ventana")
    return rows


# ============================================================================
# Desigualdades de la CDF gaussiana
# ============================================================================

def _row(fact: str, t: float, eps_or_delta: float, lhs: float, rhs: float, slack: float = 1.0) -> Row:
    return {
        "fact": fact,
        "t": float(t),
        "eps_or_delta": float(eps_or_delta),
        "lhs": float(lhs),
        "rhs": float(rhs),
        "pass": bool(lhs <= slack * rhs),
    }


def _deterministic_facts() -> List[Row]:
    rows = []
    for x in np.linspace(-6.0, 6.0, 25):
        for z in (-1.0, -0.1, 1e-3, 1e-2, 0.1, 0.5, 1.0, 2.0):
            rows.append(_row("lipschitz", x, z, abs(phi(x + z) - phi(x)), abs(z) / math.sqrt(2.0 * math.pi)))

    for t in np.linspace(-8.0, -0.1, 80):
        gaussian = density(t)
        value = phi(t)
        rows.append(_row("mills_lower", t, 0.0, gaussian / (math.sqrt(2.0 + t * t) + abs(t)), value))
        rows.append(_row("mills_upper", t, 0.0, value, gaussian / abs(t)))

    for mu in np.logspace(-12.0, math.log10(0.49), 40):
        rows.append(_row("inverse_bound", phi_inv(mu), mu, abs(phi_inv(mu)), tail_bound(mu)))

    for t in np.linspace(-6.0, 0.0, 61):
        value = phi(t)
        for eps in (1e-5, 1e-4, 1e-3, 1e-2):
            rows.append(_row(
                "left_increment", t, eps,
                value - phi(t - eps),
                4.0 * eps * value * math.sqrt(math.log(1.0 / value))
            ))

    for t in np.linspace(-6.0, -0.1, 60):
        value = phi(t)
        for step in (0.01, 0.1, 0.25, 0.5, 0.9, 0.99):
            if step * abs(t) > 1.0:
                continue
            rows.append(_row(
                "right_increment", t, step,
                phi(t + step) - value,
                24.0 * value * step * math.sqrt(math.log(1.0 / value))
            ))
    return rows


def _maximum_facts(samples: int, seed: int) -> List[Row]:
    rows = []
    case = 0
    for d in (8, 64):
        for rho in (0.0, 0.5):
            correlation = np.full((d, d), rho) + (1.0 - rho) * np.eye(d)
            ensemble = GaussianEnsembleSpec.from_correlation(correlation, seed=seed)
            maxima = []
            for index, size in _batches(samples):
                draw = sample_ensemble(ensemble, size, generator=stream(seed, "cdf", case * 1000 + index))
                maxima.append(np.abs(draw).max(axis=1))
            case += 1
            peak = np.concatenate(maxima)
            log_d = math.log(d)
            for C in (4.0, 8.0):
                level = math.sqrt(C * log_d)
                rows.append(_row("max_tail", level, d, float((peak >= level).mean()), math.exp(-C * log_d / 4.0), MC_SLACK))
            rows.append(_row("max_second_moment", rho, d, float((peak ** 2).mean()), ZETA_C * log_d, MC_SLACK))
            rows.append(_row("max_first_moment", rho, d, float(peak.mean()), math.sqrt(ZETA_C * log_d), MC_SLACK))
    return rows


def cdf_fact_check(seed: int = 0, samples: int = 100_000) -> List[Row]:
    """
    Evaluar cada desigualdad sobre su grilla

    Las desigualdades deterministas usan sus constantes (4 y 24); las de
    máximos de gaussianas se estiman por Monte Carlo con holgura 2×.

    Returns:
        Filas (fact, t, eps_or_delta, lhs, rhs, pass)
    """
    rows = _deterministic_facts() + _maximum_facts(samples, seed)
    failures = [row for row in rows if not row["pass"]]
    for row in failures[:10]:
        logger.warning(f"Falla {row['fact']} en t={row['t']:.4g}, ε/δ={row['eps_or_delta']:.4g}")
    logger.info(f"Hechos de la CDF: {len(rows)} filas, {len(failures)} fallas")
    return rows


# ============================================================================
# Monotonía en la correlación
# ============================================================================

def correlation_monotonicity(
    d: int = 4,
    mu: float = 0.25,
    correlations: Sequence[float] = (0.0, 0.25, 0.5, 0.75, 0.9, 0.99),
    N: int = 100_000,
    seed: int = 0
) -> List[Row]:
    """
    p̂ a lo largo de ensambles equicorrelacionados con umbrales fijos

    Todas las familias comparten las muestras g; cada fila pasa si p̂ no
    excede el valor anterior más la suma de las semianchuras de los intervalos.
    """
    thresholds = np.full(d, phi_inv(mu))
    rows: List[Row] = []
    previous: Optional[Tuple[float, float]] = None
    for rho in sorted(correlations):
        correlation = np.full((d, d), rho) + (1.0 - rho) * np.eye(d)
        ensemble = GaussianEnsembleSpec.from_correlation(correlation, seed=seed)
        p_hat, (low, high) = estimate_cut_probability(ensemble, thresholds, N, seed)
        width = (high - low) / 2.0
        passed = previous is None or p_hat <= previous[0] + previous[1] + width
        rows.append({
            "rho": rho,
            "pair_information": gaussian_mutual_information(correlation[:2, :2]),
            "p_hat": p_hat,
            "ci_low": low,
            "ci_high": high,
            "pass": passed
        })
        previous = (p_hat, width)
    return rows
