"""
Relajación SDP de grado R para HSSE

La matriz de momentos M (PSD, simétrica) se indexa por monomios de grado
≤ R/2; la entrada M[A, B] representa y_{A∪B}. Todas las restricciones
lineales se arman como matrices dispersas sobre vec(M) (orden columna) y
sobre las variables de epígrafe c_e.
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional, Tuple

import cvxpy as cp
import numpy as np
from scipy import sparse

from ..config import settings
from ..models.hypergraph import WeightedHypergraph
from ..models.pseudo_distribution import Monomial, MonomialBasis, PseudoDistribution
from ..utils.errors import DegenerateInputError, InvalidInputError, SolverError

logger = logging.getLogger(__name__)

SUPPORTED_DEGREES = (2, 4)


class _Rows:
    """Acumulador de filas lineales A_M·vec(M) + A_c·c (== | ≤) rhs"""

    def __init__(self, side: int, edges: int):
        self.side = side
        self.edges = edges
        self.m_entries: List[Tuple[int, int, float]] = []
        self.c_entries: List[Tuple[int, int, float]] = []
        self.rhs: List[float] = []

    def add(self, moment_terms: Mapping[int, float], rhs: float = 0.0,
            epigraph_terms: Optional[Mapping[int, float]] = None) -> None:
        row = len(self.rhs)
        for column, value in moment_terms.items():
            if value != 0.0:
                self.m_entries.append((row, column, value))
        for column, value in (epigraph_terms or {}).items():
            self.c_entries.append((row, column, value))
        self.rhs.append(rhs)

    def __len__(self) -> int:
        return len(self.rhs)

    def _matrix(self, entries, columns: int) -> sparse.csr_matrix:
        rows = np.array([entry[0] for entry in entries], dtype=np.int64)
        cols = np.array([entry[1] for entry in entries], dtype=np.int64)
        values = np.array([entry[2] for entry in entries], dtype=np.float64)
        return sparse.csr_matrix((values, (rows, cols)), shape=(len(self.rhs), columns))

    def expression(self, moment: cp.Variable, epigraph: cp.Variable):
        expr = self._matrix(self.m_entries, self.side * self.side) @ cp.vec(moment)
        if self.c_entries:
            expr = expr + self._matrix(self.c_entries, self.edges) @ epigraph
        return expr

    def equal(self, moment: cp.Variable, epigraph: cp.Variable) -> cp.Constraint:
        return self.expression(moment, epigraph) == np.array(self.rhs)

    def at_most(self, moment: cp.Variable, epigraph: cp.Variable) -> cp.Constraint:
        return self.expression(moment, epigraph) <= np.array(self.rhs)


@dataclass
class RelaxationProblem:
    """
    Problema SDP construido para un hipergrafo

    Attributes:
        hypergraph: instancia HSSE
        delta: peso relativo objetivo
        degree: grado R de la jerarquía
        basis: base de monomios de grado ≤ R
        moment: variable cvxpy de la matriz de momentos
        epigraph: variables c_e, una por hiperarista
        constraints: restricciones por grupo (normalization, linking, psd, ...)
        counts: número de restricciones lógicas por grupo
        objective_coefficients: w(e)/(δ·W(V))
        pins: etiquetas fijadas x_i = a
    """

    hypergraph: WeightedHypergraph
    delta: float
    degree: int
    basis: MonomialBasis
    moment: cp.Variable
    epigraph: cp.Variable
    constraints: Dict[str, cp.Constraint]
    counts: Dict[str, int]
    objective_coefficients: np.ndarray
    pins: Dict[int, int] = field(default_factory=dict)
    diagnostics: Dict[str, object] = field(default_factory=dict)

    @property
    def moment_side(self) -> int:
        return len(self.basis.rows)

    @property
    def problem(self) -> cp.Problem:
        objective = cp.Minimize(self.objective_coefficients @ self.epigraph)
        return cp.Problem(objective, list(self.constraints.values()))

    def summary(self) -> Dict[str, object]:
        return {
            "n": self.hypergraph.n,
            "m": self.hypergraph.m,
            "delta": self.delta,
            "degree": self.degree,
            "moment_side": self.moment_side,
            "counts": dict(self.counts),
            "pins": {str(k): v for k, v in sorted(self.pins.items())}
        }


def build_relaxation(
    H: WeightedHypergraph,
    delta: float,
    R: int = 2,
    include_l1: bool = True,
    pins: Optional[Mapping[int, int]] = None,
    lifted_cardinality: bool = True
) -> RelaxationProblem:
    """
    Construir la relajación de grado R

    Args:
        H: Hipergrafo ponderado
        delta: Peso relativo δ ∈ (0, ½]
        R: Grado (2 o 4)
        include_l1: Incluir las restricciones ℓ1 |μ_i − μ_j| ≤ Pr̃[x_i ≠ x_j]
        pins: Etiquetas fijadas {vértice: bit}
        lifted_cardinality: Imponer también Σ_k W_k y_ki = δ·W(V)·y_i para cada i;
            sin estas filas queda la relajación básica (solo la cardinalidad raíz)

    Returns:
        RelaxationProblem listo para solve_sdp

    Raises:
        InvalidInputError: δ fuera de rango, R no soportado, W(V) = 0 o matriz demasiado grande
    """
    if not (0.0 < delta <= 0.5):
        raise InvalidInputError(f"δ = {delta} fuera de (0, 1/2]")
    if R not in SUPPORTED_DEGREES:
        raise InvalidInputError(f"Grado R = {R} no soportado (use 2 o 4)")
    total_weight = H.total_vertex_weight
    if total_weight <= 0:
        raise InvalidInputError("W(V) debe ser positivo")

    basis = MonomialBasis.create(H.n, R)
    side = len(basis.rows)
    if side > settings.MAX_MOMENT_SIDE:
        raise InvalidInputError(
            f"Matriz de momentos de lado {side} excede MAX_MOMENT_SIDE={settings.MAX_MOMENT_SIDE}"
        )

    positions = basis.positions()
    flat: Dict[Monomial, int] = {mono: cells[0][0] + cells[0][1] * side for mono, cells in positions.items()}

    def y(*vertices: int) -> int:
        return flat[tuple(sorted(set(vertices)))]

    def terms(*pairs: Tuple[float, int]) -> Dict[int, float]:
        accumulated: Dict[int, float] = {}
        for coefficient, column in pairs:
            accumulated[column] = accumulated.get(column, 0.0) + coefficient
        return accumulated

    moment = cp.Variable((side, side), symmetric=True)
    epigraph = cp.Variable(H.m)
    groups: Dict[str, _Rows] = {}
    counts: Dict[str, int] = {}

    def rows(name: str) -> _Rows:
        return groups.setdefault(name, _Rows(side, H.m))

    # Normalización y consistencia de momentos
    rows("normalization").add({y(): 1.0}, 1.0)
    for mono, cells in positions.items():
        canonical = flat[mono]
        for a, b in cells[1:]:
            rows("linking").add(terms((1.0, a + b * side), (-1.0, canonical)))

    # Epígrafe: c_e ≥ Pr̃[x_i ≠ x_j] para cada par dentro de e
    pairs = H.pair_index()
    for e, i, j in pairs:
        rows("epigraph").add(terms((1.0, y(i)), (1.0, y(j)), (-2.0, y(i, j))), 0.0, {e: -1.0})
    counts["epigraph"] = len(pairs)

    # ℓ1: |y_i − y_j| ≤ y_i + y_j − 2y_ij
    if include_l1:
        for _, i, j in pairs:
            rows("l1").add(terms((2.0, y(i, j)), (-2.0, y(j))))
            rows("l1").add(terms((2.0, y(i, j)), (-2.0, y(i))))
        counts["l1"] = len(pairs)

    # Cardinalidad: Σ W_i y_i = δ·W(V)
    W = H.vertex_weights
    rows("cardinality").add(terms(*((W[i], y(i)) for i in range(H.n))), delta * total_weight)
    counts["cardinality"] = 1
    if lifted_cardinality:
        # también bajo cada condicionamiento de una variable
        for i in range(H.n):
            rows("cardinality_conditioned").add(
                terms(*((W[k], y(k, i)) for k in range(H.n)), (-delta * total_weight, y(i)))
            )
        counts["cardinality_conditioned"] = H.n

    # Distribuciones locales por pares (implícitas en la PSD a grado ≥ 4)
    if R == 2:
        for i in range(H.n):
            for j in range(i + 1, H.n):
                rows("pair_locals").add({y(i, j): -1.0})
                rows("pair_locals").add(terms((1.0, y(i, j)), (-1.0, y(i))))
                rows("pair_locals").add(terms((1.0, y(i, j)), (-1.0, y(j))))
                rows("pair_locals").add(terms((1.0, y(i)), (1.0, y(j)), (-1.0, y(i, j))), 1.0)
        counts["pair_locals"] = H.n * (H.n - 1) // 2

    pins = {int(k): int(v) for k, v in (pins or {}).items()}
    for vertex, value in sorted(pins.items()):
        if value not in (0, 1) or not (0 <= vertex < H.n):
            raise InvalidInputError(f"Etiqueta fijada inválida: x_{vertex} = {value}")
        rows("pins").add({y(vertex): 1.0}, float(value))
    counts["pins"] = len(pins)

    constraints: Dict[str, cp.Constraint] = {"psd": moment >> 0, "epigraph_sign": epigraph >= 0}
    for name, group in groups.items():
        if not len(group):
            continue
        if name in ("epigraph", "l1", "pair_locals"):
            constraints[name] = group.at_most(moment, epigraph)
        else:
            constraints[name] = group.equal(moment, epigraph)
    counts["linking"] = len(groups["linking"]) if "linking" in groups else 0

    coefficients = H.edge_weights / (delta * total_weight)
    logger.info(
        f"Relajación construida: n={H.n}, m={H.m}, R={R}, lado={side}, "
        f"restricciones={ {k: v for k, v in counts.items() if v} }"
    )
    return RelaxationProblem(
        hypergraph=H,
        delta=delta,
        degree=R,
        basis=basis,
        moment=moment,
        epigraph=epigraph,
        constraints=constraints,
        counts=counts,
        objective_coefficients=coefficients,
        pins=pins
    )


def _solver_options(solver: str, tol: float) -> Dict[str, object]:
    precision = min(1e-8, tol / 100.0)
    if solver == "CLARABEL":
        return {
            "max_iter": settings.SDP_MAX_ITERS,
            "tol_gap_abs": precision,
            "tol_gap_rel": precision,
            "tol_feas": precision
        }
    if solver == "SCS":
        # primer orden: tol/10
        return {"max_iters": settings.SCS_MAX_ITERS, "eps_abs": tol / 10.0, "eps_rel": tol / 10.0}
    return {}


def solver_sequence(side: int) -> Tuple[str, ...]:
    """Solvers a intentar, en orden, para una matriz de momentos de lado `side`"""
    if side > settings.SDP_LARGE_SIDE:
        return (settings.SDP_FALLBACK_SOLVER,)
    return (settings.SDP_SOLVER, settings.SDP_FALLBACK_SOLVER)


def _duality_gap(cvx_problem: cp.Problem) -> Optional[float]:
    stats = cvx_problem.solver_stats.extra_stats if cvx_problem.solver_stats else None
    if isinstance(stats, dict):
        info = stats.get("info", stats)
        if isinstance(info, dict) and "gap" in info:
            return float(abs(info["gap"]))
        return None
    primal = getattr(stats, "obj_val", None)
    dual = getattr(stats, "obj_val_dual", None)
    if primal is None or dual is None:
        return None
    return float(abs(primal - dual))


def _residuals(problem: RelaxationProblem) -> Dict[str, float]:
    residuals = {}
    for name, constraint in problem.constraints.items():
        if name == "psd":
            continue
        violation = constraint.violation()
        residuals[name] = float(np.max(np.atleast_1d(violation))) if np.size(violation) else 0.0
    return residuals


def _moment_values(problem: RelaxationProblem, matrix: np.ndarray) -> np.ndarray:
    matrix = (matrix + matrix.T) / 2.0
    positions = problem.basis.positions()
    values = np.empty(len(problem.basis))
    for k, mono in enumerate(problem.basis.monomials):
        cells = positions[mono]
        values[k] = np.mean([matrix[a, b] for a, b in cells])
    return values


def solve_sdp(problem: RelaxationProblem, tol: Optional[float] = None) -> Tuple[PseudoDistribution, float]:
    """
    Resolver la relajación

    Se intenta SDP_SOLVER y, si falla, SDP_FALLBACK_SOLVER; por encima de
    SDP_LARGE_SIDE solo SDP_FALLBACK_SOLVER. Los residuos primales y el
    autovalor mínimo se verifican contra `tol`; los detalles (incluida la
    brecha de dualidad) quedan en problem.diagnostics.

    Returns:
        (pseudo-distribución de grado R, valor objetivo)

    Raises:
        DegenerateInputError: relajación infactible (p. ej. etiquetas fijadas incompatibles)
        SolverError: sin convergencia o residuos por encima de tol
    """
    tol = settings.SDP_TOL if tol is None else tol
    cvx_problem = problem.problem
    attempts = []
    for solver in solver_sequence(problem.moment_side):
        try:
            cvx_problem.solve(solver=solver, **_solver_options(solver, tol))
        except cp.error.SolverError as exc:
            logger.warning(f"El solver {solver} falló: {exc}")
            attempts.append({"solver": solver, "status": "error"})
            continue
        attempts.append({"solver": solver, "status": cvx_problem.status})
        if cvx_problem.status in (cp.INFEASIBLE, cp.INFEASIBLE_INACCURATE):
            problem.diagnostics = {"attempts": attempts}
            raise DegenerateInputError(
                "infeasible relaxation: el problema no tiene solución factible",
                {"pins": problem.pins, "status": cvx_problem.status}
            )
        if cvx_problem.status in (cp.OPTIMAL, cp.OPTIMAL_INACCURATE):
            if cvx_problem.status == cp.OPTIMAL_INACCURATE:
                logger.warning(f"El solver {solver} reportó una solución inexacta")
            break
    else:
        problem.diagnostics = {"attempts": attempts}
        logger.error(f"Ningún solver convergió: {attempts}")
        raise SolverError("El SDP no convergió dentro del presupuesto de iteraciones", {"attempts": attempts})

    residuals = _residuals(problem)
    matrix = np.asarray(problem.moment.value)
    min_eigenvalue = float(np.linalg.eigvalsh((matrix + matrix.T) / 2.0).min())
    worst = max(residuals.values(), default=0.0)
    problem.diagnostics = {
        "attempts": attempts,
        "solver": attempts[-1]["solver"],
        "status": cvx_problem.status,
        "residuals": residuals,
        "min_eigenvalue": min_eigenvalue,
        "duality_gap": _duality_gap(cvx_problem)
    }
    gap = problem.diagnostics["duality_gap"]
    if gap is not None and gap > tol:
        logger.warning(f"Brecha de dualidad {gap:.3e} por encima de tol={tol:.1e}")
    if worst > tol or min_eigenvalue < -tol:
        logger.error(f"Residuos fuera de tolerancia: {residuals}, λ_min={min_eigenvalue:.3e}")
        raise SolverError(
            f"Residuos del SDP por encima de tol={tol:.1e}",
            {"residuals": residuals, "min_eigenvalue": min_eigenvalue}
        )

    pd = PseudoDistribution(problem.basis, _moment_values(problem, matrix))
    value = float(problem.objective_coefficients @ np.asarray(problem.epigraph.value))
    logger.info(f"SDP resuelto con {problem.diagnostics['solver']}: valor={value:.6f}")
    return pd, value
