"""
Lectura y escritura de instancias, reportes y tablas
"""
import csv
import hashlib
import json
import logging
from pathlib import Path
from typing import Dict, Iterable, Optional, Sequence, Union

import numpy as np
from pydantic import BaseModel, ValidationError

from ..models.graph import Graph
from ..models.hypergraph import WeightedHypergraph
from ..models.vector_solution import VectorSolution
from ..schemas.instance import HypergraphEdge, HypergraphFile, HypergraphVertex, VectorFile
from .errors import InvalidInputError

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


# ============================================================================
# Grafos (lista de aristas)
# ============================================================================

def parse_graph(text: str) -> Graph:
    """
    Formato: cabecera "n m", luego m líneas "u v" (base 0) y líneas
    opcionales "# weight v w". Otros comentarios "#" se ignoran.

    Raises:
        InvalidInputError: cabecera ausente, conteo de aristas inconsistente o líneas mal formadas
    """
    header = None
    edges = []
    weights: Dict[int, float] = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            tokens = line[1:].split()
            if tokens and tokens[0] == "weight":
                if len(tokens) != 3:
                    raise InvalidInputError(f"Línea {number}: se esperaba '# weight v w'")
                try:
                    weights[int(tokens[1])] = float(tokens[2])
                except ValueError as exc:
                    raise InvalidInputError(f"Línea {number}: peso inválido") from exc
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise InvalidInputError(f"Línea {number}: se esperaban dos enteros")
        try:
            a, b = int(tokens[0]), int(tokens[1])
        except ValueError as exc:
            raise InvalidInputError(f"Línea {number}: enteros inválidos") from exc
        if header is None:
            header = (a, b)
        else:
            edges.append((a, b))
    if header is None:
        raise InvalidInputError("Archivo de grafo sin cabecera 'n m'")
    n, m = header
    if len(edges) != m:
        raise InvalidInputError(f"La cabecera declara {m} aristas pero hay {len(edges)}")
    vertex_weights = np.ones(n)
    for v, w in weights.items():
        if not (0 <= v < n):
            raise InvalidInputError(f"Peso para el vértice {v} fuera de rango")
        vertex_weights[v] = w
    return Graph.from_edges(n, edges, vertex_weights)


def graph_to_text(G: Graph) -> str:
    lines = [f"{G.n} {G.m}"]
    lines.extend(f"{u} {v}" for u, v in G.edges())
    if np.any(G.vertex_weights != 1.0):
        lines.extend(f"# weight {v} {float(w)!r}" for v, w in enumerate(G.vertex_weights))
    return "\n".join(lines) + "\n"


def read_graph(path: PathLike) -> Graph:
    return parse_graph(_read_text(path))


def write_graph(G: Graph, path: PathLike) -> Path:
    return _write_text(path, graph_to_text(G))


# ============================================================================
# Hipergrafos (JSON)
# ============================================================================

def hypergraph_to_file(H: WeightedHypergraph) -> HypergraphFile:
    return HypergraphFile(
        vertices=[HypergraphVertex(id=v, W=float(w)) for v, w in enumerate(H.vertex_weights)],
        edges=[
            HypergraphEdge(
                members=list(e),
                w=float(H.edge_weights[index]),
                pi=None if H.pi is None else H.pi[index]
            )
            for index, e in enumerate(H.edges)
        ],
        n_source=H.n_source
    )


def hypergraph_from_file(data: HypergraphFile) -> WeightedHypergraph:
    pi = None
    if data.edges and data.edges[0].pi is not None:
        pi = [edge.pi for edge in data.edges]
    return WeightedHypergraph.build(
        n=len(data.vertices),
        edges=[edge.members for edge in data.edges],
        edge_weights=[edge.w for edge in data.edges],
        vertex_weights=[vertex.W for vertex in data.vertices],
        pi=pi,
        n_source=data.n_source
    )


def read_hypergraph(path: PathLike) -> WeightedHypergraph:
    try:
        data = HypergraphFile.model_validate_json(_read_text(path))
    except ValidationError as exc:
        raise InvalidInputError(f"Archivo de hipergrafo inválido: {exc.errors()[0]['msg']}") from exc
    return hypergraph_from_file(data)


def write_hypergraph(H: WeightedHypergraph, path: PathLike) -> Path:
    return _write_text(path, hypergraph_to_file(H).model_dump_json(indent=2) + "\n")


# ============================================================================
# Vectores
# ============================================================================

def write_vectors(vs: VectorSolution, path: PathLike, delta: Optional[float] = None, objective: Optional[float] = None) -> Path:
    data = VectorFile(phi=vs.phi.tolist(), vectors=vs.vectors.tolist(), delta=delta, objective=objective)
    return _write_text(path, data.model_dump_json(indent=2) + "\n")


def read_vectors(path: PathLike) -> VectorSolution:
    try:
        data = VectorFile.model_validate_json(_read_text(path))
    except ValidationError as exc:
        raise InvalidInputError(f"Archivo de vectores inválido: {exc.errors()[0]['msg']}") from exc
    return VectorSolution(phi=np.array(data.phi), vectors=np.array(data.vectors))


# ============================================================================
# Reportes, tablas y hash
# ============================================================================

def write_report(report: BaseModel, path: PathLike) -> Path:
    return _write_text(path, report.model_dump_json(indent=2) + "\n")


def write_csv(rows: Iterable[Dict[str, object]], path: PathLike, columns: Sequence[str]) -> Path:
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    with target.open("w", newline="", encoding="utf-8") as handle:
        writer = csv.DictWriter(handle, fieldnames=list(columns), extrasaction="ignore", lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow(row)
    logger.info(f"Tabla escrita en {target}")
    return target


def instance_hash(instance: Union[Graph, WeightedHypergraph]) -> str:
    """sha256 del contenido canónico de la instancia"""
    if isinstance(instance, Graph):
        payload: object = {
            "type": "graph",
            "n": instance.n,
            "edges": [list(e) for e in instance.edges()],
            "weights": [float(w) for w in instance.vertex_weights]
        }
    else:
        payload = {"type": "hypergraph", **hypergraph_to_file(instance).model_dump()}
    canonical = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


def _read_text(path: PathLike) -> str:
    target = Path(path)
    if not target.is_file():
        raise InvalidInputError(f"No existe el archivo {target}")
    return target.read_text(encoding="utf-8")


def _write_text(path: PathLike, text: str) -> Path:
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(text, encoding="utf-8")
    return target
