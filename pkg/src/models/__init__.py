"""
Modelos numéricos del dominio
"""
from .graph import CutSet, Graph
from .hypergraph import WeightedHypergraph
from .pseudo_distribution import MonomialBasis, PseudoDistribution
from .vector_solution import VectorSolution, ShiftedSolution
from .ensemble import GaussianEnsembleSpec

__all__ = [
    "CutSet",
    "Graph",
    "WeightedHypergraph",
    "MonomialBasis",
    "PseudoDistribution",
    "VectorSolution",
    "ShiftedSolution",
    "GaussianEnsembleSpec",
]
