"""Normal graph algebras over the rationals: exact construction,
classification of edge-square and pair-square graphs, incidence-matroid
circuits, and the Petersen graph case study."""

from .algebra import (
    Element,
    GradedMap,
    InvariantViolation,
    NormalAlgebra,
    build_canonical,
    graph_algebra,
    is_homomorphism,
    multiply,
)
from .graphs import Graph, census, from_edges, parse_graph6, to_graph6

__all__ = [
    "Element",
    "GradedMap",
    "Graph",
    "InvariantViolation",
    "NormalAlgebra",
    "build_canonical",
    "census",
    "from_edges",
    "graph_algebra",
    "is_homomorphism",
    "multiply",
    "parse_graph6",
    "to_graph6",
]

__version__ = "0.1.0"
