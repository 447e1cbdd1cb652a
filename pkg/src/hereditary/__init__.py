"""Graph-class laboratory: hereditary classes, containment orderings and forbidden subgraphs."""

from hereditary.graph import (
    CapacityError,
    Graph,
    canonical_code,
    complement,
    complete,
    complete_bipartite,
    cycle,
    degree,
    induced_subgraph,
    is_isomorphic,
    neighborhood,
    path,
    petersen,
)
from hereditary.graph6 import Graph6Error, parse_graph6, to_graph6

__all__ = [
    "CapacityError",
    "Graph",
    "Graph6Error",
    "canonical_code",
    "complement",
    "complete",
    "complete_bipartite",
    "cycle",
    "degree",
    "induced_subgraph",
    "is_isomorphic",
    "neighborhood",
    "parse_graph6",
    "path",
    "petersen",
    "to_graph6",
]
