"""Data models for domenum.

This package contains:
- graph.py: Graph, VertexSet and the neighbourhood/component primitives
- hypergraph.py: Hypergraph, minimisation, simplicity and transversal predicates
- structures.py: partitions, labelings, certificates and delay statistics
"""

from domenum.models.graph import Graph, VertexSet
from domenum.models.hypergraph import (
    Hypergraph,
    SimplicityReport,
    SimplicityViolation,
)
from domenum.models.structures import (
    ChordalCheck,
    DelayStats,
    EnumerationOrder,
    ForbiddenSubgraph,
    IncidenceLabels,
    InducedPathCheck,
    RedundancyLabeling,
    SeparatorFamily,
    SeparatorSource,
    SplitCheck,
    SplitPartition,
)

__all__ = [
    # Graph models
    "Graph",
    "VertexSet",
    # Hypergraph models
    "Hypergraph",
    "SimplicityReport",
    "SimplicityViolation",
    # Certificates and labelings
    "ChordalCheck",
    "DelayStats",
    "EnumerationOrder",
    "ForbiddenSubgraph",
    "IncidenceLabels",
    "InducedPathCheck",
    "RedundancyLabeling",
    "SeparatorFamily",
    "SeparatorSource",
    "SplitCheck",
    "SplitPartition",
]
