"""domenum - minimal dominating set and hypergraph transversal enumeration."""

__version__ = "1.0.0"
