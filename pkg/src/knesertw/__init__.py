"""Generalized Kneser graphs, their tree decompositions and treewidth checks."""

__version__ = "0.1.0"
