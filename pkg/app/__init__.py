"""
Path decompositions of complete graphs and of K_n minus small subgraphs.
"""

__version__ = "0.1.0"
