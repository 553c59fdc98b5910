"""
blockbetti - Betti tables of binomial edge ideals of block graphs
"""

__version__ = "0.1.0"
