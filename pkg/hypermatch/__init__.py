"""
hypermatch: exact LP-relative approximation for k-hypergraph b-matching
and demand matching
"""

__version__ = '0.1.0'
