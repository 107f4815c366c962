"""
Instance transformations onto bipartite hypergraph b-matching

Components:
    bounded_color_to_bipartite / solve_bounded_color: color budgets as vertices
    auction_to_bipartite / sample_allocation: explicit bids as hyperedges
    EdgeMap: source object <-> reduced edge correspondence
"""

from .edge_map import EdgeMap
from .bounded_color import (
    ColoredInstance,
    validate_colored,
    is_colored_feasible,
    bounded_color_to_bipartite,
    solve_bounded_color,
)
from .auction import (
    Bid,
    AuctionInput,
    Allocation,
    validate_auction,
    auction_to_bipartite,
    build_allocation_lp,
    empty_set_slack,
    allocation_of,
    sample_allocation,
)

__all__ = [
    'EdgeMap',
    'ColoredInstance',
    'validate_colored',
    'is_colored_feasible',
    'bounded_color_to_bipartite',
    'solve_bounded_color',
    'Bid',
    'AuctionInput',
    'Allocation',
    'validate_auction',
    'auction_to_bipartite',
    'build_allocation_lp',
    'empty_set_slack',
    'allocation_of',
    'sample_allocation',
]
