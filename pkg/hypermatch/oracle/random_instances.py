"""
Seeded random instance generators for the verification suites
"""
from fractions import Fraction
from typing import List, Tuple

import numpy as np

from hypermatch.core.hypergraph import BipartiteWitness, Hypergraph
from hypermatch.core.instances import BMatchInstance, DemandInstance, validate
from hypermatch.reductions.auction import AuctionInput, Bid, validate_auction
from hypermatch.reductions.bounded_color import ColoredInstance, validate_colored


def random_weight(rng: np.random.Generator) -> Fraction:
    """Rational in [0, 9] with denominator at most 4"""
    return Fraction(int(rng.integers(0, 10)), int(rng.integers(1, 5)))


def _subset(rng: np.random.Generator, low: int, high: int, size: int) -> Tuple[int, ...]:
    """size distinct ids from low..high-1"""
    return tuple(int(v) for v in rng.choice(np.arange(low, high), size=size, replace=False))


def random_bmatch(rng: np.random.Generator, k: int, max_vertices: int, max_edges: int,
                  b_range: Tuple[int, int] = (1, 3), c_range: Tuple[int, int] = (1, 2),
                  bipartite: bool = False) -> BMatchInstance:
    """
    Random k-hypergraph b-matching instance

    With bipartite=True the vertices split into U and W, and every edge takes
    exactly one vertex of U plus up to k-1 vertices of W.
    """
    if bipartite:
        k = max(k, 2)
        num_u = int(rng.integers(1, max(2, max_vertices - k + 2)))
        n = int(rng.integers(num_u + k - 1, max(num_u + k, max_vertices + 1)))
    else:
        n = int(rng.integers(k, max(k + 1, max_vertices + 1)))
        num_u = 0
    m = int(rng.integers(1, max_edges + 1))
    edges: List[Tuple[int, ...]] = []
    for _ in range(m):
        if bipartite:
            size = int(rng.integers(1, k))
            edge = (int(rng.integers(0, num_u)),) + _subset(rng, num_u, n, size)
        else:
            size = int(rng.integers(1, k + 1))
            edge = _subset(rng, 0, n, size)
        edges.append(edge)
    b = tuple(int(x) for x in rng.integers(b_range[0], b_range[1] + 1, size=n))
    c = tuple(int(x) for x in rng.integers(c_range[0], c_range[1] + 1, size=m))
    w = tuple(random_weight(rng) for _ in range(m))
    witness = BipartiteWitness(frozenset(range(num_u))) if bipartite else None
    return validate(BMatchInstance(Hypergraph.from_edges(n, edges), b, c, w, witness))


def random_demand(rng: np.random.Generator, k_max: int, max_vertices: int, max_edges: int,
                  b_range: Tuple[int, int] = (1, 6)) -> DemandInstance:
    """Random demand instance; each demand is at most the smallest b on its edge"""
    n = int(rng.integers(k_max, max(k_max + 1, max_vertices + 1)))
    m = int(rng.integers(1, max_edges + 1))
    b = tuple(int(x) for x in rng.integers(b_range[0], b_range[1] + 1, size=n))
    edges, demands = [], []
    for _ in range(m):
        edge = _subset(rng, 0, n, int(rng.integers(1, k_max + 1)))
        edges.append(edge)
        demands.append(int(rng.integers(1, min(b[v] for v in edge) + 1)))
    w = tuple(random_weight(rng) for _ in range(m))
    return validate(DemandInstance(Hypergraph.from_edges(n, edges), b, tuple(demands), w))


def random_colored(rng: np.random.Generator, max_vertices: int, max_edges: int,
                   max_colors: int, budget_range: Tuple[int, int] = (1, 3),
                   b_range: Tuple[int, int] = (1, 2)) -> ColoredInstance:
    """Random colored graph (edges of size 2)"""
    n = int(rng.integers(2, max(3, max_vertices + 1)))
    m = int(rng.integers(1, max_edges + 1))
    edges = [_subset(rng, 0, n, 2) for _ in range(m)]
    b = tuple(int(x) for x in rng.integers(b_range[0], b_range[1] + 1, size=n))
    w = tuple(random_weight(rng) for _ in range(m))
    base = validate(BMatchInstance(Hypergraph.from_edges(n, edges), b, (1,) * m, w))
    num_colors = int(rng.integers(1, max_colors + 1))
    colors = tuple(int(x) for x in rng.integers(0, num_colors, size=base.hypergraph.num_edges))
    budgets = tuple(int(x) for x in rng.integers(budget_range[0], budget_range[1] + 1, size=num_colors))
    return validate_colored(ColoredInstance(base, colors, budgets))


def random_auction(rng: np.random.Generator, max_bidders: int, max_items: int,
                   max_bundle: int, max_bids_per_bidder: int) -> AuctionInput:
    """Random explicit-bid auction with bundles of 1..max_bundle items"""
    n = int(rng.integers(1, max_bidders + 1))
    m = int(rng.integers(1, max_items + 1))
    bids = []
    for bidder in range(n):
        for _ in range(int(rng.integers(1, max_bids_per_bidder + 1))):
            size = int(rng.integers(1, min(max_bundle, m) + 1))
            bids.append(Bid(bidder, tuple(sorted(_subset(rng, 0, m, size))), random_weight(rng)))
    return validate_auction(AuctionInput(n, m, tuple(bids)))
