"""
Combinatorial auctions with explicit bids as bipartite hypergraph matching
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

from hypermatch.core.hypergraph import BipartiteWitness, Hypergraph
from hypermatch.core.instances import BMatchInstance, validate
from hypermatch.lp.program import LinearProgram
from hypermatch.packing.combination import best_term, expected_value, sample_term
from hypermatch.packing.hbm import decompose
from hypermatch.reductions.edge_map import EdgeMap
from hypermatch.shared.config import Config
from hypermatch.shared.errors import InvariantViolation, ValidationError
from hypermatch.shared.utils import as_fraction

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Bid:
    """Bidder's valuation for winning exactly the item set `items`"""
    bidder: int
    items: Tuple[int, ...]
    value: Fraction


@dataclass(frozen=True)
class AuctionInput:
    num_bidders: int
    num_items: int
    bids: Tuple[Bid, ...]


class Allocation(NamedTuple):
    """Sampled allocation together with its exact welfare figures"""
    assignment: Dict[int, Tuple[int, ...]]
    welfare: Fraction
    expected_welfare: Fraction
    best_welfare: Fraction
    lp_value: Fraction
    alpha: Fraction


def validate_auction(a: AuctionInput) -> AuctionInput:
    """Check bidder/item ids, nonempty duplicate-free bundles, nonnegative values"""
    if a.num_bidders < 0 or a.num_items < 0:
        raise ValidationError("Bidder and item counts must be nonnegative")
    bids = []
    for index, bid in enumerate(a.bids):
        if not 0 <= bid.bidder < a.num_bidders:
            raise ValidationError(f"Bid {index} names unknown bidder {bid.bidder}", edge=index)
        items = tuple(sorted(int(j) for j in bid.items))
        if not items:
            raise ValidationError(f"Bid {index} has an empty bundle", edge=index)
        if len(set(items)) != len(items):
            raise ValidationError(f"Bid {index} repeats an item", edge=index)
        if any(not 0 <= j < a.num_items for j in items):
            raise ValidationError(f"Bid {index} names an unknown item", edge=index)
        value = as_fraction(bid.value)
        if value < 0:
            raise ValidationError(f"Bid {index} has negative value {value}", edge=index)
        bids.append(Bid(bid.bidder, items, value))
    return AuctionInput(a.num_bidders, a.num_items, tuple(bids))


def auction_to_bipartite(a: AuctionInput) -> Tuple[BMatchInstance, EdgeMap]:
    """
    Bidders are vertices 0..n-1 and items n..n+m-1; each bid becomes the edge
    {bidder} + bundle with weight equal to its value. The bidders form the
    witness, so bundles of at most k-1 items give a bipartite k-hypergraph.
    """
    a = validate_auction(a)
    n = a.num_bidders
    edges = [(bid.bidder,) + tuple(n + j for j in bid.items) for bid in a.bids]
    hypergraph = Hypergraph.from_edges(n + a.num_items, edges)
    instance = validate(BMatchInstance(
        hypergraph,
        b=(1,) * hypergraph.num_vertices,
        c=(1,) * hypergraph.num_edges,
        w=tuple(bid.value for bid in a.bids),
        bipartite_witness=BipartiteWitness(frozenset(range(n))),
    ))
    return instance, EdgeMap.identity(len(a.bids))


def build_allocation_lp(a: AuctionInput) -> LinearProgram:
    """
    Fractional allocation LP over the listed bids

    One <= 1 row per bidder (the empty bundle takes the slack) and one <= 1
    row per item.
    """
    a = validate_auction(a)
    m = len(a.bids)
    rows: List[Tuple[Fraction, ...]] = []
    labels: List[str] = []
    for i in range(a.num_bidders):
        rows.append(tuple(Fraction(int(bid.bidder == i)) for bid in a.bids))
        labels.append(f"bidder{i}")
    for j in range(a.num_items):
        rows.append(tuple(Fraction(int(j in bid.items)) for bid in a.bids))
        labels.append(f"item{j}")
    return LinearProgram(
        objective=tuple(bid.value for bid in a.bids),
        rows=tuple(rows),
        rhs=(Fraction(1),) * len(rows),
        lower=(Fraction(0),) * m,
        upper=(None,) * m,
        row_labels=tuple(labels),
    )


def empty_set_slack(a: AuctionInput, x: Sequence[Fraction]) -> List[Fraction]:
    """x^i_empty = 1 - sum_S x^i_S for every bidder"""
    slack = [Fraction(1)] * a.num_bidders
    for bid, value in zip(a.bids, x):
        slack[bid.bidder] -= as_fraction(value)
    return slack


def allocation_of(a: AuctionInput, chosen: Sequence[int]) -> Dict[int, Tuple[int, ...]]:
    """Bundle per bidder for the chosen bids; bidders winning nothing get ()"""
    assignment: Dict[int, Tuple[int, ...]] = {i: () for i in range(a.num_bidders)}
    for index in chosen:
        bid = a.bids[index]
        assignment[bid.bidder] = bid.items
    return assignment


def sample_allocation(a: AuctionInput, seed: Optional[int] = None, prune: bool = False) -> Allocation:
    """
    Decompose the reduced matching LP and draw term i with probability
    lambda_i / rho

    The expected welfare is exactly LP / rho.
    """
    a = validate_auction(a)
    seed = Config.DEFAULT_SEED if seed is None else seed
    reduced, edge_map = auction_to_bipartite(a)
    lp_result, comb = decompose(reduced, prune=prune)
    drawn = edge_map.to_source(sample_term(comb, seed))
    _, best_value = best_term(comb, reduced.w)
    expected = expected_value(comb, reduced.w)
    if Config.CHECK_INVARIANTS and expected * comb.alpha != lp_result.value:
        raise InvariantViolation("Expected welfare differs from LP / rho",
                                 state={'expected': str(expected), 'lp': str(lp_result.value)})
    assignment = allocation_of(a, drawn.edges())
    logger.info("auction: LP=%s expected=%s drawn=%s", lp_result.value, expected,
                drawn.weight(reduced.w))
    return Allocation(
        assignment=assignment,
        welfare=drawn.weight(reduced.w),
        expected_welfare=expected,
        best_welfare=best_value,
        lp_value=lp_result.value,
        alpha=comb.alpha,
    )
