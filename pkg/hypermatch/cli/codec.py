"""
Encoders and decoders between documents and instances/decompositions
"""
from fractions import Fraction
from typing import Any, Dict, List, Sequence

from hypermatch.core.hypergraph import BipartiteWitness, Hypergraph
from hypermatch.core.instances import BMatchInstance, DemandInstance, IntegralSolution
from hypermatch.packing.combination import AlphaConvexCombination, Term
from hypermatch.reductions.auction import AuctionInput, Bid
from hypermatch.reductions.bounded_color import ColoredInstance
from hypermatch.shared.communication import Document, format_rational, parse_rational
from hypermatch.shared.constants import UNBOUNDED, InstanceKind
from hypermatch.shared.errors import ParseError


def _require(payload: Dict[str, Any], key: str):
    if key not in payload:
        raise ParseError(f"Missing field {key!r}")
    return payload[key]


def _int_list(payload: Dict[str, Any], key: str) -> List[int]:
    values = _require(payload, key)
    if not isinstance(values, list) or any(isinstance(v, bool) or not isinstance(v, int) for v in values):
        raise ParseError(f"Field {key!r} must be a list of integers")
    return values


def _rational_list(payload: Dict[str, Any], key: str) -> List[Fraction]:
    return [parse_rational(v) for v in _list(payload, key)]


def _list(payload: Dict[str, Any], key: str) -> list:
    values = _require(payload, key)
    if not isinstance(values, list):
        raise ParseError(f"Field {key!r} must be a list")
    return values


def _edges(payload: Dict[str, Any]) -> List[List[int]]:
    edges = _require(payload, 'edges')
    if not isinstance(edges, list) or not all(isinstance(e, list) for e in edges):
        raise ParseError("Field 'edges' must be a list of integer lists")
    for edge in edges:
        if any(isinstance(v, bool) or not isinstance(v, int) for v in edge):
            raise ParseError("Edge entries must be integers")
    return edges


def _capacities(payload: Dict[str, Any], num_edges: int) -> tuple:
    if 'c' not in payload:
        return (1,) * num_edges
    values = payload['c']
    if not isinstance(values, list):
        raise ParseError("Field 'c' must be a list")
    for v in values:
        if v != UNBOUNDED and (isinstance(v, bool) or not isinstance(v, int)):
            raise ParseError(f"Capacity {v!r} must be an integer or {UNBOUNDED!r}")
    return tuple(values)


def decode_hypergraph(payload: Dict[str, Any]) -> Hypergraph:
    num_vertices = _require(payload, 'num_vertices')
    if isinstance(num_vertices, bool) or not isinstance(num_vertices, int):
        raise ParseError("Field 'num_vertices' must be an integer")
    return Hypergraph.from_edges(num_vertices, _edges(payload))


def decode_bmatch(payload: Dict[str, Any]) -> BMatchInstance:
    """Unvalidated b-matching instance from a payload"""
    h = decode_hypergraph(payload)
    witness = None
    if payload.get('bipartite_u') is not None:
        witness = BipartiteWitness(frozenset(_int_list(payload, 'bipartite_u')))
    return BMatchInstance(h, tuple(_int_list(payload, 'b')), _capacities(payload, h.num_edges),
                          tuple(_rational_list(payload, 'w')), witness)


def decode_demand(payload: Dict[str, Any]) -> DemandInstance:
    h = decode_hypergraph(payload)
    c = _capacities(payload, h.num_edges) if 'c' in payload else None
    return DemandInstance(h, tuple(_int_list(payload, 'b')), tuple(_int_list(payload, 'd')),
                          tuple(_rational_list(payload, 'w')), c)


def decode_colored(payload: Dict[str, Any]) -> ColoredInstance:
    return ColoredInstance(decode_bmatch(payload), tuple(_int_list(payload, 'colors')),
                           tuple(_int_list(payload, 'budgets')))


def decode_auction(payload: Dict[str, Any]) -> AuctionInput:
    bids = []
    for entry in _list(payload, 'bids'):
        if not isinstance(entry, list) or len(entry) != 3 or not isinstance(entry[1], list):
            raise ParseError("Bids must be [bidder, [items], value] triples")
        bidder, items, value = entry
        if isinstance(bidder, bool) or not isinstance(bidder, int):
            raise ParseError(f"Bidder id {bidder!r} must be an integer")
        if any(isinstance(j, bool) or not isinstance(j, int) for j in items):
            raise ParseError("Item ids must be integers")
        bids.append(Bid(bidder, tuple(items), parse_rational(value)))
    bidders, items = _require(payload, 'bidders'), _require(payload, 'items')
    if any(isinstance(v, bool) or not isinstance(v, int) for v in (bidders, items)):
        raise ParseError("Fields 'bidders' and 'items' must be integers")
    return AuctionInput(bidders, items, tuple(bids))


DECODERS = {
    InstanceKind.BMATCH: decode_bmatch,
    InstanceKind.DEMAND: decode_demand,
    InstanceKind.COLORED: decode_colored,
    InstanceKind.AUCTION: decode_auction,
}


def decode_instance(document: Document):
    """Instance object for a document of any instance kind"""
    if document.kind not in DECODERS:
        raise ParseError(f"Document of kind {document.kind.value!r} is not an instance")
    return DECODERS[document.kind](document.payload)


def _hypergraph_fields(h: Hypergraph) -> Dict[str, Any]:
    return {'num_vertices': h.num_vertices, 'edges': [list(e) for e in h.edges]}


def _rationals(values: Sequence) -> List[str]:
    return [format_rational(v) for v in values]


def encode_bmatch(instance: BMatchInstance) -> Document:
    payload = _hypergraph_fields(instance.hypergraph)
    payload.update({'b': list(instance.b), 'c': list(instance.c), 'w': _rationals(instance.w)})
    if instance.bipartite_witness is not None:
        payload['bipartite_u'] = sorted(instance.bipartite_witness.distinguished_set)
    return Document(InstanceKind.BMATCH, payload)


def encode_demand(instance: DemandInstance) -> Document:
    payload = _hypergraph_fields(instance.hypergraph)
    payload.update({'b': list(instance.b), 'd': list(instance.d), 'w': _rationals(instance.w)})
    return Document(InstanceKind.DEMAND, payload)


def encode_colored(ci: ColoredInstance) -> Document:
    payload = encode_bmatch(ci.base).payload
    payload.update({'colors': list(ci.colors), 'budgets': list(ci.budgets)})
    return Document(InstanceKind.COLORED, payload)


def encode_auction(a: AuctionInput) -> Document:
    return Document(InstanceKind.AUCTION, {
        'bidders': a.num_bidders,
        'items': a.num_items,
        'bids': [[bid.bidder, list(bid.items), format_rational(bid.value)] for bid in a.bids],
    })


def encode_instance(instance) -> Document:
    if isinstance(instance, DemandInstance):
        return encode_demand(instance)
    if isinstance(instance, ColoredInstance):
        return encode_colored(instance)
    if isinstance(instance, AuctionInput):
        return encode_auction(instance)
    return encode_bmatch(instance)


def encode_decomposition(instance: BMatchInstance, x: Sequence[Fraction],
                         comb: AlphaConvexCombination) -> Document:
    """Instance, LP vertex and combination; enough for a standalone audit"""
    return Document(InstanceKind.DECOMPOSITION, {
        'instance': encode_bmatch(instance).payload,
        'x': _rationals(x),
        'alpha': format_rational(comb.alpha),
        'terms': [[format_rational(t.weight), list(t.solution.multiplicities)] for t in comb.terms],
    })


def decode_decomposition(document: Document):
    """(instance, x, combination) from a saved decomposition"""
    if document.kind is not InstanceKind.DECOMPOSITION:
        raise ParseError(f"Expected a decomposition document, got {document.kind.value!r}")
    payload = document.payload
    embedded = _require(payload, 'instance')
    if not isinstance(embedded, dict):
        raise ParseError("Field 'instance' must be an object")
    instance = decode_bmatch(embedded)
    x = _rational_list(payload, 'x')
    terms = []
    for entry in _list(payload, 'terms'):
        if not isinstance(entry, list) or len(entry) != 2 or not isinstance(entry[1], list):
            raise ParseError("Terms must be [lambda, multiplicities] pairs")
        weight, multiplicities = entry
        if any(isinstance(m, bool) or not isinstance(m, int) for m in multiplicities):
            raise ParseError("Multiplicities must be integers")
        if len(multiplicities) != len(x):
            raise ParseError(f"Term has {len(multiplicities)} entries for {len(x)} edges")
        terms.append(Term(parse_rational(weight), IntegralSolution(tuple(multiplicities))))
    alpha = parse_rational(_require(payload, 'alpha'))
    return instance, x, AlphaConvexCombination(alpha, terms, len(x))
