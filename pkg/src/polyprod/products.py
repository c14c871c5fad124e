"""Join and Cartesian product of polytope posets, plus k-fold powers.

Element ids of a product are the serialized pair "(p|q)" of the parent ids,
and provenance records the pair, so coordinate actions on product faces stay
recoverable.
"""

from __future__ import annotations

from .errors import NonPositiveExponent
from .poset import PolytopePoset

JOIN = "join"
CARTESIAN = "cartesian"


def pair_id(p: str, q: str) -> str:
    return f"({p}|{q})"


def join(P: PolytopePoset, Q: PolytopePoset) -> PolytopePoset:
    """P * Q: all pairs (F, G), ordered componentwise, rank additive plus 1."""
    elements = []
    provenance = {}
    for p, rp in P.elements():
        for q, rq in Q.elements():
            eid = pair_id(p, q)
            elements.append((eid, rp + rq + 1))
            provenance[eid] = (p, q)
    covers = []
    q_ids = Q.element_ids()
    p_ids = P.element_ids()
    for a, b in P.covers:
        for q in q_ids:
            covers.append((pair_id(a, q), pair_id(b, q)))
    for a, b in Q.covers:
        for p in p_ids:
            covers.append((pair_id(p, a), pair_id(p, b)))
    return PolytopePoset(elements, covers, provenance=provenance)


def cartesian(P: PolytopePoset, Q: PolytopePoset) -> PolytopePoset:
    """P x Q: pairs of faces of rank >= 0 plus one joint bottom, rank additive."""
    bottom = pair_id(P.bottom, Q.bottom)
    elements = [(bottom, -1)]
    provenance = {bottom: (P.bottom, Q.bottom)}
    proper_p = [(p, rp) for p, rp in P.elements() if rp >= 0]
    proper_q = [(q, rq) for q, rq in Q.elements() if rq >= 0]
    for p, rp in proper_p:
        for q, rq in proper_q:
            eid = pair_id(p, q)
            elements.append((eid, rp + rq))
            provenance[eid] = (p, q)
    covers = []
    for v in P.elements_of_rank(0):
        for w in Q.elements_of_rank(0):
            covers.append((bottom, pair_id(v, w)))
    q_kept = [q for q, _ in proper_q]
    p_kept = [p for p, _ in proper_p]
    for a, b in P.covers:
        if P.rank_of(a) >= 0:
            for q in q_kept:
                covers.append((pair_id(a, q), pair_id(b, q)))
    for a, b in Q.covers:
        if Q.rank_of(a) >= 0:
            for p in p_kept:
                covers.append((pair_id(p, a), pair_id(p, b)))
    return PolytopePoset(elements, covers, provenance=provenance)


def power(P: PolytopePoset, op: str, k: int) -> PolytopePoset:
    """Left-associated k-fold product of P with itself under `op`."""
    if k < 1:
        raise NonPositiveExponent(f"exponent must be >= 1, got {k}")
    if op == JOIN:
        combine = join
    elif op == CARTESIAN:
        combine = cartesian
    else:
        raise ValueError(f"unknown product {op!r}")
    result = P
    for _ in range(k - 1):
        result = combine(result, P)
    return result
