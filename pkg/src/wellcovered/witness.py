"""Relating edges and generating subgraphs, decided with verified witnesses.

An induced complete bipartite subgraph B = (B_X, B_Y) is generating when
some independent set S, disjoint from the closed neighborhood of B, makes
both S with B_X and S with B_Y maximal independent. Such a B forces every
admissible weighting to give both sides equal total weight; an edge whose
endpoints form a generating pair is a relating edge.

The search is local: a seed need only dominate the boundary vertices that
the subgraph itself cannot cover, and every viable seed lives among the
outside neighbors of that boundary. A seed is completed greedily and the
defining property is rechecked before a witness is ever returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .graphs import (
    Graph,
    VertexSet,
    bits_of,
    distance_map,
    is_induced_complete_bipartite,
    is_maximal_independent,
    mask_of,
    set_key,
    set_of,
)
from .independent_sets import (
    DEFAULT_BUDGET,
    Budget,
    BudgetExceededError,
    greedy_mask,
    independent_mask,
    maximal_independent_masks,
)


@dataclass(frozen=True)
class Bipartition:
    """An unordered pair of disjoint nonempty vertex sets, canonically oriented.

    The smaller side (by size, then lexicographically) is stored as bx.
    """

    bx: VertexSet
    by: VertexSet

    def __post_init__(self) -> None:
        bx, by = frozenset(self.bx), frozenset(self.by)
        if not bx or not by:
            raise ValueError("bipartition sides must be nonempty")
        if bx & by:
            raise ValueError("bipartition sides must be disjoint")
        if set_key(by) < set_key(bx):
            bx, by = by, bx
        object.__setattr__(self, "bx", bx)
        object.__setattr__(self, "by", by)

    @property
    def vertices(self) -> VertexSet:
        return self.bx | self.by


@dataclass(frozen=True)
class BoundarySets:
    """Boundary of a bipartition: what a witness must dominate, and where to look.

    m_x are neighbors of B_X at distance two from B_Y (symmetrically m_y);
    candidates are the vertices outside the closed neighborhood of B that
    are adjacent to m_x or m_y. Every vertex of candidates has a neighbor
    in m_x | m_y by construction.
    """

    m_x: VertexSet
    m_y: VertexSet
    candidates: VertexSet


def check_bipartition(g: Graph, b: Bipartition) -> None:
    """Raise unless b is an induced complete bipartite subgraph of g."""
    if not is_induced_complete_bipartite(g, b.bx, b.by):
        raise ValueError(
            f"({sorted(b.bx)}, {sorted(b.by)}) is not an induced complete bipartite subgraph"
        )


def boundary_sets(g: Graph, b: Bipartition) -> BoundarySets:
    """Compute the boundary of a valid bipartition."""
    check_bipartition(g, b)
    return _boundary(g, b)


def _boundary(g: Graph, b: Bipartition) -> BoundarySets:
    dx = distance_map(g, b.bx)
    dy = distance_map(g, b.by)
    m_x = frozenset(v for v in g.vertices() if dx[v] == 1 and dy[v] == 2)
    m_y = frozenset(v for v in g.vertices() if dy[v] == 1 and dx[v] == 2)
    n1b = g.closed_neighborhood_mask(mask_of(b.vertices))
    reach = 0
    for v in m_x | m_y:
        reach |= g.adj[v]
    return BoundarySets(m_x, m_y, set_of(reach & ~n1b & g.vertex_mask))


def check_witness(g: Graph, b: Bipartition, witness: Iterable[int]) -> bool:
    """Recheck the defining property of a witness for b.

    The witness must be independent, avoid the closed neighborhood of b,
    and extend both sides to maximal independent sets. Assumes b itself
    is a valid bipartition of g.
    """
    w_mask = g.subset_mask(witness)
    if w_mask & g.closed_neighborhood_mask(mask_of(b.vertices)):
        return False
    if not independent_mask(g, w_mask):
        return False
    w = set_of(w_mask)
    return is_maximal_independent(g, w | b.bx) and is_maximal_independent(g, w | b.by)


def is_generating(g: Graph, b: Bipartition, budget: Budget | None = None) -> VertexSet | None:
    """A verified witness that b is generating, or None.

    Seeds are drawn from the boundary candidates in increasing size then
    lexicographic order; the first independent seed dominating m_x | m_y
    is completed greedily outside the closed neighborhood of b.
    """
    budget = budget or DEFAULT_BUDGET
    check_bipartition(g, b)
    bs = _boundary(g, b)
    targets = mask_of(bs.m_x | bs.m_y)
    cands = sorted(bs.candidates)
    if 1 << len(cands) > budget.max_subsets:
        raise BudgetExceededError(
            f"witness search needs 2^{len(cands)} subset probes, over the cap {budget.max_subsets}"
        )
    allowed = g.vertex_mask & ~g.closed_neighborhood_mask(mask_of(b.vertices))
    for size in range(len(cands) + 1):
        for combo in combinations(cands, size):
            seed = mask_of(combo)
            if not independent_mask(g, seed):
                continue
            if targets & ~g.closed_neighborhood_mask(seed):
                continue
            witness = set_of(greedy_mask(g, seed, allowed))
            if not check_witness(g, b, witness):
                raise AssertionError("accepted seed produced an invalid witness")
            return witness
    return None


def is_relating(g: Graph, u: int, v: int, budget: Budget | None = None) -> VertexSet | None:
    """A verified witness that the edge uv is relating, or None."""
    if not g.has_edge(u, v):
        raise ValueError(f"{u} {v} is not an edge")
    return is_generating(g, Bipartition(frozenset({u}), frozenset({v})), budget)


def is_generating_oracle(
    g: Graph, b: Bipartition, budget: Budget | None = None
) -> VertexSet | None:
    """Reference decision: enumerate whole candidate witnesses, no seed search.

    Every maximal independent set of the graph minus the closed neighborhood
    of b is tried directly; any one dominating the boundary is a witness.
    """
    budget = budget or DEFAULT_BUDGET
    check_bipartition(g, b)
    bs = _boundary(g, b)
    targets = mask_of(bs.m_x | bs.m_y)
    allowed = g.vertex_mask & ~g.closed_neighborhood_mask(mask_of(b.vertices))
    masks = maximal_independent_masks(g, allowed, budget)
    for m in sorted(masks, key=lambda m: set_key(set_of(m))):
        if not (targets & ~g.closed_neighborhood_mask(m)):
            witness = set_of(m)
            if not check_witness(g, b, witness):
                raise AssertionError("oracle produced an invalid witness")
            return witness
    return None
