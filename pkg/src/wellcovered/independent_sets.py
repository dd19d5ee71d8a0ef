"""Maximal independent sets and the well-covered decision procedures.

A graph is well-covered when all its maximal independent sets have the
same size, and w-well-covered for a weight function w when they all have
the same total weight. Enumeration is exhaustive and budget-guarded; the
verdict "no" always comes with a concrete counterexample pair.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .graphs import Graph, VertexSet, bits_of, set_key, set_of

WeightFunction = dict[int, Fraction]


class BudgetExceededError(RuntimeError):
    """Raised when an enumeration would exceed its configured budget."""


@dataclass(frozen=True)
class Budget:
    """Caps on exhaustive enumeration: maximal sets counted and subsets probed."""

    max_sets: int = 10**6
    max_subsets: int = 10**7

    def __post_init__(self) -> None:
        if self.max_sets < 1 or self.max_subsets < 1:
            raise ValueError("budget limits must be positive")


DEFAULT_BUDGET = Budget()


def independent_mask(g: Graph, mask: int) -> bool:
    for v in bits_of(mask):
        if g.adj[v] & mask:
            return False
    return True


def greedy_mask(g: Graph, current: int, allowed: int) -> int:
    """Extend a partial independent set to a maximal one within `allowed`.

    Always adds the lowest-index eligible vertex next.
    """
    cand = allowed & ~g.closed_neighborhood_mask(current)
    while cand:
        low = cand & -cand
        v = low.bit_length() - 1
        current |= low
        cand &= ~(low | g.adj[v])
    return current


def extend_greedy(g: Graph, seed: Iterable[int]) -> VertexSet:
    """Complete an independent set to a maximal one, lowest vertex first."""
    m = g.subset_mask(seed)
    if not independent_mask(g, m):
        raise ValueError("seed set is not independent")
    return set_of(greedy_mask(g, m, g.vertex_mask))


def maximal_independent_masks(g: Graph, allowed: int, budget: Budget) -> list[int]:
    """All maximal independent sets of the subgraph induced on `allowed`, as masks.

    Maximal cliques of the complement, found by pivoting branch and bound.
    """
    comp = [0] * (g.n + 1)
    for v in bits_of(allowed):
        comp[v] = allowed & ~g.adj[v] & ~(1 << v)
    out: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(r)
            if len(out) > budget.max_sets:
                raise BudgetExceededError(
                    f"more than {budget.max_sets} maximal independent sets"
                )
            return
        pool = p | x
        pivot, best = -1, -1
        for u in bits_of(pool):
            c = (p & comp[u]).bit_count()
            if c > best:
                pivot, best = u, c
        for v in bits_of(p & ~comp[pivot]):
            bit = 1 << v
            expand(r | bit, p & comp[v], x & comp[v])
            p &= ~bit
            x |= bit

    expand(0, allowed, 0)
    return out


def enumerate_maximal_is(g: Graph, budget: Budget | None = None) -> list[VertexSet]:
    """Every maximal independent set, in canonical order (size, then lexicographic)."""
    masks = maximal_independent_masks(g, g.vertex_mask, budget or DEFAULT_BUDGET)
    sets = [set_of(m) for m in masks]
    sets.sort(key=set_key)
    return sets


def is_well_covered(
    g: Graph, budget: Budget | None = None
) -> tuple[VertexSet, VertexSet] | None:
    """None when all maximal independent sets share one size, else a differing pair."""
    sets = enumerate_maximal_is(g, budget)
    first = sets[0]
    for s in sets[1:]:
        if len(s) != len(first):
            return (first, s)
    return None


def set_weight(w: WeightFunction, vertices: Iterable[int]) -> Fraction:
    return sum((w[v] for v in vertices), start=Fraction(0))


def is_w_well_covered(
    g: Graph, w: WeightFunction, budget: Budget | None = None
) -> tuple[VertexSet, VertexSet] | None:
    """None when all maximal independent sets have equal total weight, else a pair.

    The weight function must assign a value to every vertex.
    """
    for v in g.vertices():
        if v not in w:
            raise ValueError(f"weight function missing vertex {v}")
    sets = enumerate_maximal_is(g, budget)
    first = sets[0]
    target = set_weight(w, first)
    for s in sets[1:]:
        if set_weight(w, s) != target:
            return (first, s)
    return None


def parse_weight_function(text: str, n: int) -> WeightFunction:
    """Parse "v p/q" lines; every vertex 1..n must appear exactly once."""
    w: WeightFunction = {}
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"weight line must be 'v value', got {line!r}")
        try:
            v = int(parts[0])
            val = Fraction(parts[1])
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"bad weight line {line!r}") from exc
        if not (1 <= v <= n):
            raise ValueError(f"vertex {v} out of range 1..{n}")
        if v in w:
            raise ValueError(f"duplicate weight for vertex {v}")
        w[v] = val
    for v in range(1, n + 1):
        if v not in w:
            raise ValueError(f"weight function missing vertex {v}")
    return w


def serialize_weight_function(w: WeightFunction, n: int) -> str:
    for v in range(1, n + 1):
        if v not in w:
            raise ValueError(f"weight function missing vertex {v}")
    return "\n".join(f"{v} {w[v]}" for v in range(1, n + 1)) + "\n"
