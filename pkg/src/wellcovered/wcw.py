"""The vector space of weight functions under which a graph is well-covered.

Weight functions are vectors over the rationals, indexed by vertex. The
admissible ones form a subspace, computed here three independent ways:

- definitional: equal-weight constraints between maximal independent sets;
- generating: one constraint per generating subgraph, sides weigh the same;
- local: generating subgraphs are collected per vertex, inside the radius-two
  ball around it, and their constraints are stacked.

All arithmetic is exact. Spaces are returned with a canonical reduced
row-echelon basis, so equal subspaces compare equal structurally.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .graphs import Graph, VertexSet, bits_of, closed_layer, mask_of, set_key, set_of
from .independent_sets import (
    DEFAULT_BUDGET,
    Budget,
    BudgetExceededError,
    enumerate_maximal_is,
)
from .witness import Bipartition, is_generating

RationalMatrix = list[list[Fraction]]


def rref(rows: Iterable[Sequence[Fraction | int]], width: int) -> RationalMatrix:
    """Reduced row-echelon form; zero rows dropped."""
    mat = []
    for row in rows:
        if len(row) != width:
            raise ValueError(f"row of length {len(row)}, expected {width}")
        mat.append([Fraction(x) for x in row])
    top = 0
    for col in range(width):
        pivot = next((r for r in range(top, len(mat)) if mat[r][col]), None)
        if pivot is None:
            continue
        mat[top], mat[pivot] = mat[pivot], mat[top]
        pv = mat[top][col]
        mat[top] = [x / pv for x in mat[top]]
        for r in range(len(mat)):
            if r != top and mat[r][col]:
                f = mat[r][col]
                mat[r] = [a - f * b for a, b in zip(mat[r], mat[top])]
        top += 1
        if top == len(mat):
            break
    return mat[:top]


@dataclass(frozen=True)
class WeightSpace:
    """A subspace of rational weight vectors with a canonical echelon basis."""

    n: int
    basis: tuple[tuple[Fraction, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, vector: Sequence[Fraction | int]) -> bool:
        """Membership by reduction against the echelon basis."""
        if len(vector) != self.n:
            raise ValueError(f"vector of length {len(vector)}, expected {self.n}")
        vec = [Fraction(x) for x in vector]
        for row in self.basis:
            p = next(i for i, x in enumerate(row) if x)
            c = vec[p]
            if c:
                vec = [a - c * b for a, b in zip(vec, row)]
        return not any(vec)

    def contains_space(self, other: "WeightSpace") -> bool:
        return self.n == other.n and all(self.contains(row) for row in other.basis)


def nullspace(rows: Iterable[Sequence[Fraction | int]], n: int) -> WeightSpace:
    """Solution space of the homogeneous system, canonical echelon basis."""
    reduced = rref(rows, n)
    pivots = [next(i for i, x in enumerate(row) if x) for row in reduced]
    pivot_set = set(pivots)
    free = [c for c in range(n) if c not in pivot_set]
    basis = []
    for f in free:
        vec = [Fraction(0)] * n
        vec[f] = Fraction(1)
        for row, p in zip(reduced, pivots):
            vec[p] = -row[f]
        basis.append(vec)
    canon = rref(basis, n)
    return WeightSpace(n, tuple(tuple(row) for row in canon))


def serialize_weight_space(space: WeightSpace) -> str:
    """Text form: "dim d n" then d rows of n rationals."""
    lines = [f"dim {space.dim} {space.n}"]
    lines.extend(" ".join(str(x) for x in row) for row in space.basis)
    return "\n".join(lines) + "\n"


def indicator_difference(n: int, plus: Iterable[int], minus: Iterable[int]) -> list[Fraction]:
    row = [Fraction(0)] * n
    for v in plus:
        row[v - 1] += 1
    for v in minus:
        row[v - 1] -= 1
    return row


def weight_vector(w: dict[int, Fraction], n: int) -> list[Fraction]:
    return [Fraction(w[v]) for v in range(1, n + 1)]


def wcw_basis_definitional(g: Graph, budget: Budget | None = None) -> WeightSpace:
    """Straight from the definition: all maximal independent sets weigh the same."""
    sets = enumerate_maximal_is(g, budget)
    first = sets[0]
    rows = [indicator_difference(g.n, s, first) for s in sets[1:]]
    return nullspace(rows, g.n)


def _complete_bipartite_pairs(
    g: Graph, pool: int, budget: Budget, counter: list[int], require: int = 0
) -> list[tuple[int, int]]:
    """Canonical (x_mask, y_mask) pairs of induced complete bipartite subgraphs.

    Both sides lie inside `pool`; when `require` is nonzero the subgraph must
    meet it. Each unordered pair is produced exactly once, x side canonical.
    """
    adj = g.adj
    pool_list = list(bits_of(pool))
    out: list[tuple[int, int]] = []

    def indep_submasks(mask: int) -> list[int]:
        subs = [0]
        for v in bits_of(mask):
            bit = 1 << v
            subs += [s | bit for s in subs if not (adj[v] & s)]
        return subs

    def grow(x_mask: int, common: int, start: int) -> None:
        if x_mask and common:
            xs = set_of(x_mask)
            for y_mask in indep_submasks(common):
                if not y_mask:
                    continue
                if require and not ((x_mask | y_mask) & require):
                    continue
                if set_key(xs) <= set_key(set_of(y_mask)):
                    counter[0] += 1
                    if counter[0] > budget.max_subsets:
                        raise BudgetExceededError(
                            f"more than {budget.max_subsets} candidate bipartitions"
                        )
                    out.append((x_mask, y_mask))
        for idx in range(start, len(pool_list)):
            v = pool_list[idx]
            if adj[v] & x_mask:
                continue
            new_common = (common & adj[v]) if x_mask else (adj[v] & pool)
            if not new_common:
                continue
            grow(x_mask | (1 << v), new_common, idx + 1)

    grow(0, 0, 0)
    return out


def _pair_key(pair: tuple[int, int]) -> tuple:
    x_mask, y_mask = pair
    return (set_key(set_of(x_mask)), set_key(set_of(y_mask)))


def enumerate_generating_subgraphs(
    g: Graph, budget: Budget | None = None
) -> list[tuple[Bipartition, VertexSet]]:
    """Every generating subgraph with a verified witness, canonically ordered."""
    budget = budget or DEFAULT_BUDGET
    counter = [0]
    pairs = _complete_bipartite_pairs(g, g.vertex_mask, budget, counter)
    found = []
    for x_mask, y_mask in sorted(pairs, key=_pair_key):
        b = Bipartition(set_of(x_mask), set_of(y_mask))
        witness = is_generating(g, b, budget)
        if witness is not None:
            found.append((b, witness))
    return found


def wcw_basis_generating(g: Graph, budget: Budget | None = None) -> WeightSpace:
    """Nullspace of the equal-sides constraints of all generating subgraphs."""
    rows = [
        indicator_difference(g.n, b.bx, b.by)
        for b, _ in enumerate_generating_subgraphs(g, budget)
    ]
    return nullspace(rows, g.n)


def _local_rows(
    g: Graph, v: int, budget: Budget, counter: list[int], seen: set[tuple[int, int]]
) -> list[list[Fraction]]:
    region = mask_of(closed_layer(g, (v,), 2))
    rows = []
    for x_mask, y_mask in sorted(
        _complete_bipartite_pairs(g, region, budget, counter, require=1 << v),
        key=_pair_key,
    ):
        key = (x_mask, y_mask)
        if key in seen:
            continue
        seen.add(key)
        b = Bipartition(set_of(x_mask), set_of(y_mask))
        if is_generating(g, b, budget) is not None:
            rows.append(indicator_difference(g.n, b.bx, b.by))
    return rows


def local_space(g: Graph, v: int, budget: Budget | None = None) -> WeightSpace:
    """Constraints of the generating subgraphs through v.

    Any complete bipartite subgraph containing v lies within distance two
    of v, so only that ball is searched; each candidate is still tested
    against the whole graph.
    """
    g.check_vertex(v)
    budget = budget or DEFAULT_BUDGET
    rows = _local_rows(g, v, budget, [0], set())
    return nullspace(rows, g.n)


def wcw_basis_local(g: Graph, budget: Budget | None = None) -> WeightSpace:
    """Stack the local constraints of every vertex; one nullspace."""
    budget = budget or DEFAULT_BUDGET
    counter = [0]
    seen: set[tuple[int, int]] = set()
    rows: list[list[Fraction]] = []
    for v in g.vertices():
        rows.extend(_local_rows(g, v, budget, counter, seen))
    return nullspace(rows, g.n)


def contains_all_ones(space: WeightSpace) -> bool:
    """Whether the constant weighting 1 is admissible."""
    return space.contains([Fraction(1)] * space.n)


def functional_vanishes(space: WeightSpace, b: Bipartition) -> bool:
    """Whether every weighting in the space gives both sides of b equal weight.

    A generating subgraph always passes this test, so failing it rules a
    candidate out; passing it is necessary but not taken as sufficient.
    """
    for v in b.bx | b.by:
        if not (1 <= v <= space.n):
            raise ValueError(f"vertex {v} out of range 1..{space.n}")
    for row in space.basis:
        if sum(row[v - 1] for v in b.bx) != sum(row[v - 1] for v in b.by):
            return False
    return True
