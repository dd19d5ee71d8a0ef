"""Shared test data: reference instances, brute-force oracles, random generators.

The brute oracles work directly on edge lists and truth tables, independent
of the library's bitmask machinery, so agreement with them is meaningful.
"""

from __future__ import annotations

import itertools
from random import Random

from wellcovered.cnf import Assignment, Clause, CnfInstance, validate_dsat
from wellcovered.graphs import Graph
from wellcovered.named import complete_graph, cycle_graph, path_graph
from wellcovered.reductions import dsat_to_gs, usat_to_re
from wellcovered.witness import Bipartition


def _clauses(rows: list[list[int]]) -> tuple[Clause, ...]:
    return tuple(frozenset(row) for row in rows)


# A general CNF instance and its hand-derived unate rewrite (negative
# occurrences of variable i become variable 5+i; twin clauses pin them).
SAT_SAMPLE = CnfInstance(5, _clauses([
    [1, -2, 3], [1, 3, 4, 5], [-1, 2, -3, 4], [1, 2, -4, -5],
]))
USAT_REWRITE_EXPECTED = CnfInstance(10, _clauses(
    [[1, 7, 3], [1, 3, 4, 5], [6, 2, 8, 4], [1, 2, 9, 10]]
    + [[i, 5 + i] for i in range(1, 6)]
    + [[-i, -(5 + i)] for i in range(1, 6)]
))

# A unate instance: five all-positive clauses, three all-negative.
USAT_SAMPLE = CnfInstance(6, _clauses([
    [1, 2, 3], [2, 4], [1, 4], [1, 5, 6], [3, 5, 6],
    [-1, -2, -3], [-2, -3, -4, -5], [-2, -4, -5, -6],
]))
# The designated satisfying assignment (used for witness translation);
# not the first model in search order.
USAT_SAMPLE_MODEL: Assignment = {1: True, 2: False, 3: True, 4: True, 5: True, 6: False}
# First model with variables ordered 1..6, false before true (hand-derived).
USAT_SAMPLE_FIRST_MODEL: Assignment = {
    1: False, 2: False, 3: True, 4: True, 5: False, 6: True,
}

# A 3-literal instance and its hand-derived low-overlap rewrite. The
# offending pairs are eliminated in scan order, introducing variables
# 6, 7, 8, 9 with their pinning clauses.
THREESAT_SAMPLE = CnfInstance(5, _clauses([
    [1, -2, 3], [1, 3, 4], [1, 3, 5], [-3, -4, 5], [2, -3, -4], [-1, -4, -5],
]))
DSAT_REWRITE_EXPECTED = CnfInstance(9, _clauses([
    [1, -2, 3], [1, 6, 4], [1, 7, 5], [-3, -4, 5], [2, -3, 8], [-1, -4, 9],
    [-3, 6], [3, -6], [-3, 7], [3, -7], [4, 8], [-4, -8], [5, 9], [-5, -9],
]))

# A low-overlap instance already in shape, with a known model.
DSAT_SAMPLE = CnfInstance(6, _clauses([
    [1, -2, 3], [-1, 2, 4], [1, -4, 6], [2, -5, -6], [-3, 4, 5],
]))
DSAT_SAMPLE_MODEL: Assignment = {1: True, 2: True, 3: False, 4: True, 5: False, 6: False}


def fixture_graphs() -> dict[str, Graph]:
    """The named graphs every cross-method suite runs on."""
    return {
        "K2": complete_graph(2),
        "P3": path_graph(3),
        "P4": path_graph(4),
        "C4": cycle_graph(4),
        "C5": cycle_graph(5),
        "C7": cycle_graph(7),
        "gadget22": usat_to_re(USAT_SAMPLE).graph,
        "gadget23": dsat_to_gs(DSAT_SAMPLE).graph,
    }


# ---------------------------------------------------------------- oracles


def brute_independent(edges: set[frozenset[int]], s: frozenset[int]) -> bool:
    return all(frozenset((u, v)) not in edges for u in s for v in s if u < v)


def brute_maximal_independent_sets(n: int, edge_list) -> set[frozenset[int]]:
    """All maximal independent sets by exhaustive subset enumeration."""
    edges = {frozenset(e) for e in edge_list}
    verts = list(range(1, n + 1))
    found = set()
    for bits in range(1 << n):
        s = frozenset(v for v in verts if bits >> (v - 1) & 1)
        if not brute_independent(edges, s):
            continue
        if all(v in s or not brute_independent(edges, s | {v}) for v in verts):
            found.add(s)
    return found


def brute_has_cycle(n: int, edge_list, k: int) -> bool:
    """Whether some k vertices can be cyclically ordered along edges."""
    edges = {frozenset(e) for e in edge_list}
    for subset in itertools.combinations(range(1, n + 1), k):
        first, rest = subset[0], subset[1:]
        for perm in itertools.permutations(rest):
            order = (first,) + perm
            if all(
                frozenset((order[i], order[(i + 1) % k])) in edges for i in range(k)
            ):
                return True
    return False


def brute_solve(n: int, clauses) -> Assignment | None:
    """First satisfying assignment, variables ordered 1..n, false before true."""
    for code in range(1 << n):
        phi = {i + 1: bool(code >> (n - 1 - i) & 1) for i in range(n)}
        if all(any(phi[l] if l > 0 else not phi[-l] for l in c) for c in clauses):
            return phi
    return None


def all_bipartitions(g: Graph) -> list[Bipartition]:
    """Every induced complete bipartite subgraph of a small graph.

    Bitmask bookkeeping (bit v is vertex v) keeps the double enumeration
    cheap: independent sets first, then independent submasks of each
    common neighborhood.
    """
    adj = {v: 0 for v in g.vertices()}
    for v in g.vertices():
        for u in g.neighbors(v):
            adj[v] |= 1 << u
    indep_masks = []
    indep_lookup = set()
    for bits in range(1, 1 << g.n):
        mask = bits << 1
        if all(not (adj[v] & mask) for v in g.vertices() if mask >> v & 1):
            indep_masks.append(mask)
            indep_lookup.add(mask)

    def vertices_of(mask: int) -> frozenset[int]:
        return frozenset(v for v in g.vertices() if mask >> v & 1)

    out = set()
    for x_mask in indep_masks:
        common = (1 << (g.n + 1)) - 2
        for v in g.vertices():
            if x_mask >> v & 1:
                common &= adj[v]
        sub = common
        while sub:
            if sub in indep_lookup:
                out.add(Bipartition(vertices_of(x_mask), vertices_of(sub)))
            sub = (sub - 1) & common
    return sorted(out, key=lambda b: (sorted(b.bx), sorted(b.by)))


# ------------------------------------------------------------- generators


def random_graph(rng: Random, n: int, p: float = 0.4) -> Graph:
    edges = tuple(
        (u, v) for u in range(1, n) for v in range(u + 1, n + 1) if rng.random() < p
    )
    return Graph(n, edges)


def _random_clause(rng: Random, n: int, size: int, signs: str) -> Clause:
    chosen = rng.sample(range(1, n + 1), size)
    if signs == "positive":
        return frozenset(chosen)
    if signs == "negative":
        return frozenset(-v for v in chosen)
    return frozenset(v if rng.random() < 0.5 else -v for v in chosen)


def random_cnf(rng: Random, n: int, m: int) -> CnfInstance:
    clauses = tuple(
        _random_clause(rng, n, rng.randint(1, min(4, n)), "mixed") for _ in range(m)
    )
    return CnfInstance(n, clauses)


def random_usat(rng: Random, n: int, m: int) -> CnfInstance:
    clauses = tuple(
        _random_clause(
            rng, n, rng.randint(1, min(4, n)), rng.choice(("positive", "negative"))
        )
        for _ in range(m)
    )
    return CnfInstance(n, clauses)


def random_threesat(rng: Random, n: int, m: int) -> CnfInstance:
    if n < 3:
        raise ValueError("need at least 3 variables")
    return CnfInstance(n, tuple(_random_clause(rng, n, 3, "mixed") for _ in range(m)))


def random_dsat(rng: Random, n: int, m: int, attempts: int = 400) -> CnfInstance:
    """Greedily accept random clauses while the low-overlap shape survives.

    Always yields at least one clause; may yield fewer than m.
    """
    clauses: list[Clause] = []
    for _ in range(attempts):
        if len(clauses) == m:
            break
        c = _random_clause(rng, n, rng.randint(2, min(3, n)), "mixed")
        candidate = CnfInstance(n, tuple(clauses + [c]))
        if validate_dsat(candidate) is None:
            clauses.append(c)
    assert clauses
    return CnfInstance(n, tuple(clauses))
