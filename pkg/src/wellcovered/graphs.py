"""Simple undirected graphs on vertices 1..n.

Immutable graphs with per-vertex adjacency bitmasks, BFS distance layers,
independence and domination predicates, and the structural checks
(bipartiteness, short cycles, induced complete bipartite subgraphs) that
the rest of the library builds on.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, permutations
from typing import Iterable, Iterator

VertexSet = frozenset[int]

INFINITY = math.inf


class GraphFormatError(ValueError):
    """Raised for malformed graph text or invalid edge data."""


def mask_of(vertices: Iterable[int]) -> int:
    """Pack vertices into a bitmask (bit v set for vertex v)."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def set_of(mask: int) -> VertexSet:
    """Unpack a bitmask into a frozen vertex set."""
    return frozenset(bits_of(mask))


def bits_of(mask: int) -> Iterator[int]:
    """Iterate the set bits of a mask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def set_key(vertices: Iterable[int]) -> tuple[int, tuple[int, ...]]:
    """Canonical sort key for vertex sets: smaller sets first, then lexicographic."""
    t = tuple(sorted(vertices))
    return (len(t), t)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 1..n with a canonical edge list.

    Edges are stored sorted with each pair in increasing order; self-loops
    and duplicate edges are rejected at construction.
    """

    n: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphFormatError(f"vertex count must be nonnegative, got {self.n}")
        seen: set[tuple[int, int]] = set()
        canon = []
        for edge in self.edges:
            u, v = edge
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u}")
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise GraphFormatError(f"edge {u} {v} out of range 1..{self.n}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise GraphFormatError(f"duplicate edge {key[0]} {key[1]}")
            seen.add(key)
            canon.append(key)
        object.__setattr__(self, "edges", tuple(sorted(canon)))

    @cached_property
    def adj(self) -> tuple[int, ...]:
        """Neighbor bitmask per vertex (index 0 unused)."""
        masks = [0] * (self.n + 1)
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    @cached_property
    def vertex_mask(self) -> int:
        return (1 << (self.n + 1)) - 2 if self.n else 0

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def has_edge(self, u: int, v: int) -> bool:
        self.check_vertex(u)
        self.check_vertex(v)
        return bool(self.adj[u] & (1 << v))

    def neighbors(self, v: int) -> VertexSet:
        self.check_vertex(v)
        return set_of(self.adj[v])

    def degree(self, v: int) -> int:
        self.check_vertex(v)
        return self.adj[v].bit_count()

    @property
    def max_degree(self) -> int:
        return max((m.bit_count() for m in self.adj), default=0)

    def closed_neighborhood_mask(self, mask: int) -> int:
        """Bitmask of the given vertices together with all their neighbors."""
        out = mask
        for v in bits_of(mask):
            out |= self.adj[v]
        return out

    def check_vertex(self, v: int) -> None:
        if not (1 <= v <= self.n):
            raise ValueError(f"vertex {v} out of range 1..{self.n}")

    def subset_mask(self, vertices: Iterable[int]) -> int:
        """Validate a vertex collection and pack it into a bitmask."""
        m = 0
        for v in vertices:
            self.check_vertex(v)
            m |= 1 << v
        return m


def parse_graph(text: str) -> Graph:
    """Parse the edge-list format.

    Lines starting with '#' are comments and blank lines are skipped.
    The first data line is the header "n m"; exactly m lines "u v" follow,
    one edge each, vertices numbered from 1.
    """
    rows = [ln.strip() for ln in text.splitlines()]
    rows = [ln for ln in rows if ln and not ln.startswith("#")]
    if not rows:
        raise GraphFormatError("missing header line")
    head = rows[0].split()
    if len(head) != 2:
        raise GraphFormatError(f"header must be 'n m', got {rows[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError as exc:
        raise GraphFormatError(f"header must be two integers, got {rows[0]!r}") from exc
    if n < 0 or m < 0:
        raise GraphFormatError("negative counts in header")
    body = rows[1:]
    if len(body) != m:
        raise GraphFormatError(f"expected {m} edge lines, found {len(body)}")
    edges = []
    for ln in body:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphFormatError(f"edge line must be 'u v', got {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise GraphFormatError(f"edge line must be two integers, got {ln!r}") from exc
        edges.append((u, v))
    return Graph(n, tuple(edges))


def serialize_graph(g: Graph) -> str:
    """Canonical text form: header then edges sorted, each with u < v."""
    lines = [f"{g.n} {len(g.edges)}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def distance_map(g: Graph, sources: Iterable[int]) -> list[int | float]:
    """BFS distances from a nonempty source set, INFINITY where unreachable.

    Returned list is indexed by vertex (slot 0 is unused).
    """
    src = g.subset_mask(sources)
    if not src:
        raise ValueError("source set must be nonempty")
    dist: list[int | float] = [INFINITY] * (g.n + 1)
    frontier = src
    seen = 0
    d = 0
    while frontier:
        for v in bits_of(frontier):
            dist[v] = d
        seen |= frontier
        nxt = 0
        for v in bits_of(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        d += 1
    return dist


def distance(g: Graph, u: int, v: int) -> int | float:
    """Shortest path length between u and v; INFINITY if disconnected."""
    g.check_vertex(v)
    return distance_map(g, (u,))[v]


def layer(g: Graph, sources: Iterable[int], i: int) -> VertexSet:
    """Vertices at distance exactly i from the source set."""
    if i < 0:
        raise ValueError(f"layer index must be nonnegative, got {i}")
    dm = distance_map(g, sources)
    return frozenset(v for v in g.vertices() if dm[v] == i)


def closed_layer(g: Graph, sources: Iterable[int], i: int) -> VertexSet:
    """Vertices at distance at most i from the source set."""
    if i < 0:
        raise ValueError(f"layer index must be nonnegative, got {i}")
    dm = distance_map(g, sources)
    return frozenset(v for v in g.vertices() if dm[v] <= i)


def is_independent(g: Graph, vertices: Iterable[int]) -> bool:
    """True when no two of the given vertices are adjacent."""
    m = g.subset_mask(vertices)
    for v in bits_of(m):
        if g.adj[v] & m:
            return False
    return True


def dominates(g: Graph, s: Iterable[int], t: Iterable[int]) -> bool:
    """True when every vertex of t lies in the closed neighborhood of s."""
    sm = g.subset_mask(s)
    tm = g.subset_mask(t)
    return not (tm & ~g.closed_neighborhood_mask(sm))


def is_maximal_independent(g: Graph, vertices: Iterable[int]) -> bool:
    """True when the set is independent and dominates every vertex."""
    m = g.subset_mask(vertices)
    for v in bits_of(m):
        if g.adj[v] & m:
            return False
    return not (g.vertex_mask & ~g.closed_neighborhood_mask(m))


def is_bipartite(g: Graph) -> tuple[VertexSet, VertexSet] | None:
    """A proper two-coloring as a pair of sides, or None.

    Deterministic: BFS from the lowest uncolored vertex of each component,
    which lands on the first side.
    """
    color: list[int | None] = [None] * (g.n + 1)
    for start in g.vertices():
        if color[start] is not None:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in bits_of(g.adj[v]):
                if color[w] is None:
                    color[w] = 1 - color[v]  # type: ignore[operator]
                    queue.append(w)
                elif color[w] == color[v]:
                    return None
    side0 = frozenset(v for v in g.vertices() if color[v] == 0)
    side1 = frozenset(v for v in g.vertices() if color[v] == 1)
    return (side0, side1)


def contains_cycle_k(g: Graph, k: int) -> bool:
    """Whether the graph has a cycle on exactly k vertices (not necessarily induced).

    Supported for k in 3..7. Anchored path search: the cycle's smallest
    vertex is fixed first and the remaining path stays above it.
    """
    if not (3 <= k <= 7):
        raise ValueError(f"cycle length {k} outside supported range 3..7")
    adj = g.adj

    def extend(anchor: int, v: int, used: int, length: int) -> bool:
        if length == k:
            return bool(adj[v] & (1 << anchor))
        cand = adj[v] & ~used
        for w in bits_of(cand):
            if w > anchor and extend(anchor, w, used | (1 << w), length + 1):
                return True
        return False

    for anchor in g.vertices():
        if extend(anchor, anchor, 1 << anchor, 1):
            return True
    return False


def has_hamiltonian_cycle(g: Graph, vertices: Iterable[int]) -> bool:
    """Whether some cycle visits every one of the given vertices exactly once.

    Brute force over permutations; intended as an oracle for small sets.
    """
    vs = sorted(set(vertices))
    if len(vs) < 3:
        return False
    first, rest = vs[0], vs[1:]
    for perm in permutations(rest):
        cycle = (first, *perm)
        if all(g.has_edge(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle))):
            return True
    return False


def is_k1t_free(g: Graph, t: int) -> bool:
    """True when no vertex has t pairwise nonadjacent neighbors."""
    if t < 1:
        raise ValueError(f"star size must be positive, got {t}")
    for v in g.vertices():
        nb = sorted(bits_of(g.adj[v]))
        if len(nb) < t:
            continue
        for combo in combinations(nb, t):
            cm = mask_of(combo)
            if all(not (g.adj[w] & cm) for w in combo):
                return False
    return True


def is_induced_complete_bipartite(g: Graph, side_x: Iterable[int], side_y: Iterable[int]) -> bool:
    """Whether the two sides induce a complete bipartite subgraph.

    Both sides must be independent and every cross pair must be an edge.
    Empty or overlapping sides are rejected with an error.
    """
    mx = g.subset_mask(side_x)
    my = g.subset_mask(side_y)
    if not mx or not my:
        raise ValueError("bipartition sides must be nonempty")
    if mx & my:
        raise ValueError("bipartition sides must be disjoint")
    for v in bits_of(mx):
        if g.adj[v] & mx:
            return False
        if (g.adj[v] & my) != my:
            return False
    for v in bits_of(my):
        if g.adj[v] & my:
            return False
    return True
