"""Small parametric graph families used throughout the tests and demos."""

from __future__ import annotations

from .graphs import Graph


def path_graph(n: int) -> Graph:
    """Path on vertices 1..n."""
    if n < 1:
        raise ValueError(f"path needs at least 1 vertex, got {n}")
    return Graph(n, tuple((i, i + 1) for i in range(1, n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle needs at least 3 vertices, got {n}")
    return Graph(n, tuple((i, i + 1) for i in range(1, n)) + ((1, n),))


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"complete graph needs at least 1 vertex, got {n}")
    return Graph(n, tuple((i, j) for i in range(1, n) for j in range(i + 1, n + 1)))


def star_graph(t: int) -> Graph:
    """Star with center 1 and leaves 2..t+1."""
    if t < 1:
        raise ValueError(f"star needs at least 1 leaf, got {t}")
    return Graph(t + 1, tuple((1, i) for i in range(2, t + 2)))


def complete_bipartite_graph(a: int, b: int) -> Graph:
    """Complete bipartite graph with sides 1..a and a+1..a+b."""
    if a < 1 or b < 1:
        raise ValueError(f"sides must be nonempty, got {a} and {b}")
    return Graph(a + b, tuple((i, a + j) for i in range(1, a + 1) for j in range(1, b + 1)))
