"""Relating edges and generating subgraphs.

An induced complete bipartite subgraph (BX, BY) of G "generates" a
constraint on weight functions when some independent set S, disjoint
from the subgraph's closed neighborhood, makes both S + BX and S + BY
maximal independent. The set S is the witness. An edge is the
one-vertex-per-side special case, where it is called a relating edge.

The search prunes by localizing around the subgraph boundary, then
falls back to greedy completion. A brute-force oracle double-checks
the verdict here.
"""

from wellcovered import (
    Bipartition,
    check_witness,
    cycle_graph,
    is_generating,
    is_generating_oracle,
    is_relating,
    path_graph,
)

c5 = cycle_graph(5)
c7 = cycle_graph(7)
p4 = path_graph(4)

# every edge of C5 relates: by symmetry one check is enough
w = is_relating(c5, 1, 2)
print(f"C5 edge (1,2): witness {sorted(w)}")
assert check_witness(c5, Bipartition(frozenset({1}), frozenset({2})), w)

w = is_relating(c7, 1, 2)
print(f"C7 edge (1,2): witness {sorted(w)}")

# middle edge of P4 does not relate; end edges do
print(f"P4 edge (2,3): {is_relating(p4, 2, 3)}")
print(f"P4 edge (1,2): witness {sorted(is_relating(p4, 1, 2))}")

# C4 needs the full K22 before it generates anything
c4 = cycle_graph(4)
print(f"C4 edge (1,2): {is_relating(c4, 1, 2)}")
b = Bipartition(frozenset({1, 3}), frozenset({2, 4}))
w = is_generating(c4, b)
print(f"C4 K22 {{1,3}} vs {{2,4}}: witness {sorted(w)} (empty set works)")

assert (is_generating_oracle(c4, b) is None) == (w is None)
print("oracle agrees")
