"""Equalizing weight functions and the three ways to compute them.

A weight function on the vertices generalizes well-coveredness: the
graph is "well-covered with respect to w" when every maximal
independent set gets the same total weight. The functions that work
form a rational vector space. Three independent constructions of that
space are exposed, and they must always agree:

  definitional  difference vectors of maximal independent sets
  generating    one constraint per generating subgraph of the graph
  local         intersection of per-edge local relation spaces

The constant all-ones function lies in the space exactly when the
graph is well-covered in the classical sense.
"""

from wellcovered import (
    Graph,
    contains_all_ones,
    cycle_graph,
    path_graph,
    serialize_weight_space,
    wcw_basis_definitional,
    wcw_basis_generating,
    wcw_basis_local,
)


def show(name, g):
    d = wcw_basis_definitional(g)
    assert d == wcw_basis_generating(g) == wcw_basis_local(g)
    print(f"{name}: dimension {d.dim} out of {g.n}")
    for row in d.basis:
        print("  basis vector (" + ", ".join(str(x) for x in row) + ")")
    tag = "yes" if contains_all_ones(d) else "no"
    print(f"  constant weights equalize: {tag}")
    print()


show("C4", cycle_graph(4))
show("C5", cycle_graph(5))
show("C7", cycle_graph(7))
show("P3", path_graph(3))
show("P4", path_graph(4))

# C4 has dimension 3: vertex pairs across each diagonal are
# interchangeable, so weights only need to balance the two diagonals.
# C5 and C7 pin the space down to constant functions. P3 is not
# well-covered, yet its weight space is nontrivial: the maximal sets
# are {1,3} and {2}, so any weights with w1 + w3 = w2 work, say
# opposite values on the two ends and zero in the middle.

print("serialized form of the C4 space:")
print(serialize_weight_space(wcw_basis_definitional(cycle_graph(4))))
