"""Checking whether every maximal independent set has the same size.

A graph is well-covered when greedy independent-set construction can
never paint itself into a corner: any maximal independent set is as
large as the largest one. This script walks a few small graphs through
the checker and shows the counterexample pair it returns when the
property fails.
"""

from wellcovered import (
    cycle_graph,
    enumerate_maximal_is,
    is_well_covered,
    path_graph,
    star_graph,
)


def report(name, g):
    sets = enumerate_maximal_is(g)
    sizes = sorted({len(s) for s in sets})
    verdict = is_well_covered(g)
    print(f"{name}: {len(sets)} maximal independent sets, sizes {sizes}")
    if verdict is None:
        print("  well-covered")
    else:
        small, large = verdict
        print(f"  not well-covered: {sorted(small)} is maximal but smaller than {sorted(large)}")
    print()


report("P3 (path on 3 vertices)", path_graph(3))
report("P4", path_graph(4))
report("C4", cycle_graph(4))
report("C5", cycle_graph(5))
report("C7", cycle_graph(7))
report("K1,3 (star)", star_graph(3))

# C4, C5 and C7 are well-covered; the paths P3 and the star are not.
# P4 is well-covered: its maximal independent sets are {1,3}, {1,4},
# {2,4}, all of size 2.
