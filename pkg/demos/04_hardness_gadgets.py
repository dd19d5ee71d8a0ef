"""Why witness search is hard: satisfiability embeds into it.

Four reductions chain CNF satisfiability into the graph questions:

  sat2usat    arbitrary CNF to unate-pair form (twin variables)
  usat2re     unate CNF to a bipartite graph whose designated edge
              relates iff the formula is satisfiable
  3sat2dsat   3-CNF to clause-disjoint form (fresh variables break
              clause pairs that interact too much)
  dsat2gs     clause-disjoint CNF to a graph with no short cycles
              whose designated star generates iff satisfiable

Witnesses translate back into satisfying assignments and vice versa,
so the graph search doubles as a SAT solver on these instances.
"""

from wellcovered import (
    CnfInstance,
    assignment_to_witness,
    dsat_to_gs,
    evaluate,
    is_bipartite,
    is_generating,
    is_relating,
    sat_to_usat,
    solve,
    threesat_to_dsat,
    usat_to_re,
    witness_to_assignment,
)

sat = CnfInstance(5, ((1, -2, 3), (1, 3, 4, 5), (-1, 2, -3, 4), (1, 2, -4, -5)))
usat = sat_to_usat(sat)
print(f"sat2usat: {sat.n_vars} vars {len(sat.clauses)} clauses "
      f"-> {usat.n_vars} vars {len(usat.clauses)} clauses")

built = usat_to_re(usat)
g = built.graph
sides = is_bipartite(g)
print(f"usat2re: graph on {g.n} vertices, {len(g.edges)} edges, "
      f"bipartite sides {len(sides[0])}/{len(sides[1])}")

w = is_relating(g, 1, 2)
print(f"designated edge relates, witness size {len(w)}")
model = witness_to_assignment(built, w)
assert evaluate(usat, model)
print("witness converts to a satisfying assignment")

threesat = CnfInstance(5, ((1, -2, 3), (1, 3, 4), (1, 3, 5),
                           (-3, -4, 5), (2, -3, -4), (-1, -4, -5)))
dsat = threesat_to_dsat(threesat)
print(f"\n3sat2dsat: {threesat.n_vars} vars -> {dsat.n_vars} vars, "
      f"{len(dsat.clauses)} clauses, pairwise clause overlap now tame")

built = dsat_to_gs(dsat)
g = built.graph
print(f"dsat2gs: graph on {g.n} vertices, no cycles of length 3, 4 or 5")
w = is_generating(g, built.bipartition)
print(f"designated star generates, witness size {len(w)}")
assert evaluate(dsat, witness_to_assignment(built, w))

# round trip the other way: solver model -> graph witness
model = solve(dsat)
witness = assignment_to_witness(built, model)
print(f"solver model maps to witness of size {len(witness)}")
