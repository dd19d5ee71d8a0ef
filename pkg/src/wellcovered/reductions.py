"""Instance generators tying satisfiability to witness existence.

Four rewrites, each validating its input shape, constructing its output
deterministically, and asserting the structural properties the construction
guarantees:

- sat_to_usat: general CNF to a unate instance over twice the variables;
- usat_to_re: unate CNF to a bipartite graph whose designated edge is
  relating exactly when the formula is satisfiable;
- threesat_to_dsat: 3-literal CNF to the low-overlap shape by rewriting
  offending literal pairs with fresh variables;
- dsat_to_gs: low-overlap CNF to a graph without 3-, 4- or 5-cycles whose
  designated star is generating exactly when the formula is satisfiable.

Satisfying assignments translate to witnesses and back: variable i maps to
the vertex pair (u_i, u'_i), true picking u_i and false picking u'_i.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .cnf import Assignment, CnfInstance, bad_pair_detail, validate_dsat, validate_usat
from .graphs import Graph, VertexSet, contains_cycle_k, is_bipartite
from .witness import Bipartition, check_witness


@dataclass(frozen=True)
class ReInstance:
    """A relating-edge question produced from a unate CNF instance."""

    graph: Graph
    edge: tuple[int, int]
    n_vars: int
    m_pos: int
    m_neg: int

    @property
    def bipartition(self) -> Bipartition:
        return Bipartition(frozenset({self.edge[0]}), frozenset({self.edge[1]}))

    def v_vertex(self, j: int) -> int:
        return 2 + j

    def vprime_vertex(self, j: int) -> int:
        return 2 + self.m_pos + j

    def u_vertex(self, i: int) -> int:
        return 2 + self.m_pos + self.m_neg + i

    def uprime_vertex(self, i: int) -> int:
        return 2 + self.m_pos + self.m_neg + self.n_vars + i

    @cached_property
    def names(self) -> dict[int, str]:
        d = {1: "x", 2: "y"}
        for j in range(1, self.m_pos + 1):
            d[self.v_vertex(j)] = f"v{j}"
        for j in range(1, self.m_neg + 1):
            d[self.vprime_vertex(j)] = f"v'{j}"
        for i in range(1, self.n_vars + 1):
            d[self.u_vertex(i)] = f"u{i}"
            d[self.uprime_vertex(i)] = f"u'{i}"
        return d


@dataclass(frozen=True)
class GsInstance:
    """A generating-subgraph question produced from a low-overlap CNF instance."""

    graph: Graph
    bipartition: Bipartition
    n_vars: int
    m: int

    def a_vertex(self, j: int) -> int:
        return 1 + j

    def v_vertex(self, j: int) -> int:
        return 1 + self.m + j

    def u_vertex(self, i: int) -> int:
        return 1 + 2 * self.m + i

    def uprime_vertex(self, i: int) -> int:
        return 1 + 2 * self.m + self.n_vars + i

    @cached_property
    def names(self) -> dict[int, str]:
        d = {1: "y"}
        for j in range(1, self.m + 1):
            d[self.a_vertex(j)] = f"a{j}"
            d[self.v_vertex(j)] = f"v{j}"
        for i in range(1, self.n_vars + 1):
            d[self.u_vertex(i)] = f"u{i}"
            d[self.uprime_vertex(i)] = f"u'{i}"
        return d


def sat_to_usat(instance: CnfInstance) -> CnfInstance:
    """Rewrite to a unate instance over 2n variables.

    Negated occurrences of variable i are replaced by a positive twin n+i;
    the twin clauses (i, n+i) and (-i, -(n+i)) force the two to disagree.
    Clause order: rewritten clauses, then the positive twins, then the
    negative twins.
    """
    n = instance.n_vars
    clauses = [
        frozenset(l if l > 0 else n - l for l in c) for c in instance.clauses
    ]
    clauses += [frozenset({i, n + i}) for i in range(1, n + 1)]
    clauses += [frozenset({-i, -(n + i)}) for i in range(1, n + 1)]
    out = CnfInstance(2 * n, tuple(clauses))
    assert validate_usat(out)
    return out


def usat_to_re(instance: CnfInstance) -> ReInstance:
    """Build the relating-edge graph of a unate instance.

    Vertices: x=1, y=2, then one v_j per all-positive clause, one v'_j per
    all-negative clause, then u_1..u_n, then u'_1..u'_n. Edges: xy, x to
    every v_j, y to every v'_j, v_j to u_i when clause j holds literal i,
    v'_j to u'_i when clause j holds literal -i, and every pair u_i u'_i.
    The result is bipartite (asserted).
    """
    if not validate_usat(instance):
        raise ValueError("input is not unate: a clause mixes positive and negative literals")
    pos = [c for c in instance.clauses if all(l > 0 for l in c)]
    neg = [c for c in instance.clauses if not all(l > 0 for l in c)]
    n, m, mp = instance.n_vars, len(pos), len(neg)
    inst = ReInstance(
        graph=Graph(0),  # placeholder, replaced below
        edge=(1, 2),
        n_vars=n,
        m_pos=m,
        m_neg=mp,
    )
    edges = [(1, 2)]
    edges += [(1, inst.v_vertex(j)) for j in range(1, m + 1)]
    edges += [(2, inst.vprime_vertex(j)) for j in range(1, mp + 1)]
    for j, c in enumerate(pos, start=1):
        edges += [(inst.v_vertex(j), inst.u_vertex(l)) for l in sorted(c)]
    for j, c in enumerate(neg, start=1):
        edges += [(inst.vprime_vertex(j), inst.uprime_vertex(-l)) for l in sorted(c, reverse=True)]
    for i in range(1, n + 1):
        edges.append((inst.u_vertex(i), inst.uprime_vertex(i)))
    graph = Graph(2 + m + mp + 2 * n, tuple(edges))
    assert is_bipartite(graph) is not None
    return ReInstance(graph, (1, 2), n, m, mp)


def threesat_to_dsat(instance: CnfInstance) -> CnfInstance:
    """Rewrite a 3-literal instance into the low-overlap shape.

    While some clause pair shares a literal and carries an equal or
    complementary literal pair, the offending literal of the later clause
    is replaced by a fresh variable x_{n+1}, and the clauses (-l, x_{n+1})
    and (l, -x_{n+1}) pin the fresh variable to the value of l. Each step
    removes one offence and never creates one among old variables, so the
    loop ends; a step guard covers it regardless.
    """
    if any(len(c) != 3 for c in instance.clauses):
        raise ValueError("input is not a 3-literal instance")
    clauses = list(instance.clauses)
    n = instance.n_vars
    guard = 4 * max(1, n) * max(1, len(clauses))
    steps = 0
    while (hit := bad_pair_detail(clauses)) is not None:
        steps += 1
        if steps > guard:
            raise AssertionError("rewrite failed to converge within the step guard")
        _, j, _, offending = hit
        n += 1
        clauses[j] = (clauses[j] - {offending}) | {n}
        clauses.append(frozenset({-offending, n}))
        clauses.append(frozenset({offending, -n}))
    out = CnfInstance(n, tuple(clauses))
    assert validate_dsat(out) is None
    return out


def dsat_to_gs(instance: CnfInstance) -> GsInstance:
    """Build the generating-subgraph graph of a low-overlap instance.

    Vertices: y=1, then a_1..a_m, v_1..v_m, u_1..u_n, u'_1..u'_n. Edges:
    y a_j, a_j v_j, v_j u_i for positive literal i in clause j, v_j u'_i for
    negative literal -i, and every pair u_i u'_i. The designated subgraph is
    the star on y and the a_j. The result has no 3-, 4- or 5-cycle (asserted).
    """
    violation = validate_dsat(instance)
    if violation is not None:
        raise ValueError(f"input is not low-overlap: {violation}")
    if not instance.clauses:
        raise ValueError("at least one clause is required")
    n, m = instance.n_vars, len(instance.clauses)
    inst = GsInstance(
        graph=Graph(0),  # placeholder, replaced below
        bipartition=Bipartition(frozenset({1}), frozenset({2})),
        n_vars=n,
        m=m,
    )
    edges = [(1, inst.a_vertex(j)) for j in range(1, m + 1)]
    edges += [(inst.a_vertex(j), inst.v_vertex(j)) for j in range(1, m + 1)]
    for j, c in enumerate(instance.clauses, start=1):
        for l in sorted(c, key=abs):
            target = inst.u_vertex(l) if l > 0 else inst.uprime_vertex(-l)
            edges.append((inst.v_vertex(j), target))
    for i in range(1, n + 1):
        edges.append((inst.u_vertex(i), inst.uprime_vertex(i)))
    graph = Graph(1 + 2 * m + 2 * n, tuple(edges))
    for k in (3, 4, 5):
        assert not contains_cycle_k(graph, k)
    star = Bipartition(
        frozenset({1}), frozenset(inst.a_vertex(j) for j in range(1, m + 1))
    )
    return GsInstance(graph, star, n, m)


def assignment_to_witness(instance: ReInstance | GsInstance, phi: Assignment) -> VertexSet:
    """The witness set picked out by a total truth assignment."""
    for i in range(1, instance.n_vars + 1):
        if i not in phi:
            raise ValueError(f"assignment missing variable {i}")
    return frozenset(
        instance.u_vertex(i) if phi[i] else instance.uprime_vertex(i)
        for i in range(1, instance.n_vars + 1)
    )


def witness_to_assignment(instance: ReInstance | GsInstance, witness: VertexSet) -> Assignment:
    """The truth assignment read off a valid witness.

    The witness is rechecked first. It is completed maximally within the
    u-vertex pairs, a pair with neither vertex present defaulting to u_i,
    and variable i is true exactly when u_i ends up chosen.
    """
    if not check_witness(instance.graph, instance.bipartition, witness):
        raise ValueError("invalid witness for the designated subgraph")
    chosen = frozenset(witness)
    phi: Assignment = {}
    for i in range(1, instance.n_vars + 1):
        if instance.u_vertex(i) in chosen:
            phi[i] = True
        elif instance.uprime_vertex(i) in chosen:
            phi[i] = False
        else:
            phi[i] = True
    return phi


def serialize_sidecar(instance: ReInstance | GsInstance) -> str:
    """Companion text for a generated graph: designated subgraph and vertex names."""
    if isinstance(instance, ReInstance):
        head = f"designated: edge {instance.edge[0]} {instance.edge[1]}"
    else:
        bx = ",".join(str(v) for v in sorted(instance.bipartition.bx))
        by = ",".join(str(v) for v in sorted(instance.bipartition.by))
        head = f"designated: BX {bx} BY {by}"
    lines = [head]
    lines += [f"names: {v}={instance.names[v]}" for v in sorted(instance.names)]
    return "\n".join(lines) + "\n"


def parse_sidecar(text: str) -> tuple[tuple, dict[int, str]]:
    """Parse sidecar text; returns (designation, names).

    The designation is ("edge", u, v) or ("bipartition", bx, by).
    """
    designation = None
    names: dict[int, str] = {}
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("designated: edge "):
            parts = line.split()
            if len(parts) != 4:
                raise ValueError(f"bad designation line {line!r}")
            designation = ("edge", int(parts[2]), int(parts[3]))
        elif line.startswith("designated: BX "):
            parts = line.split()
            if len(parts) != 5 or parts[1] != "BX" or parts[3] != "BY":
                raise ValueError(f"bad designation line {line!r}")
            bx = frozenset(int(t) for t in parts[2].split(","))
            by = frozenset(int(t) for t in parts[4].split(","))
            designation = ("bipartition", bx, by)
        elif line.startswith("names: "):
            v, _, label = line[len("names: "):].partition("=")
            names[int(v)] = label
        else:
            raise ValueError(f"unrecognized sidecar line {line!r}")
    if designation is None:
        raise ValueError("sidecar missing a designation line")
    return designation, names
