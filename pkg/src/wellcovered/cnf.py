"""CNF formulas with set-valued clauses, DIMACS round-trip, and a small solver.

Literals are nonzero ints, negative meaning negated. A clause never holds a
variable together with its negation. Validators cover the two restricted
shapes the gadget constructions consume: unate instances (usat), where each
clause is all-positive or all-negative, and low-overlap instances (dsat),
where clauses have two or three literals, share at most one literal
pairwise, and sharing clauses never carry a complementary literal pair.
"""

from __future__ import annotations

from dataclasses import dataclass

Clause = frozenset[int]
Assignment = dict[int, bool]

KINDS = ("usat", "dsat", "3sat")


class CnfFormatError(ValueError):
    """Raised for malformed DIMACS text or invalid clause data."""


def literal_key(lit: int) -> tuple[int, bool]:
    return (abs(lit), lit < 0)


def clause_key(clause: Clause) -> tuple:
    lits = sorted(clause, key=literal_key)
    return (len(lits), tuple(literal_key(l) for l in lits))


@dataclass(frozen=True)
class CnfInstance:
    """A CNF formula over variables 1..n_vars; clause order is significant."""

    n_vars: int
    clauses: tuple[Clause, ...] = ()

    def __post_init__(self) -> None:
        if self.n_vars < 0:
            raise CnfFormatError(f"variable count must be nonnegative, got {self.n_vars}")
        norm = []
        for clause in self.clauses:
            c = frozenset(clause)
            for lit in c:
                if lit == 0 or not (1 <= abs(lit) <= self.n_vars):
                    raise CnfFormatError(f"literal {lit} out of range for {self.n_vars} variables")
                if -lit in c:
                    raise CnfFormatError(
                        f"clause contains variable {abs(lit)} and its negation"
                    )
            norm.append(c)
        object.__setattr__(self, "clauses", tuple(norm))


def canonical(instance: CnfInstance) -> CnfInstance:
    """Same formula with clauses sorted by size then literal order."""
    return CnfInstance(instance.n_vars, tuple(sorted(instance.clauses, key=clause_key)))


def parse_dimacs(text: str) -> CnfInstance:
    """Parse DIMACS CNF. A comment "c kind: usat|dsat|3sat" is validated when present."""
    kind = None
    header = None
    tokens: list[str] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line[0] == "c":
            body = line[1:].strip()
            if body.startswith("kind:"):
                k = body[len("kind:"):].strip()
                if k not in KINDS:
                    raise CnfFormatError(f"unknown kind {k!r}")
                kind = k
            continue
        if line[0] == "p":
            if header is not None:
                raise CnfFormatError("duplicate problem line")
            parts = line.split()
            if len(parts) != 4 or parts[0] != "p" or parts[1] != "cnf":
                raise CnfFormatError(f"problem line must be 'p cnf n m', got {line!r}")
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError as exc:
                raise CnfFormatError(f"problem line must be 'p cnf n m', got {line!r}") from exc
            continue
        if header is None:
            raise CnfFormatError("clause data before problem line")
        tokens.extend(line.split())
    if header is None:
        raise CnfFormatError("missing 'p cnf' problem line")
    n_vars, n_clauses = header
    if n_vars < 0 or n_clauses < 0:
        raise CnfFormatError("negative counts in problem line")
    clauses: list[Clause] = []
    current: list[int] = []
    for tok in tokens:
        try:
            lit = int(tok)
        except ValueError as exc:
            raise CnfFormatError(f"bad clause token {tok!r}") from exc
        if lit == 0:
            clauses.append(frozenset(current))
            current = []
        else:
            current.append(lit)
    if current:
        raise CnfFormatError("unterminated clause (missing trailing 0)")
    if len(clauses) != n_clauses:
        raise CnfFormatError(f"expected {n_clauses} clauses, found {len(clauses)}")
    instance = CnfInstance(n_vars, tuple(clauses))
    if kind is not None:
        _validate_kind(instance, kind)
    return instance


def _validate_kind(instance: CnfInstance, kind: str) -> None:
    if kind == "usat" and not validate_usat(instance):
        raise CnfFormatError("declared kind usat, but a clause mixes signs")
    if kind == "dsat":
        violation = validate_dsat(instance)
        if violation is not None:
            raise CnfFormatError(f"declared kind dsat, but {violation}")
    if kind == "3sat" and any(len(c) != 3 for c in instance.clauses):
        raise CnfFormatError("declared kind 3sat, but a clause is not of size 3")


def serialize_dimacs(instance: CnfInstance) -> str:
    """DIMACS text; literals within each clause sorted by variable."""
    lines = [f"p cnf {instance.n_vars} {len(instance.clauses)}"]
    for c in instance.clauses:
        lits = sorted(c, key=literal_key)
        lines.append(" ".join([str(l) for l in lits] + ["0"]))
    return "\n".join(lines) + "\n"


def validate_usat(instance: CnfInstance) -> bool:
    """True when every clause is all-positive or all-negative."""
    return all(
        all(l > 0 for l in c) or all(l < 0 for l in c) for c in instance.clauses
    )


@dataclass(frozen=True)
class DsatViolation:
    """Why an instance fails the low-overlap clause shape (0-based indices)."""

    reason: str  # "size" | "overlap" | "complement"
    first: int
    second: int | None = None

    def __str__(self) -> str:
        if self.reason == "size":
            return f"clause {self.first} does not have 2 or 3 literals"
        if self.reason == "overlap":
            return f"clauses {self.first} and {self.second} share more than one literal"
        return (
            f"clauses {self.first} and {self.second} share a literal and carry "
            "a complementary pair"
        )


def validate_dsat(instance: CnfInstance) -> DsatViolation | None:
    """None when the instance has the low-overlap shape, else the first violation.

    Conditions: every clause has 2 or 3 literals; two clauses share at most
    one literal; clauses sharing a literal never contain l and its negation.
    """
    clauses = instance.clauses
    for i, c in enumerate(clauses):
        if len(c) not in (2, 3):
            return DsatViolation("size", i)
    for i in range(len(clauses)):
        for j in range(i + 1, len(clauses)):
            ci, cj = clauses[i], clauses[j]
            common = ci & cj
            if len(common) > 1:
                return DsatViolation("overlap", i, j)
            if common and any(-l in cj for l in ci):
                return DsatViolation("complement", i, j)
    return None


def bad_pair_detail(clauses: list[Clause]) -> tuple[int, int, int, int] | None:
    """First clause pair sharing a literal while also carrying an equal or
    complementary literal pair among the rest.

    Returns (i, j, shared, offending) where `offending` is the literal of the
    later clause to rewrite. Scan order is deterministic: pairs by position,
    literals by (variable, sign).
    """
    for i in range(len(clauses)):
        for j in range(i + 1, len(clauses)):
            ci, cj = clauses[i], clauses[j]
            shared = sorted(ci & cj, key=literal_key)
            for l1 in shared:
                for l2 in sorted(ci - {l1}, key=literal_key):
                    for l4 in sorted(cj - {l1}, key=literal_key):
                        if l2 == l4 or l2 == -l4:
                            return (i, j, l1, l4)
    return None


def has_bad_pair(instance: CnfInstance) -> tuple[int, int] | None:
    """First pair of clauses (0-based indices) in bad position, or None."""
    hit = bad_pair_detail(list(instance.clauses))
    return (hit[0], hit[1]) if hit else None


def solve(instance: CnfInstance, max_vars: int = 30) -> Assignment | None:
    """Complete backtracking search with unit propagation.

    Deterministic: lowest unassigned variable first, false before true, so
    the reported model is the first one in that order. Variables absent from
    all remaining clauses default to false. Instances above the variable cap
    are rejected.
    """
    if instance.n_vars > max_vars:
        raise ValueError(f"{instance.n_vars} variables exceeds the solver cap {max_vars}")

    def simplify(clauses: list[Clause], lit: int) -> list[Clause]:
        out = []
        for c in clauses:
            if lit in c:
                continue
            if -lit in c:
                c = c - {-lit}
            out.append(c)
        return out

    def search(clauses: list[Clause], phi: Assignment) -> Assignment | None:
        while True:
            if any(not c for c in clauses):
                return None
            unit = next((c for c in clauses if len(c) == 1), None)
            if unit is None:
                break
            (lit,) = unit
            phi = dict(phi)
            phi[abs(lit)] = lit > 0
            clauses = simplify(clauses, lit)
        if not clauses:
            full = dict(phi)
            for v in range(1, instance.n_vars + 1):
                full.setdefault(v, False)
            return full
        v = min({abs(l) for c in clauses for l in c} - phi.keys())
        for value in (False, True):
            lit = v if value else -v
            trial = dict(phi)
            trial[v] = value
            result = search(simplify(clauses, lit), trial)
            if result is not None:
                return result
        return None

    return search(list(instance.clauses), {})


def evaluate(instance: CnfInstance, phi: Assignment) -> bool:
    """Whether the total assignment satisfies every clause."""
    for v in range(1, instance.n_vars + 1):
        if v not in phi:
            raise ValueError(f"assignment missing variable {v}")
    return all(
        any(phi[l] if l > 0 else not phi[-l] for l in c) for c in instance.clauses
    )
