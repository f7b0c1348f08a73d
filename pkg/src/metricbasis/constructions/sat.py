"""3-SAT formulas and the doubled gadget graph built from them.

Two copies of the classic variable/clause gadget graph are cross-wired and a
probe vertex w is joined to every c_{j,3}. Labels follow the pattern
``a^1_{2,1}``, ``T^2_3``, ``c^1_{4,5}`` and ``w``; variables and clauses are
numbered from 1 in labels and from 0 in the API.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Sequence

from ..errors import MalformedClause
from ..graph import Graph, from_edge_list

Literal = tuple[int, bool]  # (variable index, positive?)

VARIABLE_GADGETS = ("hexagon", "square")
HUB_WIRINGS = ("occurring", "all")


@dataclass(frozen=True)
class CnfFormula:
    num_vars: int
    clauses: tuple[tuple[Literal, Literal, Literal], ...]

    def __post_init__(self):
        if self.num_vars < 1:
            raise MalformedClause("a formula needs at least one variable")
        for j, clause in enumerate(self.clauses):
            if len(clause) != 3:
                raise MalformedClause(f"clause {j + 1} does not have exactly three literals")
            vs = [v for v, _ in clause]
            if len(set(vs)) != 3:
                raise MalformedClause(f"clause {j + 1} repeats a variable")
            if any(not 0 <= v < self.num_vars for v in vs):
                raise MalformedClause(f"clause {j + 1} names an unknown variable")

    @classmethod
    def from_ints(cls, num_vars: int, clauses: Iterable[Sequence[int]]) -> CnfFormula:
        """DIMACS-style literals: +i is x_i, -i is its negation (1-based)."""
        out = []
        for c in clauses:
            if any(x == 0 for x in c):
                raise MalformedClause("literal 0 is not allowed")
            out.append(tuple((abs(x) - 1, x > 0) for x in c))
        return cls(num_vars, tuple(out))

    @property
    def num_clauses(self) -> int:
        return len(self.clauses)

    def satisfied_by(self, assignment: Sequence[bool]) -> bool:
        return all(any(assignment[v] == pos for v, pos in c) for c in self.clauses)

    def falsified_clauses(self, assignment: Sequence[bool]) -> list[int]:
        return [j for j, c in enumerate(self.clauses)
                if not any(assignment[v] == pos for v, pos in c)]

    def satisfying_assignments(self) -> list[tuple[bool, ...]]:
        return [a for a in product((True, False), repeat=self.num_vars) if self.satisfied_by(a)]

    def to_dimacs(self) -> str:
        lines = [f"p cnf {self.num_vars} {self.num_clauses}"]
        for c in self.clauses:
            lines.append(" ".join(str(v + 1 if pos else -(v + 1)) for v, pos in c) + " 0")
        return "\n".join(lines) + "\n"


def parse_dimacs(text: str) -> CnfFormula:
    header = None
    lits: list[int] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise MalformedClause(f"bad problem line: {line!r}")
            header = (int(parts[2]), int(parts[3]))
            continue
        try:
            lits.extend(int(t) for t in line.split())
        except ValueError:
            raise MalformedClause(f"bad clause line: {line!r}") from None
    if header is None:
        raise MalformedClause("missing 'p cnf' line")
    clauses, cur = [], []
    for x in lits:
        if x == 0:
            clauses.append(cur)
            cur = []
        else:
            cur.append(x)
    if cur:
        raise MalformedClause("last clause is not terminated by 0")
    if len(clauses) != header[1]:
        raise MalformedClause(f"header says {header[1]} clauses, found {len(clauses)}")
    if any(abs(x) > header[0] for c in clauses for x in c):
        raise MalformedClause("literal outside the declared variable range")
    return CnfFormula.from_ints(header[0], clauses)


def random_formula(num_vars: int, num_clauses: int, rng: random.Random) -> CnfFormula:
    clauses = []
    for _ in range(num_clauses):
        vs = rng.sample(range(num_vars), 3)
        clauses.append(tuple((v, rng.random() < 0.5) for v in vs))
    return CnfFormula(num_vars, tuple(clauses))


@dataclass(frozen=True)
class ReductionGraph:
    graph: Graph
    formula: CnfFormula
    w: int
    variables: dict  # (copy, i) -> {"a1","a2","b1","b2","T","F"} -> vertex
    clauses: dict  # (copy, j) -> {1..5} -> vertex

    def var(self, copy: int, i: int, name: str) -> int:
        return self.variables[(copy, i)][name]

    def clause(self, copy: int, j: int, idx: int) -> int:
        return self.clauses[(copy, j)][idx]

    @property
    def expected_order(self) -> int:
        return 2 * (6 * self.formula.num_vars + 5 * self.formula.num_clauses) + 1


def sat_reduction(f: CnfFormula, *, gadget: str = "hexagon", hub_wiring: str = "all") -> ReductionGraph:
    """Build the reduction graph.

    ``gadget="hexagon"`` is the 6-cycle T a1 b1 F b2 a2; ``"square"`` is the
    4-cycle a1 a2 b2 b1 with T on the a side and F on the b side.
    ``hub_wiring`` selects which variable gadgets c_{j,1} is joined to.
    """
    if gadget not in VARIABLE_GADGETS:
        raise ValueError(f"gadget must be one of {VARIABLE_GADGETS}")
    if hub_wiring not in HUB_WIRINGS:
        raise ValueError(f"hub_wiring must be one of {HUB_WIRINGS}")
    n, m = f.num_vars, f.num_clauses
    labels: list[str] = []
    variables: dict = {}
    clauses: dict = {}

    def new(label: str) -> int:
        labels.append(label)
        return len(labels) - 1

    edges: list[tuple[int, int]] = []
    for k in (1, 2):
        for i in range(n):
            tag = f"^{k}_{{{i + 1},"
            vs = {
                "a1": new(f"a{tag}1}}"), "a2": new(f"a{tag}2}}"),
                "b1": new(f"b{tag}1}}"), "b2": new(f"b{tag}2}}"),
                "T": new(f"T^{k}_{i + 1}"), "F": new(f"F^{k}_{i + 1}"),
            }
            variables[(k, i)] = vs
            if gadget == "hexagon":
                pairs = [("T", "a1"), ("a1", "b1"), ("b1", "F"), ("F", "b2"), ("b2", "a2"), ("a2", "T")]
            else:
                pairs = [("a1", "a2"), ("a2", "b2"), ("b2", "b1"), ("b1", "a1"),
                         ("T", "a1"), ("T", "a2"), ("F", "b1"), ("F", "b2")]
            edges.extend((vs[x], vs[y]) for x, y in pairs)
        for j, clause in enumerate(f.clauses):
            cs = {idx: new(f"c^{k}_{{{j + 1},{idx}}}") for idx in range(1, 6)}
            clauses[(k, j)] = cs
            edges.extend((cs[2], cs[idx]) for idx in (1, 3, 4, 5))
            occurring = {v: pos for v, pos in clause}
            for i in range(n):
                vs = variables[(k, i)]
                if i in occurring:
                    # c_{j,3} sees the side that makes the literal false
                    edges.append((cs[3], vs["F"] if occurring[i] else vs["T"]))
                else:
                    edges.extend([(cs[3], vs["T"]), (cs[3], vs["F"])])
                if i in occurring or hub_wiring == "all":
                    edges.extend([(cs[1], vs["T"]), (cs[1], vs["F"])])
    for k, other in ((1, 2), (2, 1)):
        for j in range(m):
            for idx in (1, 3):
                c = clauses[(k, j)][idx]
                for i in range(n):
                    edges.extend([(c, variables[(other, i)]["T"]), (c, variables[(other, i)]["F"])])
    w = new("w")
    edges.extend((w, clauses[(k, j)][3]) for k in (1, 2) for j in range(m))
    g = from_edge_list(len(labels), edges, labels)
    return ReductionGraph(g, f, w, variables, clauses)


def satisfiable_side_certificate(rg: ReductionGraph, assignment: Sequence[bool]) -> frozenset[int]:
    """All c^k_{j,4}, plus a^k_{i,1} for true x_i and b^k_{i,1} for false x_i."""
    n = rg.formula.num_vars
    if len(assignment) != n:
        raise ValueError(f"assignment has {len(assignment)} values, formula has {n} variables")
    out = {rg.clause(k, j, 4) for k in (1, 2) for j in range(rg.formula.num_clauses)}
    for k in (1, 2):
        for i, val in enumerate(assignment):
            out.add(rg.var(k, i, "a1" if val else "b1"))
    return frozenset(out)


def universal_certificate(rg: ReductionGraph) -> frozenset[int]:
    """w together with every a^k_{i,1} and c^k_{j,4}."""
    out = {rg.w}
    for k in (1, 2):
        out.update(rg.var(k, i, "a1") for i in range(rg.formula.num_vars))
        out.update(rg.clause(k, j, 4) for j in range(rg.formula.num_clauses))
    return frozenset(out)


def audit_reduction(rg: ReductionGraph) -> list[str]:
    """Structural checks on the wiring; returns a list of problems (empty when sound)."""
    g, f = rg.graph, rg.formula
    problems = []
    if g.n != rg.expected_order:
        problems.append(f"order {g.n} != {rg.expected_order}")
    want_w = {rg.clause(k, j, 3) for k in (1, 2) for j in range(f.num_clauses)}
    if set(g.adj[rg.w]) != want_w:
        problems.append("w is not adjacent exactly to the c_{j,3}")
    for k, other in ((1, 2), (2, 1)):
        for j, clause in enumerate(f.clauses):
            c3 = rg.clause(k, j, 3)
            occurring = {v: pos for v, pos in clause}
            for i in range(f.num_vars):
                t, fv = rg.var(k, i, "T"), rg.var(k, i, "F")
                got = (g.has_edge(c3, t), g.has_edge(c3, fv))
                if i in occurring:
                    want = (False, True) if occurring[i] else (True, False)
                else:
                    want = (True, True)
                if got != want:
                    problems.append(f"{g.label(c3)} wiring to variable {i + 1} is {got}, expected {want}")
                if i in occurring and not (g.has_edge(rg.clause(k, j, 1), t) and g.has_edge(rg.clause(k, j, 1), fv)):
                    problems.append(f"{g.label(rg.clause(k, j, 1))} misses the gadget of variable {i + 1}")
                for idx in (1, 3):
                    c = rg.clause(k, j, idx)
                    if not (g.has_edge(c, rg.var(other, i, "T")) and g.has_edge(c, rg.var(other, i, "F"))):
                        problems.append(f"{g.label(c)} misses the cross edges to copy {other}")
    return problems
