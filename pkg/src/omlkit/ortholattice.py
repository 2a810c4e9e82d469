"""Orthomodular-lattice axioms, the commutation relation, and Sasaki operations."""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    AxiomResult,
    BinaryOp,
    BoundedLattice,
    CheckReport,
    PrerequisiteFailed,
    SizeMismatch,
    UnaryOp,
    _axiom,
    _fail1,
    _fail2,
    is_antitone_involution,
    is_bounded_lattice,
)


@dataclass(frozen=True)
class OrthoLattice(BoundedLattice):
    """Bounded lattice with a complementation table.

    Closure is validated on construction; whether the complement really is
    an antitone involutive complementation is the job of check_ortholattice.
    """

    comp: UnaryOp

    def __post_init__(self) -> None:
        super().__post_init__()
        if self.comp.size != self.carrier.size:
            raise SizeMismatch(
                f"comp table size {self.comp.size} != carrier size {self.carrier.size}"
            )

    def table_signature(self):
        ops, consts = super().table_signature()
        return ops + (("comp", "unary", self.comp.map),), consts


def check_ortholattice(s: OrthoLattice) -> CheckReport:
    """Bounded-lattice laws, antitone involution, and both complement laws."""
    n = s.carrier.size
    names = s.names
    j, m, c = s.join.table, s.meet.table, s.comp.map
    report = is_bounded_lattice(s).merged_with(is_antitone_involution(s, s.comp))
    extra = (
        _axiom(names, "complement-join", _fail1(n, lambda x: j[x][c[x]] == s.top)),
        _axiom(names, "complement-meet", _fail1(n, lambda x: m[x][c[x]] == s.bottom)),
    )
    return CheckReport(report.results + extra)


def check_orthomodular(s: OrthoLattice) -> CheckReport:
    """The orthomodular law on all comparable pairs, plus x v x' = 1.

    Raises PrerequisiteFailed when the candidate is not even an ortholattice
    skeleton (bounded lattice with an antitone involution), so structural
    failure is distinguishable from failure of orthomodularity itself.
    """
    base = is_bounded_lattice(s)
    if not base.ok:
        raise PrerequisiteFailed("not a bounded lattice", base)
    inv = is_antitone_involution(s, s.comp)
    if not inv.ok:
        raise PrerequisiteFailed("complement is not an antitone involution", inv)

    n = s.carrier.size
    names = s.names
    j, m, c = s.join.table, s.meet.table, s.comp.map
    leq = [[m[x][y] == x for y in range(n)] for x in range(n)]
    results = (
        _axiom(names, "orthomodular-law",
               _fail2(n, lambda x, y: not leq[x][y] or j[x][m[y][c[x]]] == y)),
        _axiom(names, "complement-join", _fail1(n, lambda x: j[x][c[x]] == s.top)),
    )
    return CheckReport(results)


def commutes(s: OrthoLattice, a: int, b: int) -> bool:
    """Whether a = (a ^ b) v (a ^ b')."""
    j, m, c = s.join.table, s.meet.table, s.comp.map
    return j[m[a][b]][m[a][c[b]]] == a


def check_commutation_properties(s: OrthoLattice) -> CheckReport:
    """Symmetry of commutation, comparability implies commutation, and
    closure of commutation under complementing the second argument.

    Only valid on orthomodular lattices; raises PrerequisiteFailed otherwise.
    """
    gate = check_orthomodular(s)
    if not gate.ok:
        raise PrerequisiteFailed("structure is not orthomodular", gate)

    n = s.carrier.size
    names = s.names
    m, c = s.meet.table, s.comp.map
    com = [[commutes(s, a, b) for b in range(n)] for a in range(n)]
    leq = [[m[x][y] == x for y in range(n)] for x in range(n)]
    results = (
        _axiom(names, "commutation-symmetric",
               _fail2(n, lambda a, b: not com[a][b] or com[b][a])),
        _axiom(names, "leq-implies-commutes",
               _fail2(n, lambda a, b: not leq[a][b] or com[a][b])),
        _axiom(names, "commutes-with-complement",
               _fail2(n, lambda a, b: not com[a][b] or com[a][c[b]])),
    )
    return CheckReport(results)


def check_foulis_holland(s: OrthoLattice) -> CheckReport:
    """Conditional distributivity for triples where some element of the
    triple is commuted with by both others."""
    gate = check_orthomodular(s)
    if not gate.ok:
        raise PrerequisiteFailed("structure is not orthomodular", gate)

    n = s.carrier.size
    names = s.names
    j, m = s.join.table, s.meet.table
    com = [[commutes(s, a, b) for b in range(n)] for a in range(n)]

    def hypothesis(a: int, b: int, c: int) -> bool:
        return ((com[b][a] and com[c][a])
                or (com[a][b] and com[c][b])
                or (com[a][c] and com[b][c]))

    def first_fail(identity) -> tuple[int, ...] | None:
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    if hypothesis(a, b, c) and not identity(a, b, c):
                        return (a, b, c)
        return None

    results = (
        _axiom(names, "distributive-join-meet",
               first_fail(lambda a, b, c: m[j[a][b]][c] == j[m[a][c]][m[b][c]])),
        _axiom(names, "distributive-meet-join",
               first_fail(lambda a, b, c: j[m[a][b]][c] == m[j[a][c]][j[b][c]])),
    )
    return CheckReport(results)


def sasaki_product(s: OrthoLattice, x: int, y: int) -> int:
    """(x v y') ^ y."""
    return s.meet.table[s.join.table[x][s.comp.map[y]]][y]


def sasaki_sum(s: OrthoLattice, x: int, y: int) -> int:
    """(x ^ y') v y."""
    return s.join.table[s.meet.table[x][s.comp.map[y]]][y]


def sasaki_product_table(s: OrthoLattice) -> BinaryOp:
    return BinaryOp.from_function(s.carrier.size, lambda x, y: sasaki_product(s, x, y))


def sasaki_sum_table(s: OrthoLattice) -> BinaryOp:
    return BinaryOp.from_function(s.carrier.size, lambda x, y: sasaki_sum(s, x, y))
