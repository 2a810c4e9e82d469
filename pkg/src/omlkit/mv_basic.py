"""MV-algebra and basic-algebra checkers, their derived lattice structure,
and Lukasiewicz-chain generators used as fixtures.

Chain carriers use exact rational labels (fractions of k-1); no floating
point appears anywhere, so table equality is always exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import (
    AlgebraError,
    BadSize,
    BinaryOp,
    Carrier,
    CheckReport,
    InconsistentOrder,
    OrderRelation,
    OutOfRange,
    PrerequisiteFailed,
    SizeMismatch,
    UnaryOp,
    _axiom,
    _fail1,
    _fail2,
    _fail3,
    validate_partial_order,
)
from .coupled import CoupledTriple
from .near_semiring import NearSemiring


class NotMV(AlgebraError):
    """Construction input fails the MV axioms; carries the check report."""

    def __init__(self, report: CheckReport):
        fail = report.first_failure()
        super().__init__(f"not an MV-algebra: {fail.axiom if fail else '?'} fails")
        self.report = report


@dataclass(frozen=True)
class OplusAlgebra:
    """Algebra (A, oplus, neg, 0) of type (2, 1, 0); 1 is defined as neg(0)."""

    carrier: Carrier
    oplus: BinaryOp
    neg: UnaryOp
    zero: int

    def __post_init__(self) -> None:
        n = self.carrier.size
        if self.oplus.size != n:
            raise SizeMismatch(f"oplus table size {self.oplus.size} != carrier size {n}")
        if self.neg.size != n:
            raise SizeMismatch(f"neg table size {self.neg.size} != carrier size {n}")
        if not 0 <= self.zero < n:
            raise OutOfRange(f"zero constant {self.zero} outside 0..{n - 1}")

    @property
    def one(self) -> int:
        return self.neg.map[self.zero]

    @property
    def names(self) -> tuple[str, ...]:
        return self.carrier.names

    def table_signature(self):
        return (
            (("oplus", "binary", self.oplus.table), ("neg", "unary", self.neg.map)),
            (("zero", self.zero),),
        )


def check_mv_algebra(a: OplusAlgebra) -> CheckReport:
    """Commutative monoid laws plus the three defining MV identities."""
    n = a.carrier.size
    names = a.names
    p, f = a.oplus.table, a.neg.map
    z, o = a.zero, a.one
    results = (
        _axiom(names, "oplus-commutative", _fail2(n, lambda x, y: p[x][y] == p[y][x])),
        _axiom(names, "oplus-associative",
               _fail3(n, lambda x, y, w: p[p[x][y]][w] == p[x][p[y][w]])),
        _axiom(names, "zero-neutral",
               _fail1(n, lambda x: p[x][z] == x and p[z][x] == x)),
        _axiom(names, "top-absorbing", _fail1(n, lambda x: p[x][o] == o)),
        _axiom(names, "double-negation", _fail1(n, lambda x: f[f[x]] == x)),
        _axiom(names, "join-symmetry",
               _fail2(n, lambda x, y: p[f[p[f[x]][y]]][y] == p[f[p[f[y]][x]]][x])),
    )
    return CheckReport(results)


def check_basic_algebra(a: OplusAlgebra) -> CheckReport:
    """The four basic-algebra identities (no commutativity, no associativity)."""
    n = a.carrier.size
    names = a.names
    p, f = a.oplus.table, a.neg.map
    z, o = a.zero, a.one
    results = (
        _axiom(names, "zero-neutral", _fail1(n, lambda x: p[x][z] == x)),
        _axiom(names, "double-negation", _fail1(n, lambda x: f[f[x]] == x)),
        _axiom(names, "join-symmetry",
               _fail2(n, lambda x, y: p[f[p[f[x]][y]]][y] == p[f[p[f[y]][x]]][x])),
        _axiom(names, "difference-bound",
               _fail3(n, lambda x, y, w:
                      p[f[p[f[p[f[p[x][y]]][y]]][w]]][p[x][w]] == o)),
    )
    return CheckReport(results)


def derive_lattice(a: OplusAlgebra) -> tuple[OrderRelation, BinaryOp, BinaryOp]:
    """Order x <= y iff neg(x) oplus y = 1, with join/meet term operations
    x v y = neg(neg(x) oplus y) oplus y and x ^ y = neg(neg(x) v neg(y)).

    Verifies rather than trusts that the term operations realize suprema and
    infima of the derived order and that negation is antitone; disagreement
    raises InconsistentOrder (a non-basic input slipped through).
    """
    gate = check_basic_algebra(a)
    if not gate.ok:
        raise PrerequisiteFailed("not a basic algebra", gate)

    n = a.carrier.size
    p, f = a.oplus.table, a.neg.map
    one = a.one
    leq_rows = tuple(tuple(p[f[x]][y] == one for y in range(n)) for x in range(n))
    order = OrderRelation(leq_rows)
    validate_partial_order(order)

    join = BinaryOp.from_function(n, lambda x, y: p[f[p[f[x]][y]]][y])
    meet = BinaryOp.from_function(n, lambda x, y: f[join.table[f[x]][f[y]]])

    leq = order.leq
    for x in range(n):
        for y in range(n):
            j = join.table[x][y]
            if not (leq[x][j] and leq[y][j]):
                raise InconsistentOrder(f"join({x}, {y}) is not an upper bound")
            for w in range(n):
                if leq[x][w] and leq[y][w] and not leq[j][w]:
                    raise InconsistentOrder(f"join({x}, {y}) is not the least upper bound")
            m = meet.table[x][y]
            if not (leq[m][x] and leq[m][y]):
                raise InconsistentOrder(f"meet({x}, {y}) is not a lower bound")
            for w in range(n):
                if leq[w][x] and leq[w][y] and not leq[w][m]:
                    raise InconsistentOrder(f"meet({x}, {y}) is not the greatest lower bound")
            if leq[x][y] != leq[f[y]][f[x]]:
                raise InconsistentOrder(f"negation is not antitone on ({x}, {y})")
    return order, join, meet


def derive_product(a: OplusAlgebra) -> BinaryOp:
    """The dual operation x . y = neg(neg(x) oplus neg(y))."""
    p, f = a.oplus.table, a.neg.map
    return BinaryOp.from_function(a.carrier.size, lambda x, y: f[p[f[x]][f[y]]])


def mv_coupled_semiring(a: OplusAlgebra) -> CoupledTriple:
    """Assemble the coupled-semiring triple of an MV-algebra: join with the
    derived product, meet with oplus, linked by negation.

    Raises NotMV when the input fails the MV axioms.
    """
    report = check_mv_algebra(a)
    if not report.ok:
        raise NotMV(report)
    _, join, meet = derive_lattice(a)
    first = NearSemiring(a.carrier, join, derive_product(a), a.zero, a.one)
    second = NearSemiring(a.carrier, meet, a.oplus, a.one, a.zero)
    return CoupledTriple(first, second, a.neg)


def lukasiewicz_chain(k: int) -> OplusAlgebra:
    """The k-element chain 0, 1/(k-1), ..., 1 with truncated addition
    x oplus y = min(1, x + y) and neg(x) = 1 - x."""
    if k < 2:
        raise BadSize(f"lukasiewicz chain needs at least 2 elements, got {k}")
    names = tuple(str(Fraction(i, k - 1)) for i in range(k))
    oplus = BinaryOp.from_function(k, lambda x, y: min(k - 1, x + y))
    neg = UnaryOp.from_function(k, lambda x: k - 1 - x)
    return OplusAlgebra(Carrier(names), oplus, neg, 0)


def mv_associativity_flags(a: OplusAlgebra) -> tuple[bool, bool]:
    """(oplus is associative, the algebra is MV) for a basic algebra.

    The two flags agree on every finite basic algebra; the invariant suite
    asserts that equivalence empirically.
    """
    gate = check_basic_algebra(a)
    if not gate.ok:
        raise PrerequisiteFailed("not a basic algebra", gate)
    n = a.carrier.size
    p = a.oplus.table
    associative = _fail3(n, lambda x, y, z: p[p[x][y]][z] == p[x][p[y][z]]) is None
    return associative, check_mv_algebra(a).ok
