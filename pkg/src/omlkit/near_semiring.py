"""Right near semirings, semiring classification, and order-compatibility checks."""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    BinaryOp,
    BoundedLattice,
    Carrier,
    CarrierMismatch,
    CheckReport,
    OutOfRange,
    PrerequisiteFailed,
    SizeMismatch,
    _axiom,
    _fail1,
    _fail2,
    _fail3,
)


@dataclass(frozen=True)
class NearSemiring:
    """Carrier with addition and multiplication tables and constants 0, 1."""

    carrier: Carrier
    plus: BinaryOp
    times: BinaryOp
    zero: int
    one: int

    def __post_init__(self) -> None:
        n = self.carrier.size
        for label, op in (("plus", self.plus), ("times", self.times)):
            if op.size != n:
                raise SizeMismatch(f"{label} table size {op.size} != carrier size {n}")
        for label, value in (("zero", self.zero), ("one", self.one)):
            if not 0 <= value < n:
                raise OutOfRange(f"{label} constant {value} outside 0..{n - 1}")

    @property
    def names(self) -> tuple[str, ...]:
        return self.carrier.names

    def table_signature(self):
        return (
            (("plus", "binary", self.plus.table), ("times", "binary", self.times.table)),
            (("zero", self.zero), ("one", self.one)),
        )


def check_right_near_semiring(s: NearSemiring) -> CheckReport:
    """Commutative monoid addition, neutral 1 for the (not necessarily
    associative) multiplication, right distributivity, and annihilation."""
    n = s.carrier.size
    names = s.names
    p, t = s.plus.table, s.times.table
    z, o = s.zero, s.one
    results = (
        _axiom(names, "plus-commutative", _fail2(n, lambda x, y: p[x][y] == p[y][x])),
        _axiom(names, "plus-associative",
               _fail3(n, lambda x, y, z_: p[p[x][y]][z_] == p[x][p[y][z_]])),
        _axiom(names, "plus-zero-neutral",
               _fail1(n, lambda x: p[x][z] == x and p[z][x] == x)),
        _axiom(names, "times-one-neutral",
               _fail1(n, lambda x: t[x][o] == x and t[o][x] == x)),
        _axiom(names, "right-distributive",
               _fail3(n, lambda x, y, z_: t[p[x][y]][z_] == p[t[x][z_]][t[y][z_]])),
        _axiom(names, "zero-annihilates",
               _fail1(n, lambda x: t[x][z] == z and t[z][x] == z)),
    )
    return CheckReport(results)


def check_semiring(s: NearSemiring) -> CheckReport:
    """Full semiring laws: the right-near-semiring axioms plus associativity
    and left distributivity of multiplication."""
    n = s.carrier.size
    names = s.names
    p, t = s.plus.table, s.times.table
    extra = (
        _axiom(names, "times-associative",
               _fail3(n, lambda x, y, z_: t[t[x][y]][z_] == t[x][t[y][z_]])),
        _axiom(names, "left-distributive",
               _fail3(n, lambda x, y, z_: t[x][p[y][z_]] == p[t[x][y]][t[x][z_]])),
    )
    return CheckReport(check_right_near_semiring(s).results + extra)


@dataclass(frozen=True)
class Classification:
    """Empirical multiplication properties of a right near semiring."""

    times_associative: bool
    left_distributive: bool
    times_commutative: bool

    @property
    def is_near_semiring(self) -> bool:
        return self.left_distributive

    @property
    def is_semiring(self) -> bool:
        return self.times_associative and self.left_distributive

    @property
    def is_commutative(self) -> bool:
        return self.times_commutative


def classify(s: NearSemiring) -> Classification:
    """Classify a validated right near semiring; PrerequisiteFailed otherwise."""
    base = check_right_near_semiring(s)
    if not base.ok:
        raise PrerequisiteFailed("not a right near semiring", base)
    n = s.carrier.size
    p, t = s.plus.table, s.times.table
    return Classification(
        times_associative=_fail3(
            n, lambda x, y, z: t[t[x][y]][z] == t[x][t[y][z]]) is None,
        left_distributive=_fail3(
            n, lambda x, y, z: t[x][p[y][z]] == p[t[x][y]][t[x][z]]) is None,
        times_commutative=_fail2(n, lambda x, y: t[x][y] == t[y][x]) is None,
    )


def _require_shared_carrier(s: NearSemiring, lattice: BoundedLattice) -> None:
    if s.carrier != lattice.carrier:
        raise CarrierMismatch("near semiring and lattice must share the carrier")


def check_join_ordered(s: NearSemiring, lattice: BoundedLattice) -> CheckReport:
    """Addition coincides with join, and products sit below the right factor
    in the join-induced order."""
    _require_shared_carrier(s, lattice)
    n = s.carrier.size
    names = s.names
    p, t, j = s.plus.table, s.times.table, lattice.join.table
    results = (
        _axiom(names, "plus-is-join", _fail2(n, lambda x, y: p[x][y] == j[x][y])),
        _axiom(names, "product-below-right-factor",
               _fail2(n, lambda x, y: j[t[x][y]][y] == y)),
    )
    return CheckReport(results)


def check_meet_ordered(s: NearSemiring, lattice: BoundedLattice) -> CheckReport:
    """Dual of check_join_ordered: addition is meet and products dominate
    the right factor."""
    _require_shared_carrier(s, lattice)
    n = s.carrier.size
    names = s.names
    p, t, m = s.plus.table, s.times.table, lattice.meet.table
    results = (
        _axiom(names, "plus-is-meet", _fail2(n, lambda x, y: p[x][y] == m[x][y])),
        _axiom(names, "product-above-right-factor",
               _fail2(n, lambda x, y: m[y][t[x][y]] == y)),
    )
    return CheckReport(results)


def check_lattice_ordered_semiring(s: NearSemiring, lattice: BoundedLattice,
                                   dual: bool = False) -> CheckReport:
    """Lattice-ordered semiring laws: addition is join and products lie below
    the meet (primal), or addition is meet and products lie above the join
    (dual).  Requires a genuine semiring; PrerequisiteFailed otherwise."""
    _require_shared_carrier(s, lattice)
    if not classify(s).is_semiring:
        raise PrerequisiteFailed("not a semiring", check_semiring(s))
    n = s.carrier.size
    names = s.names
    p, t = s.plus.table, s.times.table
    j, m = lattice.join.table, lattice.meet.table
    if dual:
        results = (
            _axiom(names, "plus-is-meet", _fail2(n, lambda x, y: p[x][y] == m[x][y])),
            _axiom(names, "product-above-join",
                   _fail2(n, lambda x, y: m[j[x][y]][t[x][y]] == j[x][y])),
        )
    else:
        results = (
            _axiom(names, "plus-is-join", _fail2(n, lambda x, y: p[x][y] == j[x][y])),
            _axiom(names, "product-below-meet",
                   _fail2(n, lambda x, y: m[t[x][y]][m[x][y]] == t[x][y])),
        )
    return CheckReport(results)
