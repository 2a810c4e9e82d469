"""Finite carriers, operation tables, induced orders, and isomorphism machinery.

All structures are immutable after validation: tables are nested tuples of
dense element indices ``0..n-1``.  Checks are pure functions returning a
:class:`CheckReport`; a failed axiom carries the first counterexample in
lexicographic index order and scanning of that axiom stops there, so reports
are deterministic and usable in golden tests.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterable, Optional


# ---------------------------------------------------------------------------
# Errors


class AlgebraError(Exception):
    """Base class for all toolkit errors."""


class SizeMismatch(AlgebraError):
    """A table or constant does not match the carrier size."""


class OutOfRange(AlgebraError):
    """A table entry, constant, or element reference is not a valid index."""


class DuplicateName(AlgebraError):
    """Element, operation, or constant names collide."""


class NotAPartialOrder(AlgebraError):
    """A derived order violates reflexivity, antisymmetry, or transitivity."""


class NotALattice(AlgebraError):
    """Some pair of elements lacks a least upper or greatest lower bound."""


class SignatureMismatch(AlgebraError):
    """Structures do not share operation names and arities."""


class CarrierMismatch(AlgebraError):
    """Structures that must live on one carrier have different carriers."""


class InvalidStructure(AlgebraError):
    """A composite structure violates cross-field consistency."""


class InconsistentOrder(AlgebraError):
    """A derived order disagrees with the derived lattice operations."""


class BadSize(AlgebraError):
    """A generator was asked for an unsupported size."""


class InvalidTask(AlgebraError):
    """An enumeration or search task violates its own invariants."""


class UnsupportedTask(AlgebraError):
    """A search task falls outside the supported (complete) task family."""


class PrerequisiteFailed(AlgebraError):
    """A check ran on input that fails its precondition."""

    def __init__(self, message: str, report: Optional["CheckReport"] = None):
        super().__init__(message)
        self.report = report


# ---------------------------------------------------------------------------
# Carrier and operation tables


@dataclass(frozen=True)
class Carrier:
    """A finite set of named elements, addressed by dense indices."""

    names: tuple[str, ...]

    def __post_init__(self) -> None:
        if not self.names:
            raise SizeMismatch("carrier needs at least one element")
        seen = set()
        for name in self.names:
            if name in seen:
                raise DuplicateName(f"duplicate element name {name!r}")
            seen.add(name)

    @classmethod
    def indexed(cls, size: int) -> "Carrier":
        """Default labels: bottom '0', top '1', middles 'e1', 'e2', ..."""
        if size < 1:
            raise SizeMismatch("carrier needs at least one element")
        if size == 1:
            return cls(("0",))
        middle = tuple(f"e{i}" for i in range(1, size - 1))
        return cls(("0",) + middle + ("1",))

    @property
    def size(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise OutOfRange(f"unknown element name {name!r}") from None


@dataclass(frozen=True)
class BinaryOp:
    """Total binary operation stored as an n x n index table."""

    table: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.table)
        for row in self.table:
            if len(row) != n:
                raise SizeMismatch(
                    f"binary table must be {n}x{n}, found a row of length {len(row)}"
                )
            for entry in row:
                if not 0 <= entry < n:
                    raise OutOfRange(f"table entry {entry} outside 0..{n - 1}")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "BinaryOp":
        return cls(tuple(tuple(row) for row in rows))

    @classmethod
    def from_function(cls, size: int, fn: Callable[[int, int], int]) -> "BinaryOp":
        return cls(tuple(tuple(fn(x, y) for y in range(size)) for x in range(size)))

    @property
    def size(self) -> int:
        return len(self.table)

    def __call__(self, x: int, y: int) -> int:
        return self.table[x][y]


@dataclass(frozen=True)
class UnaryOp:
    """Total unary operation stored as a length-n index vector."""

    map: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.map)
        for entry in self.map:
            if not 0 <= entry < n:
                raise OutOfRange(f"map entry {entry} outside 0..{n - 1}")

    @classmethod
    def from_function(cls, size: int, fn: Callable[[int], int]) -> "UnaryOp":
        return cls(tuple(fn(x) for x in range(size)))

    @property
    def size(self) -> int:
        return len(self.map)

    def __call__(self, x: int) -> int:
        return self.map[x]


# ---------------------------------------------------------------------------
# Order relations


@dataclass(frozen=True)
class OrderRelation:
    """Reflexive order as an n x n boolean matrix; leq[x][y] means x <= y."""

    leq: tuple[tuple[bool, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.leq)
        for row in self.leq:
            if len(row) != n:
                raise SizeMismatch("order matrix must be square")

    @property
    def size(self) -> int:
        return len(self.leq)

    def __call__(self, x: int, y: int) -> bool:
        return self.leq[x][y]


def validate_partial_order(order: OrderRelation) -> None:
    """Raise NotAPartialOrder unless the matrix is a genuine partial order."""
    n = order.size
    leq = order.leq
    for x in range(n):
        if not leq[x][x]:
            raise NotAPartialOrder(f"not reflexive at element {x}")
    for x in range(n):
        for y in range(n):
            if x != y and leq[x][y] and leq[y][x]:
                raise NotAPartialOrder(f"antisymmetry fails on ({x}, {y})")
    for x in range(n):
        for y in range(n):
            if not leq[x][y]:
                continue
            for z in range(n):
                if leq[y][z] and not leq[x][z]:
                    raise NotAPartialOrder(f"transitivity fails on ({x}, {y}, {z})")


def order_from_meet(meet: BinaryOp) -> OrderRelation:
    """Order induced by a meet table: x <= y iff meet(x, y) = x.

    Raises NotAPartialOrder when the table is not a meet-semilattice
    operation (the derived relation then fails antisymmetry or transitivity).
    """
    n = meet.size
    t = meet.table
    order = OrderRelation(tuple(tuple(t[x][y] == x for y in range(n)) for x in range(n)))
    validate_partial_order(order)
    return order


def order_from_join(join: BinaryOp) -> OrderRelation:
    """Dual of order_from_meet: x <= y iff join(x, y) = y."""
    n = join.size
    t = join.table
    order = OrderRelation(tuple(tuple(t[x][y] == y for y in range(n)) for x in range(n)))
    validate_partial_order(order)
    return order


def covering_pairs(order: OrderRelation) -> list[tuple[int, int]]:
    """Edges (x, y) of the Hasse diagram: x < y with nothing strictly between."""
    n = order.size
    leq = order.leq
    covers = []
    for x in range(n):
        for y in range(n):
            if x == y or not leq[x][y]:
                continue
            if any(z != x and z != y and leq[x][z] and leq[z][y] for z in range(n)):
                continue
            covers.append((x, y))
    return covers


def lattice_from_order(order: OrderRelation) -> tuple[BinaryOp, BinaryOp]:
    """Join and meet tables of a lattice order; raises NotALattice otherwise."""
    n = order.size
    leq = order.leq
    up = [sum(1 << y for y in range(n) if leq[x][y]) for x in range(n)]
    down = [sum(1 << y for y in range(n) if leq[y][x]) for x in range(n)]

    def bound(x: int, y: int, cone: list[int]) -> int:
        common = cone[x] & cone[y]
        for z in range(n):
            if common >> z & 1 and cone[z] & common == common:
                return z
        raise NotALattice(f"elements {x} and {y} have no bound in the cone")

    join = BinaryOp.from_function(n, lambda x, y: bound(x, y, up))
    meet = BinaryOp.from_function(n, lambda x, y: bound(x, y, down))
    return join, meet


# ---------------------------------------------------------------------------
# Check reports


@dataclass(frozen=True)
class AxiomResult:
    """Outcome of one named axiom; witness elements are carrier names."""

    axiom: str
    passed: bool
    witness: Optional[tuple[str, ...]] = None
    detail: Optional[str] = None


@dataclass(frozen=True)
class CheckReport:
    results: tuple[AxiomResult, ...]

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def failures(self) -> tuple[AxiomResult, ...]:
        return tuple(r for r in self.results if not r.passed)

    def first_failure(self) -> Optional[AxiomResult]:
        for r in self.results:
            if not r.passed:
                return r
        return None

    def entry(self, axiom: str) -> AxiomResult:
        for r in self.results:
            if r.axiom == axiom:
                return r
        raise KeyError(axiom)

    def merged_with(self, other: "CheckReport") -> "CheckReport":
        return CheckReport(self.results + other.results)


def _axiom(names: tuple[str, ...], axiom: str, witness: Optional[tuple[int, ...]],
           detail: Optional[str] = None) -> AxiomResult:
    if witness is None:
        return AxiomResult(axiom, True)
    return AxiomResult(axiom, False, tuple(names[i] for i in witness), detail)


def _fail1(n: int, ok: Callable[[int], bool]) -> Optional[tuple[int, ...]]:
    for x in range(n):
        if not ok(x):
            return (x,)
    return None


def _fail2(n: int, ok: Callable[[int, int], bool]) -> Optional[tuple[int, ...]]:
    for x in range(n):
        for y in range(n):
            if not ok(x, y):
                return (x, y)
    return None


def _fail3(n: int, ok: Callable[[int, int, int], bool]) -> Optional[tuple[int, ...]]:
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if not ok(x, y, z):
                    return (x, y, z)
    return None


def aggregate(axiom: str, report: CheckReport) -> AxiomResult:
    """Collapse a report into one entry; records the failing sub-axiom id."""
    fail = report.first_failure()
    if fail is None:
        return AxiomResult(axiom, True)
    return AxiomResult(axiom, False, fail.witness, fail.detail or fail.axiom)


# ---------------------------------------------------------------------------
# Generic validated structure (the file-format bridge)


@dataclass(frozen=True)
class Algebra:
    """A carrier with named binary/unary operations and named constants."""

    carrier: Carrier
    binary: tuple[tuple[str, BinaryOp], ...] = ()
    unary: tuple[tuple[str, UnaryOp], ...] = ()
    constants: tuple[tuple[str, int], ...] = ()

    def __post_init__(self) -> None:
        n = self.carrier.size
        seen: set[str] = set()
        for name, op in self.binary + self.unary:
            if name in seen:
                raise DuplicateName(f"duplicate operation name {name!r}")
            seen.add(name)
            if op.size != n:
                raise SizeMismatch(
                    f"operation {name!r} has size {op.size}, carrier has {n}"
                )
        cseen: set[str] = set()
        for name, value in self.constants:
            if name in cseen:
                raise DuplicateName(f"duplicate constant name {name!r}")
            cseen.add(name)
            if not 0 <= value < n:
                raise OutOfRange(f"constant {name!r} = {value} outside 0..{n - 1}")

    def binary_op(self, name: str) -> BinaryOp:
        for nm, op in self.binary:
            if nm == name:
                return op
        raise KeyError(name)

    def unary_op(self, name: str) -> UnaryOp:
        for nm, op in self.unary:
            if nm == name:
                return op
        raise KeyError(name)

    def constant(self, name: str) -> int:
        for nm, value in self.constants:
            if nm == name:
                return value
        raise KeyError(name)

    def table_signature(self):
        ops = tuple(
            (name, "binary", op.table) for name, op in self.binary
        ) + tuple((name, "unary", op.map) for name, op in self.unary)
        return ops, self.constants


def build_structure(carrier: Carrier,
                    binary: Iterable[tuple[str, Iterable[Iterable[int]] | BinaryOp]] = (),
                    unary: Iterable[tuple[str, Iterable[int] | UnaryOp]] = (),
                    constants: Iterable[tuple[str, int]] = ()) -> Algebra:
    """Validate tables against the carrier and return an immutable Algebra.

    Raw rows are accepted and converted; closure failures surface as
    OutOfRange / SizeMismatch, name collisions as DuplicateName.
    """
    bops = tuple(
        (name, op if isinstance(op, BinaryOp) else BinaryOp.from_rows(op))
        for name, op in binary
    )
    uops = tuple(
        (name, op if isinstance(op, UnaryOp) else UnaryOp(tuple(op)))
        for name, op in unary
    )
    return Algebra(carrier, bops, uops, tuple(constants))


# ---------------------------------------------------------------------------
# Bounded lattices


@dataclass(frozen=True)
class BoundedLattice:
    """Carrier with join/meet tables and bottom/top constants.

    Construction validates closure only; use is_bounded_lattice for the
    lattice axioms themselves.
    """

    carrier: Carrier
    join: BinaryOp
    meet: BinaryOp
    bottom: int
    top: int

    def __post_init__(self) -> None:
        n = self.carrier.size
        for label, op in (("join", self.join), ("meet", self.meet)):
            if op.size != n:
                raise SizeMismatch(f"{label} table size {op.size} != carrier size {n}")
        for label, value in (("bottom", self.bottom), ("top", self.top)):
            if not 0 <= value < n:
                raise OutOfRange(f"{label} constant {value} outside 0..{n - 1}")

    @property
    def names(self) -> tuple[str, ...]:
        return self.carrier.names

    def order(self) -> OrderRelation:
        return order_from_meet(self.meet)

    def table_signature(self):
        return (
            (("join", "binary", self.join.table), ("meet", "binary", self.meet.table)),
            (("bottom", self.bottom), ("top", self.top)),
        )


def is_lattice(join: BinaryOp, meet: BinaryOp, names: tuple[str, ...]) -> CheckReport:
    """Lattice identities for a pair of tables (no constants involved)."""
    n = len(names)
    j, m = join.table, meet.table
    results = (
        _axiom(names, "join-idempotent", _fail1(n, lambda x: j[x][x] == x)),
        _axiom(names, "join-commutative", _fail2(n, lambda x, y: j[x][y] == j[y][x])),
        _axiom(names, "join-associative",
               _fail3(n, lambda x, y, z: j[j[x][y]][z] == j[x][j[y][z]])),
        _axiom(names, "meet-idempotent", _fail1(n, lambda x: m[x][x] == x)),
        _axiom(names, "meet-commutative", _fail2(n, lambda x, y: m[x][y] == m[y][x])),
        _axiom(names, "meet-associative",
               _fail3(n, lambda x, y, z: m[m[x][y]][z] == m[x][m[y][z]])),
        _axiom(names, "absorption-join", _fail2(n, lambda x, y: j[x][m[x][y]] == x)),
        _axiom(names, "absorption-meet", _fail2(n, lambda x, y: m[x][j[x][y]] == x)),
    )
    return CheckReport(results)


def is_bounded_lattice(s: BoundedLattice) -> CheckReport:
    """Lattice identities plus neutrality of the bottom and top constants."""
    n = s.carrier.size
    names = s.names
    j, m = s.join.table, s.meet.table
    b, t = s.bottom, s.top
    base = is_lattice(s.join, s.meet, names)
    extra = (
        _axiom(names, "bottom-neutral", _fail1(n, lambda x: j[x][b] == x)),
        _axiom(names, "top-neutral", _fail1(n, lambda x: m[x][t] == x)),
    )
    return CheckReport(base.results + extra)


def is_antitone_involution(s: BoundedLattice, u: UnaryOp) -> CheckReport:
    """Check (x')' = x and x <= y implies y' <= x' against the meet order."""
    n = s.carrier.size
    if u.size != n:
        raise SizeMismatch(f"unary table size {u.size} != carrier size {n}")
    names = s.names
    m = s.meet.table
    f = u.map
    leq = [[m[x][y] == x for y in range(n)] for x in range(n)]
    results = (
        _axiom(names, "involution", _fail1(n, lambda x: f[f[x]] == x)),
        _axiom(names, "antitone",
               _fail2(n, lambda x, y: not leq[x][y] or leq[f[y]][f[x]])),
    )
    return CheckReport(results)


# ---------------------------------------------------------------------------
# Isomorphism search


def _color_key(x: int, n: int, cols: list[int], ops) -> tuple:
    parts: list = [cols[x]]
    for _, kind, t in ops:
        if kind == "unary":
            parts.append(cols[t[x]])
        else:
            parts.append(tuple(sorted(
                (cols[y], cols[t[x][y]], cols[t[y][x]]) for y in range(n)
            )))
    return tuple(parts)


def _refined_colors(n: int, ops1, consts1, ops2, consts2) -> tuple[list[int], list[int]]:
    palette: dict = {}
    c1 = [palette.setdefault(tuple(int(x == i) for _, i in consts1), len(palette))
          for x in range(n)]
    c2 = [palette.setdefault(tuple(int(x == i) for _, i in consts2), len(palette))
          for x in range(n)]
    for _ in range(2 * n + 2):
        palette = {}
        k1 = [_color_key(x, n, c1, ops1) for x in range(n)]
        k2 = [_color_key(x, n, c2, ops2) for x in range(n)]
        n1 = [palette.setdefault(k, len(palette)) for k in k1]
        n2 = [palette.setdefault(k, len(palette)) for k in k2]
        if n1 == c1 and n2 == c2:
            break
        c1, c2 = n1, n2
    return c1, c2


def _verify_isomorphism(n: int, ops1, ops2, mapping: list[int]) -> bool:
    for (_, kind, t1), (_, _, t2) in zip(ops1, ops2):
        if kind == "unary":
            if any(mapping[t1[x]] != t2[mapping[x]] for x in range(n)):
                return False
        else:
            for x in range(n):
                mx = mapping[x]
                for y in range(n):
                    if mapping[t1[x][y]] != t2[mx][mapping[y]]:
                        return False
    return True


def are_isomorphic(s1, s2) -> Optional[tuple[int, ...]]:
    """Search for a bijection preserving all operations and constants.

    Constants are pinned first; the search then extends partial maps over
    refinement-color classes with compatibility pruning.  Returns the mapping
    as a tuple (index in s1 -> index in s2) or None.
    """
    ops1, consts1 = s1.table_signature()
    ops2, consts2 = s2.table_signature()
    shape1 = tuple((nm, kd) for nm, kd, _ in ops1) + tuple(nm for nm, _ in consts1)
    shape2 = tuple((nm, kd) for nm, kd, _ in ops2) + tuple(nm for nm, _ in consts2)
    if shape1 != shape2:
        raise SignatureMismatch(f"signatures differ: {shape1} vs {shape2}")
    n = s1.carrier.size
    if n != s2.carrier.size:
        return None

    cols1, cols2 = _refined_colors(n, ops1, consts1, ops2, consts2)
    if sorted(cols1) != sorted(cols2):
        return None

    mapping = [-1] * n
    used = [False] * n
    for (_, i1), (_, i2) in zip(consts1, consts2):
        if cols1[i1] != cols2[i2]:
            return None
        if mapping[i1] == -1:
            if used[i2]:
                return None
            mapping[i1] = i2
            used[i2] = True
        elif mapping[i1] != i2:
            return None

    candidates = {
        x: [y for y in range(n) if cols2[y] == cols1[x]]
        for x in range(n) if mapping[x] == -1
    }
    todo = sorted(candidates, key=lambda x: (len(candidates[x]), x))

    def compatible(x: int, p: int) -> bool:
        for (_, kind, t1), (_, _, t2) in zip(ops1, ops2):
            if kind == "unary":
                if mapping[t1[x]] != -1 and mapping[t1[x]] != t2[p]:
                    return False
                for w in range(n):
                    if mapping[w] != -1 and t1[w] == x and t2[mapping[w]] != p:
                        return False
            else:
                for w in range(n):
                    if mapping[w] == -1 and w != x:
                        continue
                    mw = p if w == x else mapping[w]
                    r = t1[x][w]
                    img = p if r == x else mapping[r]
                    if img != -1 and t2[p][mw] != img:
                        return False
                    r = t1[w][x]
                    img = p if r == x else mapping[r]
                    if img != -1 and t2[mw][p] != img:
                        return False
        return True

    def extend(pos: int) -> bool:
        if pos == len(todo):
            return _verify_isomorphism(n, ops1, ops2, mapping)
        x = todo[pos]
        for p in candidates[x]:
            if used[p] or not compatible(x, p):
                continue
            mapping[x] = p
            used[p] = True
            if extend(pos + 1):
                return True
            mapping[x] = -1
            used[p] = False
        return False

    if extend(0):
        return tuple(mapping)
    return None


def is_involutive_isomorphism(s1, s2, alpha: UnaryOp) -> CheckReport:
    """Check that alpha is an involution mapping s1 onto s2.

    s1 and s2 are near-semiring-shaped structures (plus, times, zero, one)
    over the same carrier; constants of s1 must map to the corresponding
    constants of s2.
    """
    if s1.carrier != s2.carrier:
        raise CarrierMismatch("involutive isomorphism needs a shared carrier")
    n = s1.carrier.size
    if alpha.size != n:
        raise SizeMismatch(f"alpha size {alpha.size} != carrier size {n}")
    names = s1.carrier.names
    a = alpha.map
    p1, t1 = s1.plus.table, s1.times.table
    p2, t2 = s2.plus.table, s2.times.table

    const_witness = None
    if a[s1.zero] != s2.zero:
        const_witness = (s1.zero,)
    elif a[s1.one] != s2.one:
        const_witness = (s1.one,)
    results = (
        _axiom(names, "constants", const_witness),
        _axiom(names, "involution", _fail1(n, lambda x: a[a[x]] == x)),
        _axiom(names, "plus-homomorphism",
               _fail2(n, lambda x, y: a[p1[x][y]] == p2[a[x]][a[y]])),
        _axiom(names, "times-homomorphism",
               _fail2(n, lambda x, y: a[t1[x][y]] == t2[a[x]][a[y]])),
    )
    return CheckReport(results)
