"""Coupled right orthosemirings: the axioms R1-R6, the two constructions
between them and orthomodular lattices, and the round-trip verifiers.

A coupled right orthosemiring is a triple of two right near semirings over
one carrier plus an involution: the first component is join-like with
constants (0, 1), the second meet-like with constants (1, 0).  The two
constructions below turn an orthomodular lattice into such a triple via the
Sasaki operations, and recover the lattice from any valid triple; at the
table level both composites are the identity, which the verifiers assert
cell by cell rather than up to isomorphism.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    AlgebraError,
    AxiomResult,
    BinaryOp,
    BoundedLattice,
    CarrierMismatch,
    CheckReport,
    InvalidStructure,
    SizeMismatch,
    UnaryOp,
    _axiom,
    _fail2,
    aggregate,
    is_involutive_isomorphism,
    is_lattice,
)
from .near_semiring import (
    NearSemiring,
    check_join_ordered,
    check_lattice_ordered_semiring,
    check_meet_ordered,
    check_right_near_semiring,
    check_semiring,
    classify,
)
from .ortholattice import (
    OrthoLattice,
    check_orthomodular,
    sasaki_product_table,
    sasaki_sum_table,
)


class NotOrthomodular(AlgebraError):
    """Construction input fails orthomodularity; carries the check report."""

    def __init__(self, report: CheckReport):
        fail = report.first_failure()
        witness = f" witness {fail.witness}" if fail and fail.witness else ""
        super().__init__(f"not an orthomodular lattice:{witness}")
        self.report = report


class NotCoupled(AlgebraError):
    """Construction input fails some R-axiom; carries the axiom id and report."""

    def __init__(self, report: CheckReport):
        fail = report.first_failure()
        self.axiom = fail.axiom if fail else "?"
        witness = f" witness {fail.witness}" if fail and fail.witness else ""
        super().__init__(f"not a coupled right orthosemiring: {self.axiom} fails{witness}")
        self.report = report


@dataclass(frozen=True)
class CoupledTriple:
    """Two near semirings over one carrier plus an involution candidate.

    The components must share the carrier and their constants must be
    crosswise equal (the additive neutral of each is the multiplicative
    neutral of the other), matching the shape ((R,v,.,0,1), (R,^,*,1,0), a).
    """

    first: NearSemiring
    second: NearSemiring
    alpha: UnaryOp

    def __post_init__(self) -> None:
        if self.first.carrier != self.second.carrier:
            raise CarrierMismatch("triple components must share the carrier")
        if self.alpha.size != self.first.carrier.size:
            raise SizeMismatch("alpha size differs from the carrier size")
        if self.first.zero != self.second.one or self.first.one != self.second.zero:
            raise InvalidStructure(
                "triple components must share constants crosswise "
                "(first.zero = second.one and first.one = second.zero)"
            )

    @property
    def carrier(self):
        return self.first.carrier

    def lattice(self) -> BoundedLattice:
        """The candidate lattice (R, v, ^) built from the two additions."""
        return BoundedLattice(self.carrier, self.first.plus, self.second.plus,
                              self.first.zero, self.second.zero)

    def table_signature(self):
        return (
            (
                ("join", "binary", self.first.plus.table),
                ("meet", "binary", self.second.plus.table),
                ("prod", "binary", self.first.times.table),
                ("dualprod", "binary", self.second.times.table),
                ("inv", "unary", self.alpha.map),
            ),
            (("bottom", self.first.zero), ("top", self.first.one)),
        )


def check_coupled_right_orthosemiring(t: CoupledTriple) -> CheckReport:
    """All six axioms, one aggregated entry each (R1..R6).

    A failed entry records the witness and the failing sub-law in its
    detail field.
    """
    names = t.carrier.names
    n = t.carrier.size
    lat = t.lattice()
    join, meet = t.first.plus.table, t.second.plus.table
    star = t.second.times.table
    a = t.alpha.map

    r1 = aggregate("R1", is_lattice(t.first.plus, t.second.plus, names))
    r2 = aggregate("R2", check_right_near_semiring(t.first)
                   .merged_with(check_join_ordered(t.first, lat)))
    r3 = aggregate("R3", check_right_near_semiring(t.second)
                   .merged_with(check_meet_ordered(t.second, lat)))
    r4 = aggregate("R4", is_involutive_isomorphism(t.first, t.second, t.alpha))
    r5 = _axiom(names, "R5",
                _fail2(n, lambda x, y: join[meet[x][a[y]]][y] == star[x][y]))
    r6 = _axiom(names, "R6",
                _fail2(n, lambda x, y: star[y][meet[x][y]] == y))
    return CheckReport((r1, r2, r3, r4, r5, r6))


def sasaki_triple(lattice: OrthoLattice) -> CoupledTriple:
    """Build the coupled right orthosemiring of an orthomodular lattice.

    The first component multiplies by the Sasaki projection (x v y') ^ y,
    the second by its dual (x ^ y') v y, and the involution is the lattice
    complement.  Raises NotOrthomodular (with the witness report) when the
    input fails the orthomodular law.
    """
    report = check_orthomodular(lattice)
    if not report.ok:
        raise NotOrthomodular(report)
    first = NearSemiring(lattice.carrier, lattice.join, sasaki_product_table(lattice),
                         lattice.bottom, lattice.top)
    second = NearSemiring(lattice.carrier, lattice.meet, sasaki_sum_table(lattice),
                          lattice.top, lattice.bottom)
    return CoupledTriple(first, second, lattice.comp)


def underlying_ortholattice(t: CoupledTriple) -> OrthoLattice:
    """Recover the orthomodular lattice of a coupled right orthosemiring:
    join and meet are the two additions, the complement is the involution.

    Raises NotCoupled (naming the failing axiom) when the triple does not
    satisfy R1-R6.
    """
    report = check_coupled_right_orthosemiring(t)
    if not report.ok:
        raise NotCoupled(report)
    return OrthoLattice(t.carrier, t.first.plus, t.second.plus,
                        t.first.zero, t.second.zero, t.alpha)


def _table_equal(names, axiom: str, left: BinaryOp, right: BinaryOp) -> AxiomResult:
    n = len(names)
    lt, rt = left.table, right.table
    return _axiom(names, axiom, _fail2(n, lambda x, y: lt[x][y] == rt[x][y]))


def verify_lattice_roundtrip(lattice: OrthoLattice) -> CheckReport:
    """Rebuild the lattice through the triple construction and assert raw
    table equality (not merely isomorphism)."""
    rebuilt = underlying_ortholattice(sasaki_triple(lattice))
    names = lattice.names
    comp_ok = lattice.comp.map == rebuilt.comp.map
    comp_witness = None
    if not comp_ok:
        x = next(i for i in range(len(names)) if lattice.comp.map[i] != rebuilt.comp.map[i])
        comp_witness = (x,)
    consts_ok = (lattice.bottom, lattice.top) == (rebuilt.bottom, rebuilt.top)
    results = (
        _table_equal(names, "join-equal", lattice.join, rebuilt.join),
        _table_equal(names, "meet-equal", lattice.meet, rebuilt.meet),
        _axiom(names, "complement-equal", comp_witness),
        AxiomResult("constants-equal", consts_ok),
    )
    return CheckReport(results)


def verify_triple_roundtrip(t: CoupledTriple) -> CheckReport:
    """Rebuild the triple through the lattice construction and assert raw
    table equality of every component."""
    rebuilt = sasaki_triple(underlying_ortholattice(t))
    names = t.carrier.names
    inv_witness = None
    if t.alpha.map != rebuilt.alpha.map:
        x = next(i for i in range(len(names)) if t.alpha.map[i] != rebuilt.alpha.map[i])
        inv_witness = (x,)
    consts_ok = ((t.first.zero, t.first.one, t.second.zero, t.second.one)
                 == (rebuilt.first.zero, rebuilt.first.one,
                     rebuilt.second.zero, rebuilt.second.one))
    results = (
        _table_equal(names, "product-equal", t.first.times, rebuilt.first.times),
        _table_equal(names, "dual-product-equal", t.second.times, rebuilt.second.times),
        _table_equal(names, "plus-equal", t.first.plus, rebuilt.first.plus),
        _table_equal(names, "dual-plus-equal", t.second.plus, rebuilt.second.plus),
        _axiom(names, "involution-equal", inv_witness),
        AxiomResult("constants-equal", consts_ok),
    )
    return CheckReport(results)


def involution_image(s: NearSemiring, alpha: UnaryOp) -> NearSemiring:
    """Push a near semiring forward through an involution: the image has
    op'(x, y) = alpha(op(alpha(x), alpha(y))) and mapped constants."""
    if alpha.size != s.carrier.size:
        raise SizeMismatch("alpha size differs from the carrier size")
    a = alpha.map
    n = s.carrier.size
    plus = BinaryOp.from_function(n, lambda x, y: a[s.plus.table[a[x]][a[y]]])
    times = BinaryOp.from_function(n, lambda x, y: a[s.times.table[a[x]][a[y]]])
    return NearSemiring(s.carrier, plus, times, a[s.zero], a[s.one])


def check_coupled_semiring(t: CoupledTriple) -> CheckReport:
    """The stronger coupling used for MV-style triples: both components are
    genuine semirings, lattice-ordered and dually lattice-ordered, linked by
    an involutive isomorphism and the coupling law

        dualprod(x, prod(alpha(x), y)) = join(x, y).

    Component prerequisites that fail (e.g. a non-associative product) show
    up as failed entries, never as exceptions.
    """
    names = t.carrier.names
    n = t.carrier.size
    lat = t.lattice()
    join = t.first.plus.table
    prod = t.first.times.table
    dualprod = t.second.times.table
    a = t.alpha.map

    def ordered_semiring_entry(axiom: str, component: NearSemiring, dual: bool) -> AxiomResult:
        full = check_semiring(component)
        if not full.ok:
            return aggregate(axiom, full)
        return aggregate(axiom, check_lattice_ordered_semiring(component, lat, dual=dual))

    results = (
        aggregate("lattice", is_lattice(t.first.plus, t.second.plus, names)),
        ordered_semiring_entry("first-lattice-ordered-semiring", t.first, dual=False),
        ordered_semiring_entry("second-dually-lattice-ordered-semiring", t.second, dual=True),
        aggregate("involution-isomorphism",
                  is_involutive_isomorphism(t.first, t.second, t.alpha)),
        _axiom(names, "coupling-law",
               _fail2(n, lambda x, y: dualprod[x][prod[a[x]][y]] == join[x][y])),
    )
    return CheckReport(results)
