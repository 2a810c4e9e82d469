import pytest

from omlkit import (
    BinaryOp,
    BoundedLattice,
    Carrier,
    DuplicateName,
    NotAPartialOrder,
    OutOfRange,
    SignatureMismatch,
    SizeMismatch,
    UnaryOp,
    are_isomorphic,
    build_structure,
    is_antitone_involution,
    is_bounded_lattice,
    order_from_join,
    order_from_meet,
)
from omlkit.corpus import CORPUS, b4, c2, chain, mo2, o6

import oracles


def as_lattice(s) -> BoundedLattice:
    return BoundedLattice(s.carrier, s.join, s.meet, s.bottom, s.top)


# ---------------------------------------------------------------------------
# build_structure


def test_two_element_join_structure():
    a = build_structure(Carrier(("0", "1")), binary=[("join", [[0, 1], [1, 1]])])
    assert a.binary_op("join")(0, 1) == 1


def test_entry_out_of_range():
    with pytest.raises(OutOfRange):
        build_structure(Carrier(("0", "1")), binary=[("join", [[0, 5], [1, 1]])])


def test_row_length_mismatch():
    with pytest.raises(SizeMismatch):
        build_structure(Carrier(("0", "1")), binary=[("join", [[0, 1, 1], [1, 1, 0]])])


def test_duplicate_element_name():
    with pytest.raises(DuplicateName):
        Carrier(("a", "a"))


def test_duplicate_op_name():
    rows = [[0, 1], [1, 1]]
    with pytest.raises(DuplicateName):
        build_structure(Carrier(("0", "1")), binary=[("join", rows), ("join", rows)])


def test_corpus_mo2_revalidates():
    s = mo2()
    rebuilt = build_structure(
        s.carrier,
        binary=[("join", s.join.table), ("meet", s.meet.table)],
        unary=[("comp", s.comp.map)],
        constants=[("bottom", s.bottom), ("top", s.top)],
    )
    assert rebuilt.constant("top") == 5
    assert is_bounded_lattice(s).ok


# ---------------------------------------------------------------------------
# order_from_meet / order_from_join


def test_two_chain_order():
    order = order_from_meet(c2().meet)
    assert order.leq == ((True, True), (False, True))


def test_b4_order():
    # 0 below everything, atoms a and a' incomparable, 1 on top
    order = order_from_meet(b4().meet)
    expected = (
        (True, True, True, True),
        (False, True, False, True),
        (False, False, True, True),
        (False, False, False, True),
    )
    assert order.leq == expected


def test_mo2_atoms_pairwise_incomparable():
    s = mo2()
    order = order_from_meet(s.meet)
    atoms = range(1, 5)
    for x in atoms:
        for y in atoms:
            assert order(x, y) == (x == y)


def test_order_from_meet_rejects_non_semilattice():
    with pytest.raises(NotAPartialOrder):
        order_from_meet(BinaryOp.from_rows([[0, 0], [1, 1]]))


@pytest.mark.parametrize("name", ["C1", "C2", "B4", "B8", "MO2", "MO3", "O6", "CHAIN4"])
def test_meet_and_join_orders_agree(name):
    s = CORPUS[name]()
    assert order_from_meet(s.meet) == order_from_join(s.join)


# ---------------------------------------------------------------------------
# is_bounded_lattice


@pytest.mark.parametrize("name", ["C1", "C2", "B4", "B8", "MO2", "MO3", "O6", "CHAIN4"])
def test_corpus_members_are_bounded_lattices(name):
    s = CORPUS[name]()
    report = is_bounded_lattice(s)
    assert oracles.report_triples(report) == oracles.bounded_lattice_oracle(
        s.names, s.join.table, s.meet.table, s.bottom, s.top)
    assert report.ok


def test_patched_b4_fails_an_absorption_law():
    s = b4()
    rows = [list(r) for r in s.join.table]
    rows[1][2] = rows[2][1] = 1  # join(a, a') patched down to a, symmetrically
    patched = BoundedLattice(s.carrier, BinaryOp.from_rows(rows), s.meet, 0, 3)
    report = is_bounded_lattice(patched)
    expected = oracles.bounded_lattice_oracle(
        s.names, patched.join.table, s.meet.table, 0, 3)
    assert oracles.report_triples(report) == expected
    assert not report.ok
    first = report.first_failure()
    assert first.axiom == "absorption-meet"
    assert first.witness == ("a'", "a")


# ---------------------------------------------------------------------------
# is_antitone_involution


def test_b4_complement_is_antitone_involution():
    s = b4()
    assert is_antitone_involution(s, s.comp).ok


def test_identity_on_chain_is_not_antitone():
    s = c2()
    report = is_antitone_involution(s, UnaryOp((0, 1)))
    assert report.entry("involution").passed
    antitone = report.entry("antitone")
    assert not antitone.passed
    assert antitone.witness == ("0", "1")


def test_o6_complement_is_antitone_involution():
    s = o6()
    assert is_antitone_involution(s, s.comp).ok


def test_size_mismatch_rejected():
    with pytest.raises(SizeMismatch):
        is_antitone_involution(b4(), UnaryOp((0, 1)))


# ---------------------------------------------------------------------------
# are_isomorphic


def test_b4_isomorphic_to_atom_swapped_b4():
    s = b4()
    swapped = oracles.permute_lattice(s, (0, 2, 1, 3))
    mapping = are_isomorphic(s, swapped)
    assert mapping is not None
    for x in range(4):
        for y in range(4):
            assert mapping[s.join(x, y)] == swapped.join(mapping[x], mapping[y])
            assert mapping[s.meet(x, y)] == swapped.meet(mapping[x], mapping[y])
        assert mapping[s.comp(x)] == swapped.comp(mapping[x])


def test_b4_not_isomorphic_to_four_chain():
    assert are_isomorphic(as_lattice(b4()), as_lattice(chain(4))) is None


def test_mo2_not_isomorphic_to_o6():
    assert are_isomorphic(mo2(), o6()) is None


def test_signature_mismatch():
    with pytest.raises(SignatureMismatch):
        are_isomorphic(b4(), as_lattice(b4()))


@pytest.mark.parametrize("name", ["C1", "C2", "B4", "B8", "MO2", "MO3", "O6"])
def test_are_isomorphic_reflexive(name):
    s = CORPUS[name]()
    mapping = are_isomorphic(s, s)
    assert mapping is not None


def test_are_isomorphic_symmetric():
    s = mo2()
    shuffled = oracles.permute_lattice(s, (0, 3, 1, 4, 2, 5))
    assert are_isomorphic(s, shuffled) is not None
    assert are_isomorphic(shuffled, s) is not None
