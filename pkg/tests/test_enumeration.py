import itertools

import pytest

from omlkit import InvalidStructure, InvalidTask, UnsupportedTask, are_isomorphic
from omlkit.core import BinaryOp, BoundedLattice, Carrier
from omlkit.corpus import b4, b8, mo2, mo3, o6
from omlkit.coupled import check_coupled_right_orthosemiring
from omlkit.enumeration import (
    EnumerationTask,
    SearchTask,
    Truncated,
    _lattice_key_cache,
    _lattice_keys,
    canonical_form,
    canonicalize,
    class_counts,
    enumerate_structures,
    search_independence,
)
from omlkit.ortholattice import OrthoLattice, check_orthomodular, check_ortholattice

import oracles


def as_lattice(s) -> BoundedLattice:
    return BoundedLattice(s.carrier, s.join, s.meet, s.bottom, s.top)


def contains_isomorph(structures, target) -> bool:
    return any(s.carrier.size == target.carrier.size
               and are_isomorphic(s, target) is not None for s in structures)


# ---------------------------------------------------------------------------
# task validation


def test_task_validation():
    with pytest.raises(InvalidTask):
        EnumerationTask("oml", 0)
    with pytest.raises(InvalidTask):
        EnumerationTask("omg", 4)
    with pytest.raises(InvalidTask):
        EnumerationTask("oml", 4, max_structures=-1)


# ---------------------------------------------------------------------------
# small-size census


def test_counts_up_to_six():
    assert class_counts("lattice", 6) == {1: 1, 2: 1, 3: 1, 4: 2, 5: 5, 6: 15}
    assert class_counts("ol", 6) == {1: 1, 2: 1, 3: 0, 4: 1, 5: 0, 6: 2}
    assert class_counts("oml", 6) == {1: 1, 2: 1, 3: 0, 4: 1, 5: 0, 6: 1}


def test_oml_up_to_two():
    found = list(enumerate_structures(EnumerationTask("oml", 2)))
    assert [s.carrier.size for s in found] == [1, 2]


def test_oml_stream_members_up_to_six():
    found = list(enumerate_structures(EnumerationTask("oml", 6)))
    assert contains_isomorph(found, b4())
    assert contains_isomorph(found, mo2())
    assert not contains_isomorph(found, o6())


def test_ol_stream_contains_o6():
    found = list(enumerate_structures(EnumerationTask("ol", 6)))
    assert contains_isomorph(found, o6())


def test_oml_stream_members_at_eight(omls_up_to_8):
    eights = [s for s in omls_up_to_8 if s.carrier.size == 8]
    assert len(eights) == 2
    assert contains_isomorph(eights, b8())
    assert contains_isomorph(eights, mo3())


def test_emitted_structures_pass_their_checkers():
    for s in enumerate_structures(EnumerationTask("ol", 6)):
        assert check_ortholattice(s).ok
    for s in enumerate_structures(EnumerationTask("oml", 6)):
        assert check_orthomodular(s).ok


def test_truncation_marker():
    stream = list(enumerate_structures(EnumerationTask("lattice", 5, max_structures=3)))
    assert len(stream) == 4
    assert all(not isinstance(s, Truncated) for s in stream[:3])
    assert stream[-1] == Truncated(emitted=3, limit=3)


def test_non_canonical_stream_covers_the_canonical_one():
    raw = list(enumerate_structures(EnumerationTask("lattice", 5, canonical_only=False)))
    canon = list(enumerate_structures(EnumerationTask("lattice", 5)))
    assert len(raw) > len(canon)
    assert {canonical_form(s) for s in raw} == {canonical_form(s) for s in canon}


# ---------------------------------------------------------------------------
# canonical forms


@pytest.mark.parametrize("maker", [b4, b8, mo2, mo3, o6])
def test_canonicalize_idempotent(maker):
    s = maker()
    once = canonicalize(s)
    assert canonicalize(once) == once


@pytest.mark.parametrize("maker", [mo2, o6])
def test_canonical_form_permutation_invariant(maker):
    s = maker()
    n = s.carrier.size
    base = canonical_form(s)
    for mid in itertools.permutations(range(1, n - 1)):
        perm = (0,) + mid + (n - 1,)
        assert canonical_form(oracles.permute_lattice(s, perm)) == base


def test_canonical_form_requires_slot_constants():
    upside_down = BoundedLattice(
        Carrier(("t", "b")),
        BinaryOp.from_rows([[0, 0], [0, 1]]),
        BinaryOp.from_rows([[0, 1], [1, 1]]),
        bottom=1, top=0)
    with pytest.raises(InvalidStructure):
        canonical_form(upside_down)


def test_canonical_forms_separate_mo2_and_o6():
    assert canonical_form(mo2()) != canonical_form(o6())


# ---------------------------------------------------------------------------
# oracle equivalence at tiny sizes (brute-force-all-tables cross-check)


def test_brute_force_oracle_matches_enumerator(lattices_up_to_4):
    for n in range(1, 5):
        mine = [s for s in lattices_up_to_4 if s.carrier.size == n]
        brute = oracles.brute_force_lattices(n)
        # dedup the brute-force population by pairwise isomorphism
        reps = []
        for s in brute:
            if not any(are_isomorphic(s, r) is not None for r in reps):
                reps.append(s)
        assert len(reps) == len(mine)
        for rep in reps:
            matches = [s for s in mine if are_isomorphic(rep, s) is not None]
            assert len(matches) == 1
        assert {canonical_form(s) for s in reps} == {canonical_form(s) for s in mine}


# ---------------------------------------------------------------------------
# determinism


def test_lattice_keys_deterministic_across_threads():
    _lattice_key_cache.clear()
    sequential = _lattice_keys(6, threads=1)
    _lattice_key_cache.clear()
    parallel = _lattice_keys(6, threads=4)
    assert sequential == parallel
    _lattice_key_cache.clear()


def test_enumeration_order_is_stable():
    first = [canonical_form(s) for s in enumerate_structures(EnumerationTask("oml", 6))]
    second = [canonical_form(s) for s in enumerate_structures(EnumerationTask("oml", 6))]
    assert first == second
    assert first == sorted(first, key=lambda k: (len(k), k))


# ---------------------------------------------------------------------------
# independence search


def test_search_task_validation():
    with pytest.raises(InvalidTask):
        SearchTask(frozenset({"R1", "R6"}), frozenset({"R6"}), 6)
    with pytest.raises(InvalidTask):
        SearchTask(frozenset({"R0"}), frozenset(), 6)
    with pytest.raises(InvalidTask):
        SearchTask(frozenset({"R1"}), frozenset(), 0)


def test_search_requires_determining_axioms():
    with pytest.raises(UnsupportedTask):
        search_independence(SearchTask(frozenset({"R1", "R2"}), frozenset({"R6"}), 4))


def test_search_finds_o6_triple_for_r6():
    task = SearchTask(frozenset({"R1", "R2", "R3", "R4", "R5"}), frozenset({"R6"}), 6)
    witness = search_independence(task)
    assert witness is not None
    assert witness.carrier.size == 6
    report = check_coupled_right_orthosemiring(witness)
    assert {r.axiom: r.passed for r in report.results} == {
        "R1": True, "R2": True, "R3": True, "R4": True, "R5": True, "R6": False}
    lattice = OrthoLattice(witness.carrier, witness.first.plus, witness.second.plus,
                           witness.first.zero, witness.second.zero, witness.alpha)
    assert are_isomorphic(lattice, o6()) is not None


def test_search_r6_exhausted_below_six():
    task = SearchTask(frozenset({"R1", "R2", "R3", "R4", "R5"}), frozenset({"R6"}), 5)
    assert search_independence(task) is None


def test_search_satisfiable_task_returns_smallest():
    task = SearchTask(frozenset({"R1", "R2", "R3", "R4", "R5", "R6"}), frozenset(), 6)
    witness = search_independence(task)
    assert witness is not None
    assert witness.carrier.size == 1


def test_search_with_clause_labels():
    # smallest coupled right orthosemiring with a non-commutative product
    task = SearchTask(frozenset({"R1", "R2", "R3", "R4", "R5", "R6"}),
                      frozenset({"first-commutative"}), 6)
    witness = search_independence(task)
    assert witness is not None
    assert witness.carrier.size == 6
    tt = witness.first.times.table
    assert any(tt[x][y] != tt[y][x] for x in range(6) for y in range(6))
