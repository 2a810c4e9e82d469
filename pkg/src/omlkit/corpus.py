"""Built-in test corpus: small lattices constructed programmatically.

Index 0 is always the bottom element and index n-1 the top.  The members
exercise both pass and fail paths of every axiom checker: the Boolean
members and the horizontal sums are orthomodular, the benzene ring O6 is an
ortholattice that is not orthomodular, and the 4-chain with its unique
antitone involution is not even complemented.
"""

from __future__ import annotations

from .core import BinaryOp, Carrier, OrderRelation, UnaryOp, lattice_from_order
from .ortholattice import OrthoLattice


def _from_order(names: tuple[str, ...], strictly_below) -> tuple[BinaryOp, BinaryOp]:
    n = len(names)
    below = {x: set(s) | {x} for x, s in strictly_below.items()}
    leq = OrderRelation(tuple(
        tuple(x in below[y] for y in range(n)) for x in range(n)
    ))
    return lattice_from_order(leq)


def chain(size: int) -> OrthoLattice:
    """Chain 0 < e1 < ... < 1 with the unique antitone involution i -> n-1-i.

    For size 2 this is the two-element Boolean algebra; for longer chains the
    involution is not a complementation, which makes them useful negative
    fixtures.
    """
    if size == 1:
        return c1()
    if size == 2:
        names: tuple[str, ...] = ("0", "1")
    elif size == 4:
        names = ("0", "a", "b", "1")
    else:
        names = ("0",) + tuple(f"m{i}" for i in range(1, size - 1)) + ("1",)
    join = BinaryOp.from_function(size, max)
    meet = BinaryOp.from_function(size, min)
    comp = UnaryOp.from_function(size, lambda x: size - 1 - x)
    return OrthoLattice(Carrier(names), join, meet, 0, size - 1, comp)


def c1() -> OrthoLattice:
    """The trivial one-element lattice (bottom = top)."""
    return OrthoLattice(Carrier(("0",)), BinaryOp(((0,),)), BinaryOp(((0,),)),
                        0, 0, UnaryOp((0,)))


def c2() -> OrthoLattice:
    return chain(2)


def boolean_lattice(atoms: int) -> OrthoLattice:
    """Powerset of `atoms` generators; join is union, complement is set
    complement.  Elements are ordered bottom, atoms, coatoms, ..., top."""
    size = 1 << atoms
    masks = sorted(range(size), key=lambda m: (bin(m).count("1"), m))
    position = {m: i for i, m in enumerate(masks)}
    full = size - 1

    if atoms == 2:
        names: tuple[str, ...] = ("0", "a", "a'", "1")
    elif atoms == 3:
        atom_names = {1: "a", 2: "b", 4: "c"}
        names = tuple(
            "0" if m == 0 else "1" if m == full
            else atom_names[m] if m in atom_names
            else atom_names[full ^ m] + "'"
            for m in masks
        )
    else:
        names = tuple("0" if m == 0 else "1" if m == full else f"s{m}" for m in masks)

    join = BinaryOp.from_function(size, lambda x, y: position[masks[x] | masks[y]])
    meet = BinaryOp.from_function(size, lambda x, y: position[masks[x] & masks[y]])
    comp = UnaryOp.from_function(size, lambda x: position[full ^ masks[x]])
    return OrthoLattice(Carrier(names), join, meet, 0, size - 1, comp)


def b4() -> OrthoLattice:
    return boolean_lattice(2)


def b8() -> OrthoLattice:
    return boolean_lattice(3)


def mo(pairs: int) -> OrthoLattice:
    """Horizontal sum of `pairs` copies of b4: bottom, 2*pairs pairwise
    incomparable atoms, top.  Distinct atoms join to 1 and meet to 0."""
    size = 2 * pairs + 2
    letters = "abcdefgh"
    names = ("0",) + tuple(
        letters[i // 2] + ("'" if i % 2 else "") for i in range(2 * pairs)
    ) + ("1",)
    top = size - 1

    def join(x: int, y: int) -> int:
        if x == y or y == 0:
            return x
        if x == 0:
            return y
        return top

    def meet(x: int, y: int) -> int:
        if x == y or y == top:
            return x
        if x == top:
            return y
        return 0

    def comp(x: int) -> int:
        if x == 0:
            return top
        if x == top:
            return 0
        return x + 1 if x % 2 else x - 1

    return OrthoLattice(Carrier(names), BinaryOp.from_function(size, join),
                        BinaryOp.from_function(size, meet), 0, top,
                        UnaryOp.from_function(size, comp))


def mo2() -> OrthoLattice:
    return mo(2)


def mo3() -> OrthoLattice:
    return mo(3)


def o6() -> OrthoLattice:
    """Benzene ring: 0 < x < y < 1 and 0 < y' < x' < 1, complements paired.

    Orthocomplemented but not orthomodular; the standard negative control.
    """
    names = ("0", "x", "y", "y'", "x'", "1")
    # indices:  0    1    2    3     4    5
    strictly_below = {0: set(), 1: {0}, 2: {0, 1}, 3: {0}, 4: {0, 3}, 5: {0, 1, 2, 3, 4}}
    join, meet = _from_order(names, strictly_below)
    comp = UnaryOp((5, 4, 3, 2, 1, 0))
    return OrthoLattice(Carrier(names), join, meet, 0, 5, comp)


def four_chain_with_involution() -> OrthoLattice:
    return chain(4)


CORPUS = {
    "C1": c1,
    "C2": c2,
    "B4": b4,
    "B8": b8,
    "MO2": mo2,
    "MO3": mo3,
    "O6": o6,
    "CHAIN4": four_chain_with_involution,
}

ORTHOMODULAR_MEMBERS = ("C1", "C2", "B4", "B8", "MO2", "MO3")
ORTHOLATTICE_MEMBERS = ORTHOMODULAR_MEMBERS + ("O6",)
