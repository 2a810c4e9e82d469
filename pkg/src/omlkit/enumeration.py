"""Canonical-form enumeration of small lattices, ortholattices, and
orthomodular lattices, plus the axiom-independence search.

Strategy: enumerate order relations first, not operation tables.  Middle
elements (everything except bottom and top) carry a strict order compatible
with the index order, generated by a DFS that preserves transitivity
incrementally; every finite lattice has such a labeling, so no isomorphism
class is missed.  Candidates that fail the lattice property are dropped,
survivors are reduced to a canonical form (the lexicographically minimal
concatenation of their operation tables over all carrier permutations that
fix bottom at index 0 and top at index n-1) and deduplicated.
Complementations are assigned afterwards by matching each element with a
lattice complement and filtering for antitonicity.

Emission order is fully deterministic (ascending size, then ascending
canonical form) regardless of the number of worker processes: parallel
chunks only ever contribute to a set that is sorted before emission.
"""

from __future__ import annotations

import itertools
import multiprocessing
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Union

from .core import (
    AlgebraError,
    BinaryOp,
    Carrier,
    InvalidStructure,
    InvalidTask,
    UnaryOp,
    UnsupportedTask,
    _fail2,
    _fail3,
)
from .coupled import CoupledTriple, check_coupled_right_orthosemiring
from .near_semiring import NearSemiring
from .ortholattice import OrthoLattice, check_orthomodular, check_ortholattice
from .core import BoundedLattice, is_bounded_lattice

_CLASSES = ("lattice", "ol", "oml")


@dataclass(frozen=True)
class EnumerationTask:
    target_class: str
    max_size: int
    canonical_only: bool = True
    max_structures: Optional[int] = None

    def __post_init__(self) -> None:
        if self.target_class not in _CLASSES:
            raise InvalidTask(f"unknown class {self.target_class!r}, expected one of {_CLASSES}")
        if self.max_size < 1:
            raise InvalidTask("max_size must be at least 1")
        if self.max_structures is not None and self.max_structures < 0:
            raise InvalidTask("max_structures must be non-negative")


@dataclass(frozen=True)
class Truncated:
    """Stream marker: the structure limit was reached before exhaustion."""

    emitted: int
    limit: int


# ---------------------------------------------------------------------------
# Order-relation generation (middle elements only, natural labeling)


def _middle_relations(m: int) -> list[tuple[int, ...]]:
    """All strict transitive relations on 0..m-1 contained in the index
    order, as per-element bitmasks of strictly-smaller elements."""
    pairs = [(i, j) for j in range(m) for i in range(j)]
    down = [0] * m
    out: list[tuple[int, ...]] = []

    def rec(k: int) -> None:
        if k == len(pairs):
            out.append(tuple(down))
            return
        i, j = pairs[k]
        rec(k + 1)
        if down[i] & ~down[j] == 0:
            down[j] |= 1 << i
            rec(k + 1)
            down[j] &= ~(1 << i)

    rec(0)
    return out


def _up_masks(n: int, middle_down: tuple[int, ...]) -> list[int]:
    """Up-sets over the full carrier: bottom 0, middles 1..n-2, top n-1."""
    full = (1 << n) - 1
    up = [0] * n
    up[0] = full
    up[n - 1] = 1 << (n - 1)
    m = n - 2
    for i in range(m):
        mask = (1 << (i + 1)) | (1 << (n - 1))
        for j in range(i + 1, m):
            if middle_down[j] >> i & 1:
                mask |= 1 << (j + 1)
        up[i + 1] = mask
    return up


def _tables_from_up(n: int, up: list[int]):
    """Join/meet tables of the order, or None when some bound is missing."""
    down = [0] * n
    for x in range(n):
        ux = up[x]
        y = 0
        while ux:
            if ux & 1:
                down[y] |= 1 << x
            ux >>= 1
            y += 1

    def bound(common: int, cone: list[int]) -> int:
        z = 0
        c = common
        while c:
            if c & 1 and cone[z] & common == common:
                return z
            c >>= 1
            z += 1
        return -1

    join_rows = []
    meet_rows = []
    for x in range(n):
        jrow = []
        mrow = []
        for y in range(n):
            z = bound(up[x] & up[y], up)
            if z < 0:
                return None
            jrow.append(z)
            w = bound(down[x] & down[y], down)
            if w < 0:
                return None
            mrow.append(w)
        join_rows.append(tuple(jrow))
        meet_rows.append(tuple(mrow))
    return tuple(join_rows), tuple(meet_rows)


# ---------------------------------------------------------------------------
# Canonical forms


def _middle_permutations(n: int) -> Iterator[tuple[int, ...]]:
    if n == 1:
        yield (0,)
        return
    for mid in itertools.permutations(range(1, n - 1)):
        yield (0,) + mid + (n - 1,)


_perm_cache: dict[int, list[tuple[tuple[int, ...], tuple[int, ...]]]] = {}


def _perm_pairs(n: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    pairs = _perm_cache.get(n)
    if pairs is None:
        pairs = []
        for perm in _middle_permutations(n):
            inv = [0] * n
            for i, p in enumerate(perm):
                inv[p] = i
            pairs.append((perm, tuple(inv)))
        _perm_cache[n] = pairs
    return pairs


def _canonical_key(n: int, ops) -> tuple[int, ...]:
    """Minimal concatenated tables over permutations fixing slots 0 and n-1.

    `ops` is a tuple of ("binary", table) / ("unary", map) pairs in the
    structure's fixed operation order.  Candidates are compared row by row
    against the best so far and abandoned at the first losing row.
    """
    best_rows: Optional[list[tuple[int, ...]]] = None
    for perm, inv in _perm_pairs(n):
        rows: list[tuple[int, ...]] = []
        verdict = 0  # 0 = tied with best so far, -1 = strictly smaller
        idx = 0
        for kind, t in ops:
            if kind == "unary":
                row = tuple(perm[t[e]] for e in inv)
                if verdict == 0 and best_rows is not None:
                    brow = best_rows[idx]
                    if row > brow:
                        verdict = 1
                        break
                    if row < brow:
                        verdict = -1
                rows.append(row)
                idx += 1
            else:
                for e in inv:
                    trow = t[e]
                    row = tuple(perm[trow[e2]] for e2 in inv)
                    if verdict == 0 and best_rows is not None:
                        brow = best_rows[idx]
                        if row > brow:
                            verdict = 1
                            break
                        if row < brow:
                            verdict = -1
                    rows.append(row)
                    idx += 1
                if verdict == 1:
                    break
        if verdict == 1:
            continue
        if best_rows is None or verdict == -1:
            best_rows = rows
    assert best_rows is not None
    return tuple(itertools.chain.from_iterable(best_rows))


def _slot_constants(s) -> None:
    n = s.carrier.size
    for name, value in s.table_signature()[1]:
        expected = 0 if name in ("bottom", "zero") else n - 1
        if value != expected:
            raise InvalidStructure(
                f"canonical form requires constant {name!r} at index {expected}"
            )


def canonical_form(s) -> tuple[int, ...]:
    """Canonical key of any structure whose constants sit at the canonical
    slots (bottom/zero at 0, top/one at n-1)."""
    _slot_constants(s)
    ops, _ = s.table_signature()
    return _canonical_key(s.carrier.size, tuple((kind, t) for _, kind, t in ops))


def _split_key(n: int, key: tuple[int, ...], kinds: tuple[str, ...]):
    tables = []
    pos = 0
    for kind in kinds:
        if kind == "unary":
            tables.append(tuple(key[pos:pos + n]))
            pos += n
        else:
            tables.append(tuple(tuple(key[pos + x * n:pos + (x + 1) * n]) for x in range(n)))
            pos += n * n
    return tables


def canonicalize(s):
    """Return the canonical representative of a lattice or ortholattice,
    relabeled with the default indexed carrier."""
    key = canonical_form(s)
    n = s.carrier.size
    carrier = Carrier.indexed(n)
    if isinstance(s, OrthoLattice):
        join, meet, comp = _split_key(n, key, ("binary", "binary", "unary"))
        return OrthoLattice(carrier, BinaryOp(join), BinaryOp(meet), 0, n - 1, UnaryOp(comp))
    if isinstance(s, BoundedLattice):
        join, meet = _split_key(n, key, ("binary", "binary"))
        return BoundedLattice(carrier, BinaryOp(join), BinaryOp(meet), 0, n - 1)
    raise UnsupportedTask("canonicalize supports bounded lattices and ortholattices")


# ---------------------------------------------------------------------------
# Complementations and antitone involutions


def _involutions(n: int, cand: list[list[int]]) -> list[tuple[int, ...]]:
    """Involutive maps pairing each x with some member of cand[x]; the
    candidate relation must be symmetric.  Fixed points are allowed whenever
    x is its own candidate."""
    comp = [-1] * n
    out: list[tuple[int, ...]] = []

    def rec(start: int) -> None:
        x = start
        while x < n and comp[x] != -1:
            x += 1
        if x == n:
            out.append(tuple(comp))
            return
        for y in cand[x]:
            if y < x or (y != x and comp[y] != -1):
                continue
            comp[x] = y
            comp[y] = x
            rec(x + 1)
            comp[x] = -1
            if y != x:
                comp[y] = -1

    rec(0)
    return out


def _antitone(n: int, leq, comp: tuple[int, ...]) -> bool:
    for x in range(n):
        for y in range(n):
            if leq[x][y] and not leq[comp[y]][comp[x]]:
                return False
    return True


def _complementations(n: int, join, meet, leq) -> list[tuple[int, ...]]:
    """Antitone involutions that are complementations of the lattice."""
    top, bottom = n - 1, 0
    cand = [
        [y for y in range(n) if join[x][y] == top and meet[x][y] == bottom]
        for x in range(n)
    ]
    return [c for c in _involutions(n, cand) if _antitone(n, leq, c)]


def _antitone_involutions_with_swapped_bounds(n: int, leq) -> list[tuple[int, ...]]:
    """Antitone involutions mapping bottom to top (no complement laws)."""
    cand = [[y for y in range(n)] for _ in range(n)]
    cand[0] = [n - 1]
    if n > 1:
        cand[n - 1] = [0]
    return [c for c in _involutions(n, cand) if _antitone(n, leq, c)]


def _is_orthomodular_tables(n: int, join, meet, comp, leq) -> bool:
    for x in range(n):
        cx = comp[x]
        for y in range(n):
            if leq[x][y] and join[x][meet[y][cx]] != y:
                return False
    return True


# ---------------------------------------------------------------------------
# Per-size enumeration


_LATTICE_OPS = ("binary", "binary")
_OL_OPS = ("binary", "binary", "unary")


def _lattice_chunk_keys(args) -> set:
    n, rels = args
    keys = set()
    for rel in rels:
        up = _up_masks(n, rel)
        tabs = _tables_from_up(n, up)
        if tabs is None:
            continue
        keys.add(_canonical_key(n, (("binary", tabs[0]), ("binary", tabs[1]))))
    return keys


_lattice_key_cache: dict[int, list[tuple[int, ...]]] = {}


def _lattice_keys(n: int, threads: int = 1) -> list[tuple[int, ...]]:
    """Sorted canonical keys of all lattices with n elements."""
    cached = _lattice_key_cache.get(n)
    if cached is not None:
        return cached
    if n == 1:
        keys = [_canonical_key(1, (("binary", ((0,),)), ("binary", ((0,),))))]
    else:
        rels = _middle_relations(n - 2)
        if threads > 1 and len(rels) >= 4 * threads:
            chunks = [rels[i::threads] for i in range(threads)]
            ctx = multiprocessing.get_context("fork")
            with ctx.Pool(threads) as pool:
                keysets = pool.map(_lattice_chunk_keys, [(n, ch) for ch in chunks])
            merged: set = set()
            for ks in keysets:
                merged |= ks
            keys = sorted(merged)
        else:
            keys = sorted(_lattice_chunk_keys((n, rels)))
    _lattice_key_cache[n] = keys
    return keys


def _expansion_keys(n: int, orthomodular_only: bool, threads: int) -> list[tuple[int, ...]]:
    keys = set()
    for lkey in _lattice_keys(n, threads):
        join, meet = _split_key(n, lkey, _LATTICE_OPS)
        leq = [[meet[x][y] == x for y in range(n)] for x in range(n)]
        for comp in _complementations(n, join, meet, leq):
            if orthomodular_only and not _is_orthomodular_tables(n, join, meet, comp, leq):
                continue
            keys.add(_canonical_key(
                n, (("binary", join), ("binary", meet), ("unary", comp))))
    return sorted(keys)


def _structure_from_lattice_key(n: int, key) -> BoundedLattice:
    join, meet = _split_key(n, key, _LATTICE_OPS)
    return BoundedLattice(Carrier.indexed(n), BinaryOp(join), BinaryOp(meet), 0, n - 1)


def _structure_from_ol_key(n: int, key) -> OrthoLattice:
    join, meet, comp = _split_key(n, key, _OL_OPS)
    return OrthoLattice(Carrier.indexed(n), BinaryOp(join), BinaryOp(meet),
                        0, n - 1, UnaryOp(comp))


def _all_candidates_of_size(n: int, target_class: str) -> Iterator:
    """Non-deduplicated stream (canonical_only=False): every naturally
    labeled candidate, in generation order."""
    if n == 1:
        rels: Iterable = [()]
    else:
        rels = _middle_relations(n - 2)
    for rel in rels:
        if n == 1:
            tabs = (((0,),), ((0,),))
        else:
            tabs = _tables_from_up(n, _up_masks(n, rel))
        if tabs is None:
            continue
        join, meet = tabs
        if target_class == "lattice":
            yield BoundedLattice(Carrier.indexed(n), BinaryOp(join), BinaryOp(meet), 0, n - 1)
            continue
        leq = [[meet[x][y] == x for y in range(n)] for x in range(n)]
        for comp in _complementations(n, join, meet, leq):
            if target_class == "oml" and not _is_orthomodular_tables(n, join, meet, comp, leq):
                continue
            yield OrthoLattice(Carrier.indexed(n), BinaryOp(join), BinaryOp(meet),
                               0, n - 1, UnaryOp(comp))


def _validate_emitted(s, target_class: str) -> None:
    if target_class == "lattice":
        ok = is_bounded_lattice(s).ok
    elif target_class == "ol":
        ok = check_ortholattice(s).ok
    else:
        ok = check_ortholattice(s).ok and check_orthomodular(s).ok
    if not ok:
        raise AlgebraError("internal error: enumeration produced an invalid structure")


def enumerate_structures(task: EnumerationTask, threads: int = 1) -> Iterator:
    """Stream structures of the requested class up to the size bound.

    With canonical_only (the default) exactly one representative per
    isomorphism class is emitted, in deterministic order; every emitted
    structure is re-validated against its class checker.  A max_structures
    limit ends the stream with a Truncated marker.
    """
    emitted = 0
    for n in range(1, task.max_size + 1):
        if task.canonical_only:
            if task.target_class == "lattice":
                stream: Iterable = (
                    _structure_from_lattice_key(n, k) for k in _lattice_keys(n, threads)
                )
            else:
                stream = (
                    _structure_from_ol_key(n, k)
                    for k in _expansion_keys(n, task.target_class == "oml", threads)
                )
        else:
            stream = _all_candidates_of_size(n, task.target_class)
        for s in stream:
            if task.max_structures is not None and emitted >= task.max_structures:
                yield Truncated(emitted=emitted, limit=task.max_structures)
                return
            _validate_emitted(s, task.target_class)
            yield s
            emitted += 1


def class_counts(target_class: str, max_size: int, threads: int = 1) -> dict[int, int]:
    """Isomorphism-class counts per size for the requested class."""
    counts = {n: 0 for n in range(1, max_size + 1)}
    task = EnumerationTask(target_class, max_size)
    for s in enumerate_structures(task, threads=threads):
        counts[s.carrier.size] += 1
    return counts


# ---------------------------------------------------------------------------
# Independence search


_R_LABELS = ("R1", "R2", "R3", "R4", "R5", "R6")
_CLAUSE_LABELS = (
    "first-associative", "first-left-distributive", "first-commutative",
    "second-associative", "second-left-distributive", "second-commutative",
)
_ALL_LABELS = _R_LABELS + _CLAUSE_LABELS

# The search derives the second multiplication from (join, meet, alpha) and
# the first from the second through alpha, so candidates are exactly the
# pairs (lattice, antitone involution swapping the bounds); this is complete
# for every triple satisfying R1, R4 and R5, hence those must be enforced.
_REQUIRED_ENFORCE = frozenset({"R1", "R4", "R5"})


@dataclass(frozen=True)
class SearchTask:
    enforce: frozenset[str]
    violate: frozenset[str]
    max_size: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "enforce", frozenset(self.enforce))
        object.__setattr__(self, "violate", frozenset(self.violate))
        unknown = (self.enforce | self.violate) - set(_ALL_LABELS)
        if unknown:
            raise InvalidTask(f"unknown axiom labels: {sorted(unknown)}")
        overlap = self.enforce & self.violate
        if overlap:
            raise InvalidTask(f"enforce and violate overlap on {sorted(overlap)}")
        if self.max_size < 1:
            raise InvalidTask("max_size must be at least 1")


def _label_flags(t: CoupledTriple) -> dict[str, bool]:
    flags = {r.axiom: r.passed for r in check_coupled_right_orthosemiring(t).results}
    for prefix, comp in (("first", t.first), ("second", t.second)):
        p, tt = comp.plus.table, comp.times.table
        n = comp.carrier.size
        flags[f"{prefix}-associative"] = _fail3(
            n, lambda x, y, z: tt[tt[x][y]][z] == tt[x][tt[y][z]]) is None
        flags[f"{prefix}-left-distributive"] = _fail3(
            n, lambda x, y, z: tt[x][p[y][z]] == p[tt[x][y]][tt[x][z]]) is None
        flags[f"{prefix}-commutative"] = _fail2(
            n, lambda x, y: tt[x][y] == tt[y][x]) is None
    return flags


def _candidate_triples(n: int, threads: int) -> Iterator[CoupledTriple]:
    carrier = Carrier.indexed(n)
    for lkey in _lattice_keys(n, threads):
        join, meet = _split_key(n, lkey, _LATTICE_OPS)
        leq = [[meet[x][y] == x for y in range(n)] for x in range(n)]
        join_op, meet_op = BinaryOp(join), BinaryOp(meet)
        for alpha in _antitone_involutions_with_swapped_bounds(n, leq):
            star = tuple(
                tuple(join[meet[x][alpha[y]]][y] for y in range(n)) for x in range(n)
            )
            prod = tuple(
                tuple(alpha[star[alpha[x]][alpha[y]]] for y in range(n)) for x in range(n)
            )
            first = NearSemiring(carrier, join_op, BinaryOp(prod), 0, n - 1)
            second = NearSemiring(carrier, meet_op, BinaryOp(star), n - 1, 0)
            yield CoupledTriple(first, second, UnaryOp(alpha))


def search_independence(task: SearchTask, threads: int = 1) -> Optional[CoupledTriple]:
    """Smallest-carrier coupled triple satisfying every enforced axiom and
    violating every axiom in the violate set, or None when the search space
    is exhausted up to the size bound.

    Complete over triples satisfying R1, R4 and R5; tasks not enforcing all
    three are rejected with UnsupportedTask (see _REQUIRED_ENFORCE).
    """
    if not _REQUIRED_ENFORCE <= task.enforce:
        missing = sorted(_REQUIRED_ENFORCE - task.enforce)
        raise UnsupportedTask(
            f"search requires enforcing {missing}; only tasks with R1, R4, R5 "
            "enforced admit a complete search at this scale"
        )
    for n in range(1, task.max_size + 1):
        for t in _candidate_triples(n, threads):
            flags = _label_flags(t)
            if all(flags[l] for l in task.enforce) and not any(flags[l] for l in task.violate):
                return t
    return None
