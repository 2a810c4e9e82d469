"""Independent brute-force evaluators used to compute expected values.

Everything here works on raw tables with plain loops written straight from
the law statements, deliberately separate from the library's sweep helpers,
so test expectations are frozen against a second implementation.
"""

from __future__ import annotations

import itertools

from omlkit.core import BinaryOp, BoundedLattice, Carrier, UnaryOp
from omlkit.ortholattice import OrthoLattice


def first_counterexample(n, arity, pred):
    """First tuple (lexicographic) violating pred, or None."""
    for tup in itertools.product(range(n), repeat=arity):
        if not pred(*tup):
            return tup
    return None


def named(names, tup):
    return None if tup is None else tuple(names[i] for i in tup)


def report_triples(report):
    """Comparable view of a CheckReport: (axiom, passed, witness) rows."""
    return [(r.axiom, r.passed, r.witness) for r in report.results]


def bounded_lattice_oracle(names, j, m, bottom, top):
    """(axiom, passed, witness) rows in the library's documented order."""
    n = len(names)
    laws = [
        ("join-idempotent", 1, lambda x: j[x][x] == x),
        ("join-commutative", 2, lambda x, y: j[x][y] == j[y][x]),
        ("join-associative", 3, lambda x, y, z: j[j[x][y]][z] == j[x][j[y][z]]),
        ("meet-idempotent", 1, lambda x: m[x][x] == x),
        ("meet-commutative", 2, lambda x, y: m[x][y] == m[y][x]),
        ("meet-associative", 3, lambda x, y, z: m[m[x][y]][z] == m[x][m[y][z]]),
        ("absorption-join", 2, lambda x, y: j[x][m[x][y]] == x),
        ("absorption-meet", 2, lambda x, y: m[x][j[x][y]] == x),
        ("bottom-neutral", 1, lambda x: j[x][bottom] == x),
        ("top-neutral", 1, lambda x: m[x][top] == x),
    ]
    out = []
    for axiom, arity, pred in laws:
        cex = first_counterexample(n, arity, pred)
        out.append((axiom, cex is None, named(names, cex)))
    return out


def right_near_semiring_oracle(names, p, t, zero, one):
    n = len(names)
    laws = [
        ("plus-commutative", 2, lambda x, y: p[x][y] == p[y][x]),
        ("plus-associative", 3, lambda x, y, z: p[p[x][y]][z] == p[x][p[y][z]]),
        ("plus-zero-neutral", 1, lambda x: p[x][zero] == x and p[zero][x] == x),
        ("times-one-neutral", 1, lambda x: t[x][one] == x and t[one][x] == x),
        ("right-distributive", 3, lambda x, y, z: t[p[x][y]][z] == p[t[x][z]][t[y][z]]),
        ("zero-annihilates", 1, lambda x: t[x][zero] == zero and t[zero][x] == zero),
    ]
    out = []
    for axiom, arity, pred in laws:
        cex = first_counterexample(n, arity, pred)
        out.append((axiom, cex is None, named(names, cex)))
    return out


def mv_oracle(names, p, f, zero):
    n = len(names)
    one = f[zero]
    laws = [
        ("oplus-commutative", 2, lambda x, y: p[x][y] == p[y][x]),
        ("oplus-associative", 3, lambda x, y, z: p[p[x][y]][z] == p[x][p[y][z]]),
        ("zero-neutral", 1, lambda x: p[x][zero] == x and p[zero][x] == x),
        ("top-absorbing", 1, lambda x: p[x][one] == one),
        ("double-negation", 1, lambda x: f[f[x]] == x),
        ("join-symmetry", 2, lambda x, y: p[f[p[f[x]][y]]][y] == p[f[p[f[y]][x]]][x]),
    ]
    out = []
    for axiom, arity, pred in laws:
        cex = first_counterexample(n, arity, pred)
        out.append((axiom, cex is None, named(names, cex)))
    return out


def basic_algebra_oracle(names, p, f, zero):
    n = len(names)
    one = f[zero]
    laws = [
        ("zero-neutral", 1, lambda x: p[x][zero] == x),
        ("double-negation", 1, lambda x: f[f[x]] == x),
        ("join-symmetry", 2, lambda x, y: p[f[p[f[x]][y]]][y] == p[f[p[f[y]][x]]][x]),
        ("difference-bound", 3,
         lambda x, y, z: p[f[p[f[p[f[p[x][y]]][y]]][z]]][p[x][z]] == one),
    ]
    out = []
    for axiom, arity, pred in laws:
        cex = first_counterexample(n, arity, pred)
        out.append((axiom, cex is None, named(names, cex)))
    return out


# ---------------------------------------------------------------------------
# Structure permutation (for canonical-form invariance tests)


def permute_lattice(s: BoundedLattice, perm) -> BoundedLattice:
    n = s.carrier.size
    inv = [0] * n
    for i, p in enumerate(perm):
        inv[p] = i
    names = tuple(s.carrier.names[inv[x]] for x in range(n))
    join = BinaryOp.from_function(n, lambda x, y: perm[s.join.table[inv[x]][inv[y]]])
    meet = BinaryOp.from_function(n, lambda x, y: perm[s.meet.table[inv[x]][inv[y]]])
    lat = BoundedLattice(Carrier(names), join, meet, perm[s.bottom], perm[s.top])
    if isinstance(s, OrthoLattice):
        comp = UnaryOp.from_function(n, lambda x: perm[s.comp.map[inv[x]]])
        return OrthoLattice(lat.carrier, lat.join, lat.meet, lat.bottom, lat.top, comp)
    return lat


# ---------------------------------------------------------------------------
# Brute-force bounded-lattice generator (independent of the poset-first path)


def brute_force_lattices(n: int) -> list[BoundedLattice]:
    """Every bounded lattice on indices 0..n-1 with bottom 0 and top n-1,
    found by filtering all commutative idempotent meet tables; one structure
    per labeled table.  Only feasible for n <= 4."""
    pairs = [(i, jj) for i in range(n) for jj in range(i + 1, n)]
    found = []
    for combo in itertools.product(range(n), repeat=len(pairs)):
        meet = [[x if x == y else -1 for y in range(n)] for x in range(n)]
        for (x, y), value in zip(pairs, combo):
            meet[x][y] = value
            meet[y][x] = value
        if any(meet[meet[x][y]][z] != meet[x][meet[y][z]]
               for x in range(n) for y in range(n) for z in range(n)):
            continue
        if any(meet[0][x] != 0 for x in range(n)):
            continue
        if any(meet[x][n - 1] != x for x in range(n)):
            continue
        leq = [[meet[x][y] == x for y in range(n)] for x in range(n)]
        join = [[-1] * n for _ in range(n)]
        ok = True
        for x in range(n):
            for y in range(n):
                ubs = [z for z in range(n) if leq[x][z] and leq[y][z]]
                least = [u for u in ubs if all(leq[u][v] for v in ubs)]
                if len(least) != 1:
                    ok = False
                    break
                join[x][y] = least[0]
            if not ok:
                break
        if not ok:
            continue
        found.append(BoundedLattice(
            Carrier.indexed(n),
            BinaryOp.from_rows(join),
            BinaryOp.from_rows(meet),
            0, n - 1,
        ))
    return found
