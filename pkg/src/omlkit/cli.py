"""Command-line surface tying the checkers, constructions, enumeration, and
file format together.

Exit codes: 0 success, 1 axiom/roundtrip/search failure, 2 usage errors,
3 file or parse errors.
"""

from __future__ import annotations

import argparse
import sys
from typing import Callable, Optional, Sequence

from . import fileformat
from .core import (
    AlgebraError,
    BadSize,
    CheckReport,
    InvalidTask,
    PrerequisiteFailed,
    SignatureMismatch,
    UnsupportedTask,
    are_isomorphic,
    covering_pairs,
    is_bounded_lattice,
    order_from_meet,
)
from .coupled import (
    NotCoupled,
    NotOrthomodular,
    check_coupled_right_orthosemiring,
    check_coupled_semiring,
    sasaki_triple,
    underlying_ortholattice,
    verify_lattice_roundtrip,
    verify_triple_roundtrip,
)
from .enumeration import (
    EnumerationTask,
    SearchTask,
    Truncated,
    enumerate_structures,
    search_independence,
)
from .fileformat import AlgebraFormatError, ParsedAlgebra
from .mv_basic import check_basic_algebra, check_mv_algebra, lukasiewicz_chain
from .near_semiring import (
    check_join_ordered,
    check_lattice_ordered_semiring,
    check_meet_ordered,
    check_right_near_semiring,
    check_semiring,
)
from .ortholattice import (
    check_commutation_properties,
    check_foulis_holland,
    check_orthomodular,
    check_ortholattice,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_FILE = 3


# suite name -> (operation names the block must provide, runner -> CheckReport)
_LAT_OPS = frozenset({"join", "meet"})
_OL_OPS = frozenset({"join", "meet", "comp"})
_NS_OPS = frozenset({"plus", "times"})
_TRIPLE_OPS = frozenset({"join", "meet", "prod", "dualprod", "inv"})
_MV_OPS = frozenset({"oplus", "neg"})

_SUITES: dict[str, tuple[frozenset[str], Callable[[ParsedAlgebra], CheckReport]]] = {
    "lattice": (_LAT_OPS, lambda a: is_bounded_lattice(fileformat.to_bounded_lattice(a))),
    "ol": (_OL_OPS, lambda a: check_ortholattice(fileformat.to_ortholattice(a))),
    "oml": (_OL_OPS, lambda a: check_orthomodular(fileformat.to_ortholattice(a))),
    "commutation": (_OL_OPS,
                    lambda a: check_commutation_properties(fileformat.to_ortholattice(a))),
    "foulis-holland": (_OL_OPS,
                       lambda a: check_foulis_holland(fileformat.to_ortholattice(a))),
    "rns": (_NS_OPS, lambda a: check_right_near_semiring(fileformat.to_near_semiring(a))),
    "semiring": (_NS_OPS, lambda a: check_semiring(fileformat.to_near_semiring(a))),
    "join-ordered": (_NS_OPS | _LAT_OPS,
                     lambda a: check_join_ordered(fileformat.to_near_semiring(a),
                                                  fileformat.to_bounded_lattice(a))),
    "meet-ordered": (_NS_OPS | _LAT_OPS,
                     lambda a: check_meet_ordered(fileformat.to_near_semiring(a),
                                                  fileformat.to_bounded_lattice(a))),
    "lattice-ordered": (_NS_OPS | _LAT_OPS,
                        lambda a: check_lattice_ordered_semiring(
                            fileformat.to_near_semiring(a),
                            fileformat.to_bounded_lattice(a))),
    "dually-lattice-ordered": (_NS_OPS | _LAT_OPS,
                               lambda a: check_lattice_ordered_semiring(
                                   fileformat.to_near_semiring(a),
                                   fileformat.to_bounded_lattice(a), dual=True)),
    "cros": (_TRIPLE_OPS,
             lambda a: check_coupled_right_orthosemiring(fileformat.to_coupled_triple(a))),
    "coupled-semiring": (_TRIPLE_OPS,
                         lambda a: check_coupled_semiring(fileformat.to_coupled_triple(a))),
    "mv": (_MV_OPS, lambda a: check_mv_algebra(fileformat.to_oplus_algebra(a))),
    "ba": (_MV_OPS, lambda a: check_basic_algebra(fileformat.to_oplus_algebra(a))),
}


def _print_report(report: CheckReport, terse: bool) -> None:
    for r in report.results:
        if terse:
            witness = ",".join(r.witness) if r.witness else ""
            print(f"{r.axiom}\t{'PASS' if r.passed else 'FAIL'}\t{witness}")
        elif r.passed:
            print(f"  {r.axiom}: PASS")
        else:
            witness = f"  witness ({', '.join(r.witness)})" if r.witness else ""
            detail = f" [{r.detail}]" if r.detail else ""
            print(f"  {r.axiom}: FAIL{witness}{detail}")


def _cmd_check(args) -> int:
    doc = fileformat.parse_file(args.file)
    suites = [s.strip() for s in args.axioms.split(",") if s.strip()]
    for suite in suites:
        if suite not in _SUITES:
            print(f"unknown axiom suite {suite!r}; known: {', '.join(sorted(_SUITES))}",
                  file=sys.stderr)
            return EXIT_USAGE
    targets = [doc.get(args.name)] if args.name else list(doc)
    all_ok = True
    for a in targets:
        if args.format == "plain":
            print(f"algebra {a.name}")
        else:
            print(f"# algebra {a.name}")
        algebra_ok = True
        for suite in suites:
            required_ops, runner = _SUITES[suite]
            if not required_ops <= a.op_names:
                missing = sorted(required_ops - a.op_names)
                print(f"suite {suite!r} needs operations {missing} "
                      f"not present in algebra {a.name!r}", file=sys.stderr)
                return EXIT_USAGE
            try:
                report = runner(a)
            except PrerequisiteFailed as exc:
                algebra_ok = False
                if args.format == "terse":
                    print(f"{suite}\tFAIL\t")
                else:
                    print(f"  {suite}: PREREQUISITE FAILED ({exc})")
                continue
            algebra_ok = algebra_ok and report.ok
            _print_report(report, args.format == "terse")
        if args.format == "plain":
            print(f"{a.name}: {'PASS' if algebra_ok else 'FAIL'}")
        all_ok = all_ok and algebra_ok
    return EXIT_OK if all_ok else EXIT_FAIL


def _single_algebra(args) -> ParsedAlgebra:
    doc = fileformat.parse_file(args.file)
    if getattr(args, "name", None):
        return doc.get(args.name)
    return doc.algebras[0]


def _cmd_construct(args) -> int:
    a = _single_algebra(args)
    try:
        if args.direction == "n":
            triple = sasaki_triple(fileformat.to_ortholattice(a))
            sys.stdout.write(fileformat.serialize_structure(f"{a.name}_coupled", triple))
        else:
            lattice = underlying_ortholattice(fileformat.to_coupled_triple(a))
            sys.stdout.write(fileformat.serialize_structure(f"{a.name}_lattice", lattice))
    except (NotOrthomodular, NotCoupled, PrerequisiteFailed) as exc:
        print(f"construction failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def _cmd_roundtrip(args) -> int:
    a = _single_algebra(args)
    kind = fileformat.detect_kind(a)
    if kind == "ortholattice":
        label = "L(N(L))=L"
        verify = lambda: verify_lattice_roundtrip(fileformat.to_ortholattice(a))
    elif kind == "triple":
        label = "N(L(N))=N"
        verify = lambda: verify_triple_roundtrip(fileformat.to_coupled_triple(a))
    else:
        print(f"roundtrip needs an ortholattice or a coupled triple, got a {kind}",
              file=sys.stderr)
        return EXIT_USAGE
    try:
        report = verify()
    except (NotOrthomodular, NotCoupled, PrerequisiteFailed) as exc:
        print(f"{label}: FAILED ({exc})")
        return EXIT_FAIL
    if report.ok:
        print(f"{label}: EQUAL")
        return EXIT_OK
    fail = report.first_failure()
    witness = f" witness ({', '.join(fail.witness)})" if fail.witness else ""
    print(f"{label}: NOT EQUAL [{fail.axiom}{witness}]")
    return EXIT_FAIL


def _cmd_enumerate(args) -> int:
    task = EnumerationTask(args.cls, args.max_size, max_structures=args.limit)
    if args.count_only:
        counts = {n: 0 for n in range(1, args.max_size + 1)}
        for s in enumerate_structures(task, threads=args.threads):
            if isinstance(s, Truncated):
                print(f"truncated after {s.emitted} structures")
                break
            counts[s.carrier.size] += 1
        for n in range(1, args.max_size + 1):
            print(f"size {n}: {counts[n]}")
        print(f"total: {sum(counts.values())}")
        return EXIT_OK
    index = 0
    first = True
    for s in enumerate_structures(task, threads=args.threads):
        if isinstance(s, Truncated):
            print(f"# truncated after {s.emitted} structures")
            break
        if not first:
            print()
        first = False
        name = f"{args.cls}_{s.carrier.size}_{index}"
        sys.stdout.write(fileformat.serialize_structure(name, s))
        index += 1
    return EXIT_OK


def _parse_labels(raw: str) -> frozenset[str]:
    return frozenset(s.strip() for s in raw.split(",") if s.strip())


def _cmd_independence(args) -> int:
    task = SearchTask(_parse_labels(args.enforce), _parse_labels(args.violate),
                      args.max_size)
    witness = search_independence(task, threads=args.threads)
    if witness is None:
        print(f"exhausted: no witness up to size {args.max_size}")
        return EXIT_FAIL
    n = witness.carrier.size
    print(f"# witness found at size {n}")
    sys.stdout.write(fileformat.serialize_structure(f"witness_{n}", witness))
    return EXIT_OK


def _cmd_gen(args) -> int:
    algebra = lukasiewicz_chain(args.k)
    sys.stdout.write(fileformat.serialize_structure(f"lukasiewicz{args.k}", algebra))
    return EXIT_OK


def _cmd_iso(args) -> int:
    a1 = fileformat.parse_file(args.file1).algebras[0]
    a2 = fileformat.parse_file(args.file2).algebras[0]
    s1 = fileformat.to_structure(a1)
    s2 = fileformat.to_structure(a2)
    mapping = are_isomorphic(s1, s2)
    if mapping is None:
        print("not isomorphic")
        return EXIT_FAIL
    print("isomorphic")
    for i, j in enumerate(mapping):
        print(f"{a1.carrier.names[i]} -> {a2.carrier.names[j]}")
    return EXIT_OK


def _cmd_hasse(args) -> int:
    a = _single_algebra(args)
    kind = fileformat.detect_kind(a)
    if kind == "oplus":
        from .mv_basic import derive_lattice
        order, _, _ = derive_lattice(fileformat.to_oplus_algebra(a))
    elif kind in ("lattice", "ortholattice", "triple"):
        meet = a.binary_op("meet")
        order = order_from_meet(meet)
    else:
        print(f"hasse needs an ordered structure, got a {kind}", file=sys.stderr)
        return EXIT_USAGE
    names = a.carrier.names
    print("digraph hasse {")
    print("  rankdir=BT;")
    for nm in names:
        print(f'  "{nm}";')
    for x, y in covering_pairs(order):
        print(f'  "{names[x]}" -> "{names[y]}";')
    print("}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="omlkit",
        description="Model checking, constructions, and enumeration for finite "
                    "orthomodular lattices and coupled semiring-like structures.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="check axiom suites against a file")
    p.add_argument("file")
    p.add_argument("--axioms", required=True,
                   help="comma-separated suites, e.g. oml or rns,join-ordered")
    p.add_argument("--format", choices=("plain", "terse"), default="plain")
    p.add_argument("--name", help="check only the named algebra in the document")
    p.set_defaults(fn=_cmd_check)

    p = sub.add_parser("construct",
                       help="n: orthomodular lattice -> coupled triple; "
                            "l: coupled triple -> orthomodular lattice")
    p.add_argument("direction", choices=("n", "l"))
    p.add_argument("file")
    p.add_argument("--name")
    p.set_defaults(fn=_cmd_construct)

    p = sub.add_parser("roundtrip", help="verify the table-level roundtrip identity")
    p.add_argument("file")
    p.add_argument("--name")
    p.set_defaults(fn=_cmd_roundtrip)

    p = sub.add_parser("enumerate", help="canonical enumeration up to a size bound")
    p.add_argument("--class", dest="cls", choices=("lattice", "ol", "oml"), required=True)
    p.add_argument("--max-size", type=int, required=True)
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--limit", type=int, default=None, help="stop after this many structures")
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(fn=_cmd_enumerate)

    p = sub.add_parser("independence",
                       help="search for a triple meeting/violating chosen axioms")
    p.add_argument("--enforce", required=True, help="labels like R1,R2,R3,R4,R5")
    p.add_argument("--violate", default="", help="labels like R6")
    p.add_argument("--max-size", type=int, required=True)
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(fn=_cmd_independence)

    p = sub.add_parser("gen", help="generate a built-in algebra")
    gsub = p.add_subparsers(dest="generator", required=True)
    g = gsub.add_parser("lukasiewicz", help="k-element chain with truncated addition")
    g.add_argument("k", type=int)
    g.set_defaults(fn=_cmd_gen)

    p = sub.add_parser("iso", help="search for an isomorphism between two files")
    p.add_argument("file1")
    p.add_argument("file2")
    p.set_defaults(fn=_cmd_iso)

    p = sub.add_parser("hasse", help="DOT covering diagram of an ordered structure")
    p.add_argument("file")
    p.add_argument("--name")
    p.set_defaults(fn=_cmd_hasse)

    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.fn(args)
    except AlgebraFormatError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_FILE
    except FileNotFoundError as exc:
        print(f"cannot read file: {exc.filename}", file=sys.stderr)
        return EXIT_FILE
    except KeyError as exc:
        print(f"no such algebra or operation: {exc}", file=sys.stderr)
        return EXIT_FILE
    except (InvalidTask, UnsupportedTask, BadSize, SignatureMismatch) as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    except AlgebraError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_FILE


def main() -> None:
    sys.exit(run())
