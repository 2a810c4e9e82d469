"""Line-oriented text format for finite algebras, shared by the CLI.

A document holds one or more blocks::

    algebra MO2
    size 6
    elements 0 a a' b b' 1
    op join binary
    0 a a' b b' 1
    ...six rows...
    op comp unary
    1 a' a b' b 0
    const bottom 0
    const top 1

Comments start with '#'.  Rows are whitespace-insensitive; entries are
element names, never indices.  Operation names identify the structure kind:
join/meet (+ comp) for lattices and ortholattices, plus/times for near
semirings, oplus/neg for the MV-style algebras, and
join/meet/prod/dualprod/inv for coupled triples.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Optional, Union

from .core import (
    AlgebraError,
    BinaryOp,
    BoundedLattice,
    Carrier,
    UnaryOp,
)
from .coupled import CoupledTriple
from .mv_basic import OplusAlgebra
from .near_semiring import NearSemiring
from .ortholattice import OrthoLattice


class AlgebraFormatError(AlgebraError):
    """Base for parse-time errors; carries the source line."""

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class AlgebraSyntaxError(AlgebraFormatError):
    """Malformed document structure (keywords, counts, truncation)."""


class AlgebraSemanticError(AlgebraFormatError):
    """Well-formed lines with bad content (names, row lengths, duplicates)."""


@dataclass(frozen=True)
class ParsedAlgebra:
    name: str
    carrier: Carrier
    binary: tuple[tuple[str, BinaryOp], ...]
    unary: tuple[tuple[str, UnaryOp], ...]
    constants: tuple[tuple[str, int], ...]
    line: int = field(default=0, compare=False)

    @property
    def op_names(self) -> frozenset[str]:
        return frozenset(n for n, _ in self.binary) | frozenset(n for n, _ in self.unary)

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

    def constant(self, name: str) -> Optional[int]:
        for nm, value in self.constants:
            if nm == name:
                return value
        return None


@dataclass(frozen=True)
class ParsedDocument:
    algebras: tuple[ParsedAlgebra, ...]

    def __iter__(self):
        return iter(self.algebras)

    def __len__(self):
        return len(self.algebras)

    def get(self, name: str) -> ParsedAlgebra:
        for a in self.algebras:
            if a.name == name:
                return a
        raise KeyError(name)


_TOKEN = re.compile(r"\S+")


def _tokenize(line: str) -> list[tuple[str, int]]:
    """(token, 1-based column) pairs, with comments stripped."""
    code = line.split("#", 1)[0]
    return [(m.group(), m.start() + 1) for m in _TOKEN.finditer(code)]


class _Parser:
    def __init__(self, text: str):
        self.lines = text.splitlines()
        self.pos = 0

    def next_content_line(self) -> Optional[tuple[int, list[tuple[str, int]]]]:
        while self.pos < len(self.lines):
            lineno = self.pos + 1
            tokens = _tokenize(self.lines[self.pos])
            self.pos += 1
            if tokens:
                return lineno, tokens
        return None

    def parse(self) -> ParsedDocument:
        algebras: list[ParsedAlgebra] = []
        names: set[str] = set()
        entry = self.next_content_line()
        while entry is not None:
            lineno, tokens = entry
            if tokens[0][0] != "algebra":
                raise AlgebraSyntaxError(
                    f"expected 'algebra <name>', found {tokens[0][0]!r}", lineno, tokens[0][1])
            if len(tokens) != 2:
                raise AlgebraSyntaxError("'algebra' takes exactly one name", lineno, tokens[0][1])
            name = tokens[1][0]
            if name in names:
                raise AlgebraSemanticError(f"duplicate algebra name {name!r}", lineno)
            names.add(name)
            algebra, entry = self._parse_block(name, lineno)
            algebras.append(algebra)
        return ParsedDocument(tuple(algebras))

    def _expect(self, keyword: str):
        entry = self.next_content_line()
        if entry is None:
            raise AlgebraSyntaxError(f"unexpected end of document, expected {keyword!r}",
                                     len(self.lines) + 1)
        lineno, tokens = entry
        if tokens[0][0] != keyword:
            raise AlgebraSyntaxError(f"expected {keyword!r}, found {tokens[0][0]!r}",
                                     lineno, tokens[0][1])
        return lineno, tokens

    def _parse_block(self, name: str, header_line: int):
        lineno, tokens = self._expect("size")
        if len(tokens) != 2 or not tokens[1][0].isdigit():
            raise AlgebraSyntaxError("'size' takes one positive integer", lineno, tokens[0][1])
        size = int(tokens[1][0])
        if size < 1:
            raise AlgebraSemanticError("size must be at least 1", lineno)

        lineno, tokens = self._expect("elements")
        if len(tokens) != size + 1:
            raise AlgebraSemanticError(
                f"expected {size} element names, found {len(tokens) - 1}", lineno)
        element_names = tuple(t for t, _ in tokens[1:])
        if len(set(element_names)) != size:
            raise AlgebraSemanticError("element names must be unique", lineno)
        index = {nm: i for i, nm in enumerate(element_names)}

        binary: list[tuple[str, BinaryOp]] = []
        unary: list[tuple[str, UnaryOp]] = []
        constants: list[tuple[str, int]] = []
        op_names: set[str] = set()
        const_names: set[str] = set()

        def resolve(token: str, lineno: int) -> int:
            value = index.get(token)
            if value is None:
                raise AlgebraSemanticError(f"unknown element name {token!r}", lineno)
            return value

        def read_row(expected: int) -> tuple[int, tuple[int, ...]]:
            entry = self.next_content_line()
            if entry is None:
                raise AlgebraSyntaxError("unexpected end of document inside a table",
                                         len(self.lines) + 1)
            row_line, row_tokens = entry
            if len(row_tokens) != expected:
                raise AlgebraSemanticError(
                    f"expected {expected} entries in this row, found {len(row_tokens)}", row_line)
            return row_line, tuple(resolve(t, row_line) for t, _ in row_tokens)

        while True:
            entry = self.next_content_line()
            if entry is None:
                break
            lineno, tokens = entry
            keyword = tokens[0][0]
            if keyword == "algebra":
                self.pos -= 1  # hand the header back to the document loop
                break
            if keyword == "op":
                if len(tokens) != 3 or tokens[2][0] not in ("binary", "unary"):
                    raise AlgebraSyntaxError(
                        "expected 'op <name> binary|unary'", lineno, tokens[0][1])
                op_name, kind = tokens[1][0], tokens[2][0]
                if op_name in op_names:
                    raise AlgebraSemanticError(f"duplicate op name {op_name!r}", lineno)
                op_names.add(op_name)
                if kind == "binary":
                    rows = tuple(read_row(size)[1] for _ in range(size))
                    binary.append((op_name, BinaryOp(rows)))
                else:
                    unary.append((op_name, UnaryOp(read_row(size)[1])))
            elif keyword == "const":
                if len(tokens) != 3:
                    raise AlgebraSyntaxError("expected 'const <name> <element>'",
                                             lineno, tokens[0][1])
                const_name = tokens[1][0]
                if const_name in const_names:
                    raise AlgebraSemanticError(f"duplicate constant {const_name!r}", lineno)
                const_names.add(const_name)
                constants.append((const_name, resolve(tokens[2][0], lineno)))
            else:
                raise AlgebraSyntaxError(f"unknown keyword {keyword!r}", lineno, tokens[0][1])

        algebra = ParsedAlgebra(name, Carrier(element_names), tuple(binary),
                                tuple(unary), tuple(constants), line=header_line)
        # Re-read position: if we broke on a new 'algebra' header, continue there.
        entry = self.next_content_line()
        return algebra, entry


def parse(text: str) -> ParsedDocument:
    return _Parser(text).parse()


def parse_file(path: str) -> ParsedDocument:
    with open(path, "r", encoding="utf-8") as fh:
        return parse(fh.read())


# ---------------------------------------------------------------------------
# Serialization


def _serialize_block(a: ParsedAlgebra) -> str:
    names = a.carrier.names
    width = max(len(nm) for nm in names)
    lines = [f"algebra {a.name}", f"size {a.carrier.size}",
             "elements " + " ".join(names)]
    for op_name, op in a.binary:
        lines.append(f"op {op_name} binary")
        for row in op.table:
            lines.append(" ".join(names[e].ljust(width) for e in row).rstrip())
    for op_name, op in a.unary:
        lines.append(f"op {op_name} unary")
        lines.append(" ".join(names[e].ljust(width) for e in op.map).rstrip())
    for const_name, value in a.constants:
        lines.append(f"const {const_name} {names[value]}")
    return "\n".join(lines)


Structure = Union[BoundedLattice, OrthoLattice, NearSemiring, CoupledTriple, OplusAlgebra]


def parsed_from_structure(name: str, s: Structure) -> ParsedAlgebra:
    ops, consts = s.table_signature()
    binary = tuple((nm, BinaryOp(t)) for nm, kind, t in ops if kind == "binary")
    unary = tuple((nm, UnaryOp(t)) for nm, kind, t in ops if kind == "unary")
    return ParsedAlgebra(name, s.carrier, binary, unary, tuple(consts))


def serialize(doc: Union[ParsedDocument, ParsedAlgebra]) -> str:
    if isinstance(doc, ParsedAlgebra):
        return _serialize_block(doc) + "\n"
    return "\n\n".join(_serialize_block(a) for a in doc.algebras) + "\n"


def serialize_structure(name: str, s: Structure) -> str:
    return serialize(parsed_from_structure(name, s))


# ---------------------------------------------------------------------------
# Structure extraction


_KIND_OPS = {
    "triple": {"join", "meet", "prod", "dualprod", "inv"},
    "ortholattice": {"join", "meet", "comp"},
    "lattice": {"join", "meet"},
    "oplus": {"oplus", "neg"},
    "near-semiring": {"plus", "times"},
}


def detect_kind(a: ParsedAlgebra) -> str:
    """Structure kind from the block's operation names (most specific wins)."""
    ops = a.op_names
    for kind in ("triple", "ortholattice", "lattice", "oplus", "near-semiring"):
        if _KIND_OPS[kind] <= ops:
            return kind
    raise AlgebraSemanticError(
        f"algebra {a.name!r} has unrecognized operations {sorted(ops)}", a.line)


def _required_const(a: ParsedAlgebra, name: str) -> int:
    value = a.constant(name)
    if value is None:
        raise AlgebraSemanticError(
            f"algebra {a.name!r} is missing required constant {name!r}", a.line)
    return value


def to_bounded_lattice(a: ParsedAlgebra) -> BoundedLattice:
    return BoundedLattice(a.carrier, a.binary_op("join"), a.binary_op("meet"),
                          _required_const(a, "bottom"), _required_const(a, "top"))


def to_ortholattice(a: ParsedAlgebra) -> OrthoLattice:
    return OrthoLattice(a.carrier, a.binary_op("join"), a.binary_op("meet"),
                        _required_const(a, "bottom"), _required_const(a, "top"),
                        a.unary_op("comp"))


def to_near_semiring(a: ParsedAlgebra) -> NearSemiring:
    return NearSemiring(a.carrier, a.binary_op("plus"), a.binary_op("times"),
                        _required_const(a, "zero"), _required_const(a, "one"))


def to_coupled_triple(a: ParsedAlgebra) -> CoupledTriple:
    bottom = _required_const(a, "bottom")
    top = _required_const(a, "top")
    first = NearSemiring(a.carrier, a.binary_op("join"), a.binary_op("prod"), bottom, top)
    second = NearSemiring(a.carrier, a.binary_op("meet"), a.binary_op("dualprod"), top, bottom)
    return CoupledTriple(first, second, a.unary_op("inv"))


def to_oplus_algebra(a: ParsedAlgebra) -> OplusAlgebra:
    return OplusAlgebra(a.carrier, a.binary_op("oplus"), a.unary_op("neg"),
                        _required_const(a, "zero"))


def to_structure(a: ParsedAlgebra) -> Structure:
    kind = detect_kind(a)
    return {
        "triple": to_coupled_triple,
        "ortholattice": to_ortholattice,
        "lattice": to_bounded_lattice,
        "oplus": to_oplus_algebra,
        "near-semiring": to_near_semiring,
    }[kind](a)
