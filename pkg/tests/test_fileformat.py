import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from omlkit.core import BinaryOp, Carrier, UnaryOp
from omlkit.corpus import b4, c2, mo2
from omlkit.coupled import sasaki_triple
from omlkit.fileformat import (
    AlgebraSemanticError,
    AlgebraSyntaxError,
    ParsedAlgebra,
    detect_kind,
    parse,
    parsed_from_structure,
    serialize,
    serialize_structure,
    to_coupled_triple,
    to_ortholattice,
    to_structure,
)
from omlkit.mv_basic import lukasiewicz_chain

C2_DOC = """
# two-element chain
algebra C2
size 2
elements 0 1
op join binary
0 1
1 1
op meet binary
0 0
0 1
op comp unary
1 0
const bottom 0
const top 1
"""


def test_parse_c2_document():
    doc = parse(C2_DOC)
    assert len(doc) == 1
    a = doc.algebras[0]
    assert a.name == "C2"
    assert detect_kind(a) == "ortholattice"
    assert to_ortholattice(a) == c2()


def test_row_with_wrong_length():
    bad = C2_DOC.replace("0 1\n1 1", "0 1 1\n1 1")
    with pytest.raises(AlgebraSemanticError) as err:
        parse(bad)
    assert err.value.line == 7  # the offending row


def test_unknown_element_name():
    bad = C2_DOC.replace("op meet binary\n0 0", "op meet binary\n0 q")
    with pytest.raises(AlgebraSemanticError):
        parse(bad)


def test_duplicate_op_name():
    bad = C2_DOC.replace("op meet binary", "op join binary")
    with pytest.raises(AlgebraSemanticError) as err:
        parse(bad)
    assert "duplicate op" in str(err.value)


def test_duplicate_const():
    bad = C2_DOC + "const bottom 1\n"
    doc = C2_DOC.replace("const top 1", "const top 1\nconst top 0")
    with pytest.raises(AlgebraSemanticError):
        parse(doc)
    with pytest.raises(AlgebraSemanticError):
        parse(bad)


def test_unknown_keyword_reports_position():
    bad = C2_DOC.replace("const bottom 0", "constant bottom 0")
    with pytest.raises(AlgebraSyntaxError) as err:
        parse(bad)
    assert err.value.line == 14
    assert err.value.column == 1


def test_truncated_table():
    bad = "algebra X\nsize 2\nelements 0 1\nop join binary\n0 1\n"
    with pytest.raises(AlgebraSyntaxError):
        parse(bad)


def test_missing_size_line():
    with pytest.raises(AlgebraSyntaxError):
        parse("algebra X\nelements 0 1\n")


def test_duplicate_algebra_names():
    with pytest.raises(AlgebraSemanticError):
        parse("algebra X\nsize 1\nelements e\nalgebra X\nsize 1\nelements e\n")


def test_elements_count_mismatch():
    with pytest.raises(AlgebraSemanticError):
        parse("algebra X\nsize 3\nelements a b\n")


def test_comments_and_whitespace_tolerated():
    doc = parse("  algebra   X  # tail\n\nsize 2\n# mid comment\nelements a b\n"
                "op join binary\n   a    b\nb\tb\n")
    assert doc.algebras[0].binary_op("join").table == ((0, 1), (1, 1))


def test_serialize_parse_roundtrip_document():
    text = serialize(parse(C2_DOC))
    assert parse(text) == parse(C2_DOC)


@pytest.mark.parametrize("structure,kind", [
    (mo2(), "ortholattice"),
    (sasaki_triple(mo2()), "triple"),
    (sasaki_triple(b4()).first, "near-semiring"),
    (lukasiewicz_chain(3), "oplus"),
])
def test_structure_roundtrip(structure, kind):
    text = serialize_structure("thing", structure)
    a = parse(text).algebras[0]
    assert detect_kind(a) == kind
    assert to_structure(a) == structure


def test_triple_roundtrip_preserves_components():
    t = sasaki_triple(mo2())
    rebuilt = to_coupled_triple(parse(serialize_structure("t", t)).algebras[0])
    assert rebuilt == t


def test_multiple_algebras_in_one_document():
    text = serialize_structure("A", c2()) + "\n" + serialize_structure("B", b4())
    doc = parse(text)
    assert [a.name for a in doc.algebras] == ["A", "B"]
    assert to_ortholattice(doc.get("B")) == b4()


def test_missing_required_constant():
    text = serialize_structure("A", c2()).replace("const bottom 0\n", "")
    with pytest.raises(AlgebraSemanticError):
        to_ortholattice(parse(text).algebras[0])


def test_unrecognized_signature():
    with pytest.raises(AlgebraSemanticError):
        detect_kind(parse("algebra X\nsize 1\nelements e\nop weird unary\ne\n").algebras[0])


# ---------------------------------------------------------------------------
# randomized round trips


_names = st.lists(
    st.text(alphabet="abcxyz01'", min_size=1, max_size=3),
    min_size=1, max_size=5, unique=True,
).map(tuple)


@st.composite
def parsed_algebras(draw):
    names = draw(_names)
    n = len(names)
    entry = st.integers(min_value=0, max_value=n - 1)
    table = draw(st.lists(
        st.lists(entry, min_size=n, max_size=n), min_size=n, max_size=n))
    umap = draw(st.lists(entry, min_size=n, max_size=n))
    consts = tuple(
        (cname, draw(entry)) for cname in draw(
            st.sets(st.sampled_from(["bottom", "top", "zero"]), max_size=2))
    )
    return ParsedAlgebra(
        "rand", Carrier(names),
        binary=(("op1", BinaryOp.from_rows(table)),),
        unary=(("u", UnaryOp(tuple(umap))),),
        constants=consts)


@settings(max_examples=60, deadline=None)
@given(parsed_algebras())
def test_random_roundtrip(algebra):
    assert parse(serialize(algebra)).algebras[0] == algebra


def test_parsed_from_structure_matches_signature():
    t = sasaki_triple(b4())
    a = parsed_from_structure("x", t)
    assert {nm for nm, _ in a.binary} == {"join", "meet", "prod", "dualprod"}
    assert {nm for nm, _ in a.unary} == {"inv"}
    assert dict(a.constants) == {"bottom": 0, "top": 3}
