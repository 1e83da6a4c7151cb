import pytest

from mtutte.matroid import MatroidError, uniform_matroid
from mtutte.perspective import identity_perspective
from mtutte.textio import ParseError, from_matroid, from_perspective, load, parse

M1_TEXT = """matroid
elements 1 2 3 4
bases {1,3} {1,4} {2,3} {2,4} {3,4}
"""

P2_TEXT = """perspective
elements 1 2 3 4 5
m circuits {1,2,3}
mprime circuits {2,4} {3,5} {1,2,3} {1,2,5} {1,3,4} {1,4,5}
"""


def test_parse_m1(m1):
    doc = parse(M1_TEXT)
    assert doc.kind == "matroid" and doc.labels == ["1", "2", "3", "4"]
    assert doc.base_matroid() == m1
    assert doc.perspective().is_identity


def test_parse_p2(p2):
    assert parse(P2_TEXT).perspective() == p2


def test_fixture_files_agree(m1, p2, fixtures_dir):
    assert load(fixtures_dir / "example1.mtx").base_matroid() == m1
    assert load(fixtures_dir / "example1_graph.mtx").base_matroid() == m1
    assert load(fixtures_dir / "example2.psp").perspective() == p2
    assert load(fixtures_dir / "example2_major.psp").perspective() == p2


def test_comments_blank_lines_and_accumulation(m1):
    text = "# header\n\nmatroid\nelements 1 2 3 4  # order\nbases {1,3} {1,4}\nbases {2,3} {2,4} {3,4}\n"
    assert parse(text).base_matroid() == m1


def test_empty_set_and_rank_zero():
    doc = parse("matroid\nelements a b\nbases {}\n")
    assert doc.base_matroid() == uniform_matroid(0, "ab")


@pytest.mark.parametrize(
    "text, lineno, fragment",
    [
        ("matroid\nelements 1 1\n", 2, "duplicate label"),
        ("matroid\nelements 1 2\nbases {1,3}\n", 3, "unknown label"),
        ("matroid\nelements 1 2\nbases 1,2\n", 3, "brace"),
        ("matroid\nelements 1 2\nbases {1,1}\n", 3, "repeated label"),
        ("tree\n", 1, "first line"),
        ("graph\nvertex a b\nedge 1 a c\n", 3, "unknown vertex"),
        ("graph\nvertex a a\n", 2, "duplicate"),
        ("matroid\nelements 1\nbases {1}\ncircuits {1}\n", 4, "already given"),
        ("matroid\nelements 1\nports {1}\n", 3, "unexpected"),
    ],
)
def test_errors_carry_line_numbers(text, lineno, fragment):
    with pytest.raises(ParseError) as err:
        parse(text)
    assert err.value.lineno == lineno
    assert str(err.value).startswith(f"line {lineno}: ")
    assert fragment in str(err.value)


@pytest.mark.parametrize(
    "text",
    ["", "matroid\n", "matroid\nelements 1 2\n", "perspective\nelements 1\nm bases {1}\n", "major\nelements 1\nbases {1}\n"],
)
def test_missing_sections(text):
    with pytest.raises(ParseError):
        parse(text)


def test_invalid_matroid_data_is_a_matroid_error():
    with pytest.raises(MatroidError):
        parse("matroid\nelements 1 2 3\nbases {1} {2,3}\n").base_matroid()


def test_non_quotient_is_rejected():
    text = "perspective\nelements 1 2\nm bases {1} {2}\nmprime bases {1,2}\n"
    with pytest.raises(MatroidError):
        parse(text).perspective()


@pytest.mark.parametrize("name", ["example1.mtx", "example1_graph.mtx", "example2.psp", "example2_major.psp"])
def test_dumps_is_idempotent(fixtures_dir, name):
    doc = load(fixtures_dir / name)
    once = doc.dumps()
    assert parse(once).dumps() == once
    assert parse(once).perspective() == doc.perspective()


def test_writers_round_trip(m1, p2):
    assert parse(from_matroid(m1).dumps()).base_matroid() == m1
    assert parse(from_perspective(p2).dumps()).perspective() == p2
    ident = identity_perspective(m1)
    assert parse(from_perspective(ident).dumps()).perspective() == ident
