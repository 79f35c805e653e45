import pytest
from hypothesis import given

from conftest import frameworks
from prefext import ParseError, SemanticError, parse_apx, parse_tgf, to_apx, to_tgf


def test_apx_example():
    af = parse_apx("arg(a). arg(b). att(a,b).")
    assert af.n == 2 and af.labels == ("a", "b") and af.arcs == ((0, 1),)


def test_tgf_example():
    af = parse_tgf("1\n2\n#\n1 2")
    assert af.n == 2 and af.arcs == ((0, 1),)


def test_apx_undeclared():
    with pytest.raises(SemanticError):
        parse_apx("att(a,b).")


def test_apx_malformed_has_line_number():
    with pytest.raises(ParseError) as info:
        parse_apx("arg(a).\narg(b)\n")
    assert info.value.lineno == 2
    with pytest.raises(ParseError):
        parse_apx("att(a).")


def test_apx_comments_and_duplicates():
    af = parse_apx("% header\narg(a).\narg(a).\natt(a,a). att(a,a).\n")
    assert af.n == 1 and af.arcs == ((0, 0),)


def test_tgf_labels_and_errors():
    af = parse_tgf("1 alpha\n2 beta\n#\n1 2 edge-label\n")
    assert af.labels == ("alpha", "beta")
    with pytest.raises(SemanticError):
        parse_tgf("1\n#\n1 3\n")
    with pytest.raises(ParseError) as info:
        parse_tgf("1\n#\n1\n")
    assert info.value.lineno == 3


@given(frameworks(max_n=7, loops=True))
def test_round_trips(af):
    assert parse_apx(to_apx(af)) == af
    assert parse_tgf(to_tgf(af)) == af
