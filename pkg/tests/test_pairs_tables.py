from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from grrskit import exact
from grrskit.pairs import PairError, pair_automorphism, pair_grrs, parse_pair, table_actions
from grrskit.tables import evaluate, expected_iwasawa, expected_sv, load_tables, sv_row

PAIRS = ["gl(3|2):gl(1|2)xgl(2|0)", "gl(4|2):osp(4|2)", "osp(5|4):osp(1|2)xosp(4|2)",
         "osp(4|2):gl(2|1)", "D(2,1;l=3):osp(2|2)xso(2)", "F(1|3):gosp(2|4)",
         "F(1|3):sl(1|4)", "F(1|3):D(1,2;2)", "G(1|2):D(1,2;3)", "G(1|2):osp(3|2)xsl(2)",
         "osp(4|2):osp(2|0)xosp(2|2)"]


@pytest.mark.parametrize("text", PAIRS)
def test_pair_involutions_are_involutive_automorphisms(text):
    d = parse_pair(text)
    g = pair_grrs(d)
    th = pair_automorphism(d, g)
    assert th.is_involution()
    M = th.matrix
    assert exact.mat_mul(M, M) == exact.identity(g.dimension)


@pytest.mark.parametrize("text", ["gl(3|2):gl(1|2)xgl(1|0)", "gl(3|2)", "osp(4|2):gl(1|1)",
                                  "gl(2|3):osp(2|3)", "E(8):E(7)"])
def test_bad_pairs(text):
    with pytest.raises(PairError):
        parse_pair(text)


def test_p_has_no_root_involution():
    d = parse_pair("gl(2|2):p(2)")
    with pytest.raises(PairError):
        pair_automorphism(d)


def test_table_actions_cover_gl():
    g = pair_grrs(parse_pair("gl(2|2):osp(2|2)"))
    labels = [l for l, _ in table_actions(g)]
    assert "gl(2|2):osp(2|2)" in labels
    assert "gl(2|2):gl(1|1)xgl(1|1)" in labels


def test_evaluate_is_exact():
    assert evaluate("(m-2*r)*(n-2*s) >= 0", dict(m=3, n=2, r=1, s=2)) is False
    assert evaluate("-1/(2*n)", {"n": 3}) == Fraction(-1, 6)
    with pytest.raises(Exception):
        evaluate("__import__('os')", {})


@given(st.integers(1, 6), st.integers(0, 6), st.data())
def test_gl_iwasawa_expression(m, n, data):
    r = data.draw(st.integers(0, m))
    s = data.draw(st.integers(0, n))
    if m + n < 2 or (r, s) in ((0, 0), (m, n)):
        return
    d = parse_pair(f"gl({m}|{n}):gl({r}|{s})xgl({m - r}|{n - s})")
    assert expected_iwasawa(d) == ((m - 2 * r) * (n - 2 * s) >= 0)


def test_tables_carry_provenance_strings():
    t = load_tables()
    for row in t["iwasawa"] + t["sv"]:
        assert row["source"]


def test_sv_rows_and_folding():
    d = parse_pair("gl(4|2):gl(3|1)xgl(1|1)")
    assert sv_row(d)[0] == "gl-gl"
    assert expected_sv(d) == dict(t=-1, p=-2, q=Fraction(-1, 2), r=2, s=Fraction(-1, 2))
    assert sv_row(parse_pair("osp(4|4):osp(2|0)xosp(2|4)"))[0] == "osp4-osp2"
    assert expected_sv(parse_pair("D(2,1;l=-1/2):osp(2|2)xso(2)"))["t"] == Fraction(-1, 2)
    assert expected_sv(parse_pair("F(1|3):D(1,2;2)")) is None
