from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grrskit import exact
from grrskit.autofix import identity_automorphism
from grrskit.catalog import build_family
from grrskit.pairs import pair_automorphism, pair_grrs, parse_pair
from grrskit.restrict import (count_iwasawa_systems, enumerate_positive_systems,
                              is_iwasawa_system, iwasawa_positive_system, positive_system,
                              restrict, restricted_checks, satake_diagram)


def setup(text):
    d = parse_pair(text)
    g = pair_grrs(d)
    return g, pair_automorphism(d, g)


GL31 = "gl(3|1):gl(1|0)xgl(2|1)"


def test_gl31_restricted_roots_by_hand():
    g, th = setup(GL31)
    rrs = restrict(g, th)
    table = {rrs.label(c): (e.dim, e.sdim, e.real) for c, e in rrs.entries.items()}
    # e1-e2, e2-e3, e1-d1, d1-e3 all restrict to (e1-e3)/2, a nonisotropic BC1 root
    assert table == {"1/2e1-1/2e3": (4, 0, True), "-1/2e1+1/2e3": (4, 0, True),
                     "e1-e3": (1, 1, True), "-e1+e3": (1, 1, True)}


def test_gl31_satake_diagram():
    g, th = setup(GL31)
    dia = satake_diagram(g, th)
    assert [n.label for n in dia.nodes] == ["e1-e2", "e2-d1", "-e3+d1"]
    assert [n.fixed for n in dia.nodes] == [False, True, False]
    assert dia.arrows == [(0, 2)]
    assert dia.partner[0] == 2 and dia.partner[2] == 0
    dot = dia.to_dot()
    assert dot.startswith("graph") and "dir=both" in dot


def test_gl31_chamber_count():
    g, th = setup(GL31)
    c = count_iwasawa_systems(g, th)
    assert c == {"R": 24, "R_bar": 2, "S": 2, "iwasawa": 4}
    assert c["iwasawa"] == c["R_bar"] * c["S"]


def test_gl2_chambers_oracle():
    # A1 x nothing: gl(2|0) is not a family, so use the even part of gl(2|1)
    assert len(enumerate_positive_systems([(1,), (-1,)])) == 2
    a2 = [(1, -1, 0), (0, 1, -1), (1, 0, -1)]
    a2 += [exact.neg(exact.vector(r)) for r in a2]
    assert len(enumerate_positive_systems(a2)) == 6


def test_default_system_is_iwasawa():
    for text in [GL31, "gl(2|2):osp(2|2)", "osp(5|4):osp(1|2)xosp(4|2)", "D(2,1;l=2):osp(2|2)xso(2)"]:
        g, th = setup(text)
        pos = iwasawa_positive_system(g, th)
        assert is_iwasawa_system(g, th, pos.positives)


@pytest.mark.parametrize("text", [GL31, "gl(2|2):osp(2|2)", "gl(3|3):gl(1|1)xgl(2|2)",
                                  "osp(4|2):gl(2|1)", "osp(3|2):osp(1|0)xosp(2|2)",
                                  "F(1|3):gosp(2|4)", "F(1|3):D(1,2;2)", "G(1|2):D(1,2;3)"])
def test_restricted_checks(text):
    g, th = setup(text)
    checks = restricted_checks(restrict(g, th))
    assert all(checks.values()), checks


def test_identity_restricts_to_nothing():
    g = build_family("gl(2|1)")
    rrs = restrict(g, identity_automorphism(g))
    assert rrs.dimension == 0 and not rrs.roots


@given(st.sampled_from(["gl(2|1)", "B(1,1)", "gl(3|1)", "D(2,1;l=3)", "C(0,2)"]),
       st.lists(st.integers(-5, 5), min_size=6, max_size=6))
@settings(max_examples=60, deadline=None)
def test_positive_system_properties(fam, seed):
    g = build_family(fam)
    k = g.dimension
    pos = positive_system(g.roots, seed=[tuple(Fraction(x) for x in seed[:k])])
    P = set(pos.positives)
    assert all((r in P) != (exact.neg(r) in P) for r in g.roots)
    simples = list(pos.simple)
    assert exact.span_rank(simples) == len(simples) == k
    for r in pos.positives:
        co = exact.coordinates(simples, r)
        assert co is not None and all(x >= 0 and x.denominator == 1 for x in co)
