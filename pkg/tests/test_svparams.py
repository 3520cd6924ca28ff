from fractions import Fraction

import pytest

from grrskit.pairs import pair_automorphism, pair_grrs, parse_pair
from grrskit.restrict import restrict
from grrskit.svparams import (FrameMismatch, NotTwoComponent, check_deformed_axioms,
                              sv_parameters)
from grrskit.tables import expected_sv

F = Fraction


def params(text):
    d = parse_pair(text)
    g = pair_grrs(d)
    rrs = restrict(g, pair_automorphism(d, g))
    return rrs, sv_parameters(rrs)


# values worked out by hand from the restricted multiplicities
HAND = {
    "gl(4|2):gl(1|1)xgl(3|1)": (-1, -2, F(-1, 2), 2, F(-1, 2)),
    "gl(4|4):osp(4|4)": (F(-1, 2), 0, 0, 0, 0),
    "osp(4|4):osp(1|2)xosp(3|2)": (F(-1, 2), -1, 0, 2, F(-3, 2)),
    "osp(4|2):osp(2|0)xosp(2|2)": (1, 0, F(-1, 2), 0, F(-1, 2)),
    "D(2,1;l=3):osp(2|2)xso(2)": (3, 0, F(-1, 2), 0, F(-1, 2)),
}


@pytest.mark.parametrize("text", sorted(HAND))
def test_hand_values(text):
    _, p = params(text)
    assert p.as_tuple() == HAND[text]


@pytest.mark.parametrize("text", [
    "gl(2|3):gl(1|1)xgl(1|2)", "gl(3|3):gl(1|2)xgl(2|1)", "gl(3|4):osp(3|4)",
    "osp(3|4):osp(1|2)xosp(2|2)", "osp(6|4):osp(3|2)xosp(3|2)", "osp(4|4):gl(2|2)",
    "osp(4|4):osp(2|0)xosp(2|4)", "D(2,1;l=-1/2):osp(2|2)xso(2)", "F(1|3):gosp(2|4)",
    "F(1|3):sl(1|4)"])
def test_matches_table_and_deformed_axioms(text):
    rrs, p = params(text)
    want = expected_sv(parse_pair(text))
    assert p.as_tuple() == tuple(want[k] for k in "tpqrs")
    checks = check_deformed_axioms(rrs, p)
    assert all(checks.values()), checks


def test_middle_multiplicities_follow_t():
    # rank-one components have no middle orbit, so use a rank-two instance
    _, p = params("gl(4|4):gl(2|2)xgl(2|2)")
    assert p.middle == (p.t, 1 / p.t) == (-1, -1)


def test_gl_osp_middle_orbit_is_type_a():
    _, p = params("gl(2|4):osp(2|4)")
    assert p.middle_shape == ("A", "A")


def test_osp_gl_odd_m_has_short_roots():
    # the table row lists p = r = 0; for m odd the restricted system has short roots
    _, p = params("osp(6|4):gl(3|2)")
    assert (p.p, p.r) == (-2, 1)
    assert (p.t, p.q, p.s) == (-2, F(-1, 2), F(-1, 2))


@pytest.mark.parametrize("text", ["F(1|3):D(1,2;2)", "G(1|2):D(1,2;3)", "G(1|2):osp(3|2)xsl(2)",
                                  "gl(3|1):gl(1|0)xgl(2|1)", "osp(4|4):osp(2|2)xosp(2|2)"])
def test_not_two_components(text):
    d = parse_pair(text)
    g = pair_grrs(d)
    rrs = restrict(g, pair_automorphism(d, g))
    with pytest.raises(FrameMismatch):
        sv_parameters(rrs)
    with pytest.raises(NotTwoComponent):
        sv_parameters(rrs)


def test_json_shape():
    _, p = params("D(2,1;l=2):osp(2|2)xso(2)")
    js = p.to_json()
    assert js["t"] == "2" and js["ell"] == 2
    assert {o["length_class"] for o in js["orbits"]} >= {"long", "isotropic"}
