from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grrskit import exact
from grrskit.pairs import parse_pair
from grrskit.superalg import (DescriptorMismatch, InvalidSimpleSystem, SuperalgebraError,
                              borel_complement_check, build_algebra, build_involution,
                              cartan_and_centralizer, compose_delta, eigenspace_split,
                              fixed_subalgebra, is_bracket_automorphism, iwasawa_check,
                              preserves_form, slin)
from oracles import osp_dim

EVEN = 0


@pytest.mark.parametrize("tag,dims", [("gl(2|1)", (5, 4)), ("gl(3|2)", (13, 12)),
                                      ("osp(3|2)", osp_dim(3, 2)), ("osp(4|2)", osp_dim(4, 2)),
                                      ("osp(2|4)", osp_dim(2, 4)), ("osp(5|4)", osp_dim(5, 4))])
def test_dimensions(tag, dims):
    alg = build_algebra(tag)
    even = sum(1 for p in alg.parity if p == EVEN)
    assert (even, alg.dim - even) == dims


def test_unknown_algebra():
    with pytest.raises(SuperalgebraError):
        build_algebra("sl(2|1)")


@given(st.sampled_from(["gl(2|1)", "osp(3|2)", "osp(2|2)", "osp(1|4)"]), st.data())
@settings(max_examples=40, deadline=None)
def test_bracket_closure_and_super_jacobi(tag, data):
    alg = build_algebra(tag)
    idx = st.integers(0, alg.dim - 1)
    i, j, k = data.draw(idx), data.draw(idx), data.draw(idx)
    X, Y, Z = alg.basis[i], alg.basis[j], alg.basis[k]
    alg.coords(alg.bracket(X, Y))
    px, py, pz = alg.parity[i], alg.parity[j], alg.parity[k]
    # [X,[Y,Z]] = [[X,Y],Z] + (-1)^{|X||Y|} [Y,[X,Z]]
    lhs = alg.bracket(X, alg.bracket(Y, Z))
    rhs = slin((1, alg.bracket(alg.bracket(X, Y), Z)),
               ((-1) ** (px * py), alg.bracket(Y, alg.bracket(X, Z))))
    assert lhs == rhs


TABLE = ["gl(3|2):gl(1|2)xgl(2|0)", "gl(2|4):gl(0|1)xgl(2|3)", "gl(2|2):osp(2|2)",
         "osp(4|2):gl(2|1)", "osp(5|2):osp(1|2)xosp(4|0)", "osp(3|2):osp(1|0)xosp(2|2)"]


@pytest.mark.parametrize("text", TABLE)
def test_involutions_are_form_preserving_automorphisms(text):
    d = parse_pair(text)
    alg = build_algebra(d.family)
    inv = build_involution(alg, d)
    assert exact.mat_mul(inv.matrix, inv.matrix) == exact.identity(alg.dim)
    assert is_bracket_automorphism(inv)
    assert preserves_form(inv)
    k, p = eigenspace_split(inv)
    assert len(k) + len(p) == alg.dim


def test_descriptor_mismatch():
    with pytest.raises(DescriptorMismatch):
        build_involution(build_algebra("gl(2|1)"), parse_pair("gl(3|2):gl(1|2)xgl(2|0)"))


def test_iwasawa_verdicts_gl32():
    d = parse_pair("gl(3|2):gl(1|2)xgl(2|0)")
    alg = build_algebra(d.family)
    rep = iwasawa_check(alg, build_involution(alg, d))
    assert (rep.iwasawa_theta, rep.iwasawa_delta_theta) == (False, True)
    assert rep.dims["k_delta"] + rep.dims["a"] + rep.dims["n"] == 25


def test_delta_theta_swaps_verdicts():
    d = parse_pair("gl(3|2):gl(1|2)xgl(2|0)", delta=True)
    alg = build_algebra(d.family)
    rep = iwasawa_check(alg, build_involution(alg, d))
    assert (rep.iwasawa_theta, rep.iwasawa_delta_theta) == (True, False)


@pytest.mark.parametrize("n", [2, 3])
def test_pn(n):
    d = parse_pair(f"gl({n}|{n}):p({n})")
    alg = build_algebra(f"gl({n}|{n})")
    inv = build_involution(alg, d)
    assert is_bracket_automorphism(inv)
    assert not preserves_form(inv)
    rep = iwasawa_check(alg, inv)
    assert not rep.iwasawa_theta and not rep.iwasawa_delta_theta
    assert rep.theta_on_ca1 == "neither"
    # c(a) is gl(1|1)^n here
    assert (rep.dims["ca0"], rep.dims["ca1"]) == (2 * n, 2 * n)
    names = alg.names
    simples = []
    for i in range(n):
        simples.append(_w(names, f"d{i + 1}", f"e{i + 1}"))
        if i + 1 < n:
            simples.append(_w(names, f"e{i + 1}", f"d{i + 2}"))
    assert borel_complement_check(alg, simples, fixed_subalgebra(inv))


def _w(names, plus, minus):
    v = [Fraction(0)] * len(names)
    v[names.index(plus)] += 1
    v[names.index(minus)] -= 1
    return tuple(v)


def test_borel_check_rejects_non_simple_system():
    alg = build_algebra("gl(2|1)")
    with pytest.raises(InvalidSimpleSystem):
        borel_complement_check(alg, [_w(alg.names, "e1", "e2"), _w(alg.names, "e1", "d1")], [])


def test_centralizer_of_a_is_maximal_for_table_pairs():
    for text in TABLE:
        d = parse_pair(text)
        alg = build_algebra(d.family)
        assert cartan_and_centralizer(alg, build_involution(alg, d)).maximal
