from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grrskit import exact
from grrskit.catalog import build_family, drop_root
from grrskit.grrs import (EVEN, ODD, Grrs, RootError, check_axioms, check_sub_grrs, grrs_from_json,
                          grrs_to_json, is_irreducible, reflect, restrict_to_span, weyl_orbit)

SMALL = ["gl(2|1)", "gl(2|2)", "B(1,1)", "B(2,1)", "D(2,1)", "C(0,2)", "A(2,2)",
         "Atilde(1)", "D(2,1;l=2)", "AB(1,3)", "G(1,2)"]


@pytest.mark.parametrize("fam", SMALL)
def test_catalog_families_satisfy_axioms(fam):
    assert check_axioms(build_family(fam)).passed


def test_b2_plain_root_system():
    form = exact.SymmetricForm.diagonal([1, 1])
    roots = [(1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (1, -1), (-1, 1), (-1, -1)]
    g = Grrs(form, roots, "B2")
    assert check_axioms(g).passed
    assert not g.imaginary and len(g.real) == 8


def test_isotropic_pair_without_neighbours_fails_axiom_4():
    # gl(1|1) alone: e1-d1 and its negative, orthogonal complement degenerate
    form = exact.SymmetricForm.diagonal([1, 1, -1])
    roots = [(1, 0, 1), (-1, 0, -1), (0, 1, 0), (0, -1, 0), (1, 1, 1), (-1, -1, -1)]
    rep = check_axioms(Grrs(form, roots))
    assert not rep.passed


@pytest.mark.parametrize("fam", ["gl(2|1)", "B(1,1)", "D(2,1;l=3)"])
def test_every_single_root_deletion_is_detected(fam):
    g = build_family(fam)
    for i in range(len(g.roots)):
        rep = check_axioms(drop_root(g, i))
        assert not rep.passed
        assert rep[rep.failed()[0]].witnesses


def test_constructor_rejects_zero_and_wrong_dimension():
    form = exact.SymmetricForm.diagonal([1, 1])
    with pytest.raises(RootError):
        Grrs(form, [(0, 0)])
    with pytest.raises(exact.DimensionError):
        Grrs(form, [(1, 0, 0)])


def test_parities_gl21():
    g = build_family("gl(2|1)")
    assert g.parities[g.root_index("e1-e2")] == EVEN
    assert g.parities[g.root_index("e1-d1")] == ODD


def test_nonisotropic_odd_root_in_b11():
    g = build_family("B(1,1)")
    assert g.parities[g.root_index("d1")] == ODD
    assert g.parities[g.root_index("2d1")] == EVEN


def test_reflection_is_involution_on_roots():
    g = build_family("B(2,1)")
    for a in g.real:
        for b in g.roots:
            once = reflect(g, g.roots[a], b)
            assert reflect(g, g.roots[a], once) == b


def test_weyl_orbit_gl22_isotropic_has_four_elements():
    # W = S2 x S2 moves e_i - d_j to the four choices of (i, j)
    g = build_family("gl(2|2)")
    orb = weyl_orbit(g, "e1-d1")
    assert {g.label(v) for v in orb} == {"e1-d1", "e1-d2", "e2-d1", "e2-d2"}


def test_json_round_trip():
    g = build_family("B(1,2)")
    h = grrs_from_json(grrs_to_json(g))
    assert h.roots == g.roots and h.form.gram == g.form.gram


def test_even_part_is_sub_grrs():
    g = build_family("B(1,1)")
    even = [g.roots[i] for i in range(len(g.roots)) if g.parities[i] == EVEN]
    assert check_sub_grrs(g, even)
    h = restrict_to_span(g, even)
    assert check_axioms(h).passed


def test_irreducible_families():
    assert is_irreducible(build_family("gl(2|1)"))
    assert is_irreducible(build_family("D(2,1;l=-1/2)"))


@given(st.sampled_from(SMALL), st.data())
@settings(max_examples=60, deadline=None)
def test_real_reflections_preserve_roots_and_form(fam, data):
    g = build_family(fam)
    a = data.draw(st.sampled_from(list(g.real)))
    alpha = g.roots[a]
    for b in g.roots:
        img = reflect(g, alpha, b)
        assert img in g.index
        for c in g.roots[:6]:
            assert g.form(img, reflect(g, alpha, c)) == g.form(b, c)


@given(st.sampled_from(SMALL))
@settings(max_examples=20, deadline=None)
def test_roots_closed_under_negation(fam):
    g = build_family(fam)
    assert all(exact.neg(r) in g.index for r in g.roots)


@given(st.sampled_from(SMALL), st.data())
@settings(max_examples=40, deadline=None)
def test_isotropic_roots_have_a_nonorthogonal_root(fam, data):
    g = build_family(fam)
    if not g.imaginary:
        return
    a = g.roots[data.draw(st.sampled_from(list(g.imaginary)))]
    assert g.form(a, a) == 0
    assert any(g.form(a, b) != 0 for b in g.roots)
