from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grrskit import exact
from grrskit.autofix import (EMPTY, IRREDUCIBLE, ISOTROPIC_PAIR, FormNotPreserved,
                             RootSetNotPreserved, analyze, enumerate_test_automorphisms,
                             fixed_roots, identity_automorphism, make_automorphism,
                             reflection_automorphism, t_closure)
from grrskit.catalog import build_family

FAMILIES = ["gl(2|1)", "B(1,1)", "A(0,2)", "gl(3|1)", "D(2,1;l=2)", "C(0,2)", "AB(1,3)",
            "Atilde(1)"]


def bfs_T(g, S):
    """T recomputed by breadth-first search over the non-orthogonality graph on S."""
    S = set(S)
    T = set()
    for start in S:
        if start not in g.odd or start in T:
            continue
        stack = [start]
        while stack:
            a = stack.pop()
            if a in T:
                continue
            T.add(a)
            stack += [b for b in S if b not in T and g.form(g.roots[a], g.roots[b]) != 0]
    return T


def test_identity_gives_irreducible_for_families_with_odd_roots():
    for fam in FAMILIES:
        g = build_family(fam)
        an = analyze(identity_automorphism(g))
        assert an.tag == IRREDUCIBLE and an.passed


def test_minus_identity_fixes_nothing():
    g = build_family("gl(2|1)")
    a = make_automorphism(g, tuple(exact.neg(r) for r in exact.identity(g.dimension)), "-id")
    an = analyze(a)
    assert an.S == () and an.tag == EMPTY


def test_simple_reflection_in_a02_leaves_isotropic_pair():
    g = build_family("A(0,2)")
    an = analyze(reflection_automorphism(g, "d1-d2"))
    assert an.tag == ISOTROPIC_PAIR
    assert {g.label(g.roots[i]) for i in an.T} == {"e1-d3", "-e1+d3"}


def test_b11_budget_three_has_four_automorphisms():
    # e and d have different norms, so only independent sign changes survive
    autos = enumerate_test_automorphisms(build_family("B(1,1)"), budget=3)
    assert len(autos) == 4


def test_make_automorphism_rejects_bad_maps():
    g = build_family("gl(2|1)")
    with pytest.raises((FormNotPreserved, RootSetNotPreserved)):
        make_automorphism(g, tuple(exact.scale(2, r) for r in exact.identity(g.dimension)))


def test_composition_and_order():
    g = build_family("gl(3|1)")
    s1 = reflection_automorphism(g, "e1-e2")
    s2 = reflection_automorphism(g, "e2-e3")
    assert s1.is_involution() and s1.order() == 2
    assert s1.compose(s2).order() == 3


@pytest.mark.parametrize("fam", FAMILIES)
def test_sweep_has_no_violations(fam):
    g = build_family(fam)
    tags = Counter()
    for a in enumerate_test_automorphisms(g, budget=2):
        an = analyze(a)
        assert an.passed, (a.label, an.certificates)
        assert set(an.T) == bfs_T(g, an.S)
        tags[an.tag] += 1
    assert tags[IRREDUCIBLE] >= 1


@given(st.sampled_from(FAMILIES), st.data())
@settings(max_examples=40, deadline=None)
def test_random_weyl_words(fam, data):
    g = build_family(fam)
    mirrors = [g.roots[i] for i in g.real]
    word = data.draw(st.lists(st.sampled_from(mirrors), min_size=0, max_size=4))
    a = identity_automorphism(g)
    for r in word:
        a = reflection_automorphism(g, r).compose(a)
    brute = {i for i, r in enumerate(g.roots) if exact.mat_vec(a.matrix, r) == r}
    assert set(fixed_roots(a)) == brute
    T, Tp = t_closure(g, brute)
    assert set(T) == bfs_T(g, brute) and set(T) | set(Tp) == brute
    an = analyze(a)
    assert an.passed
    if not T:
        assert an.tag == EMPTY
