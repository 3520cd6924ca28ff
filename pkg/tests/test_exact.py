from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from grrskit import exact
from oracles import sympy_rank

small = st.integers(min_value=-4, max_value=4).map(Fraction)


def matrices(max_rows=5, max_cols=5):
    return st.integers(1, max_rows).flatmap(lambda r: st.integers(1, max_cols).flatmap(
        lambda c: st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r)))


@given(matrices())
@settings(max_examples=150, deadline=None)
def test_rank_matches_sympy(m):
    assert exact.span_rank(m) == sympy_rank(m)


@given(matrices())
@settings(max_examples=150, deadline=None)
def test_rank_nullity(m):
    ncols = len(m[0])
    ns = exact.nullspace(m, ncols)
    assert len(ns) + exact.span_rank(m) == ncols
    for v in ns:
        assert exact.is_zero(exact.mat_vec(m, v))


@given(st.integers(1, 4).flatmap(lambda n: st.lists(st.lists(small, min_size=n, max_size=n),
                                                    min_size=n, max_size=n)))
@settings(max_examples=150, deadline=None)
def test_inverse_against_sympy(m):
    if sympy_rank(m) < len(m):
        with pytest.raises(Exception):
            exact.inverse(m)
        return
    inv = exact.inverse(m)
    assert exact.mat_mul(m, inv) == exact.identity(len(m))
    ref = sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in r] for r in m]).inv()
    assert [[Fraction(int(x.p), int(x.q)) for x in row] for row in ref.tolist()] == \
        [list(r) for r in inv]


@given(matrices(4, 4), st.lists(small, min_size=4, max_size=4))
@settings(max_examples=100, deadline=None)
def test_solve_round_trip(m, x):
    x = x[:len(m[0])]
    b = exact.mat_vec(m, x)
    y = exact.solve(m, b)
    assert y is not None and exact.mat_vec(m, y) == b


def test_coordinates_outside_span_is_none():
    basis = [exact.vector([1, 0, 0]), exact.vector([0, 1, 0])]
    assert exact.coordinates(basis, [2, 3, 0]) == (2, 3)
    assert exact.coordinates(basis, [0, 0, 1]) is None


def test_orthogonal_complement_is_orthogonal():
    form = exact.SymmetricForm.diagonal([1, 1, -1])
    vecs = [exact.vector([1, 0, 1])]
    comp = exact.orthogonal_complement(form, vecs)
    assert len(comp) == 2
    assert all(form(c, v) == 0 for c in comp for v in vecs)


def test_form_rejects_asymmetric_gram():
    with pytest.raises(Exception):
        exact.SymmetricForm(((1, 2), (3, 4)))


def test_degenerate_form():
    f = exact.SymmetricForm(((1, 1), (1, 1)))
    assert f.rank() == 1 and f.is_degenerate()


def test_fmt():
    assert exact.fmt(Fraction(-1, 2)) == "-1/2"
    assert exact.fmt(Fraction(3)) == "3"
