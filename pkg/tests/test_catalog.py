from fractions import Fraction

import pytest

from grrskit.catalog import (FamilyError, build_family, catalog_selftest, component_types,
                             family_instances, normalize_type, parse_family)
from grrskit.grrs import EVEN, ODD
from oracles import gl_root_counts, osp_root_counts


def counts(g):
    even = sum(1 for p in g.parities if p == EVEN)
    return even, len(g.roots) - even


@pytest.mark.parametrize("m,n", [(1, 1), (2, 1), (1, 3), (2, 2), (3, 2), (4, 4)])
def test_gl_root_counts(m, n):
    assert counts(build_family(f"gl({m}|{n})")) == gl_root_counts(m, n)


@pytest.mark.parametrize("M,n", [(3, 1), (5, 2), (4, 1), (6, 2), (2, 2), (1, 2), (8, 1)])
def test_osp_root_counts(M, n):
    assert counts(build_family(f"osp({M}|{2 * n})")) == osp_root_counts(M, n)


def test_exceptional_counts():
    assert counts(build_family("D(2,1;l=3)")) == (6, 8)
    assert counts(build_family("AB(1,3)")) == (20, 16)
    assert counts(build_family("G(1,2)")) == (14, 14)


@pytest.mark.parametrize("text", ["D(2,1;l=0)", "D(2,1;l=-1)", "B(0,1)", "A(1,1)", "osp(3|3)",
                                  "E(8)", "gl(1|0)", "C(1,2)"])
def test_invalid_families(text):
    with pytest.raises(FamilyError):
        parse_family(text)


def test_aliases_parse_to_same_family():
    assert parse_family("F(1|3)") == parse_family("AB(1,3)")
    assert parse_family("G(1|2)") == parse_family("G(1,2)")
    assert parse_family("D(1,2;3)") == parse_family("D(2,1;l=3)")


@pytest.mark.parametrize("fam,types", [
    ("gl(3|2)", ["A1", "A2"]), ("B(2,1)", ["B2", "BC1"]), ("D(2,1;l=2)", ["A1", "A1", "A1"]),
    ("AB(1,3)", ["A1", "B3"]), ("G(1,2)", ["BC1", "G2"]), ("C(0,2)", ["C2"])])
def test_component_types(fam, types):
    got = sorted(map(normalize_type, component_types(build_family(fam))))
    assert got == sorted(map(normalize_type, types))


@pytest.mark.parametrize("fam", family_instances("all", 2))
def test_selftest_passes(fam):
    rep = catalog_selftest(fam)
    assert rep.passed, rep.entries


def test_d21_norm_pattern_coincides_at_lambda_one():
    rep = catalog_selftest("D(2,1;l=1)")
    assert rep.notes["coincident"]
    rep = catalog_selftest("D(2,1;l=3)")
    assert rep.notes["component_norm_pattern"] == [1, 3, -4]


def test_family_templates():
    assert family_instances("B(m,n)", 2) == ["B(1,1)", "B(1,2)", "B(2,1)", "B(2,2)"]
    assert "A(1,1)" not in family_instances("A(m,n)", 2)
    assert len(family_instances("D(2,1;l)", 3)) == 5


def test_a_nn_is_quotient():
    # on gl(n|n) the span of the roots carries a degenerate form; A(n-1,n-1) divides it out
    assert build_family("gl(3|3)").form.is_degenerate()
    g = build_family("A(2,2)")
    assert g.dimension == 4 and not g.form.is_degenerate()
