"""Independent reference computations shared by the test modules."""

from fractions import Fraction

import sympy

from grrskit.pairs import pair_automorphism, pair_grrs, parse_pair
from grrskit.restrict import restrict
from grrskit.superalg import (a_weight, build_algebra, build_involution, cartan_and_centralizer,
                              restricted_weight_data)


def sympy_rank(rows) -> int:
    if not rows:
        return 0
    return sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in r]
                         for r in rows]).rank()


def gl_root_counts(m, n):
    """(even, odd) root counts of gl(m|n)."""
    return m * (m - 1) + n * (n - 1), 2 * m * n


def osp_root_counts(M, n):
    """(even, odd) root counts of osp(M|2n) from the so(M) + sp(2n) root data."""
    k = M // 2
    so = 2 * k * k if M % 2 else 2 * k * (k - 1)
    sp = 2 * n * n
    odd = 4 * k * n + (2 * n if M % 2 else 0)
    return so + sp, odd


def gl_dim(m, n):
    return (m + n) ** 2


def osp_dim(M, n2):
    """(even, odd) dimensions of osp(M|n2)."""
    return M * (M - 1) // 2 + n2 * (n2 + 1) // 2, M * n2


def restricted_data_pair(text):
    """(matrix-level, root-level) maps a-weight -> (dim, sdim) for a gl/osp pair."""
    d = parse_pair(text)
    g = pair_grrs(d)
    rrs = restrict(g, pair_automorphism(d, g))
    alg = build_algebra(d.family)
    inv = build_involution(alg, d)
    a = cartan_and_centralizer(alg, inv).a
    matrix = restricted_weight_data(alg, a)
    combinatorial = {}
    for c, e in rrs.entries.items():
        keys = {a_weight(alg, g.present(g.roots[i]), a) for i in e.preimages}
        if len(keys) != 1:
            return matrix, None
        combinatorial[keys.pop()] = (e.dim, e.sdim)
    return matrix, combinatorial


def frac(x) -> Fraction:
    return Fraction(x)
