"""Decide g = k + a + n by exact rank on matrices, for theta and for delta*theta.

The periplectic involution is the case where neither works.
"""

from grrskit.pairs import parse_pair
from grrskit.superalg import build_algebra, build_involution, iwasawa_check
from grrskit.tables import expected_iwasawa

for text in ["gl(3|2):gl(1|2)xgl(2|0)", "gl(2|4):gl(0|1)xgl(2|3)", "gl(4|2):osp(4|2)",
             "osp(5|4):osp(1|2)xosp(4|2)", "osp(4|2):gl(2|1)", "gl(2|2):p(2)"]:
    d = parse_pair(text)
    alg = build_algebra(d.family if d.row != "p" else "gl(2|2)")
    rep = iwasawa_check(alg, build_involution(alg, d))
    print(f"{text:28} theta: {rep.iwasawa_theta!s:5}  delta*theta: {rep.iwasawa_delta_theta!s:5}"
          f"  table: {expected_iwasawa(d)!s:5}  c(a) = ({rep.dims['ca0']}|{rep.dims['ca1']})")
