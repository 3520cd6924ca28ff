"""Restrict gl(3|1) along the involution swapping e1 and e3, then draw its Satake diagram."""

from grrskit.pairs import pair_automorphism, pair_grrs, parse_pair
from grrskit.restrict import count_iwasawa_systems, restrict, restricted_checks, satake_diagram

d = parse_pair("gl(3|1):gl(1|0)xgl(2|1)")
g = pair_grrs(d)
theta = pair_automorphism(d, g)
rrs = restrict(g, theta)

print("restricted roots (label, dim, sdim):")
for c, e in sorted(rrs.entries.items()):
    print(f"  {rrs.label(c):14} {e.dim} {e.sdim:+d}")
print("all restricted checks hold:", all(restricted_checks(rrs).values()))

dia = satake_diagram(g, theta)
print("\n" + dia.to_text())
print("\nchamber counts:", count_iwasawa_systems(g, theta))
print("\n" + dia.to_dot())
