"""Build a few catalog root systems and check the GRRS axioms on them.

A deleted root is a cheap negative control: the axiom report should fail and
name a witness.
"""

from grrskit.catalog import build_family, catalog_selftest, component_types, drop_root
from grrskit.grrs import check_axioms, weyl_orbit

for fam in ["gl(2|1)", "B(1,2)", "D(2,1;l=3)", "AB(1,3)", "G(1,2)"]:
    g = build_family(fam)
    rep = check_axioms(g)
    st = catalog_selftest(fam)
    print(f"{fam:12} |R| = {len(g.roots):3}  real components {component_types(g)}"
          f"  axioms {'ok' if rep.passed else rep.failed()}  selftest {'ok' if st.passed else st.entries}")

g = build_family("gl(2|2)")
orb = weyl_orbit(g, "e1-d1")
print("\nWeyl orbit of e1-d1 in gl(2|2):", sorted(g.label(v) for v in orb))

g = build_family("gl(2|1)")
broken = drop_root(g, 0)
rep = check_axioms(broken)
k = rep.failed()[0]
alpha, beta = rep[k].witness
print(f"\nwithout {g.label(g.roots[0])}: axioms {rep.failed()} fail;"
      f" reflecting {g.label(beta)} in {g.label(alpha)} leaves the root set")
