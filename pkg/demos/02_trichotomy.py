"""Fixed roots of automorphisms: the set T is empty, an isotropic pair, or irreducible with odd roots."""

from collections import Counter

from grrskit.autofix import analyze, enumerate_test_automorphisms, reflection_automorphism
from grrskit.catalog import build_family

g = build_family("A(0,2)")
an = analyze(reflection_automorphism(g, "d1-d2"))
print("A(0,2), reflection in d1-d2:", an.tag, [g.label(g.roots[i]) for i in an.T])

for fam in ["B(1,1)", "gl(3|1)", "D(2,1;l=2)", "AB(1,3)"]:
    g = build_family(fam)
    tags = Counter()
    failures = 0
    for a in enumerate_test_automorphisms(g, budget=3):
        res = analyze(a)
        tags[res.tag] += 1
        failures += not res.passed
    print(f"{fam:12} {dict(tags)}  failed checks: {failures}")
