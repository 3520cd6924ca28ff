"""Constructors for the irreducible GRRS families and the gl/osp presentations.

Family identifiers accepted by :func:`parse_family`::

    Atilde(n)  A(m,n)  B(m,n)  C(0,n)  D(m,n)  D(2,1;l=p/q)  AB(1,3)  G(1,2)
    gl(m|n)  osp(m|2n)  F(1|3)  G(1|2)  D(1,2;p/q)
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from . import exact
from .exact import ZERO, SymmetricForm, add, neg, scale, span_rank
from .grrs import (EVEN, ODD, Grrs, check_axioms, decompose_real, presentation_space,
                   weyl_orbit)


class FamilyError(ValueError):
    """Unknown family identifier or parameters outside the allowed range."""


@dataclass(frozen=True)
class FamilySpec:
    tag: str
    params: tuple = ()
    lam: Fraction | None = None

    def __str__(self):
        if self.tag == "D(2,1;l)":
            return f"D(2,1;l={exact.fmt(self.lam)})"
        if self.tag in ("gl", "osp"):
            a, b = self.params
            return f"{self.tag}({a}|{b})"
        if self.tag in ("AB(1,3)", "G(1,2)"):
            return self.tag
        return f"{self.tag}({','.join(map(str, self.params))})"


_NUM = r"\s*(\d+)\s*"


def parse_family(text: str) -> FamilySpec:
    """Parse a family identifier into a validated :class:`FamilySpec`."""
    s = text.strip().replace(" ", "")
    m = re.fullmatch(r"D\(2,1;(?:l|lambda|λ)=([+-]?\d+(?:/\d+)?)\)", s) or \
        re.fullmatch(r"D\(1,2;([+-]?\d+(?:/\d+)?)\)", s)
    if m:
        spec = FamilySpec("D(2,1;l)", (), Fraction(m.group(1)))
    elif s in ("AB(1,3)", "F(1|3)", "AB(1|3)"):
        spec = FamilySpec("AB(1,3)")
    elif s in ("G(1,2)", "G(1|2)", "G(3)"):
        spec = FamilySpec("G(1,2)")
    elif (m := re.fullmatch(r"Atilde\((\d+)\)", s)):
        spec = FamilySpec("Atilde", (int(m.group(1)),))
    elif (m := re.fullmatch(r"(A|B|C|D)\((\d+),(\d+)\)", s)):
        spec = FamilySpec(m.group(1), (int(m.group(2)), int(m.group(3))))
    elif (m := re.fullmatch(r"gl\((\d+)\|(\d+)\)", s)):
        spec = FamilySpec("gl", (int(m.group(1)), int(m.group(2))))
    elif (m := re.fullmatch(r"osp\((\d+)\|(\d+)\)", s)):
        spec = FamilySpec("osp", (int(m.group(1)), int(m.group(2))))
    else:
        raise FamilyError(f"unknown family {text!r}")
    validate(spec)
    return spec


def validate(spec: FamilySpec) -> None:
    t, p = spec.tag, spec.params
    if t == "D(2,1;l)":
        if spec.lam in (0, -1):
            raise FamilyError("D(2,1;l) needs l not in {0, -1}")
    elif t == "Atilde":
        if p[0] < 1:
            raise FamilyError("Atilde(n) needs n >= 1")
    elif t == "A":
        m, n = p
        if m == n and n < 2:
            raise FamilyError("A(n,n) needs n >= 2 (use Atilde for n = 1)")
    elif t == "B":
        if p[0] < 1 or p[1] < 1:
            raise FamilyError("B(m,n) needs m, n >= 1")
    elif t == "C":
        if p[0] != 0 or p[1] < 2:
            raise FamilyError("C(0,n) needs n >= 2")
    elif t == "D":
        if p[0] < 2 or p[1] < 1:
            raise FamilyError("D(m,n) needs m >= 2 and n >= 1")
    elif t == "gl":
        if sum(p) < 2:
            raise FamilyError("gl(m|n) needs m + n >= 2")
    elif t == "osp":
        m, n2 = p
        if n2 % 2:
            raise FamilyError("osp(m|2n) needs an even odd-part size")
        if n2 == 0 and m < 3:
            raise FamilyError("osp(m|0) needs m >= 3")
        if m + n2 == 0:
            raise FamilyError("empty algebra")


# -- presentations -----------------------------------------------------------

def gl_presentation(m: int, n: int):
    """Names, Gram matrix and roots with listed parities of gl(m|n)."""
    names = [f"e{i+1}" for i in range(m)] + [f"d{j+1}" for j in range(n)]
    N = m + n
    gram = [[ZERO] * N for _ in range(N)]
    for i in range(N):
        gram[i][i] = Fraction(1 if i < m else -1)
    unit = lambda i: exact.unit_vector(N, i)
    roots = {}
    for i in range(N):
        for j in range(N):
            if i != j:
                odd = (i < m) != (j < m)
                roots[exact.sub(unit(i), unit(j))] = ODD if odd else EVEN
    return names, gram, roots


def osp_presentation(M: int, n: int):
    """Names, Gram matrix and roots with listed parities of osp(M|2n)."""
    k = M // 2
    names = [f"e{i+1}" for i in range(k)] + [f"d{j+1}" for j in range(n)]
    N = k + n
    gram = [[ZERO] * N for _ in range(N)]
    for i in range(N):
        gram[i][i] = Fraction(1 if i < k else -1)
    unit = lambda i: exact.unit_vector(N, i)
    E = [unit(i) for i in range(k)]
    D = [unit(k + j) for j in range(n)]
    roots = {}

    def put(v, par):
        roots[v] = par
        roots[neg(v)] = par

    for i in range(k):
        for j in range(i + 1, k):
            put(add(E[i], E[j]), EVEN)
            put(exact.sub(E[i], E[j]), EVEN)
        if M % 2:
            put(E[i], EVEN)
    for i in range(n):
        for j in range(i + 1, n):
            put(add(D[i], D[j]), EVEN)
            put(exact.sub(D[i], D[j]), EVEN)
        put(scale(2, D[i]), EVEN)
        if M % 2:
            put(D[i], ODD)
    for i in range(k):
        for j in range(n):
            put(add(E[i], D[j]), ODD)
            put(exact.sub(E[i], D[j]), ODD)
    return names, gram, roots


def d21_presentation(lam: Fraction):
    names = ["e", "d", "g"]
    gram = [[1, 0, 0], [0, lam, 0], [0, 0, -lam - 1]]
    roots = {}
    for i in range(3):
        v = scale(2, exact.unit_vector(3, i))
        roots[v] = roots[neg(v)] = EVEN
    for a in (1, -1):
        for b in (1, -1):
            for c in (1, -1):
                roots[exact.vector((a, b, c))] = ODD
    return names, gram, roots


def f13_presentation():
    names = ["d", "e1", "e2", "e3"]
    gram = [[-3, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]
    roots = {}
    u = lambda i: exact.unit_vector(4, i)
    for v in (u(0), neg(u(0))):
        roots[v] = EVEN
    for i in range(1, 4):
        roots[u(i)] = roots[neg(u(i))] = EVEN
        for j in range(i + 1, 4):
            for a in (1, -1):
                for b in (1, -1):
                    roots[add(scale(a, u(i)), scale(b, u(j)))] = EVEN
    h = Fraction(1, 2)
    for s0 in (h, -h):
        for s1 in (h, -h):
            for s2 in (h, -h):
                for s3 in (h, -h):
                    roots[(s0, s1, s2, s3)] = ODD
    return names, gram, roots


def g12_presentation():
    """G(1|2) in coordinates (e1, e2, d) with e3 = -e1 - e2."""
    names = ["e1", "e2", "d"]
    gram = [[2, -1, 0], [-1, 2, 0], [0, 0, -2]]
    e = [exact.vector(v) for v in ((1, 0, 0), (0, 1, 0), (-1, -1, 0))]
    d = exact.vector((0, 0, 1))
    roots = {}
    for i in range(3):
        roots[e[i]] = roots[neg(e[i])] = EVEN
        for j in range(3):
            if i != j:
                roots[exact.sub(e[i], e[j])] = EVEN
    roots[scale(2, d)] = roots[scale(-2, d)] = EVEN
    roots[d] = roots[neg(d)] = ODD
    for i in range(3):
        for a in (1, -1):
            for b in (1, -1):
                roots[add(scale(a, d), scale(b, e[i]))] = ODD
    return names, gram, roots, {"e3": e[2]}


# -- building ----------------------------------------------------------------

def _build(names, gram, roots, name, meta, quotient=False, aliases=None) -> Grrs:
    form, vroots, pres = presentation_space(names, gram, list(roots), roots,
                                            quotient=quotient, aliases=aliases)
    return Grrs(form, vroots, name=name, presentation=pres, meta=meta)


def _gl_types(m, n):
    return [f"A{k-1}" for k in (m, n) if k >= 2]


def _osp_types(M, n):
    k = M // 2
    out = []
    if M % 2:
        if k >= 1:
            out.append(f"B{k}")
        if n >= 1:
            out.append(f"BC{n}")
    else:
        if k == 2:
            out += ["A1", "A1"]
        elif k >= 3:
            out.append(f"D{k}")
        if n >= 1:
            out.append(f"C{n}")
    return out


def build_family(spec: FamilySpec | str) -> Grrs:
    """Root system of a family with the standard normalization of the form."""
    if isinstance(spec, str):
        spec = parse_family(spec)
    else:
        validate(spec)
    t, p = spec.tag, spec.params
    name = str(spec)
    meta = {"spec": spec, "scale": Fraction(1)}
    if t in ("gl", "Atilde", "A"):
        if t == "gl":
            m, n = p
        elif t == "Atilde":
            m = n = p[0] + 1
        else:
            m, n = p[0] + 1, p[1] + 1
        quotient = t == "A" and m == n
        names, gram, roots = gl_presentation(m, n)
        meta["presentation_tag"] = ("gl", m, n)
        meta["expected_types"] = _gl_types(m, n)
        if m and n:
            meta["imaginary_reps"] = ["e1-d1", "d1-e1"]
            meta["v0_offsets"] = not quotient
        return _build(names, gram, roots, name, meta, quotient=quotient)
    if t in ("osp", "B", "C", "D"):
        if t == "osp":
            M, n = p[0], p[1] // 2
        elif t == "B":
            M, n = 2 * p[0] + 1, p[1]
        elif t == "C":
            M, n = 2, p[1]
        else:
            M, n = 2 * p[0], p[1]
        names, gram, roots = osp_presentation(M, n)
        meta["presentation_tag"] = ("osp", M, n)
        meta["expected_types"] = _osp_types(M, n)
        if M // 2 >= 1 and n >= 1:
            if M == 2:
                meta["imaginary_reps"] = ["e1+d1", "-e1+d1"]
                meta["v0_offsets"] = True
            else:
                meta["imaginary_reps"] = ["e1+d1"]
                meta["v0_offsets"] = False
        return _build(names, gram, roots, name, meta)
    if t == "D(2,1;l)":
        names, gram, roots = d21_presentation(spec.lam)
        meta.update(presentation_tag=("D21", spec.lam), expected_types=["A1", "A1", "A1"],
                    imaginary_reps=["e+d+g"], v0_offsets=False)
        return _build(names, gram, roots, name, meta)
    if t == "AB(1,3)":
        names, gram, roots = f13_presentation()
        meta.update(presentation_tag=("F13",), expected_types=["A1", "B3"],
                    imaginary_reps=["1/2(d+e1+e2+e3)"], v0_offsets=False)
        return _build(names, gram, roots, name, meta)
    if t == "G(1,2)":
        names, gram, roots, aliases = g12_presentation()
        meta.update(presentation_tag=("G12",), expected_types=["BC1", "G2"],
                    imaginary_reps=["d+e1"], v0_offsets=False)
        return _build(names, gram, roots, name, meta, aliases=aliases)
    raise FamilyError(f"cannot build {spec}")


# -- classification of real components ------------------------------------------

_ALIASES = {"B1": "A1", "C1": "A1", "C2": "B2", "D3": "A3"}


def normalize_type(name: str) -> str:
    return _ALIASES.get(name, name)


def root_system_type(form: SymmetricForm, vectors) -> str:
    """Cartan type of an irreducible (possibly non-reduced) real root system."""
    vs = [tuple(v) for v in vectors]
    vset = set(vs)
    r = span_rank(vs)
    N = len(vs)
    if any(scale(2, v) in vset for v in vs):
        return f"BC{r}"
    norms = Counter(abs(form(v, v)) for v in vs)
    if len(norms) == 1:
        if N == r * (r + 1):
            return f"A{r}"
        if N == 2 * r * (r - 1):
            return f"D{r}"
        return {72: "E6", 126: "E7", 240: "E8"}.get(N, f"?{r}:{N}")
    if r == 2 and N == 12:
        return "G2"
    if r == 4 and N == 48:
        return "F4"
    if N == 2 * r * r:
        if r == 2:
            return "B2"
        short = norms[min(norms)]
        return f"B{r}" if short == 2 * r else f"C{r}"
    return f"?{r}:{N}"


def component_types(g: Grrs) -> list[str]:
    d = g.decomposition
    return [root_system_type(g.form, d.component_roots(i)) for i in range(1, d.k + 1)]


# -- self test ---------------------------------------------------------------

@dataclass
class SelftestReport:
    family: str
    entries: dict = field(default_factory=dict)
    notes: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.entries.values())


def catalog_selftest(spec: FamilySpec | str) -> SelftestReport:
    """Axioms, component types, imaginary orbit structure and listed parities."""
    g = build_family(spec)
    rep = SelftestReport(g.name)
    rep.entries["axioms"] = check_axioms(g).passed

    types = component_types(g)
    expected = g.meta.get("expected_types", [])
    rep.notes["component_types"] = types
    rep.entries["component_types"] = (sorted(map(normalize_type, types))
                                      == sorted(map(normalize_type, expected)))

    d = g.decomposition
    rep.notes["dim_V0"], rep.notes["k"] = d.dim_v0, d.k
    reps = [g.vec(x) for x in g.meta.get("imaginary_reps", [])]
    imag = {g.roots[i] for i in g.imaginary}
    orbits = [weyl_orbit(g, r) for r in reps]
    union = set().union(*orbits) if orbits else set()
    disjoint = sum(len(o) for o in orbits) == len(union)
    rep.entries["imaginary_orbits"] = union == imag and disjoint
    rep.notes["imaginary_orbit_sizes"] = [len(o) for o in orbits]
    if reps:
        offsets = [d.project(0, r) for r in reps]
        if g.meta.get("v0_offsets"):
            ok = (d.dim_v0 == 1 and len(reps) == 2 and any(offsets[0])
                  and offsets[1] == neg(offsets[0]))
        else:
            ok = all(not any(o) for o in offsets)
        rep.entries["v0_offsets"] = ok

    listed = g.presentation.parities if g.presentation else {}
    rep.entries["parities"] = all(listed.get(r) == p for r, p in zip(g.roots, g.parities))

    ok_bounds = (d.dim_v0, d.k) in {(1, 0), (1, 1), (1, 2), (0, 1), (0, 2), (0, 3)}
    rep.entries["component_bounds"] = ok_bounds or not g.imaginary

    if g.meta["spec"].tag == "D(2,1;l)":
        vals = sorted({g.norm(r) for r in g.roots if g.norm(r)}, key=lambda x: (x < 0, abs(x)))
        base = g.norm(g.vec("2e"))
        pattern = [g.norm(g.vec(x)) / base for x in ("2e", "2d", "2g")]
        rep.notes["component_norm_pattern"] = pattern
        rep.notes["coincident"] = len(set(pattern)) < 3
    return rep


# -- sweeps and mutations ----------------------------------------------------

SWEEP_LAMBDAS = tuple(Fraction(x) for x in ("1", "2", "3", "-2", "-1/2"))


def family_instances(template: str, max_rank: int) -> list[str]:
    """Concrete identifiers for a template such as ``B(m,n)`` or ``osp(m|2n)``.

    Parameters named ``m`` and ``n`` range over ``0..max_rank``; instances
    outside the allowed range are skipped.  ``D(2,1;l)`` sweeps the standard
    lambda values and ``all`` expands every template.
    """
    s = template.strip().replace(" ", "")
    if s == "all":
        out = []
        for t in ("A(m,n)", "B(m,n)", "C(0,n)", "D(m,n)", "Atilde(n)", "D(2,1;l)",
                  "AB(1,3)", "G(1,2)"):
            out += family_instances(t, max_rank)
        return out
    if s in ("D(2,1;l)", "D(2,1;lambda)", "D(2,1;λ)"):
        return [str(FamilySpec("D(2,1;l)", (), lam)) for lam in SWEEP_LAMBDAS]
    if not re.search(r"[mn]", s.split("(", 1)[-1]):
        return [str(parse_family(s))]
    out = []
    rng = range(max_rank + 1)
    for m in rng:
        for n in rng:
            text = re.sub(r"(?<=[(,|])(\d*)([mn])", lambda k: str(
                (int(k.group(1)) if k.group(1) else 1) * (m if k.group(2) == "m" else n)), s)
            try:
                spec = parse_family(text)
            except FamilyError:
                continue
            if str(spec) not in out:
                out.append(str(spec))
    return out


def drop_root(g: Grrs, index: int) -> Grrs:
    """``g`` with one root removed; used as a negative control for the axioms."""
    roots = [r for i, r in enumerate(g.roots) if i != index]
    return Grrs(g.form, roots, f"{g.name}-drop{index}", g.presentation, g.meta)
