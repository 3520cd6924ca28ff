"""Restricted roots of an involution, positive systems and Satake diagrams."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

import numpy as np
from scipy.optimize import linprog

from . import exact
from .autofix import RootSystemAutomorphism, fixed_roots
from .exact import (ZERO, SymmetricForm, add, dot, fmt, mat_vec, neg, scale, span_rank, sub)
from .grrs import EVEN, ODD, Grrs, decompose_real, orbit, reflection_image


class NotInvolution(ValueError):
    pass


class NotIwasawaSystem(ValueError):
    pass


class AutobijectionFailure(RuntimeError):
    """The simple-root autobijection could not be formed.  Signals a bug."""


# -- restriction ---------------------------------------------------------------

@dataclass(frozen=True)
class RestrictedRoot:
    coords: tuple
    vector: tuple
    preimages: tuple
    dim: int
    sdim: int
    real: bool


@dataclass(eq=False)
class RestrictedRootSystem:
    grrs: Grrs
    theta: RootSystemAutomorphism
    basis: tuple
    form: SymmetricForm
    entries: dict

    @property
    def roots(self) -> list:
        return sorted(self.entries)

    @property
    def real(self) -> list:
        return [c for c in self.roots if self.entries[c].real]

    @property
    def imaginary(self) -> list:
        return [c for c in self.roots if not self.entries[c].real]

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def __contains__(self, c):
        return tuple(c) in self.entries

    def to_v(self, c) -> tuple:
        """The restricted root as a vector in V (inside the (-1)-eigenspace)."""
        out = exact.zero_vector(self.grrs.dimension)
        for x, b in zip(c, self.basis):
            out = add(out, scale(x, b))
        return out

    def label(self, c) -> str:
        return self.grrs.label(self.to_v(c))

    def present(self, c) -> tuple:
        return self.grrs.present(self.to_v(c))

    @cached_property
    def decomposition(self):
        return decompose_real(self.form, self.real)

    def mirrors(self) -> list:
        return [c for c in self.real if c > neg(c)]

    def weyl_orbit(self, c) -> frozenset:
        return orbit(self.form, self.mirrors(), c)

    def to_json(self) -> dict:
        return {
            "restricted_roots": [
                {"coords": [fmt(x) for x in c], "label": self.label(c),
                 "dim": e.dim, "sdim": e.sdim, "real": e.real,
                 "preimages": [self.grrs.label(self.grrs.roots[i]) for i in e.preimages]}
                for c, e in sorted(self.entries.items())],
            "form": [[fmt(x) for x in row] for row in self.form.gram],
            "basis": [self.grrs.label(b) for b in self.basis],
        }


def restricted_vector(theta: RootSystemAutomorphism, v) -> tuple:
    """``(v - theta v) / 2``."""
    return scale(Fraction(1, 2), sub(v, mat_vec(theta.matrix, v)))


def restrict(g: Grrs, theta: RootSystemAutomorphism) -> RestrictedRootSystem:
    """Group the roots of ``g`` by their restriction to the (-1)-eigenspace of theta."""
    n = g.dimension
    M = theta.matrix
    if exact.mat_mul(M, M) != exact.identity(n):
        raise NotInvolution("theta does not square to the identity")
    half = [restricted_vector(theta, exact.unit_vector(n, j)) for j in range(n)]
    basis = tuple(half[i] for i in exact.independent_subset(half))
    if basis:
        b = exact.from_columns(basis)
        gram = exact.mat_mul(exact.transpose(b), exact.mat_mul(g.form.gram, b))
    else:
        gram = ()
    # a zero a* keeps a 1x1 placeholder form; it has no roots to pair
    form = SymmetricForm(gram) if basis else SymmetricForm(((ZERO,),))
    groups: dict = {}
    vectors = {}
    for i, r in enumerate(g.roots):
        rv = restricted_vector(theta, r)
        if exact.is_zero(rv):
            continue
        c = exact.coordinates(basis, rv)
        groups.setdefault(c, []).append(i)
        vectors[c] = rv
    entries = {}
    for c, pre in groups.items():
        odd = sum(1 for i in pre if g.parities[i] == ODD)
        entries[c] = RestrictedRoot(c, vectors[c], tuple(pre), len(pre), len(pre) - 2 * odd,
                                    any(g.norms[i] for i in pre))
    return RestrictedRootSystem(g, theta, basis, form, entries)


def restricted_checks(rrs: RestrictedRootSystem) -> dict:
    """Structural properties expected of a restricted root system, one flag each."""
    g, theta = rrs.grrs, rrs.theta
    R = set(rrs.roots)
    real, imag = rrs.real, rrs.imaginary
    F = rrs.form
    out = {}
    out["span"] = span_rank(rrs.roots) == rrs.dimension if R else rrs.dimension == 0
    out["nondegenerate"] = (not F.is_degenerate()) if not g.form.is_degenerate() else True

    ok3 = True
    for a in real:
        na = F(a, a)
        if not na:
            ok3 = False
            continue
        for b in rrs.roots:
            k = 2 * F(a, b) / na
            if k.denominator != 1 or sub(b, scale(k, a)) not in R:
                ok3 = False
    out["real_reflections"] = ok3

    ok4 = True
    for a in imag:
        for b in rrs.roots:
            if b in (a, neg(a)) or not F(a, b):
                continue
            if add(b, a) not in R and sub(b, a) not in R:
                ok4 = False
    out["imaginary_neighbours"] = ok4
    out["negation"] = all(neg(c) in R for c in R)

    realset = set(real)
    ok_rs = True
    for a in real:
        na = F(a, a)
        for b in real:
            if not na:
                ok_rs = False
                break
            k = 2 * F(a, b) / na
            if k.denominator != 1 or sub(b, scale(k, a)) not in realset:
                ok_rs = False
    out["real_root_system"] = ok_rs
    imset = set(imag)
    out["imaginary_weyl_stable"] = all(
        reflection_image(F, a, b) in imset for a in real if F(a, a) for b in imag)
    out["small_orbits"] = small_orbit_check(rrs)

    out["no_odd_negation"] = all(
        theta.perm[i] != g.index[neg(g.roots[i])] for i in g.odd)
    even_ok = True
    for i, r in enumerate(g.roots):
        if g.parities[i] == EVEN and add(r, mat_vec(theta.matrix, r)) in g.index:
            even_ok = False
    out["even_roots_nice"] = even_ok
    out["odd_preimages_even"] = all(
        sum(1 for i in e.preimages if g.parities[i] == ODD) % 2 == 0
        for e in rrs.entries.values())
    return out


def small_orbit_check(rrs: RestrictedRootSystem) -> bool:
    """Nonzero projections of imaginary restricted roots form small Weyl orbits."""
    d = rrs.decomposition
    F = rrs.form
    mirrors = rrs.mirrors()
    for i in range(1, d.k + 1):
        comp = {rrs.real[j] for j in d.components[i - 1]}
        pts = {d.project(i, c) for c in rrs.imaginary}
        pts.discard(exact.zero_vector(rrs.dimension))
        seen = set()
        for p in sorted(pts):
            if p in seen:
                continue
            X = orbit(F, mirrors, p)
            seen |= X
            for x in X:
                for y in X:
                    if x != y and x != neg(y) and sub(x, y) not in comp:
                        return False
    return True


# -- positive systems ------------------------------------------------------------

@dataclass
class PositiveSystem:
    """Sign pattern of a rational functional ``phi(v) = c . (T v)`` on a root list."""

    functional: tuple
    transform: tuple
    roots: tuple
    positives: tuple
    simple: tuple = field(default=())

    def value(self, v) -> Fraction:
        return dot(self.functional, mat_vec(self.transform, v))

    def is_positive(self, v) -> bool:
        return self.value(v) > 0


def simple_roots(positives) -> tuple:
    """Positive roots that are not a sum of two positive roots."""
    pos = set(positives)
    sums = {add(a, b) for a in pos for b in pos}
    return tuple(sorted(p for p in pos if p not in sums))


def _lex_functional(values):
    """Rational weights realising the lexicographic sign of each value tuple."""
    k = len(values[0]) if values else 0
    big = ONE = Fraction(1)
    small = None
    for vals in values:
        first = next((abs(x) for x in vals if x), None)
        if first is None:
            raise ValueError("a root is killed by every functional")
        total = sum(abs(x) for x in vals)
        big = max(big, total)
        small = first if small is None else min(small, first)
    N = (big / small).__ceil__() + 1 if values else 2
    return tuple(Fraction(1, N ** j) for j in range(k)), ONE


def positive_system(roots, transform=None, seed=None) -> PositiveSystem:
    """Deterministic positive system on ``roots``.

    ``transform`` maps root vectors to named coordinates (identity by default);
    ``seed`` is an optional list of coordinate functionals consulted before the
    coordinate order itself.
    """
    roots = tuple(sorted({exact.vector(r) for r in roots}))
    if not roots:
        return PositiveSystem((), transform or (), (), (), ())
    n = len(roots[0])
    T = exact.matrix(transform) if transform is not None else exact.identity(n)
    k = len(T)
    funcs = [exact.vector(f) for f in (seed or [])] + [exact.unit_vector(k, j) for j in range(k)]
    images = [mat_vec(T, r) for r in roots]
    vals = [tuple(dot(f, x) for f in funcs) for x in images]
    weights, _ = _lex_functional(vals)
    c = exact.zero_vector(k)
    for w, f in zip(weights, funcs):
        c = add(c, scale(w, f))
    return _from_functional(roots, T, c)


def _from_functional(roots, T, c) -> PositiveSystem:
    pos = []
    for r in roots:
        v = dot(c, mat_vec(T, r))
        if not v:
            raise ValueError("functional vanishes on a root")
        if v > 0:
            pos.append(r)
    pos = tuple(pos)
    return PositiveSystem(tuple(c), T, roots, pos, simple_roots(pos))


def functional_for(positives, negatives, dim: int):
    """A rational functional positive on ``positives``, or None if none exists.

    A linear program proposes a point; its rational rounding is then checked
    exactly, so a returned functional is always a certificate.
    """
    rows = [list(map(float, p)) for p in positives] + [[-float(x) for x in q] for q in negatives]
    if not rows:
        return exact.zero_vector(dim)
    A = -np.array(rows)
    b = -np.ones(len(rows))
    res = linprog(np.zeros(dim), A_ub=A, b_ub=b, bounds=[(None, None)] * dim, method="highs")
    if res.status != 0:
        return None
    for denom in (1, 2, 6, 12, 60, 840, 10 ** 6):
        c = tuple(Fraction(x).limit_denominator(denom) for x in res.x)
        if all(dot(c, p) > 0 for p in positives) and all(dot(c, q) < 0 for q in negatives):
            return c
    return None


def enumerate_positive_systems(roots) -> list:
    """All positive systems of a finite vector configuration, as frozensets.

    Breadth-first walk through chambers: neighbours flip the line of one
    simple root, kept when an exactly-verified functional exists.
    """
    roots = tuple(sorted({exact.vector(r) for r in roots}))
    if not roots:
        return [frozenset()]
    dim = len(roots[0])
    start = frozenset(positive_system(roots).positives)
    seen = {start}
    queue = deque([start])
    while queue:
        P = queue.popleft()
        for s in simple_roots(P):
            line = {r for r in roots if span_rank([r, s]) == 1}
            Q = frozenset((P - line) | {neg(r) for r in line & P})
            if Q in seen:
                continue
            negs = [r for r in roots if r not in Q]
            if functional_for(sorted(Q), negs, dim) is not None:
                seen.add(Q)
                queue.append(Q)
    return sorted(seen, key=lambda p: sorted(p))


# -- Iwasawa positive systems ------------------------------------------------------

def default_restricted_system(rrs: RestrictedRootSystem) -> PositiveSystem:
    """Lexicographic system on restricted roots, read in named coordinates."""
    g = rrs.grrs
    lift = g.presentation.lift if g.presentation else exact.identity(g.dimension)
    cols = [mat_vec(lift, b) for b in rrs.basis]
    T = exact.from_columns(cols) if cols else ()
    return positive_system(rrs.roots, T if cols else None)


def default_fixed_system(g: Grrs, theta: RootSystemAutomorphism) -> PositiveSystem:
    S = [g.roots[i] for i in fixed_roots(theta)]
    lift = g.presentation.lift if g.presentation else exact.identity(g.dimension)
    return positive_system(S, lift)


def iwasawa_positive_system(g: Grrs, theta: RootSystemAutomorphism,
                            rrs: RestrictedRootSystem | None = None,
                            pos_bar: PositiveSystem | None = None,
                            pos_s: PositiveSystem | None = None) -> PositiveSystem:
    """Positive system of R that refines ``pos_bar`` on R-bar and agrees with ``pos_s`` on S.

    Over Q the eigenspaces of theta split V, so ``phi = K * phi_bar(x_bar) +
    psi(x_plus)`` with ``K`` large enough is an explicit extension.
    """
    rrs = rrs or restrict(g, theta)
    pos_bar = pos_bar or default_restricted_system(rrs)
    pos_s = pos_s or default_fixed_system(g, theta)
    S = set(fixed_roots(theta))
    n = g.dimension
    M = theta.matrix

    def plus(v):
        return scale(Fraction(1, 2), add(v, mat_vec(M, v)))

    def bar(v):
        return pos_bar.value(exact.coordinates(rrs.basis, restricted_vector(theta, v)))

    def psi(v):
        return pos_s.value(plus(v)) if pos_s.roots else ZERO

    ratio = Fraction(0)
    for i, r in enumerate(g.roots):
        if i in S:
            continue
        ratio = max(ratio, abs(psi(r)) / abs(bar(r)))
    K = (ratio.__ceil__()) + 1
    # phi as a covector on V
    cov = []
    for j in range(n):
        e = exact.unit_vector(n, j)
        cov.append(K * bar(e) + psi(e))
    c = tuple(cov)
    return _from_functional(g.roots, exact.identity(n), c)


def is_iwasawa_system(g: Grrs, theta: RootSystemAutomorphism, positives,
                      rrs: RestrictedRootSystem | None = None,
                      bar_systems=None, s_systems=None) -> bool:
    """Signs constant on restriction fibres, inducing positive systems of R-bar and S."""
    rrs = rrs or restrict(g, theta)
    P = set(positives)
    induced = set()
    for c, e in rrs.entries.items():
        signs = {g.roots[i] in P for i in e.preimages}
        if len(signs) != 1:
            return False
        if signs.pop():
            induced.add(c)
    bar_systems = bar_systems if bar_systems is not None else enumerate_positive_systems(rrs.roots)
    if frozenset(induced) not in set(bar_systems):
        return False
    S = [g.roots[i] for i in fixed_roots(theta)]
    s_systems = s_systems if s_systems is not None else enumerate_positive_systems(S)
    return frozenset(r for r in S if r in P) in set(s_systems)


def count_iwasawa_systems(g: Grrs, theta: RootSystemAutomorphism) -> dict:
    """Exhaustive chamber count on R, R-bar and S."""
    rrs = restrict(g, theta)
    bar = enumerate_positive_systems(rrs.roots)
    S = [g.roots[i] for i in fixed_roots(theta)]
    ss = enumerate_positive_systems(S)
    allp = enumerate_positive_systems(g.roots)
    iw = [P for P in allp if is_iwasawa_system(g, theta, P, rrs, bar, ss)]
    return {"R": len(allp), "R_bar": len(bar), "S": len(ss), "iwasawa": len(iw)}


# -- Satake diagrams --------------------------------------------------------------

ISOTROPIC = "isotropic"
NONISOTROPIC_ODD = "nonisotropic-odd"


@dataclass
class SatakeNode:
    root: tuple
    label: str
    kind: str
    fixed: bool


@dataclass
class SatakeDiagram:
    nodes: list
    arrows: list
    partner: dict
    d: dict
    edges: list

    def to_json(self) -> dict:
        return {
            "nodes": [{"root": n.label, "kind": n.kind, "fixed": n.fixed} for n in self.nodes],
            "arrows": [[self.nodes[a].label, self.nodes[b].label] for a, b in self.arrows],
            "edges": [[self.nodes[a].label, self.nodes[b].label] for a, b in self.edges],
            "d": {self.nodes[a].label: {self.nodes[k].label: fmt(v) for k, v in dd.items()}
                  for a, dd in self.d.items()},
        }

    def to_text(self) -> str:
        sym = {EVEN: "o", ISOTROPIC: "x", NONISOTROPIC_ODD: "*"}
        parts = []
        for n in self.nodes:
            mark = "_" + sym[n.kind] if n.fixed else sym[n.kind]
            parts.append(f"{mark}[{n.label}]")
        lines = [" - ".join(parts)]
        lines.append("fixed: " + (", ".join(n.label for n in self.nodes if n.fixed) or "none"))
        for a, b in self.arrows:
            lines.append(f"arrow: {self.nodes[a].label} <-> {self.nodes[b].label}")
        return "\n".join(lines)

    def to_dot(self) -> str:
        out = ["graph satake {", "  rankdir=LR;", "  node [fixedsize=true, width=0.35];"]
        for i, n in enumerate(self.nodes):
            attrs = {EVEN: 'shape=circle, label=""',
                     ISOTROPIC: 'shape=circle, label="X"',
                     NONISOTROPIC_ODD: 'shape=circle, style=filled, fillcolor=black, label=""'}[n.kind]
            xl = f"<<O>{n.label}</O>>" if n.fixed else f'"{n.label}"'
            extra = ", fixed=true, overline=dashed" if n.fixed else ""
            out.append(f"  n{i} [{attrs}, xlabel={xl}, kind=\"{n.kind}\"{extra}];")
        for a, b in self.edges:
            out.append(f"  n{a} -- n{b};")
        for a, b in self.arrows:
            out.append(f"  n{a} -- n{b} [dir=both, style=dashed, constraint=false];")
        out.append("}")
        return "\n".join(out)


def _node_kind(g: Grrs, r) -> str:
    if not g.norm(r):
        return ISOTROPIC
    if scale(2, r) in g.index:
        return NONISOTROPIC_ODD
    return EVEN


def _order_simples(g: Grrs, simples) -> list:
    """Walk the Dynkin graph from an end node so chains print in order."""
    simples = list(simples)
    adj = {s: [t for t in simples if t != s and g.pair(s, t)] for s in simples}
    order = []
    remaining = sorted(simples, key=lambda s: (len(adj[s]), s), reverse=False)
    while remaining:
        start = min(remaining, key=lambda s: (len([t for t in adj[s] if t in remaining]) > 1,
                                              tuple(-x for x in g.present(s))))
        stack = [start]
        while stack:
            s = stack.pop()
            if s in order:
                continue
            order.append(s)
            remaining.remove(s)
            stack.extend(sorted((t for t in adj[s] if t not in order), reverse=True))
    return order


def satake_diagram(g: Grrs, theta: RootSystemAutomorphism,
                   pos: PositiveSystem | None = None) -> SatakeDiagram:
    """Nodes, fixed markers and the arrow autobijection for an Iwasawa positive system."""
    pos = pos or iwasawa_positive_system(g, theta)
    simples = _order_simples(g, pos.simple)
    if span_rank(simples) != len(simples):
        raise NotIwasawaSystem("simple roots are not linearly independent")
    M = theta.matrix
    fixed = [s for s in simples if mat_vec(M, s) == s]
    S = [g.roots[i] for i in fixed_roots(theta)]
    for r in S:
        co = exact.coordinates(fixed, r) if fixed else None
        if co is None or any(x.denominator != 1 for x in co):
            raise NotIwasawaSystem(f"{g.label(r)} is not generated by fixed simple roots")
    nonfixed = [s for s in simples if s not in fixed]
    partner, d = {}, {}
    for s in nonfixed:
        t = neg(mat_vec(M, s))
        co = exact.coordinates(simples, t)
        if co is None or any(x.denominator != 1 or x < 0 for x in co):
            raise NotIwasawaSystem(f"-theta({g.label(s)}) is not a nonnegative simple combination")
        hits = [(simples[k], x) for k, x in enumerate(co) if x and simples[k] not in fixed]
        if len(hits) != 1 or hits[0][1] != 1:
            raise AutobijectionFailure(f"-theta({g.label(s)}) has non-fixed part {hits}")
        partner[s] = hits[0][0]
        d[s] = {f: x for f, x in zip(simples, co) if f in fixed and x}
    for s in nonfixed:
        if partner[partner[s]] != s:
            raise AutobijectionFailure("the simple-root correspondence is not an involution")
    pos_index = {s: i for i, s in enumerate(simples)}
    nodes = [SatakeNode(s, g.label(s), _node_kind(g, s), s in fixed) for s in simples]
    arrows = sorted({tuple(sorted((pos_index[s], pos_index[t]))) for s, t in partner.items() if s != t})
    edges = [(i, j) for i in range(len(simples)) for j in range(i + 1, len(simples))
             if g.pair(simples[i], simples[j])]
    return SatakeDiagram(nodes, arrows,
                         {pos_index[s]: pos_index[t] for s, t in partner.items()},
                         {pos_index[s]: {pos_index[f]: x for f, x in dd.items()}
                          for s, dd in d.items()},
                         edges)
