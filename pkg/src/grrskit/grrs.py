"""Finite generalized reflection root systems.

A :class:`Grrs` is a finite set of nonzero vectors in a space ``V`` with a
(possibly degenerate) symmetric form.  Roots are kept in coordinates of
``V`` itself; an optional :class:`Presentation` remembers the familiar
epsilon/delta coordinates a family was written in, so that vectors can be
entered and printed as ``"e1-d2"``.
"""

from __future__ import annotations

import json
import re
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

import networkx as nx

from . import exact
from .exact import (ZERO, SymmetricForm, Vector, add, dot, fmt, independent_subset,
                    is_zero, mat_vec, neg, orthogonal_complement, scale, span_rank, sub)

EVEN = "even"
ODD = "odd"


class RootError(ValueError):
    pass


class AmbiguousReflection(RootError):
    """Both ``beta + alpha`` and ``beta - alpha`` are roots."""


class NotClosed(RootError):
    """Neither ``beta + alpha`` nor ``beta - alpha`` is a root."""


# -- presentations -------------------------------------------------------------

_TERM = re.compile(r"([+-]?)\s*(\d+(?:/\d+)?)?\s*\*?\s*([A-Za-z]\w*)")


@dataclass(frozen=True, eq=False)
class Presentation:
    """Named coordinates a root system was written in.

    ``lift`` maps V-coordinates to presentation coordinates and ``lower``
    maps presentation coordinates (of vectors in the span of the roots) back
    to V-coordinates.
    """

    names: tuple
    gram: tuple
    lift: tuple
    lower: tuple
    parities: dict = field(default_factory=dict)
    aliases: dict = field(default_factory=dict)

    def parse(self, expr: str) -> Vector:
        """Presentation coordinates of a linear expression such as ``"1/2(e1+d2)"``."""
        expr = expr.replace(" ", "")
        m = re.fullmatch(r"([+-]?\d+(?:/\d+)?)\((.*)\)", expr)
        if m:
            return scale(Fraction(m.group(1)), self.parse(m.group(2)))
        out = [ZERO] * len(self.names)
        pos = 0
        for t in _TERM.finditer(expr):
            if t.start() != pos:
                raise ValueError(f"cannot parse {expr!r}")
            pos = t.end()
            sign = -1 if t.group(1) == "-" else 1
            coef = Fraction(t.group(2)) if t.group(2) else Fraction(1)
            name = t.group(3)
            if name in self.aliases:
                v = self.aliases[name]
            elif name in self.names:
                v = exact.unit_vector(len(self.names), self.names.index(name))
            else:
                raise ValueError(f"unknown coordinate {name!r}")
            out = list(add(out, scale(sign * coef, v)))
        if pos != len(expr) or not expr:
            raise ValueError(f"cannot parse {expr!r}")
        return tuple(out)

    def to_v(self, p: Sequence) -> Vector:
        return mat_vec(self.lower, p)

    def from_v(self, v: Sequence) -> Vector:
        return mat_vec(self.lift, v)

    def label(self, p: Sequence) -> str:
        parts = []
        for name, c in zip(self.names, p):
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            coef = "" if a == 1 else fmt(a)
            parts.append(f"{sign}{coef}{name}")
        if not parts:
            return "0"
        s = "".join(parts)
        return s[1:] if s.startswith("+") else s


def presentation_space(names: Sequence[str], gram, roots: Sequence[Sequence],
                       parities: dict | None = None, quotient: bool = False,
                       aliases: dict | None = None):
    """V-coordinates for a root list given in named coordinates.

    Without ``quotient`` the space is ``span(roots)``; coordinates are the
    pivot entries of the row-reduced span, so they stay readable.  With
    ``quotient`` the radical of the form on the span is divided out as well.
    Returns ``(form, roots_in_V, presentation)``.
    """
    names = tuple(names)
    n = len(names)
    gram = exact.matrix(gram)
    roots = [exact.vector(r) for r in roots]
    pform = SymmetricForm(gram)
    basis_rows, pivots = exact.rref(roots, n)
    d = len(basis_rows)
    if not quotient:
        if d == n:
            lift = lower = exact.identity(n)
        else:
            lift = exact.from_columns(basis_rows)
            lower = tuple(exact.unit_vector(n, p) for p in pivots)
    else:
        funcs = [pform.functional(b) for b in basis_rows]
        images = [tuple(dot(f, r) for f in funcs) for r in roots]
        img_rows, img_piv = exact.rref(images, d)
        lower = tuple(funcs[p] for p in img_piv)
        d = len(lower)
        vs = [mat_vec(lower, r) for r in roots]
        idx = independent_subset(vs)
        m = exact.from_columns([vs[i] for i in idx])
        p = exact.from_columns([roots[i] for i in idx])
        lift = exact.mat_mul(p, exact.inverse(m))
    gv = exact.mat_mul(exact.transpose(lift), exact.mat_mul(gram, lift))
    vroots = [mat_vec(lower, r) for r in roots]
    pres = Presentation(names, gram, lift, lower,
                        {mat_vec(lower, k): v for k, v in (parities or {}).items()},
                        {k: exact.vector(v) for k, v in (aliases or {}).items()})
    return SymmetricForm(gv), vroots, pres


# -- the root system -----------------------------------------------------------

class Grrs:
    """A finite set of roots in a formed space ``V``.

    Construction only enforces that roots are nonzero vectors of the right
    dimension; the remaining axioms are the business of :func:`check_axioms`.
    Roots are deduplicated and kept in lexicographic order.
    """

    def __init__(self, form: SymmetricForm, roots: Iterable[Sequence], name: str | None = None,
                 presentation: Presentation | None = None, meta: dict | None = None):
        self.form = form
        rs = sorted({exact.vector(r) for r in roots})
        if not rs:
            raise RootError("a root system needs at least one root")
        for r in rs:
            if len(r) != form.dimension:
                raise exact.DimensionError("root dimension does not match the form")
            if is_zero(r):
                raise RootError("0 is not allowed as a root")
        self.roots: tuple = tuple(rs)
        self.index = {r: i for i, r in enumerate(rs)}
        self.name = name or f"R{len(rs)}"
        self.presentation = presentation
        self.meta = dict(meta or {})

    def __repr__(self):
        return f"Grrs({self.name}, dim={self.dimension}, |R|={len(self.roots)})"

    def __len__(self):
        return len(self.roots)

    def __contains__(self, v):
        return tuple(v) in self.index

    @property
    def dimension(self) -> int:
        return self.form.dimension

    def pair(self, u, v) -> Fraction:
        return self.form(u, v)

    def norm(self, v) -> Fraction:
        return self.form(v, v)

    @cached_property
    def norms(self) -> tuple:
        return tuple(self.form(r, r) for r in self.roots)

    @cached_property
    def pairing(self) -> tuple:
        """Matrix of all root pairings ``(r_i, r_j)``."""
        g = self.form.gram
        covs = [mat_vec(g, r) for r in self.roots]
        return tuple(tuple(dot(c, s) for s in self.roots) for c in covs)

    @cached_property
    def real(self) -> tuple:
        return tuple(i for i, n in enumerate(self.norms) if n)

    @cached_property
    def imaginary(self) -> tuple:
        return tuple(i for i, n in enumerate(self.norms) if not n)

    @cached_property
    def parities(self) -> tuple:
        return tuple(ODD if (not n or scale(2, r) in self.index) else EVEN
                     for r, n in zip(self.roots, self.norms))

    @cached_property
    def odd(self) -> tuple:
        return tuple(i for i, p in enumerate(self.parities) if p == ODD)

    @cached_property
    def decomposition(self) -> "ComponentDecomposition":
        return decompose(self)

    # presentation helpers
    def vec(self, expr) -> Vector:
        """V-coordinates of a presentation expression or of a plain sequence."""
        if isinstance(expr, str):
            if self.presentation is None:
                raise ValueError("this root system has no named coordinates")
            return self.presentation.to_v(self.presentation.parse(expr))
        return exact.vector(expr)

    def present(self, v) -> Vector:
        return self.presentation.from_v(v) if self.presentation else tuple(v)

    def label(self, v) -> str:
        if self.presentation:
            return self.presentation.label(self.presentation.from_v(v))
        return "(" + ",".join(fmt(x) for x in v) + ")"

    def root_index(self, alpha) -> int:
        alpha = self.vec(alpha)
        try:
            return self.index[alpha]
        except KeyError:
            raise RootError(f"{self.label(alpha)} is not a root") from None

    def to_json(self) -> dict:
        return grrs_to_json(self)


# -- axioms --------------------------------------------------------------------

@dataclass
class AxiomResult:
    passed: bool
    witnesses: list = field(default_factory=list)

    @property
    def witness(self):
        return self.witnesses[0] if self.witnesses else None


@dataclass
class AxiomReport:
    axioms: dict

    @property
    def passed(self) -> bool:
        return all(a.passed for a in self.axioms.values())

    def failed(self) -> list[int]:
        return [k for k, a in sorted(self.axioms.items()) if not a.passed]

    def __getitem__(self, k) -> AxiomResult:
        return self.axioms[k]


def _integral(x: Fraction) -> bool:
    return x.denominator == 1


def isotropic_bijection_exists(g: Grrs, a: int) -> bool:
    """Whether some bijection ``R -> R`` fixes roots orthogonal to ``alpha``
    and moves the others by ``+-alpha``.  Decided by bipartite perfect matching.
    """
    alpha = g.roots[a]
    graph = nx.Graph()
    top = [("L", i) for i in range(len(g.roots))]
    graph.add_nodes_from(top)
    graph.add_nodes_from(("R", j) for j in range(len(g.roots)))
    for i, beta in enumerate(g.roots):
        if not g.pairing[a][i]:
            graph.add_edge(("L", i), ("R", i))
            continue
        for cand in (add(beta, alpha), sub(beta, alpha)):
            j = g.index.get(cand)
            if j is not None:
                graph.add_edge(("L", i), ("R", j))
    matching = nx.bipartite.hopcroft_karp_matching(graph, top_nodes=top)
    return len(matching) == 2 * len(g.roots)


def check_axioms(g: Grrs) -> AxiomReport:
    """Check the five GRRS axioms, collecting witnesses for every failure."""
    res = {}
    rank = span_rank(g.roots)
    res[1] = AxiomResult(rank == g.dimension,
                         [] if rank == g.dimension else [("rank", rank, g.dimension)])

    bad2 = [g.roots[i] for i in range(len(g.roots)) if is_zero(g.form.functional(g.roots[i]))]
    res[2] = AxiomResult(not bad2, bad2)

    bad3 = []
    for a in g.real:
        alpha, na = g.roots[a], g.norms[a]
        for b, beta in enumerate(g.roots):
            k = 2 * g.pairing[a][b] / na
            if not _integral(k) or sub(beta, scale(k, alpha)) not in g.index:
                bad3.append((alpha, beta))
    res[3] = AxiomResult(not bad3, bad3)

    bad4 = [g.roots[a] for a in g.imaginary if not isotropic_bijection_exists(g, a)]
    res[4] = AxiomResult(not bad4, bad4)

    bad5 = [r for r in g.roots if neg(r) not in g.index]
    res[5] = AxiomResult(not bad5, bad5)
    return AxiomReport(res)


def parity(g: Grrs, alpha) -> str:
    """``"odd"`` if alpha is isotropic or twice alpha is a root, else ``"even"``."""
    return g.parities[g.root_index(alpha)]


def reflect(g: Grrs, alpha, beta) -> Vector:
    """Image of ``beta`` under the reflection attached to ``alpha``."""
    alpha, beta = g.vec(alpha), g.vec(beta)
    g.root_index(alpha)
    g.root_index(beta)
    na = g.norm(alpha)
    ab = g.pair(alpha, beta)
    if na:
        return sub(beta, scale(2 * ab / na, alpha))
    if not ab:
        return beta
    plus, minus = add(beta, alpha), sub(beta, alpha)
    hp, hm = plus in g.index, minus in g.index
    if hp and hm:
        raise AmbiguousReflection(f"both {g.label(beta)} +- {g.label(alpha)} are roots")
    if not (hp or hm):
        raise NotClosed(f"neither {g.label(beta)} +- {g.label(alpha)} is a root")
    return plus if hp else minus


# -- component decomposition -----------------------------------------------------

def reflection_image(form: SymmetricForm, alpha: Sequence, v: Sequence) -> Vector:
    na = form(alpha, alpha)
    c = 2 * form(alpha, v) / na
    return sub(v, scale(c, alpha)) if c else tuple(v)


def orbit(form: SymmetricForm, mirrors: Sequence[Sequence], v: Sequence) -> frozenset:
    """Closure of ``{v}`` under reflections in the given non-isotropic vectors (BFS)."""
    v = tuple(v)
    seen = {v}
    queue = deque([v])
    mirrors = list(mirrors)
    while queue:
        x = queue.popleft()
        for a in mirrors:
            y = reflection_image(form, a, x)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return frozenset(seen)


def nonorthogonal_components(form: SymmetricForm, vectors: Sequence[Sequence]) -> list[list[int]]:
    """Connected components of the graph joining non-orthogonal vectors."""
    graph = nx.Graph()
    graph.add_nodes_from(range(len(vectors)))
    covs = [form.functional(v) for v in vectors]
    for i in range(len(vectors)):
        for j in range(i + 1, len(vectors)):
            if dot(covs[i], vectors[j]):
                graph.add_edge(i, j)
    return [sorted(c) for c in nx.connected_components(graph)]


@dataclass(frozen=True)
class RealDecomposition:
    """``V = V_0 + V_1 + ... + V_k`` for a family of real roots.

    ``components[i-1]`` lists indices (into the vectors given) of the i-th
    irreducible component; ``bases[0]`` spans ``V_0`` and ``projections[i]``
    is the matrix of ``p_i``.
    """

    components: tuple
    bases: tuple
    projections: tuple

    @property
    def k(self) -> int:
        return len(self.components)

    def project(self, i: int, v: Sequence) -> Vector:
        return mat_vec(self.projections[i], v)


def _component_key(form, vecs):
    return (span_rank(vecs), sorted(abs(form(v, v)) for v in vecs), min(vecs))


def decompose_real(form: SymmetricForm, vectors: Sequence[Sequence]) -> RealDecomposition:
    """Split non-isotropic ``vectors`` into irreducible pieces with projections."""
    vectors = [tuple(v) for v in vectors]
    comps = nonorthogonal_components(form, vectors)
    comps.sort(key=lambda c: _component_key(form, [vectors[i] for i in c]))
    n = form.dimension
    bases, projs = [], []
    total = exact.zeros(n, n)
    for c in comps:
        vs = [vectors[i] for i in c]
        basis = [vs[i] for i in independent_subset(vs)]
        b = exact.from_columns(basis)
        gram_i = exact.mat_mul(exact.transpose(b), exact.mat_mul(form.gram, b))
        p = exact.mat_mul(b, exact.mat_mul(exact.inverse(gram_i),
                                           exact.mat_mul(exact.transpose(b), form.gram)))
        bases.append(tuple(basis))
        projs.append(p)
        total = tuple(add(r, s) for r, s in zip(total, p))
    p0 = tuple(sub(r, s) for r, s in zip(exact.identity(n), total))
    u = [v for b in bases for v in b]
    v0 = orthogonal_complement(form, u) if u else [exact.unit_vector(n, i) for i in range(n)]
    return RealDecomposition(tuple(tuple(c) for c in comps), (tuple(v0),) + tuple(bases),
                             (p0,) + tuple(projs))


@dataclass(frozen=True)
class ComponentDecomposition:
    """Real components of a GRRS as root-index tuples, plus subspaces and projections."""

    grrs: Grrs
    components: tuple
    bases: tuple
    projections: tuple

    @property
    def k(self) -> int:
        return len(self.components)

    @property
    def dim_v0(self) -> int:
        return len(self.bases[0])

    def project(self, i: int, v) -> Vector:
        return mat_vec(self.projections[i], self.grrs.vec(v))

    def component_roots(self, i: int) -> list[Vector]:
        return [self.grrs.roots[j] for j in self.components[i - 1]]

    def mirrors(self, i: int | None = None) -> list[Vector]:
        """One reflecting root per +- pair, for component ``i`` or all of them."""
        idx = range(1, self.k + 1) if i is None else [i]
        out = []
        for c in idx:
            for r in self.component_roots(c):
                if r > neg(r):
                    out.append(r)
        return out


def decompose(g: Grrs) -> ComponentDecomposition:
    """Component decomposition of ``R_re`` and of ``V``."""
    real = [g.roots[i] for i in g.real]
    d = decompose_real(g.form, real)
    comps = tuple(tuple(g.real[j] for j in c) for c in d.components)
    return ComponentDecomposition(g, comps, d.bases, d.projections)


def weyl_orbit(g: Grrs, v) -> frozenset:
    """Orbit of ``v`` under the Weyl group generated by real reflections."""
    return orbit(g.form, g.decomposition.mirrors(), g.vec(v))


def is_small_orbit(g: Grrs, i: int, X: Iterable) -> bool:
    """True iff ``x - y`` is a root of the i-th real component whenever ``x != +-y``."""
    comp = set(g.decomposition.component_roots(i))
    X = [g.vec(x) for x in X]
    for x in X:
        for y in X:
            if x != y and x != neg(y) and sub(x, y) not in comp:
                return False
    return True


def is_irreducible(g: Grrs) -> bool:
    return len(nonorthogonal_components(g.form, g.roots)) == 1


def check_sub_grrs(g: Grrs, subset: Iterable) -> bool:
    """The three closure conditions that make ``subset`` a GRRS in its span."""
    sub_idx = {g.root_index(a) for a in subset}
    if not sub_idx:
        return False
    roots = g.roots
    for a in sub_idx:
        if g.index.get(neg(roots[a])) not in sub_idx:
            return False
        if not any(g.pairing[a][b] for b in sub_idx):
            return False
    for a in sub_idx:
        for b in sub_idx:
            try:
                img = reflect(g, roots[a], roots[b])
            except RootError:
                return False
            if g.index.get(img) not in sub_idx:
                return False
    return True


def restrict_to_span(g: Grrs, subset: Iterable, name: str | None = None) -> Grrs:
    """``subset`` as a root system in its own span, with the induced form."""
    vs = [g.vec(a) for a in subset]
    rows, pivots = exact.rref(vs, g.dimension)
    lift = exact.from_columns(rows)
    gram = exact.mat_mul(exact.transpose(lift), exact.mat_mul(g.form.gram, lift))
    coords = [tuple(v[p] for p in pivots) for v in vs]
    return Grrs(SymmetricForm(gram), coords, name=name or f"sub({g.name})")


# -- serialization -------------------------------------------------------------------

def grrs_to_json(g: Grrs) -> dict:
    return {
        "dimension": g.dimension,
        "gram": [[fmt(x) for x in row] for row in g.form.gram],
        "roots": [[fmt(x) for x in r] for r in g.roots],
    }


def grrs_from_json(data: dict | str) -> Grrs:
    if isinstance(data, str):
        data = json.loads(data)
    form = SymmetricForm(exact.matrix(data["gram"]))
    if form.dimension != data["dimension"]:
        raise exact.DimensionError("dimension field disagrees with the Gram matrix")
    return Grrs(form, [exact.vector(r) for r in data["roots"]])
