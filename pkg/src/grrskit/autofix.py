"""Form-preserving automorphisms of a GRRS and the structure of their fixed roots."""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field

from networkx.utils import UnionFind

from . import exact
from .catalog import component_types
from .exact import mat_mul, mat_vec, neg, span_rank, transpose
from .grrs import Grrs, check_axioms, check_sub_grrs, restrict_to_span

EMPTY = "Empty"
ISOTROPIC_PAIR = "IsotropicPair"
IRREDUCIBLE = "IrreducibleGrrsWithOdd"


class FormNotPreserved(ValueError):
    pass


class RootSetNotPreserved(ValueError):
    pass


class TrichotomyViolation(RuntimeError):
    """No admissible shape fits T.  Signals a bug or an invalid automorphism."""


@dataclass(frozen=True, eq=False)
class RootSystemAutomorphism:
    grrs: Grrs
    matrix: tuple
    perm: tuple
    label: str = ""

    def __eq__(self, other):
        return isinstance(other, RootSystemAutomorphism) and self.perm == other.perm

    def __hash__(self):
        return hash(self.perm)

    def apply(self, v):
        return mat_vec(self.matrix, self.grrs.vec(v))

    def compose(self, other: "RootSystemAutomorphism", label: str = "") -> "RootSystemAutomorphism":
        """``self`` after ``other``."""
        return RootSystemAutomorphism(self.grrs, mat_mul(self.matrix, other.matrix),
                                      tuple(self.perm[j] for j in other.perm), label)

    def is_involution(self) -> bool:
        return all(self.perm[self.perm[i]] == i for i in range(len(self.perm)))

    def order(self) -> int:
        k, p = 1, self.perm
        ident = tuple(range(len(p)))
        while p != ident:
            p = tuple(self.perm[j] for j in p)
            k += 1
        return k


def make_automorphism(g: Grrs, M, label: str = "") -> RootSystemAutomorphism:
    """Validate ``M`` as an automorphism of ``g`` and record its root permutation."""
    M = exact.matrix(M)
    n = g.dimension
    if len(M) != n or any(len(row) != n for row in M):
        raise exact.DimensionError(f"expected a {n}x{n} matrix")
    if mat_mul(transpose(M), mat_mul(g.form.gram, M)) != g.form.gram:
        raise FormNotPreserved("the matrix does not preserve the form")
    perm = []
    for r in g.roots:
        j = g.index.get(mat_vec(M, r))
        if j is None:
            raise RootSetNotPreserved(f"{g.label(r)} is sent outside R")
        perm.append(j)
    if len(set(perm)) != len(perm):
        raise RootSetNotPreserved("the induced map on roots is not injective")
    return RootSystemAutomorphism(g, M, tuple(perm), label)


def identity_automorphism(g: Grrs) -> RootSystemAutomorphism:
    return make_automorphism(g, exact.identity(g.dimension), "id")


def reflection_automorphism(g: Grrs, alpha) -> RootSystemAutomorphism:
    """The reflection in a real root as an automorphism of ``g``."""
    a = g.vec(alpha)
    na = g.norm(a)
    if not na:
        raise ValueError("isotropic roots do not give reflections")
    cov = g.form.functional(a)
    n = g.dimension
    cols = []
    for j in range(n):
        e = exact.unit_vector(n, j)
        cols.append(exact.sub(e, exact.scale(2 * cov[j] / na, a)))
    return make_automorphism(g, exact.from_columns(cols), f"r[{g.label(a)}]")


# -- fixed roots ---------------------------------------------------------------

def fixed_roots(a: RootSystemAutomorphism) -> tuple:
    return tuple(i for i, j in enumerate(a.perm) if i == j)


def t_closure(g: Grrs, S) -> tuple:
    """Split S into T (components meeting an odd root) and T' under non-orthogonality."""
    S = sorted(S)
    uf = UnionFind(S)
    for i, a in enumerate(S):
        for b in S[i + 1:]:
            if g.pairing[a][b]:
                uf.union(a, b)
    odd = set(g.odd)
    marked = {uf[a] for a in S if a in odd}
    T = tuple(a for a in S if uf[a] in marked)
    Tp = tuple(a for a in S if uf[a] not in marked)
    return T, Tp


@dataclass
class FixedSetAnalysis:
    S: tuple
    T: tuple
    Tprime: tuple
    tag: str | None = None
    certificates: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(v for k, v in self.certificates.items() if isinstance(v, bool))

    def to_json(self) -> dict:
        return {"S": list(self.S), "T": list(self.T), "Tprime": list(self.Tprime),
                "tag": self.tag, "certificates": self.certificates}


def _in_span(vectors, v, base_rank=None) -> bool:
    r = span_rank(vectors) if base_rank is None else base_rank
    return span_rank(list(vectors) + [v]) == r


def _vecs(g: Grrs, idx) -> list:
    return [g.roots[i] for i in idx]


def _is_root_system(g: Grrs, idx) -> bool:
    """Reduced, closed under its own reflections and negation."""
    vs = {g.roots[i] for i in idx}
    if any(exact.scale(2, v) in vs for v in vs):
        return False
    return check_sub_grrs(g, _vecs(g, idx)) if idx else True


def classify_T(g: Grrs, analysis: FixedSetAnalysis):
    """Tag T with its shape and gather the side conditions that accompany it."""
    S, T, Tp = analysis.S, analysis.T, analysis.Tprime
    roots = g.roots
    cert = {}
    if not T:
        tag = EMPTY
        cert["tag_certificate"] = True
    elif len(T) == 2 and roots[T[0]] == neg(roots[T[1]]) and not g.norms[T[0]]:
        tag = ISOTROPIC_PAIR
        cert["tag_certificate"] = True
    else:
        tag = IRREDUCIBLE
        sub = restrict_to_span(g, [roots[i] for i in T], name=f"T({g.name})")
        ok = (check_sub_grrs(g, _vecs(g, T)) and len(component_shape(g, T)) == 1
              and any(i in set(g.odd) for i in T) and check_axioms(sub).passed)
        cert["tag_certificate"] = ok
        if not ok:
            raise TrichotomyViolation(f"T of size {len(T)} fits no admissible shape")
    cert["Tprime_even"] = not (set(Tp) & set(g.odd))
    cert["Tprime_root_system"] = _is_root_system(g, Tp)
    cert["T_perp_Tprime"] = all(not g.pairing[a][b] for a in T for b in Tp)
    tv = [roots[i] for i in T]
    tpv = [roots[i] for i in Tp]
    rt, rtp = span_rank(tv), span_rank(tpv)
    cert["S_cap_span_T"] = all((i in T) == _in_span(tv, roots[i], rt) for i in S) if T else True
    cert["S_cap_span_Tprime"] = (all((i in Tp) == _in_span(tpv, roots[i], rtp) for i in S)
                                 if Tp else True)
    if Tp:
        sub = restrict_to_span(g, tpv)
        cert["Tprime_types"] = component_types(sub)
    if T and tag == IRREDUCIBLE:
        sub = restrict_to_span(g, tv)
        cert["T_types"] = component_types(sub)
    return tag, cert


def component_shape(g: Grrs, idx) -> list:
    """Non-orthogonality components of a subset of root indices."""
    idx = list(idx)
    uf = UnionFind(idx)
    for i, a in enumerate(idx):
        for b in idx[i + 1:]:
            if g.pairing[a][b]:
                uf.union(a, b)
    return [sorted(s) for s in uf.to_sets()]


def s_shape(g: Grrs, analysis: FixedSetAnalysis) -> str:
    """``"empty"``, ``"grrs"`` or ``"exceptional"`` (T' plus one isotropic pair)."""
    S = analysis.S
    if not S:
        return "empty"
    if check_sub_grrs(g, _vecs(g, S)):
        return "grrs"
    T = analysis.T
    if (len(T) == 2 and not g.norms[T[0]] and g.roots[T[0]] == neg(g.roots[T[1]])
            and all(not g.pairing[T[0]][b] for b in analysis.Tprime)
            and _is_root_system(g, analysis.Tprime)):
        return "exceptional"
    return "invalid"


@dataclass
class OddConnectednessReport:
    passed: bool
    witnesses: list = field(default_factory=list)
    counterexamples: list = field(default_factory=list)


def check_odd_connectedness(g: Grrs, S) -> OddConnectednessReport:
    """For independent odd alpha, beta in S, find a real fixed gamma meeting both."""
    S = sorted(S)
    odd = [i for i in S if i in set(g.odd)]
    real = [i for i in S if g.norms[i]]
    rep = OddConnectednessReport(True)
    for x, a in enumerate(odd):
        for b in odd[x + 1:]:
            if span_rank([g.roots[a], g.roots[b]]) < 2:
                continue
            gamma = next((c for c in real if g.pairing[c][a] and g.pairing[c][b]), None)
            if gamma is None:
                rep.passed = False
                rep.counterexamples.append((a, b))
            else:
                rep.witnesses.append((a, b, gamma))
    return rep


def analyze(a: RootSystemAutomorphism) -> FixedSetAnalysis:
    """Fixed set, T-closure, trichotomy tag and all accompanying checks."""
    g = a.grrs
    S = fixed_roots(a)
    T, Tp = t_closure(g, S)
    res = FixedSetAnalysis(S, T, Tp)
    res.tag, res.certificates = classify_T(g, res)
    Sset = set(S)
    res.certificates["S_negation"] = all(g.index[neg(g.roots[i])] in Sset for i in S)
    closed = True
    for i in S:
        for j in S:
            k = g.index.get(exact.add(g.roots[i], g.roots[j]))
            if k is not None and k not in Sset:
                closed = False
    res.certificates["S_additive"] = closed
    res.certificates["odd_connectedness"] = check_odd_connectedness(g, S).passed
    shape = s_shape(g, res)
    res.certificates["S_shape"] = shape
    res.certificates["S_almost_grrs"] = shape in ("empty", "grrs", "exceptional")
    return res


# -- test generator ------------------------------------------------------------

COORDINATE_CAP = 5000


def _coordinate_maps(g: Grrs):
    """Signed permutations of named coordinates that preserve a diagonal Gram."""
    pres = g.presentation
    if pres is None:
        return
    gram = pres.gram
    n = len(gram)
    if any(gram[i][j] for i in range(n) for j in range(n) if i != j):
        return
    blocks = {}
    for i in range(n):
        blocks.setdefault(gram[i][i], []).append(i)
    per_block = []
    for idx in blocks.values():
        opts = []
        for p in itertools.permutations(idx):
            for signs in itertools.product((1, -1), repeat=len(idx)):
                opts.append(list(zip(idx, p, signs)))
        per_block.append(opts)
    count = 0
    for combo in itertools.product(*per_block):
        if count >= COORDINATE_CAP:
            return
        count += 1
        cols = [None] * n
        for block in combo:
            for src, dst, sign in block:
                cols[src] = exact.scale(sign, exact.unit_vector(n, dst))
        yield exact.from_columns(cols)


def _from_presentation(g: Grrs, pm, label):
    from .pairs import v_matrix
    try:
        return make_automorphism(g, v_matrix(g, pm), label)
    except (FormNotPreserved, RootSetNotPreserved):
        return None


def enumerate_test_automorphisms(g: Grrs, budget: int = 2, table: bool = True,
                                 coordinates: bool = True) -> list:
    """Deterministic finite sample of automorphisms, deduplicated by root permutation."""
    from .pairs import table_actions

    seen = {}

    def keep(a):
        if a is not None and a.perm not in seen:
            seen[a.perm] = a

    ident = identity_automorphism(g)
    keep(ident)
    keep(make_automorphism(g, tuple(neg(row) for row in exact.identity(g.dimension)), "-id"))

    mirrors = [r for r in (g.roots[i] for i in g.real) if r > neg(r)]
    gens = [reflection_automorphism(g, r) for r in mirrors]
    frontier = deque([ident])
    words = {ident.perm}
    for _ in range(budget):
        nxt = deque()
        for w in frontier:
            for s in gens:
                perm = tuple(s.perm[j] for j in w.perm)
                if perm in words:
                    continue
                words.add(perm)
                c = s.compose(w, f"{s.label}*{w.label}" if w.label != "id" else s.label)
                nxt.append(c)
                keep(c)
        frontier = nxt

    if table:
        for label, pm in table_actions(g):
            keep(_from_presentation(g, pm, label))
    if coordinates:
        for pm in _coordinate_maps(g):
            keep(_from_presentation(g, pm, "coord"))
    return list(seen.values())
