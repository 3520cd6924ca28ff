"""Matrix Lie superalgebras gl(m|n) and osp(m|2n) over Q, their involutions,
centralizers of Cartan subspaces and the Iwasawa decomposition test.

Elements are sparse supermatrices ``{(i, j): Fraction}``; row/column indices
below ``m`` are even and the rest odd.  Every basis element is homogeneous and
a weight vector for the diagonal Cartan subalgebra.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from . import exact
from .exact import ZERO, span_rank
from .pairs import PairDescriptor, parse_pair, presentation_action
from .restrict import positive_system

EVEN, ODD = 0, 1


class SuperalgebraError(ValueError):
    pass


class DescriptorMismatch(SuperalgebraError):
    pass


class ValidationFailure(SuperalgebraError):
    pass


class InvalidSimpleSystem(SuperalgebraError):
    pass


class CartanNotInvariant(SuperalgebraError):
    pass


# -- sparse supermatrices ------------------------------------------------------

def smul(A: dict, B: dict) -> dict:
    rows = {}
    for (k, j), b in B.items():
        rows.setdefault(k, []).append((j, b))
    out = {}
    for (i, k), a in A.items():
        for j, b in rows.get(k, ()):
            out[(i, j)] = out.get((i, j), ZERO) + a * b
    return {p: v for p, v in out.items() if v}


def slin(*terms) -> dict:
    """Linear combination of ``(coefficient, matrix)`` pairs."""
    out = {}
    for c, A in terms:
        if not c:
            continue
        for p, v in A.items():
            out[p] = out.get(p, ZERO) + c * v
    return {p: v for p, v in out.items() if v}


def transpose(A: dict) -> dict:
    return {(j, i): v for (i, j), v in A.items()}


def from_dense(rows) -> dict:
    return {(i, j): Fraction(v) for i, row in enumerate(rows) for j, v in enumerate(row) if v}


def perm_sign_matrix(images: dict, N: int) -> dict:
    """Matrix sending basis vector i to ``sign * e_j`` for ``images[i] = (sign, j)``."""
    return {(images.get(i, (1, i))[1], i): Fraction(images.get(i, (1, i))[0]) for i in range(N)}


# -- the algebra -----------------------------------------------------------------

@dataclass(eq=False)
class MatrixSuperalgebra:
    kind: str
    m: int
    n: int
    basis: list
    parity: list
    weights: list
    names: tuple
    free: list
    form_matrix: dict | None = None

    @property
    def N(self) -> int:
        return self.m + self.n

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def tag(self) -> str:
        return f"{self.kind}({self.m}|{self.n})"

    def pos_parity(self, i: int) -> int:
        return EVEN if i < self.m else ODD

    def entry_parity(self, i: int, j: int) -> int:
        return self.pos_parity(i) ^ self.pos_parity(j)

    def coords(self, X: dict) -> tuple:
        """Basis coordinates of ``X``; raises if ``X`` is not in the algebra."""
        c = tuple(X.get(f, ZERO) for f in self.free)
        back = slin(*[(x, b) for x, b in zip(c, self.basis) if x])
        if back != {p: v for p, v in X.items() if v}:
            raise SuperalgebraError("matrix is not in the algebra")
        return c

    def element(self, coords) -> dict:
        return slin(*[(x, b) for x, b in zip(coords, self.basis) if x])

    def split(self, X: dict):
        ev = {p: v for p, v in X.items() if not self.entry_parity(*p)}
        od = {p: v for p, v in X.items() if self.entry_parity(*p)}
        return ev, od

    def bracket(self, X: dict, Y: dict) -> dict:
        """Supercommutator, extended bilinearly from homogeneous parts."""
        out = {}
        for px, Xh in zip((EVEN, ODD), self.split(X)):
            if not Xh:
                continue
            for py, Yh in zip((EVEN, ODD), self.split(Y)):
                if not Yh:
                    continue
                sign = -1 if px and py else 1
                out = slin((1, out), (1, smul(Xh, Yh)), (-sign, smul(Yh, Xh)))
        return out

    def str(self, X: dict) -> Fraction:
        return sum((v if i < self.m else -v) for (i, j), v in X.items() if i == j) or ZERO

    def form(self, X: dict, Y: dict) -> Fraction:
        return self.str(smul(X, Y))

    @cached_property
    def cartan(self) -> list:
        """Indices of diagonal basis elements."""
        return [k for k, b in enumerate(self.basis) if all(i == j for i, j in b)]

    def position_weight(self, p: int) -> tuple:
        k = len(self.names)
        if self.kind == "gl":
            return exact.unit_vector(k, p)
        M, n = self.m, self.n // 2
        half = M // 2
        if p < M:
            if p < half:
                return exact.unit_vector(k, p)
            if p >= M - half:
                return exact.neg(exact.unit_vector(k, M - 1 - p))
            return exact.zero_vector(k)
        q = p - M
        if q < n:
            return exact.unit_vector(k, half + q)
        return exact.neg(exact.unit_vector(k, half + 2 * n - 1 - q))

    def coordinate_position(self, c: int) -> int:
        """Diagonal position whose entry is the value of coordinate ``c``."""
        if self.kind == "gl":
            return c
        half = self.m // 2
        return c if c < half else self.m + (c - half)

    def evaluate(self, weight, H: dict) -> Fraction:
        """A presentation-coordinate weight evaluated on a diagonal matrix."""
        return sum((w * H.get((self.coordinate_position(c),) * 2, ZERO)
                    for c, w in enumerate(weight) if w), ZERO)

    def weight_of(self, X: dict) -> tuple:
        ws = {exact.sub(self.position_weight(i), self.position_weight(j)) for i, j in X}
        if len(ws) != 1:
            raise SuperalgebraError("element is not a weight vector")
        return ws.pop()

    def root_weights(self) -> dict:
        """Nonzero weight -> (dimension, parity) of its root space."""
        out = {}
        for w, p in zip(self.weights, self.parity):
            if any(w):
                d, q = out.get(w, (0, p))
                out[w] = (d + 1, q)
        return out


def _osp_form(M: int, n2: int) -> dict:
    J = {}
    for i in range(M):
        J[(i, M - 1 - i)] = Fraction(1)
    n = n2 // 2
    for q in range(n2):
        J[(M + q, M + n2 - 1 - q)] = Fraction(1 if q < n else -1)
    return J


def supertranspose(X: dict, m: int, variant: int = 0) -> dict:
    """``[[A,B],[C,D]] -> [[A^t, C^t], [-B^t, D^t]]`` (variant 0) or the other sign choice."""
    out = {}
    for (i, j), v in X.items():
        ri, rj = j, i
        odd_row, even_col = ri >= m, rj < m
        if variant == 0:
            s = -1 if (odd_row and even_col) else 1
        else:
            s = -1 if (not odd_row and not even_col) else 1
        out[(ri, rj)] = s * v
    return out


def build_algebra(tag: str) -> MatrixSuperalgebra:
    """``gl(m|n)`` or ``osp(m|2n)`` in its standard matrix realization."""
    import re
    s = tag.replace(" ", "")
    mm = re.fullmatch(r"(gl|osp)\((\d+)\|(\d+)\)", s)
    if not mm:
        raise SuperalgebraError(f"unknown algebra {tag!r}")
    kind, m, n = mm.group(1), int(mm.group(2)), int(mm.group(3))
    if m + n == 0:
        raise SuperalgebraError("empty algebra")
    N = m + n
    if kind == "gl":
        names = tuple(f"e{i+1}" for i in range(m)) + tuple(f"d{j+1}" for j in range(n))
        basis, free = [], []
        for i in range(N):
            for j in range(N):
                basis.append({(i, j): Fraction(1)})
                free.append((i, j))
        alg = MatrixSuperalgebra("gl", m, n, basis, [], [], names, free)
    else:
        if n % 2:
            raise SuperalgebraError("osp(m|2n) needs an even odd part")
        J = _osp_form(m, n)
        positions = [(i, j) for i in range(N) for j in range(N)]
        rows = []
        cols = []
        for p in positions:
            E = {p: Fraction(1)}
            cond = slin((1, smul(supertranspose(E, m), J)), (1, smul(J, E)))
            cols.append(cond)
        # condition rows indexed by matrix positions
        keys = sorted({q for c in cols for q in c})
        for q in keys:
            rows.append(tuple(c.get(q, ZERO) for c in cols))
        null = exact.nullspace(rows, len(positions)) if rows else [
            exact.unit_vector(len(positions), k) for k in range(len(positions))]
        basis, free = [], []
        for v in null:
            X = {positions[k]: x for k, x in enumerate(v) if x}
            basis.append(X)
            # the free variable is the entry equal to 1 that no other vector uses
            free.append(None)
        used = {}
        for idx, X in enumerate(basis):
            for p in X:
                used.setdefault(p, []).append(idx)
        for idx, X in enumerate(basis):
            f = next(p for p in sorted(X) if used[p] == [idx] and X[p] == 1)
            free[idx] = f
        names = tuple(f"e{i+1}" for i in range(m // 2)) + tuple(f"d{j+1}" for j in range(n // 2))
        alg = MatrixSuperalgebra("osp", m, n, basis, [], [], names, free, J)
    alg.parity = [alg.entry_parity(*next(iter(b))) for b in alg.basis]
    alg.weights = [alg.weight_of(b) for b in alg.basis]
    return alg


# -- involutions -----------------------------------------------------------------

@dataclass(eq=False)
class AlgebraInvolution:
    alg: MatrixSuperalgebra
    func: object
    matrix: tuple
    descriptor: str
    a: list = field(default_factory=list)
    pair: PairDescriptor | None = None

    def apply(self, X: dict) -> dict:
        return self.func(X)

    def apply_coords(self, c) -> tuple:
        return exact.mat_vec(self.matrix, c)


def _matrix_of(alg: MatrixSuperalgebra, func) -> tuple:
    cols = []
    for b in alg.basis:
        try:
            cols.append(alg.coords(func(b)))
        except SuperalgebraError:
            raise ValidationFailure("involution leaves the algebra") from None
    return exact.from_columns(cols)


def _conj(P: dict, Pinv: dict):
    return lambda X: smul(smul(P, X), Pinv)


def _delta(alg):
    return lambda X: {p: (-v if alg.entry_parity(*p) else v) for p, v in X.items()}


def _diag(entries: dict) -> dict:
    return {(i, i): Fraction(v) for i, v in entries.items() if v}


def _gl_swap(alg, r, s):
    m, n = alg.m, alg.n
    imgs = {}
    k = min(r, m - r)
    for i in range(k):
        imgs[i], imgs[m - 1 - i] = (1, m - 1 - i), (1, i)
    k2 = min(s, n - s)
    for j in range(k2):
        imgs[m + j], imgs[m + n - 1 - j] = (1, m + n - 1 - j), (1, m + j)
    if r > m - r:
        for i in range(m):
            sg, t = imgs.get(i, (1, i))
            imgs[i] = (-sg, t)
    if s > n - s:
        for j in range(m, m + n):
            sg, t = imgs.get(j, (1, j))
            imgs[j] = (-sg, t)
    P = perm_sign_matrix(imgs, alg.N)
    a = [_diag({i: 1, m - 1 - i: -1}) for i in range(k)]
    a += [_diag({m + j: 1, m + n - 1 - j: -1}) for j in range(k2)]
    return _conj(P, transpose(P)), a


def _gl_osp(alg):
    m, n2 = alg.m, alg.n
    J = {(i, i): Fraction(1) for i in range(m)}
    for q in range(n2):
        J[(m + q, m + n2 - 1 - q)] = Fraction(1 if q < n2 // 2 else -1)
    Jinv = {(j, i): v for (i, j), v in J.items()}  # J is orthogonal
    funcs = [lambda X, v=v: slin((-1, smul(smul(Jinv, supertranspose(X, m, v)), J)))
             for v in (0, 1)]
    test = alg.basis
    for f in funcs:
        if all(f(f(b)) == b for b in test):
            break
    else:
        raise ValidationFailure("no supertranspose convention squares to the identity")
    a = [_diag({i: 1}) for i in range(m)]
    a += [_diag({m + q: 1, m + n2 - 1 - q: 1}) for q in range(n2 // 2)]
    return f, a


def _osp_osp(alg, r, s):
    M, n2 = alg.m, alg.n
    n = n2 // 2
    imgs = {}
    w = min(r, M - r)
    minus = 0
    for i in range(w):
        imgs[i], imgs[M - 1 - i] = (1, M - 1 - i), (1, i)
        minus += 1
    extra = r - minus
    pair = w
    while extra >= 2:
        imgs[pair], imgs[M - 1 - pair] = (-1, pair), (-1, M - 1 - pair)
        extra -= 2
        pair += 1
    if extra == 1:
        if M % 2 == 0:
            raise ValidationFailure("cannot realise an odd number of -1's on an even block")
        imgs[M // 2] = (-1, M // 2)
    w2 = min(s, n - s)
    for j in range(w2):
        a, b = M + j, M + n - 1 - j
        abar, bbar = M + n2 - 1 - j, M + n + j
        imgs[a], imgs[b] = (1, b), (1, a)
        imgs[abar], imgs[bbar] = (1, bbar), (1, abar)
    extra = s - w2
    q = w2
    while extra:
        a, abar = M + q, M + n2 - 1 - q
        # skip pairs already used by swaps
        if q >= n - w2:
            raise ValidationFailure("ran out of symplectic pairs")
        imgs[a], imgs[abar] = (-1, a), (-1, abar)
        extra -= 1
        q += 1
    P = perm_sign_matrix(imgs, alg.N)
    a_ = [_diag({i: 1, M - 1 - i: -1}) for i in range(w)]
    a_ += [_diag({M + j: 1, M + n2 - 1 - j: -1, M + n - 1 - j: -1, M + n + j: 1})
           for j in range(w2)]
    return _conj(P, transpose(P)), a_


def _osp_gl(alg):
    M, n2 = alg.m, alg.n
    m = M // 2
    imgs = {}
    for i in range(m):
        imgs[i] = (1, m - 1 - i)
        imgs[M - 1 - i] = (-1, m + i)
    for q in range(n2):
        imgs[M + q] = (1, M + n2 - 1 - q)
    P = perm_sign_matrix(imgs, alg.N)
    Pinv = transpose(P)
    a = [_diag({i: 1, m - 1 - i: -1, M - 1 - i: -1, M - m + i: 1}) for i in range(m // 2)]
    a += [_diag({M + q: 1, M + n2 - 1 - q: -1}) for q in range(n2 // 2)]
    return _conj(P, Pinv), a


def _pn(alg):
    n = alg.m

    def f(X):
        out = {}
        for (i, j), v in X.items():
            if i < n and j < n:        # W -> -Z^t
                out[(n + j, n + i)] = -v
            elif i >= n and j >= n:    # Z -> -W^t
                out[(j - n, i - n)] = -v
            elif i < n:                # X -> X^t
                out[(j - n, i + n)] = v
            else:                      # Y -> -Y^t
                out[(j + n, i - n)] = -v
        return out

    a = [_diag({i: 1, n + i: 1}) for i in range(n)]
    return f, a


def build_involution(alg: MatrixSuperalgebra, descriptor) -> AlgebraInvolution:
    """Matrix involution for a pair descriptor, ``"id"`` or ``"delta"``.

    Pair involutions are validated against the root-level action of the pair.
    """
    if isinstance(descriptor, str) and descriptor in ("id", "delta"):
        f = (lambda X: dict(X)) if descriptor == "id" else _delta(alg)
        a = [] if descriptor == "id" else []
        inv = AlgebraInvolution(alg, f, _matrix_of(alg, f), descriptor, a)
        return inv
    desc = parse_pair(descriptor) if isinstance(descriptor, str) else descriptor
    fam = desc.family.replace(" ", "")
    if fam != alg.tag and not (desc.row == "p" and alg.tag == f"gl({alg.m}|{alg.n})"):
        raise DescriptorMismatch(f"{desc.text} does not act on {alg.tag}")
    p = desc.params
    if desc.row == "gl-gl":
        f, a = _gl_swap(alg, p["r"], p["s"])
    elif desc.row == "gl-osp":
        f, a = _gl_osp(alg)
    elif desc.row == "osp-osp":
        f, a = _osp_osp(alg, p["r"], p["s"])
    elif desc.row == "osp-gl":
        f, a = _osp_gl(alg)
    elif desc.row == "p":
        f, a = _pn(alg)
    else:
        raise DescriptorMismatch(f"no matrix model for {desc.text}")
    if desc.delta:
        g0, d = f, _delta(alg)
        f = lambda X: d(g0(X))
    inv = AlgebraInvolution(alg, f, _matrix_of(alg, f), str(desc), a, desc)
    validate_involution(inv)
    return inv


def validate_involution(inv: AlgebraInvolution) -> None:
    alg = inv.alg
    n = alg.dim
    if exact.mat_mul(inv.matrix, inv.matrix) != exact.identity(n):
        raise ValidationFailure("not an involution")
    for k, b in enumerate(alg.basis):
        img = inv.apply(b)
        if any(alg.entry_parity(*q) != alg.parity[k] for q in img):
            raise ValidationFailure("parity not preserved")
    for H in inv.a:
        alg.coords(H)
        if inv.apply(H) != slin((-1, H)):
            raise CartanNotInvariant("a is not in the (-1)-eigenspace")
    desc = inv.pair
    action = presentation_action(desc) if desc else None
    if action is not None:
        names = alg.names
        for k, b in enumerate(alg.basis):
            w = alg.weights[k]
            if not any(w):
                continue
            expected = [ZERO] * len(names)
            for c, x in enumerate(w):
                if x:
                    sg, tgt = action.get(names[c], (1, names[c]))
                    expected[names.index(tgt)] += sg * x
            if alg.weight_of(inv.apply(b)) != tuple(expected):
                raise ValidationFailure("induced action on weights differs from the table")


def is_bracket_automorphism(inv: AlgebraInvolution, limit: int | None = None) -> bool:
    alg = inv.alg
    B = alg.basis
    pairs = [(i, j) for i in range(len(B)) for j in range(len(B))]
    if limit:
        step = max(1, len(pairs) // limit)
        pairs = pairs[::step]
    for i, j in pairs:
        lhs = inv.apply(alg.bracket(B[i], B[j]))
        rhs = alg.bracket(inv.apply(B[i]), inv.apply(B[j]))
        if lhs != rhs:
            return False
    return True


def preserves_form(inv: AlgebraInvolution) -> bool:
    alg = inv.alg
    imgs = [inv.apply(b) for b in alg.basis]
    for i, bi in enumerate(alg.basis):
        for j, bj in enumerate(alg.basis):
            if alg.form(imgs[i], imgs[j]) != alg.form(bi, bj):
                return False
    return True


def compose_delta(inv: AlgebraInvolution) -> AlgebraInvolution:
    d = _delta(inv.alg)
    f = lambda X: d(inv.apply(X))
    return AlgebraInvolution(inv.alg, f, _matrix_of(inv.alg, f), f"delta*{inv.descriptor}",
                             list(inv.a), inv.pair)


# -- eigenspaces, centralizers and the Iwasawa test ----------------------------------

def _shift(M, c):
    n = len(M)
    return tuple(tuple(M[i][j] - (c if i == j else 0) for j in range(n)) for i in range(n))


def eigenspace_split(inv: AlgebraInvolution):
    """Bases (coordinate vectors) of the +1 and -1 eigenspaces."""
    n = inv.alg.dim
    k = exact.nullspace(_shift(inv.matrix, 1), n)
    p = exact.nullspace(_shift(inv.matrix, -1), n)
    return k, p


def _parity_of(alg, v) -> int:
    ps = {alg.parity[i] for i, x in enumerate(v) if x}
    if len(ps) != 1:
        raise SuperalgebraError("vector is not homogeneous")
    return ps.pop()


def _split_dims(alg, vecs):
    ev = sum(1 for v in vecs if _parity_of(alg, v) == EVEN)
    return ev, len(vecs) - ev


def ad_matrix(alg: MatrixSuperalgebra, X: dict) -> tuple:
    cols = [alg.coords(alg.bracket(X, b)) for b in alg.basis]
    return exact.from_columns(cols)


def centralizer(alg: MatrixSuperalgebra, elements) -> list:
    """Exact kernel of ``ad`` over a list of elements."""
    rows = []
    for X in elements:
        rows.extend(ad_matrix(alg, X))
    if not rows:
        return [exact.unit_vector(alg.dim, i) for i in range(alg.dim)]
    return exact.nullspace(rows, alg.dim)


def a_weight(alg: MatrixSuperalgebra, weight, a) -> tuple:
    return tuple(alg.evaluate(weight, H) for H in a)


@dataclass
class CentralizerSummary:
    a: list
    ca: list
    ca0: int
    ca1: int
    theta_on_ca1: str
    ideal_roots: set
    ca_roots: set
    maximal: bool


def cartan_and_centralizer(alg: MatrixSuperalgebra, inv: AlgebraInvolution) -> CentralizerSummary:
    k, p = eigenspace_split(inv)
    a = inv.a
    a_coords = [alg.coords(H) for H in a]
    ca = centralizer(alg, a)
    ca0, ca1 = _split_dims(alg, ca)
    odd = [v for v in ca if _parity_of(alg, v) == ODD]
    if not odd:
        mode = "zero"
    elif all(inv.apply_coords(v) == v for v in odd):
        mode = "id"
    elif all(inv.apply_coords(v) == exact.neg(v) for v in odd):
        mode = "-id"
    else:
        mode = "neither"
    # ideal generated by the odd part of c(a): c1 + [c1, c1]
    odd_el = [alg.element(v) for v in odd]
    ideal = [alg.coords(X) for X in odd_el]
    for X in odd_el:
        for Y in odd_el:
            Z = alg.bracket(X, Y)
            if Z:
                ideal.append(alg.coords(Z))
    ideal_roots = set()
    for v in ideal:
        for i, x in enumerate(v):
            if x and any(alg.weights[i]):
                ideal_roots.add(alg.weights[i])
    ca_roots = set()
    for v in ca:
        for i, x in enumerate(v):
            if x and any(alg.weights[i]):
                ca_roots.add(alg.weights[i])
    p0 = [v for v in p if _parity_of(alg, v) == EVEN]
    inter = len(ca) + len(p0) - span_rank(list(ca) + list(p0)) if p0 else 0
    maximal = inter == len(a_coords) and span_rank(a_coords) == len(a_coords)
    return CentralizerSummary(a, ca, ca0, ca1, mode, ideal_roots, ca_roots, maximal)


@dataclass
class IwasawaReport:
    pair: str
    dims: dict
    ca1_in_k: bool
    ca1_in_p: bool
    iwasawa_theta: bool
    iwasawa_delta_theta: bool
    maximal: bool
    theta_on_ca1: str
    restricted: dict
    ideal_roots: set
    ca_roots: set

    def to_json(self) -> dict:
        return {"pair": self.pair, "dims": self.dims, "ca1_in_k": self.ca1_in_k,
                "ca1_in_p": self.ca1_in_p, "iwasawa_theta": self.iwasawa_theta,
                "iwasawa_delta_theta": self.iwasawa_delta_theta}


def restricted_weight_data(alg: MatrixSuperalgebra, a) -> dict:
    """``a``-weight -> (dim, sdim) over basis weight vectors with nonzero a-weight."""
    out = {}
    for w, p in zip(alg.weights, alg.parity):
        aw = a_weight(alg, w, a)
        if not any(aw):
            continue
        d, s = out.get(aw, (0, 0))
        out[aw] = (d + 1, s + (1 if p == EVEN else -1))
    return out


def _decomposes(alg, k, a_coords, n_idx) -> bool:
    vecs = list(k) + list(a_coords) + [exact.unit_vector(alg.dim, i) for i in n_idx]
    return len(vecs) == alg.dim and span_rank(vecs) == alg.dim


def iwasawa_check(alg: MatrixSuperalgebra, inv: AlgebraInvolution) -> IwasawaReport:
    """Test ``g = k + a + n`` by exact rank for theta and for delta*theta."""
    summ = cartan_and_centralizer(alg, inv)
    a_coords = [alg.coords(H) for H in summ.a]
    rdata = restricted_weight_data(alg, summ.a)
    pos = positive_system(list(rdata)) if rdata else None
    n_idx = [i for i, w in enumerate(alg.weights)
             if pos and (aw := a_weight(alg, w, summ.a)) and any(aw) and pos.is_positive(aw)]
    k, p = eigenspace_split(inv)
    dinv = compose_delta(inv)
    kd, _ = eigenspace_split(dinv)
    odd = [v for v in summ.ca if _parity_of(alg, v) == ODD]
    k0, k1 = _split_dims(alg, k)
    dims = {"g": alg.dim, "k": len(k), "p": len(p), "a": len(a_coords), "n": len(n_idx),
            "ca0": summ.ca0, "ca1": summ.ca1, "k0": k0, "k1": k1, "k_delta": len(kd)}
    return IwasawaReport(
        str(inv.pair or inv.descriptor), dims,
        all(inv.apply_coords(v) == v for v in odd),
        all(inv.apply_coords(v) == exact.neg(v) for v in odd),
        _decomposes(alg, k, a_coords, n_idx),
        _decomposes(alg, kd, a_coords, n_idx),
        summ.maximal, summ.theta_on_ca1, rdata, summ.ideal_roots, summ.ca_roots)


def borel_complement_check(alg: MatrixSuperalgebra, simples, subalgebra) -> bool:
    """Whether ``b + subalgebra = g`` for the Borel defined by ``simples``.

    ``simples`` are weights in named coordinates; ``subalgebra`` is a list of
    coordinate vectors.
    """
    simples = [exact.vector(s) for s in simples]
    roots = alg.root_weights()
    if span_rank(simples) != len(simples) or any(s not in roots for s in simples):
        raise InvalidSimpleSystem("simple roots must be independent roots")
    positive = []
    for w in roots:
        c = exact.coordinates(simples, w)
        if c is None or any(x.denominator != 1 for x in c):
            raise InvalidSimpleSystem("a root is not an integral combination of the simples")
        if all(x >= 0 for x in c):
            positive.append(w)
        elif not all(x <= 0 for x in c):
            raise InvalidSimpleSystem("a root has mixed signs over the simples")
    b = [exact.unit_vector(alg.dim, i) for i in alg.cartan]
    b += [exact.unit_vector(alg.dim, i) for i, w in enumerate(alg.weights) if w in set(positive)]
    return span_rank(b + list(subalgebra)) == alg.dim


def fixed_subalgebra(inv: AlgebraInvolution) -> list:
    return eigenspace_split(inv)[0]
