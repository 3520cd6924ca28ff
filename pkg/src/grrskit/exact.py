"""Exact rational scalars, vectors, symmetric forms and dense linear algebra.

Everything here works over :class:`fractions.Fraction`.  Vectors are plain
tuples of fractions and matrices are tuples of row tuples, so values are
hashable and immutable.  Elimination is done on sparse row dictionaries
because nearly every matrix met in practice (root vectors, elementary
matrices, weight vectors) has very few nonzero entries.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

Scalar = Fraction
Vector = tuple  # tuple[Fraction, ...]
Matrix = tuple  # tuple[Vector, ...], row major

ZERO = Fraction(0)
ONE = Fraction(1)


class DimensionError(ValueError):
    pass


def scalar(x) -> Fraction:
    """Coerce ints, fractions and ``"p/q"`` strings to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x.strip())
    return Fraction(x)


def vector(xs: Iterable) -> Vector:
    return tuple(scalar(x) for x in xs)


def zero_vector(n: int) -> Vector:
    return (ZERO,) * n


def unit_vector(n: int, i: int) -> Vector:
    return tuple(ONE if k == i else ZERO for k in range(n))


def matrix(rows: Iterable[Iterable]) -> Matrix:
    return tuple(vector(r) for r in rows)


def identity(n: int) -> Matrix:
    return tuple(unit_vector(n, i) for i in range(n))


def zeros(r: int, c: int) -> Matrix:
    return tuple((ZERO,) * c for _ in range(r))


def add(u: Sequence, v: Sequence) -> Vector:
    if len(u) != len(v):
        raise DimensionError("dimension mismatch")
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Sequence, v: Sequence) -> Vector:
    if len(u) != len(v):
        raise DimensionError("dimension mismatch")
    return tuple(a - b for a, b in zip(u, v))


def scale(c, u: Sequence) -> Vector:
    c = scalar(c)
    return tuple(c * a for a in u)


def neg(u: Sequence) -> Vector:
    return tuple(-a for a in u)


def dot(u: Sequence, v: Sequence) -> Fraction:
    if len(u) != len(v):
        raise DimensionError("dimension mismatch")
    return sum((a * b for a, b in zip(u, v) if a and b), ZERO)


def is_zero(u: Sequence) -> bool:
    return not any(u)


def transpose(m: Sequence[Sequence]) -> Matrix:
    if not m:
        return ()
    return tuple(tuple(col) for col in zip(*m))


def mat_vec(m: Sequence[Sequence], v: Sequence) -> Vector:
    return tuple(dot(row, v) for row in m)


def mat_mul(a: Sequence[Sequence], b: Sequence[Sequence]) -> Matrix:
    bt = transpose(b)
    return tuple(tuple(dot(row, col) for col in bt) for row in a)


def columns(m: Sequence[Sequence]) -> list[Vector]:
    return list(transpose(m))


def from_columns(cols: Sequence[Sequence]) -> Matrix:
    return transpose(cols)


@dataclass(frozen=True)
class SymmetricForm:
    """A symmetric bilinear form given by its Gram matrix; may be degenerate."""

    gram: Matrix
    dimension: int = field(init=False)

    def __post_init__(self):
        g = matrix(self.gram)
        n = len(g)
        if n == 0 or any(len(r) != n for r in g):
            raise DimensionError("Gram matrix must be square and nonempty")
        for i in range(n):
            for j in range(i):
                if g[i][j] != g[j][i]:
                    raise ValueError("Gram matrix is not symmetric")
        object.__setattr__(self, "gram", g)
        object.__setattr__(self, "dimension", n)

    def __call__(self, u: Sequence, v: Sequence) -> Fraction:
        return evaluate_form(self, u, v)

    def functional(self, u: Sequence) -> Vector:
        """Coordinates of ``(u, -)`` as a covector."""
        return mat_vec(self.gram, u)

    def rank(self) -> int:
        return span_rank(self.gram)

    def is_degenerate(self) -> bool:
        return self.rank() < self.dimension

    @classmethod
    def diagonal(cls, entries: Iterable) -> "SymmetricForm":
        d = vector(entries)
        return cls(tuple(tuple(d[i] if i == j else ZERO for j in range(len(d)))
                         for i in range(len(d))))


def evaluate_form(form: SymmetricForm, u: Sequence, v: Sequence) -> Fraction:
    """Return ``u^T G v`` exactly."""
    n = form.dimension
    if len(u) != n or len(v) != n:
        raise DimensionError(f"vectors must have dimension {n}")
    total = ZERO
    for i, a in enumerate(u):
        if a:
            row = form.gram[i]
            for j, b in enumerate(v):
                if b and row[j]:
                    total += a * row[j] * b
    return total


# -- elimination -------------------------------------------------------------

def _sparse(rows: Iterable[Sequence]) -> list[dict[int, Fraction]]:
    out = []
    for r in rows:
        out.append({j: scalar(x) for j, x in enumerate(r) if x})
    return out


def _eliminate(rows: list[dict[int, Fraction]], ncols: int):
    """Reduced row echelon form in place; returns (rows, pivot columns).

    The pivot is the first row with a nonzero entry in the current column.
    """
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(rows)):
            if c in rows[i]:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        inv = 1 / prow[c]
        if inv != 1:
            for k in prow:
                prow[k] *= inv
        for i in range(len(rows)):
            if i != r and c in rows[i]:
                row = rows[i]
                f = row[c]
                for k, x in prow.items():
                    y = row.get(k, ZERO) - f * x
                    if y:
                        row[k] = y
                    else:
                        row.pop(k, None)
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rref(m: Sequence[Sequence], ncols: int | None = None) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns of ``m``."""
    if ncols is None:
        ncols = len(m[0]) if m else 0
    rows, pivots = _eliminate(_sparse(m), ncols)
    dense = tuple(tuple(r.get(j, ZERO) for j in range(ncols)) for r in rows)
    return dense, pivots


def span_rank(vectors: Sequence[Sequence]) -> int:
    """Exact rank of the span of ``vectors``."""
    if not vectors:
        return 0
    n = len(vectors[0])
    if any(len(v) != n for v in vectors):
        raise DimensionError("vectors must share a dimension")
    rows, _ = _eliminate(_sparse(vectors), n)
    return len(rows)


def nullspace(m: Sequence[Sequence], ncols: int | None = None) -> list[Vector]:
    """Exact basis of ``{x : m x = 0}``, one vector per free column."""
    if ncols is None:
        if not m:
            raise DimensionError("column count unknown for an empty matrix")
        ncols = len(m[0])
    rows, pivots = _eliminate(_sparse(m), ncols)
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        x = [ZERO] * ncols
        x[free] = ONE
        for row, p in zip(rows, pivots):
            c = row.get(free)
            if c:
                x[p] = -c
        basis.append(tuple(x))
    return basis


def independent_subset(vectors: Sequence[Sequence]) -> list[int]:
    """Indices of the first maximal linearly independent subfamily."""
    if not vectors:
        return []
    # pivots of the transposed system pick out independent columns
    cols = transpose(vectors)
    _, pivots = rref(cols, len(vectors))
    return pivots


def solve(a: Sequence[Sequence], b: Sequence) -> Vector | None:
    """One exact solution of ``a x = b`` (free variables zero) or None."""
    nrows = len(a)
    ncols = len(a[0]) if nrows else 0
    if len(b) != nrows:
        raise DimensionError("right-hand side has wrong length")
    aug = [tuple(a[i]) + (scalar(b[i]),) for i in range(nrows)]
    rows, pivots = _eliminate(_sparse(aug), ncols + 1)
    if pivots and pivots[-1] == ncols:
        return None
    x = [ZERO] * ncols
    for row, p in zip(rows, pivots):
        x[p] = row.get(ncols, ZERO)
    return tuple(x)


def coordinates(basis: Sequence[Sequence], v: Sequence) -> Vector | None:
    """Coefficients of ``v`` in the (independent) family ``basis``, or None."""
    if not basis:
        return () if is_zero(v) else None
    return solve(transpose(basis), v)


def inverse(m: Sequence[Sequence]) -> Matrix:
    n = len(m)
    aug = [tuple(m[i]) + unit_vector(n, i) for i in range(n)]
    rows, pivots = rref(aug, 2 * n)
    if pivots[:n] != list(range(n)) or len(rows) < n:
        raise ValueError("singular matrix")
    return tuple(tuple(r[n:]) for r in rows)


def orthogonal_complement(form: SymmetricForm, vectors: Sequence[Sequence]) -> list[Vector]:
    """Basis of ``{x : (v, x) = 0 for all v}``."""
    if not vectors:
        return [unit_vector(form.dimension, i) for i in range(form.dimension)]
    return nullspace([form.functional(v) for v in vectors], form.dimension)


def lcm_denominator(values: Iterable[Fraction]) -> int:
    from math import lcm
    d = 1
    for x in values:
        d = lcm(d, x.denominator)
    return d


def fmt(x: Fraction) -> str:
    """Render a rational as ``"p"`` or ``"p/q"``."""
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
