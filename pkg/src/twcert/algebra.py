"""Exact matrices, permanents, sparse homogeneous polynomials, inner products.

Everything on the symbolic path is exact: integer matrix entries, rational
polynomial coefficients (int or Fraction), arbitrary-precision permanents.
Floating point appears only in the quadrature estimate of the plain inner
product, which exists as an independent numeric cross-check.

A polynomial is a map from exponent tuples (one entry per variable) to exact
coefficients; only homogeneous polynomials are representable, since every
polynomial this package manipulates is homogeneous.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .graphs import Edge, EdgeVector, Graph, vector_factorial, vector_total

Coeff = "int | Fraction"


@dataclass(frozen=True)
class IntMatrix:
    """Dense integer matrix, row-major, immutable."""

    rows: int
    cols: int
    data: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.data) != self.rows or any(len(r) != self.cols for r in self.data):
            raise ValueError("matrix shape mismatch")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "IntMatrix":
        data = tuple(tuple(int(x) for x in r) for r in rows)
        return cls(len(data), len(data[0]) if data else 0, data)

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.data)


def build_a(g: Graph) -> IntMatrix:
    """Oriented incidence matrix: row per edge (u, v) with +1 at u, -1 at v."""
    data = []
    for u, v in g.edges:
        row = [0] * g.n
        row[u - 1] = 1
        row[v - 1] = -1
        data.append(tuple(row))
    return IntMatrix(g.m, g.n, tuple(data))


def build_b(g: Graph) -> IntMatrix:
    """Unsigned incidence matrix: row per edge with 1 at both endpoints."""
    data = []
    for u, v in g.edges:
        row = [0] * g.n
        row[u - 1] = 1
        row[v - 1] = 1
        data.append(tuple(row))
    return IntMatrix(g.m, g.n, tuple(data))


def build_c(g: Graph) -> IntMatrix:
    """Edge-difference matrix: entry (e, f) is +1 if f meets e at e's lower
    endpoint, -1 at its upper endpoint, 0 otherwise (so the diagonal is zero).

    Row e lists how each other edge contributes to the difference of endpoint
    sums across e; the product of these row forms is the graph's weighting
    polynomial.  Equals build_a(g) times build_b(g) transposed.
    """
    m = g.m
    data = [[0] * m for _ in range(m)]
    for i, (u, v) in enumerate(g.edges):
        for jdx, f in enumerate(g.edges):
            if jdx == i:
                continue
            if u in f:
                data[i][jdx] += 1
            if v in f:
                data[i][jdx] -= 1
    return IntMatrix.from_rows(data)


def matmul_abt(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    """Exact product A * B^T."""
    if a.cols != b.cols:
        raise ValueError("inner dimension mismatch")
    data = tuple(
        tuple(sum(x * y for x, y in zip(ra, rb)) for rb in b.data)
        for ra in a.data
    )
    return IntMatrix(a.rows, b.rows, data)


def replicate_cols(m: IntMatrix, counts: Sequence[int]) -> IntMatrix:
    """Matrix whose columns are counts[j] copies of column j, in order."""
    if len(counts) != m.cols:
        raise ValueError("count vector length must equal column count")
    cols = [j for j, c in enumerate(counts) for _ in range(c)]
    data = tuple(tuple(row[j] for j in cols) for row in m.data)
    return IntMatrix(m.rows, len(cols), data)


def replicate_rows(m: IntMatrix, counts: Sequence[int]) -> IntMatrix:
    """Matrix whose rows are counts[i] copies of row i, in order."""
    if len(counts) != m.rows:
        raise ValueError("count vector length must equal row count")
    data = tuple(m.data[i] for i, c in enumerate(counts) for _ in range(c))
    return IntMatrix(len(data), m.cols, data)


# ---------------------------------------------------------------------------
# Permanents
# ---------------------------------------------------------------------------

def permanent(m: IntMatrix) -> int:
    """Exact permanent via inclusion-exclusion over column subsets.

    Iterates subsets in Gray-code order so each step updates the cached row
    sums by a single column.  Arbitrary precision: the accumulator and the
    products are Python ints.  A vectorised int64 path handles larger
    matrices when the row sums provably fit in 63 bits.
    """
    if m.rows != m.cols:
        raise ValueError(f"permanent needs a square matrix, got {m.rows}x{m.cols}")
    n = m.rows
    if n == 0:
        return 1
    max_abs_rowsum = max(sum(abs(x) for x in row) for row in m.data)
    if n >= 15 and max_abs_rowsum < 2 ** 62:
        return _permanent_gray_numpy(m)
    return _permanent_gray_python(m)


def _permanent_gray_python(m: IntMatrix) -> int:
    n = m.rows
    cols = [m.column(j) for j in range(n)]
    row_sums = [0] * n
    total = 0
    size = 0
    for s in range(1, 1 << n):
        j = (s & -s).bit_length() - 1
        gray_bit = ((s ^ (s >> 1)) >> j) & 1
        col = cols[j]
        if gray_bit:
            size += 1
            for i in range(n):
                row_sums[i] += col[i]
        else:
            size -= 1
            for i in range(n):
                row_sums[i] -= col[i]
        prod = 1
        for x in row_sums:
            if x == 0:
                prod = 0
                break
            prod *= x
        if prod:
            total += prod if (size & 1) == 0 else -prod
    return total if (n & 1) == 0 else -total


def _permanent_gray_numpy(m: IntMatrix) -> int:
    n = m.rows
    cols = [np.array(m.column(j), dtype=np.int64) for j in range(n)]
    row_sums = np.zeros(n, dtype=np.int64)
    total = 0
    size = 0
    for s in range(1, 1 << n):
        j = (s & -s).bit_length() - 1
        gray_bit = ((s ^ (s >> 1)) >> j) & 1
        if gray_bit:
            size += 1
            row_sums += cols[j]
        else:
            size -= 1
            row_sums -= cols[j]
        if row_sums.all():
            prod = math.prod(row_sums.tolist())
            total += prod if (size & 1) == 0 else -prod
    return total if (n & 1) == 0 else -total


def permanent_row_expansion(m: IntMatrix, rowset: Iterable[int]) -> int:
    """Permanent via generalized expansion along a set of rows (0-based).

    Sums, over all column subsets I of size |rowset|, the permanent of the
    (rowset x I) submatrix times the permanent of the complementary block.
    Equals permanent(m) for every row subset.
    """
    if m.rows != m.cols:
        raise ValueError(f"permanent needs a square matrix, got {m.rows}x{m.cols}")
    rows = sorted(set(rowset))
    if any(not 0 <= r < m.rows for r in rows):
        raise ValueError("row index out of range")
    rest = [r for r in range(m.rows) if r not in rows]
    total = 0
    for cols in combinations(range(m.cols), len(rows)):
        colset = set(cols)
        other = [c for c in range(m.cols) if c not in colset]
        top = IntMatrix.from_rows([[m.data[r][c] for c in cols] for r in rows]) \
            if rows else IntMatrix(0, 0, ())
        bottom = IntMatrix.from_rows([[m.data[r][c] for c in other] for r in rest]) \
            if rest else IntMatrix(0, 0, ())
        t = permanent(top)
        if t:
            total += t * permanent(bottom)
    return total


def weighting_matrix(g: Graph, k: EdgeVector) -> IntMatrix:
    """The edge-difference matrix with columns replicated per the exponent vector."""
    return replicate_cols(build_c(g), k)


def weighting_coefficient(g: Graph, k: EdgeVector) -> Fraction:
    """Exact coefficient of the edge monomial with exponents k in the graph's
    weighting polynomial: permanent of the replicated edge-difference matrix
    divided by the product of entry factorials."""
    if vector_total(k) != g.m:
        raise ValueError(f"exponent total {vector_total(k)} != edge count {g.m}")
    return Fraction(permanent(weighting_matrix(g, k)), vector_factorial(k))


# ---------------------------------------------------------------------------
# Sparse homogeneous polynomials
# ---------------------------------------------------------------------------

class SparsePoly:
    """Homogeneous polynomial: exponent tuple -> exact rational coefficient.

    Zero coefficients are never stored.  The zero polynomial keeps a declared
    degree so degree checks stay meaningful.
    """

    __slots__ = ("nvars", "degree", "terms")

    def __init__(self, nvars: int, terms: dict[tuple[int, ...], Coeff], degree: int | None = None):
        clean = {e: c for e, c in terms.items() if c != 0}
        degs = {sum(e) for e in clean}
        if len(degs) > 1:
            raise ValueError(f"not homogeneous: degrees {sorted(degs)}")
        if degs:
            d = degs.pop()
            if degree is not None and degree != d:
                raise ValueError(f"declared degree {degree} != actual {d}")
            degree = d
        elif degree is None:
            degree = 0
        for e in clean:
            if len(e) != nvars:
                raise ValueError(f"exponent tuple {e} has wrong arity (nvars={nvars})")
        self.nvars = nvars
        self.degree = degree
        self.terms = clean

    @classmethod
    def constant(cls, nvars: int, value: Coeff) -> "SparsePoly":
        return cls(nvars, {(0,) * nvars: value})

    def coefficient(self, exponents: tuple[int, ...]) -> Coeff:
        return self.terms.get(tuple(exponents), 0)

    def monomials(self) -> list[tuple[int, ...]]:
        return sorted(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return (isinstance(other, SparsePoly) and self.nvars == other.nvars
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __add__(self, other: "SparsePoly") -> "SparsePoly":
        if self.nvars != other.nvars:
            raise ValueError("variable-set mismatch")
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return SparsePoly(self.nvars, out, degree=max(self.degree, other.degree))

    def __mul__(self, other: "SparsePoly") -> "SparsePoly":
        # Term-by-term with exponent addition; no transforms needed at this scale.
        if self.nvars != other.nvars:
            raise ValueError("variable-set mismatch")
        out: dict[tuple[int, ...], Coeff] = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                out[e] = out.get(e, 0) + ca * cb
        return SparsePoly(self.nvars, out, degree=self.degree + other.degree)

    def scale(self, c: Coeff) -> "SparsePoly":
        return SparsePoly(self.nvars, {e: c * v for e, v in self.terms.items()},
                          degree=self.degree)

    def eval_complex(self, point: Sequence[complex]) -> complex:
        total = 0j
        for e, c in self.terms.items():
            term = complex(c)
            for exp, z in zip(e, point):
                if exp:
                    term *= z ** exp
            total += term
        return total

    def __repr__(self):
        return f"SparsePoly(nvars={self.nvars}, degree={self.degree}, terms={len(self.terms)})"


def row_form_product(m: IntMatrix) -> SparsePoly:
    """Product over rows of the linear forms sum_j a_ij x_j."""
    poly = SparsePoly.constant(m.cols, 1)
    for row in m.data:
        form = {}
        for j, a in enumerate(row):
            if a:
                e = [0] * m.cols
                e[j] = 1
                form[tuple(e)] = a
        poly = poly * SparsePoly(m.cols, form, degree=1)
    return poly


def weighting_polynomial(g: Graph) -> SparsePoly:
    """The graph's weighting polynomial in edge variables, fully expanded.

    One linear factor per edge: the difference of the two endpoint edge-sums.
    Its monomial coefficients are exactly what weighting_coefficient computes
    through permanents, which is the point of keeping both routes.
    """
    return row_form_product(build_c(g))


def difference_product(edges: Sequence[Edge], nvars: int) -> SparsePoly:
    """Product over edges (i, j), i < j, of (x_i - x_j), in vertex variables."""
    poly = SparsePoly.constant(nvars, 1)
    for u, v in edges:
        e_u = [0] * nvars
        e_u[u - 1] = 1
        e_v = [0] * nvars
        e_v[v - 1] = 1
        poly = poly * SparsePoly(nvars, {tuple(e_u): 1, tuple(e_v): -1}, degree=1)
    return poly


def sum_power_product(edges: Sequence[Edge], k: Sequence[int], nvars: int) -> SparsePoly:
    """Product over edges (i, j) of (x_i + x_j) raised to k[e], in vertex variables."""
    if len(k) != len(edges):
        raise ValueError("exponent vector length must equal edge count")
    poly = SparsePoly.constant(nvars, 1)
    for (u, v), c in zip(edges, k):
        e_u = [0] * nvars
        e_u[u - 1] = 1
        e_v = [0] * nvars
        e_v[v - 1] = 1
        factor = SparsePoly(nvars, {tuple(e_u): 1, tuple(e_v): 1}, degree=1)
        for _ in range(c):
            poly = poly * factor
    return poly


# ---------------------------------------------------------------------------
# Inner products
# ---------------------------------------------------------------------------

def inner_weighted(f: SparsePoly, g: SparsePoly) -> Fraction:
    """Factorial-weighted inner product: sum over monomials of
    (product of exponent factorials) * coeff_f * coeff_g.

    Over the rationals conjugation is the identity.  For products of linear
    forms this equals the permanent of the Gram-style matrix product of the
    two coefficient matrices.
    """
    _check_pairable(f, g)
    total = Fraction(0)
    small, large = (f.terms, g.terms) if len(f.terms) <= len(g.terms) else (g.terms, f.terms)
    for e, c in small.items():
        d = large.get(e)
        if d is not None:
            total += vector_factorial(e) * Fraction(c) * Fraction(d)
    return total


def inner_plain(f: SparsePoly, g: SparsePoly) -> Fraction:
    """Unweighted inner product: sum of coefficient products over monomials."""
    _check_pairable(f, g)
    total = Fraction(0)
    small, large = (f.terms, g.terms) if len(f.terms) <= len(g.terms) else (g.terms, f.terms)
    for e, c in small.items():
        d = large.get(e)
        if d is not None:
            total += Fraction(c) * Fraction(d)
    return total


def inner_plain_quadrature(f: SparsePoly, g: SparsePoly, grid: int = 32) -> complex:
    """Numeric estimate of inner_plain by averaging f * conj(g) over the torus.

    Evaluates on a uniform grid of grid^n points with all variables on the
    unit circle.  Exact (up to float rounding) once grid exceeds the degree,
    so it serves as an independent oracle for the exact inner product.
    """
    _check_pairable(f, g)
    n = f.nvars
    if n > 4:
        raise ValueError(f"quadrature limited to 4 variables, got {n}")
    if grid <= max(f.degree, g.degree):
        raise ValueError("grid must exceed the polynomial degree")
    roots = [cmath.exp(2j * cmath.pi * k / grid) for k in range(grid)]
    total = 0j
    index = [0] * n
    npoints = grid ** n
    for flat in range(npoints):
        r = flat
        for axis in range(n):
            index[axis] = r % grid
            r //= grid
        point = [roots[i] for i in index]
        total += f.eval_complex(point) * g.eval_complex(point).conjugate()
    return total / npoints


def _check_pairable(f: SparsePoly, g: SparsePoly) -> None:
    if f.nvars != g.nvars:
        raise ValueError(f"variable-set mismatch: {f.nvars} vs {g.nvars}")
    if not f.is_zero() and not g.is_zero() and f.degree != g.degree:
        raise ValueError(f"degree mismatch: {f.degree} vs {g.degree}")


# ---------------------------------------------------------------------------
# Text dumps
# ---------------------------------------------------------------------------

def format_matrix(m: IntMatrix) -> str:
    return "\n".join(" ".join(str(x) for x in row) for row in m.data) + "\n"


def format_poly(p: SparsePoly) -> str:
    lines = [f"{p.terms[e]} : {' '.join(str(x) for x in e)}" for e in p.monomials()]
    return "\n".join(lines) + ("\n" if lines else "")
