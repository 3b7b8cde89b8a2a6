"""Fast exact pairing of linear-form products against expanded polynomials.

The factorial-weighted inner product of homogeneous polynomials satisfies
<f, g> = (f applied to g as a differential operator, evaluated at 0): each
monomial c * x^K of f contributes c * K! * coeff_g(K).  When f is a product
of linear forms, the operator factors, so the pairing is computed by applying
one first-order operator per form to an expanded g and reading the constant.

This needs no expansion of the f side and shrinks g by one degree per step,
which is what makes the certification pipeline practical: the expanded side
lives in vertex variables (few), while the form side can have dozens of
factors (one per edge or family member).

Representation: a polynomial is a dict mapping a packed exponent key to an
int coefficient.  Exponents pack into one int, ``bits`` bits per variable.
Linear forms are tuples of (variable index, int coefficient).
"""

from __future__ import annotations

from typing import Iterable, Sequence

Form = tuple[tuple[int, int], ...]
Packed = dict[int, int]


def pack_bits(max_degree: int) -> int:
    """Bits per variable so exponents up to max_degree fit."""
    return max(3, (max_degree + 1).bit_length())


def expand_forms(nvars: int, bits: int, forms: Iterable[Form]) -> Packed:
    """Expand a product of linear forms into a packed polynomial."""
    poly: Packed = {0: 1}
    for form in forms:
        nxt: Packed = {}
        shifted = [(1 << (var * bits), c) for var, c in form]
        for key, coeff in poly.items():
            for step, c in shifted:
                k2 = key + step
                nxt[k2] = nxt.get(k2, 0) + coeff * c
        poly = {k: v for k, v in nxt.items() if v}
        if not poly:
            return {}
    return poly


def mul_form(poly: Packed, form: Form, bits: int) -> Packed:
    """Multiply a packed polynomial by one linear form."""
    out: Packed = {}
    shifted = [(1 << (var * bits), c) for var, c in form]
    for key, coeff in poly.items():
        for step, c in shifted:
            k2 = key + step
            out[k2] = out.get(k2, 0) + coeff * c
    return {k: v for k, v in out.items() if v}


def apply_form(poly: Packed, form: Form, bits: int) -> Packed:
    """Apply the first-order operator sum_i c_i d/dx_i to a packed polynomial."""
    mask = (1 << bits) - 1
    out: Packed = {}
    for key, coeff in poly.items():
        for var, c in form:
            shift = var * bits
            e = (key >> shift) & mask
            if e:
                k2 = key - (1 << shift)
                out[k2] = out.get(k2, 0) + coeff * c * e
    return {k: v for k, v in out.items() if v}


def pair_forms(forms: Sequence[Form], poly: Packed, bits: int) -> int:
    """Weighted inner product of a product of linear forms with a packed polynomial.

    Exact integer result; zero when the degrees do not match.
    """
    p = poly
    for form in forms:
        if not p:
            return 0
        p = apply_form(p, form, bits)
    return p.get(0, 0)


def monomial_form(var: int) -> Form:
    return ((var, 1),)


def edge_sum_form(edge: tuple[int, int]) -> Form:
    """(x_u + x_v) for an edge with 1-based endpoints."""
    u, v = edge
    return ((u - 1, 1), (v - 1, 1))


def edge_diff_form(edge: tuple[int, int]) -> Form:
    """(x_u - x_v) for an edge with 1-based endpoints u < v."""
    u, v = edge
    return ((u - 1, 1), (v - 1, -1))


def pair_edge_monomial(edges: Sequence[tuple[int, int]], k: Sequence[int],
                       poly: Packed, bits: int) -> int:
    """Pair the sum-power product with exponents k against a packed polynomial."""
    forms = []
    for e, c in zip(edges, k):
        forms.extend([edge_sum_form(e)] * c)
    return pair_forms(forms, poly, bits)
