"""Adjoint (perp) operators and the two families of Bernstein-style
creation operators on NSym.

perp is computed from the generic pairing formula with the dual pair
(h words, monomial basis): F-perp of g sums <g, F * M_a> h_a over all a of
the right degree.  The recursions that perp satisfies against right
multiplication are exercised in the tests, not used as the implementation.

The operator sums are written as infinite series; since perp lowers degree
they truncate at i = deg(g), and word factors with nonpositive subscripts
follow the usual conventions (subscript 0 is the identity factor, negative
subscripts kill the term).
"""

from __future__ import annotations

from .compositions import Composition, compositions_of
from .elements import Element
from . import nsym
from . import qsym


def perp(f: Element, g: Element) -> Element:
    """The operator adjoint to left multiplication by f under the pairing.

    Lowers degree by deg(f); the result is returned on h words.
    """
    if f.space != "QSym" or g.space != "NSym":
        raise ValueError("perp takes a QSym element and an NSym element")
    d = g.degree - f.degree
    if d < 0 or f.is_zero() or g.is_zero():
        return nsym.zero("H", max(d, 0))
    f_m = qsym.convert(f, "M")
    g_h = nsym.convert(g, "H")
    terms = {}
    for alpha in compositions_of(d):
        shifted = qsym.product_M(f_m, qsym.from_index("M", alpha))
        c = sum(ck * g_h.terms.get(idx, 0) for idx, ck in shifted.terms.items())
        if c:
            terms[alpha] = c
    return nsym.make("H", d, terms)


def _f_column(i: int) -> Element:
    """F indexed by a column (1^i); its monomial expansion is a single term."""
    return qsym.from_index("F", (1,) * i) if i else qsym.one("F")


def _f_row(i: int) -> Element:
    """F indexed by a single row (i)."""
    return qsym.from_index("F", (i,)) if i else qsym.one("F")


def _prepend_word(m: int, x: Element, basis: str) -> Element:
    """Left multiply by the word generator of subscript m (m = 0 is a no-op)."""
    if m == 0:
        return nsym.make(basis, x.degree, x.terms)
    terms = {}
    for idx, c in x.terms.items():
        key = Composition((m,) + tuple(idx))
        terms[key] = terms.get(key, 0) + c
    return nsym.make(basis, x.degree + m, terms)


def bernstein(m: int, g: Element) -> Element:
    """The raising operator building the immaculate basis, on h words."""
    if g.space != "NSym":
        raise ValueError("bernstein acts on NSym elements")
    target = m + g.degree
    if target < 0:
        return nsym.zero("H", 0)
    total = nsym.zero("H", target)
    for i in range(g.degree + 1):
        if m + i < 0:
            continue
        dropped = perp(_f_column(i), g)
        if dropped.is_zero():
            continue
        term = _prepend_word(m + i, dropped, "H")
        total = total + (term if i % 2 == 0 else -term)
    return total


def bernstein_rs(m: int, g: Element) -> Element:
    """The row-strict raising operator, on e words."""
    if g.space != "NSym":
        raise ValueError("bernstein_rs acts on NSym elements")
    target = m + g.degree
    if target < 0:
        return nsym.zero("E", 0)
    total = nsym.zero("E", target)
    for i in range(g.degree + 1):
        if m + i < 0:
            continue
        dropped = perp(_f_row(i), g)
        if dropped.is_zero():
            continue
        term = _prepend_word(m + i, nsym.convert(dropped, "E"), "E")
        total = total + (term if i % 2 == 0 else -term)
    return total


def immaculate(alpha) -> Element:
    """Iterated creation on the unit; alpha may have entries <= 0.

    For a composition index this equals the signed determinant-style word
    expansion; for general integer vectors it is whatever the operator
    composition produces.
    """
    out = nsym.one("H")
    for m in reversed([int(a) for a in alpha]):
        out = bernstein(m, out)
    return out


def rs_immaculate(alpha) -> Element:
    """Row-strict companion of ``immaculate``, built on e words."""
    out = nsym.one("E")
    for m in reversed([int(a) for a in alpha]):
        out = bernstein_rs(m, out)
    return out


def left_mult_h_via_ops(m: int, g: Element) -> Element:
    """Left multiplication by the degree-m h generator, written with
    creation operators; must agree with the plain product."""
    total = nsym.zero("H", m + g.degree)
    for i in range(g.degree + 1):
        dropped = perp(_f_row(i), g)
        if dropped.is_zero():
            continue
        total = total + bernstein(m + i, dropped)
    return total


def left_mult_e_via_ops(m: int, g: Element) -> Element:
    """Left multiplication by the degree-m e generator via the row-strict
    operators."""
    total = nsym.zero("E", m + g.degree)
    for i in range(g.degree + 1):
        dropped = perp(_f_column(i), g)
        if dropped.is_zero():
            continue
        total = total + bernstein_rs(m + i, dropped)
    return total
