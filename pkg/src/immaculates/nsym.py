"""Noncommutative symmetric functions in the elementary, complete
homogeneous, ribbon, immaculate and row-strict immaculate bases.

The complete homogeneous words are the internal pivot: their product is
concatenation of indices and they pair diagonally with the monomial basis
of QSym.  Both immaculate bases expand through signed determinant-style
sums over permutations (with zero index entries dropped and negative ones
killing the term); the leading term is the index itself, so the inverse
conversions peel along lex order with integer coefficients throughout.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .compositions import (
    Composition,
    complement,
    permutation_sign,
    refinements,
    reverse,
    sort_to_partition,
    transpose,
)
from .elements import Element
from . import qsym
from . import symfun

BASES = ("H", "E", "R", "IMM", "RSIMM")


def make(basis: str, degree: int, terms) -> Element:
    if basis not in BASES:
        raise ValueError(f"unknown NSym basis {basis!r}")
    return Element("NSym", basis, degree, terms)


def from_index(basis: str, index) -> Element:
    index = Composition(index)
    return make(basis, index.degree, {index: 1})


def zero(basis: str, degree: int) -> Element:
    return make(basis, degree, {})


def one(basis: str = "H") -> Element:
    return make(basis, 0, {Composition(): 1})


def h(index) -> Element:
    return from_index("H", index)


def e(index) -> Element:
    return from_index("E", index)


def r(index) -> Element:
    return from_index("R", index)


# ---------------------------------------------------------------------------
# index-level expansions


@lru_cache(maxsize=None)
def _word_swap_row(alpha: Composition) -> tuple:
    """h in terms of e words (and vice versa): signed sum over refinements."""
    out = []
    n = alpha.degree
    for beta in refinements(alpha):
        sign = -1 if (n - len(beta)) % 2 else 1
        out.append((beta, sign))
    return tuple(out)


@lru_cache(maxsize=None)
def _ribbon_to_h_row(alpha: Composition) -> tuple:
    from .compositions import coarsenings

    out = []
    for beta in coarsenings(alpha):
        sign = -1 if (len(alpha) - len(beta)) % 2 else 1
        out.append((beta, sign))
    return tuple(out)


@lru_cache(maxsize=None)
def _h_to_ribbon_row(alpha: Composition) -> tuple:
    from .compositions import coarsenings

    return tuple((beta, 1) for beta in coarsenings(alpha))


@lru_cache(maxsize=None)
def jacobi_trudi_row(alpha: Composition) -> tuple:
    """Signed word expansion of an immaculate index.

    Sums sign(sigma) times the word with parts alpha_i + sigma_i - i; a part
    equal to 0 contributes an empty factor and a negative part kills the
    whole term.
    """
    m = len(alpha)
    acc = {}
    for sigma in itertools.permutations(range(1, m + 1)):
        parts = [alpha[i] + sigma[i] - (i + 1) for i in range(m)]
        if any(p < 0 for p in parts):
            continue
        word = Composition(tuple(p for p in parts if p > 0))
        sign = permutation_sign(sigma)
        acc[word] = acc.get(word, 0) + sign
    return tuple((w, c) for w, c in acc.items() if c != 0)


def _expand_rows(terms, row_fn):
    out = {}
    for alpha, c in terms.items():
        for beta, k in row_fn(alpha):
            out[beta] = out.get(beta, 0) + c * k
    return out


def _peel_jacobi_trudi(terms):
    """Invert the signed word expansion by peeling lex-least words."""
    work = dict(terms)
    out = {}
    while work:
        alpha = min(work)
        c = work.pop(alpha)
        if c == 0:
            continue
        out[alpha] = c
        for beta, k in jacobi_trudi_row(alpha):
            if beta == alpha:
                continue
            v = work.get(beta, 0) - c * k
            if v:
                work[beta] = v
            elif beta in work:
                del work[beta]
    return {k: v for k, v in out.items() if v}


def _to_h(x: Element) -> dict:
    if x.basis == "H":
        return dict(x.terms)
    if x.basis == "E":
        return _expand_rows(x.terms, _word_swap_row)
    if x.basis == "R":
        return _expand_rows(x.terms, _ribbon_to_h_row)
    if x.basis == "IMM":
        return _expand_rows(x.terms, jacobi_trudi_row)
    # RSIMM expands into e words with the same index arithmetic
    e_terms = _expand_rows(x.terms, jacobi_trudi_row)
    return _expand_rows(e_terms, _word_swap_row)


def _from_h(terms, target, degree):
    if target == "H":
        return terms
    if target == "E":
        return _expand_rows(terms, _word_swap_row)
    if target == "R":
        return _expand_rows(terms, _h_to_ribbon_row)
    if target == "IMM":
        return _peel_jacobi_trudi(terms)
    # RSIMM: move to e words, then peel the e-side expansion
    return _peel_jacobi_trudi(_expand_rows(terms, _word_swap_row))


def convert(x: Element, target: str) -> Element:
    if x.space != "NSym":
        raise ValueError("convert expects an NSym element")
    if target not in BASES:
        raise ValueError(f"unknown NSym basis {target!r}")
    if x.basis == target:
        return make(target, x.degree, x.terms)
    return make(target, x.degree, _from_h(_to_h(x), target, x.degree))


# ---------------------------------------------------------------------------
# product and pairing


def product(x: Element, y: Element) -> Element:
    """Bilinear product; on H or E words it concatenates indices.

    When both factors share a basis the result is returned in it; otherwise
    it comes back in H.
    """
    if x.space != "NSym" or y.space != "NSym":
        raise ValueError("product expects NSym elements")
    degree = x.degree + y.degree
    if x.basis == y.basis and x.basis in ("H", "E"):
        terms = {}
        for a, ca in x.terms.items():
            for b, cb in y.terms.items():
                key = Composition(tuple(a) + tuple(b))
                terms[key] = terms.get(key, 0) + ca * cb
        return make(x.basis, degree, terms)
    xh, yh = _to_h(x), _to_h(y)
    terms = {}
    for a, ca in xh.items():
        for b, cb in yh.items():
            key = Composition(tuple(a) + tuple(b))
            terms[key] = terms.get(key, 0) + ca * cb
    out = make("H", degree, terms)
    if x.basis == y.basis:
        return convert(out, x.basis)
    return out


def pair(g: Element, f: Element) -> int:
    """The duality pairing; diagonal between H words and the M basis."""
    if g.space != "NSym" or f.space != "QSym":
        raise ValueError("pair takes an NSym element and a QSym element")
    if g.degree != f.degree:
        return 0
    gh = _to_h(g)
    fm = qsym.convert(f, "M").terms
    return sum(c * fm.get(alpha, 0) for alpha, c in gh.items())


# ---------------------------------------------------------------------------
# involutions and the forgetful map


def _map_indices(x, basis, fn):
    out = {}
    for alpha, c in x.terms.items():
        beta = fn(alpha)
        out[beta] = out.get(beta, 0) + c
    return make(basis, x.degree, out)


def psi(x: Element) -> Element:
    """The automorphism exchanging h and e words index-wise."""
    if x.basis == "H":
        return make("E", x.degree, x.terms)
    if x.basis == "E":
        return make("H", x.degree, x.terms)
    if x.basis == "R":
        return _map_indices(x, "R", complement)
    if x.basis == "IMM":
        return make("RSIMM", x.degree, x.terms)
    return make("IMM", x.degree, x.terms)


def rho(x: Element) -> Element:
    """The anti-automorphism reversing words."""
    if x.basis in ("H", "E"):
        return _map_indices(x, x.basis, reverse)
    if x.basis == "R":
        return _map_indices(x, "R", reverse)
    return convert(rho(convert(x, "H")), x.basis)


def omega(x: Element) -> Element:
    """rho composed with psi: h words reverse into e words."""
    if x.basis == "H":
        return _map_indices(x, "E", reverse)
    if x.basis == "E":
        return _map_indices(x, "H", reverse)
    if x.basis == "R":
        return _map_indices(x, "R", transpose)
    return convert(omega(convert(x, "H")), x.basis)


def chi(x: Element) -> Element:
    """Forgetful map onto commutative symmetric functions.

    Words map to their partition-sorted commutative monomials; the result
    lives in the "Sym" space, in the H basis (or E, for E-basis input).
    """
    if x.basis in ("H", "E"):
        out = {}
        for alpha, c in x.terms.items():
            lam = sort_to_partition(alpha)
            out[lam] = out.get(lam, 0) + c
        return symfun.make(x.basis, x.degree, out)
    return chi(convert(x, "H"))
