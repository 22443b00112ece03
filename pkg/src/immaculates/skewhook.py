"""Skew dual immaculate and skew row-strict dual immaculate functions by
their three constructions, the coproducts they control, and the
two-alphabet hook functions.

The three skew routes, which must agree and are cross-checked by the
verification harness:

- pairing: coefficients <(row-strict) immaculate_beta * h_gamma, dual_alpha>
  collected on the monomial basis;
- paths / standard tableaux: fundamental expansion over removal paths,
  reading descent sets (dual immaculate) or weak ascent sets (row-strict);
- generating function: the content-monomial sum over semistandard skew
  fillings, matching the polynomial realization of the other two.

Hook objects live in two ordered alphabets and are returned as exact
bipolynomials.
"""

from __future__ import annotations

import itertools

from .compositions import (
    Composition,
    Partition,
    comp_of,
    compositions_of,
    contains,
    permutation_sign,
    set_of,
)
from .elements import Element, TensorElem
from .polynomials import BiPoly, Poly
from .tableaux import (
    IMMACULATE,
    PRIMED,
    ROW_STRICT,
    UNPRIMED,
    Shape,
    descents,
    enumerate_hook,
    enumerate_paths,
    enumerate_standard,
    enumerate_tableaux,
    hook_content,
    path_descents,
)
from . import nsym
from . import qsym
from . import symfun

KINDS = ("DI", "RSDI")


def _check_kind(kind):
    if kind not in KINDS:
        raise ValueError(f"unknown skew kind {kind!r}")


def _tableau_kind(kind):
    return IMMACULATE if kind == "DI" else ROW_STRICT


def _creation_word(kind, beta) -> Element:
    """The (row-strict) immaculate NSym element on h words."""
    basis = "IMM" if kind == "DI" else "RSIMM"
    return nsym.convert(nsym.from_index(basis, beta), "H")


def subcompositions(alpha) -> list[Composition]:
    """All shapes reachable from alpha by removing cells (alpha included)."""
    alpha = Composition(alpha)
    out = [Composition()]
    for j in range(1, len(alpha) + 1):
        for parts in itertools.product(*(range(1, alpha[i] + 1) for i in range(j))):
            out.append(Composition(parts))
    return out


def _require_containment(alpha, beta):
    alpha, beta = Composition(alpha), Composition(beta)
    if not contains(alpha, beta):
        raise ValueError(f"{tuple(beta)} is not contained in {tuple(alpha)}")
    return alpha, beta


def skew_pairing(alpha, beta, kind: str) -> Element:
    """The skew function via duality, on the monomial basis."""
    _check_kind(kind)
    alpha, beta = _require_containment(alpha, beta)
    d = alpha.degree - beta.degree
    creator = _creation_word(kind, beta)
    dual = qsym.from_index("DI" if kind == "DI" else "RSDI", alpha)
    dual_m = qsym.convert(dual, "M")
    terms = {}
    for gamma in compositions_of(d):
        g = nsym.product(creator, nsym.h(gamma) if gamma else nsym.one("H"))
        c = nsym.pair(g, dual_m)
        if c:
            terms[gamma] = c
    return qsym.make("M", d, terms)


def skew_F_expansion(alpha, beta, kind: str, via: str = "paths") -> Element:
    """Fundamental expansion over paths or standard skew tableaux."""
    _check_kind(kind)
    if via not in ("paths", "tableaux"):
        raise ValueError(f"unknown route {via!r}")
    alpha, beta = _require_containment(alpha, beta)
    d = alpha.degree - beta.degree
    terms = {}
    if via == "paths":
        for p in enumerate_paths(alpha, beta):
            des, asc = path_descents(p)
            idx = comp_of(des if kind == "DI" else asc)
            terms[idx] = terms.get(idx, 0) + 1
    else:
        for t in enumerate_standard(Shape(alpha, beta)):
            idx = comp_of(descents(t, _tableau_kind(kind)))
            terms[idx] = terms.get(idx, 0) + 1
    return qsym.make("F", d, terms)


def skew_immaculate_expansion(alpha, beta, kind: str) -> Element:
    """Expansion of the skew function in its own straight basis."""
    _check_kind(kind)
    alpha, beta = _require_containment(alpha, beta)
    d = alpha.degree - beta.degree
    creator = _creation_word(kind, beta)
    basis = "DI" if kind == "DI" else "RSDI"
    dual_m = qsym.convert(qsym.from_index(basis, alpha), "M")
    terms = {}
    for gamma in compositions_of(d):
        g = nsym.product(creator, _creation_word(kind, gamma))
        c = nsym.pair(g, dual_m)
        if c:
            terms[gamma] = c
    return qsym.make(basis, d, terms)


def skew_generating_function(alpha, beta, kind: str, nvars: int) -> Poly:
    """Content-monomial sum over semistandard skew fillings with entries
    bounded by nvars."""
    _check_kind(kind)
    alpha, beta = _require_containment(alpha, beta)
    shape = Shape(alpha, beta)
    if nvars == 0:
        return Poly(0, {(): 1}) if shape.size == 0 else Poly(0)
    total = Poly.zero(nvars)
    for t in enumerate_tableaux(shape, _tableau_kind(kind), nvars):
        exps = [0] * nvars
        for entry in t.entries():
            exps[entry - 1] += 1
        total = total + Poly.monomial(exps)
    return total


# ---------------------------------------------------------------------------
# coproducts


def _coproduct_via_skew(alpha, kind: str) -> TensorElem:
    alpha = Composition(alpha)
    terms = {}
    for gamma in subcompositions(alpha):
        straight = qsym.convert(
            qsym.from_index("DI" if kind == "DI" else "RSDI", gamma)
            if gamma
            else qsym.one("DI" if kind == "DI" else "RSDI"),
            "F",
        )
        skew = skew_F_expansion(alpha, gamma, kind)
        for left, cl in straight.terms.items():
            for right, cr in skew.terms.items():
                key = (left, right)
                terms[key] = terms.get(key, 0) + cl * cr
    return TensorElem("QSym", "F", "F", alpha.degree, terms)


def coproduct_DI(alpha) -> TensorElem:
    """Coproduct of a dual immaculate function, legs written on F."""
    return _coproduct_via_skew(alpha, "DI")


def coproduct_RSDI(alpha) -> TensorElem:
    """Coproduct of a row-strict dual immaculate function, legs on F."""
    return _coproduct_via_skew(alpha, "RSDI")


def coproduct_via_F(alpha, kind: str) -> TensorElem:
    """Independent route: deconcatenate the fundamental expansion."""
    _check_kind(kind)
    x = qsym.convert(
        qsym.from_index("DI" if kind == "DI" else "RSDI", Composition(alpha)), "F"
    )
    return qsym.coproduct_F(x)


# ---------------------------------------------------------------------------
# super fundamental functions


def super_fundamental(alpha, l: int, k: int) -> BiPoly:
    """Two-alphabet fundamental function; repeats of an unprimed letter are
    barred at marked positions and repeats of a primed letter required
    there."""
    alpha = Composition(alpha)
    if l < 0 or k < 0:
        raise ValueError("alphabet sizes must be nonnegative")
    n = alpha.degree
    marked = set(set_of(alpha).elements)
    letters = [(UNPRIMED, v) for v in range(1, l + 1)] + [
        (PRIMED, v) for v in range(1, k + 1)
    ]
    terms = {}

    def rec(pos, prev, xe, ye):
        if pos == n:
            key = (tuple(xe), tuple(ye))
            terms[key] = terms.get(key, 0) + 1
            return
        for a in letters:
            if prev is not None:
                if a < prev:
                    continue
                if a == prev:
                    i = pos  # the constraint sits between positions pos and pos+1
                    if a[0] == UNPRIMED and i in marked:
                        continue
                    if a[0] == PRIMED and i not in marked:
                        continue
            if a[0] == UNPRIMED:
                xe[a[1] - 1] += 1
                rec(pos + 1, a, xe, ye)
                xe[a[1] - 1] -= 1
            else:
                ye[a[1] - 1] += 1
                rec(pos + 1, a, xe, ye)
                ye[a[1] - 1] -= 1

    if n == 0:
        return BiPoly(l, k, {((0,) * l, (0,) * k): 1})
    rec(0, None, [0] * l, [0] * k)
    return BiPoly(l, k, terms)


def super_fundamental_via_split(alpha, l: int, k: int) -> BiPoly:
    """Product form: split the index at every position, fundamental on the
    x alphabet times fundamental on the y alphabet.

    The second leg carries the complementary index: the primed alphabet
    obeys the complementary repetition rule, so the all-primed boundary
    word sums to F of the complement, not of the index itself.
    """
    from .compositions import complement

    alpha = Composition(alpha)
    total = BiPoly.zero(l, k)
    for left, right in qsym._splittings(alpha):
        px = qsym.realize(qsym.from_index("F", left) if left else qsym.one("F"), l)
        ridx = complement(right) if right else right
        py = qsym.realize(qsym.from_index("F", ridx) if ridx else qsym.one("F"), k)
        total = total + BiPoly.from_product(px, py)
    return total


# ---------------------------------------------------------------------------
# hook functions


def hook_dI(alpha, l: int, k: int) -> BiPoly:
    """Generating function of semistandard hook tableaux of a straight
    shape."""
    alpha = Composition(alpha)
    terms = {}
    for t in enumerate_hook(Shape(alpha), l, k):
        key = hook_content(t, l, k)
        terms[key] = terms.get(key, 0) + 1
    return BiPoly(l, k, terms)


def hook_dI_via_factorization(alpha, l: int, k: int) -> BiPoly:
    """Independent route: straight dual immaculate on x times skew
    row-strict generating function on y, summed over splitting shapes."""
    alpha = Composition(alpha)
    total = BiPoly.zero(l, k)
    for gamma in subcompositions(alpha):
        px = qsym.realize(
            qsym.from_index("DI", gamma) if gamma else qsym.one("DI"), l
        )
        if px.is_zero():
            continue
        py = skew_generating_function(alpha, gamma, "RSDI", k)
        if py.is_zero():
            continue
        total = total + BiPoly.from_product(px, py)
    return total


def hook_fund_expansion(alpha, l: int, k: int) -> BiPoly:
    """Super fundamental expansion over standard tableaux of the shape."""
    alpha = Composition(alpha)
    total = BiPoly.zero(l, k)
    for t in enumerate_standard(Shape(alpha)):
        idx = comp_of(descents(t, IMMACULATE))
        total = total + super_fundamental(idx, l, k)
    return total


def _partitions_inside(lam: Partition) -> list[Partition]:
    out = []

    def rec(i, cap, acc):
        out.append(Partition(tuple(acc)))
        if i >= len(lam):
            return
        for part in range(1, min(cap, lam[i]) + 1):
            acc.append(part)
            rec(i + 1, part, acc)
            acc.pop()

    rec(0, lam[0] if lam else 0, [])
    return out


def hook_schur(lam, l: int, k: int) -> BiPoly:
    """Two-alphabet Schur function: straight Schur on x times the
    conjugate-skew Schur on y, over all contained partitions."""
    lam = Partition(lam)
    from .compositions import conjugate

    lam_c = conjugate(lam)
    total = BiPoly.zero(l, k)
    for mu in _partitions_inside(lam):
        px = qsym.realize(symfun.to_qsym(symfun.schur_jt(mu)), l)
        if px.is_zero():
            continue
        py = qsym.realize(
            symfun.to_qsym(symfun.schur_jt(lam_c, conjugate(mu))), k
        )
        if py.is_zero():
            continue
        total = total + BiPoly.from_product(px, py)
    return total


def hook_schur_expansion(lam, l: int, k: int) -> BiPoly:
    """Signed sum of hook dual immaculate functions over reindexings of the
    partition; reindexings that kill a part are dropped."""
    lam = Partition(lam)
    total = BiPoly.zero(l, k)
    for tau in itertools.permutations(range(1, len(lam) + 1)):
        idx = symfun.sigma_action(lam, tau)
        if idx is None:
            continue
        piece = hook_dI(idx, l, k)
        total = total + (
            piece if permutation_sign(tau) == 1 else piece.scalar_mul(-1)
        )
    return total
