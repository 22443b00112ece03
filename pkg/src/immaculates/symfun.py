"""Just enough commutative symmetric function machinery: h and e monomials
indexed by partitions, (skew) Schur functions through the determinant
formula, composition-indexed straightening, and the bridge into QSym.

The determinant formula is always expanded over permutations with the two
standing conventions: an index entry 0 contributes an empty factor and a
negative entry kills the term.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .compositions import (
    Composition,
    Partition,
    compositions_of,
    permutation_sign,
    sort_to_partition,
)
from .elements import Element
from . import qsym

BASES = ("H", "E", "S")


def make(basis: str, degree: int, terms) -> Element:
    if basis not in BASES:
        raise ValueError(f"unknown Sym basis {basis!r}")
    return Element("Sym", basis, degree, terms)


def from_index(basis: str, index) -> Element:
    index = Partition(index)
    return make(basis, index.degree, {index: 1})


def one(basis: str = "H") -> Element:
    return make(basis, 0, {Partition(): 1})


# ---------------------------------------------------------------------------
# conversions


@lru_cache(maxsize=None)
def _word_swap_row(lam: Partition) -> tuple:
    """h_lam in e monomials (and conversely): product over parts."""
    acc = {Partition(): 1}
    for part in lam:
        nxt = {}
        for beta in compositions_of(part):
            sign = -1 if (part - len(beta)) % 2 else 1
            for idx, c in acc.items():
                key = sort_to_partition(tuple(idx) + tuple(beta))
                nxt[key] = nxt.get(key, 0) + c * sign
        acc = nxt
    return tuple(acc.items())


@lru_cache(maxsize=None)
def _schur_h_row(lam: Partition, mu: Partition) -> tuple:
    """Permutation expansion of the skew determinant det(h_{l_i - m_j - i + j})."""
    k = len(lam)
    mu_pad = tuple(mu) + (0,) * (k - len(mu))
    acc = {}
    for sigma in itertools.permutations(range(1, k + 1)):
        parts = [lam[i] - mu_pad[sigma[i] - 1] - (i + 1) + sigma[i] for i in range(k)]
        if any(p < 0 for p in parts):
            continue
        idx = sort_to_partition(tuple(p for p in parts if p > 0))
        acc[idx] = acc.get(idx, 0) + permutation_sign(sigma)
    return tuple((i, c) for i, c in acc.items() if c)


def _expand_rows(terms, row_fn):
    out = {}
    for lam, c in terms.items():
        for idx, k in row_fn(lam):
            out[idx] = out.get(idx, 0) + c * k
    return out


def _peel_schur(terms):
    work = dict(terms)
    out = {}
    while work:
        lam = min(work)
        c = work.pop(lam)
        if c == 0:
            continue
        out[lam] = c
        for idx, k in _schur_h_row(lam, Partition()):
            if idx == lam:
                continue
            v = work.get(idx, 0) - c * k
            if v:
                work[idx] = v
            elif idx in work:
                del work[idx]
    return {k: v for k, v in out.items() if v}


def convert(x: Element, target: str) -> Element:
    if x.space != "Sym":
        raise ValueError("convert expects a Sym element")
    if target not in BASES:
        raise ValueError(f"unknown Sym basis {target!r}")
    if x.basis == target:
        return make(target, x.degree, x.terms)
    # pivot through H
    if x.basis == "H":
        h_terms = dict(x.terms)
    elif x.basis == "E":
        h_terms = _expand_rows(x.terms, _word_swap_row)
    else:
        h_terms = _expand_rows(x.terms, lambda lam: _schur_h_row(lam, Partition()))
    if target == "H":
        out = h_terms
    elif target == "E":
        out = _expand_rows(h_terms, _word_swap_row)
    else:
        out = _peel_schur(h_terms)
    return make(target, x.degree, out)


def product(x: Element, y: Element) -> Element:
    """Commutative product; on h or e monomials it merges and sorts parts."""
    if x.basis != y.basis:
        raise ValueError("convert to a common basis before multiplying")
    if x.basis == "S":
        return convert(
            product(convert(x, "H"), convert(y, "H")), "S"
        )
    terms = {}
    for a, ca in x.terms.items():
        for b, cb in y.terms.items():
            key = sort_to_partition(tuple(a) + tuple(b))
            terms[key] = terms.get(key, 0) + ca * cb
    return make(x.basis, x.degree + y.degree, terms)


def omega(x: Element) -> Element:
    """The classical involution: swaps h and e monomials, conjugates Schurs."""
    if x.basis in ("H", "E"):
        return make("E" if x.basis == "H" else "H", x.degree, x.terms)
    from .compositions import conjugate

    out = {}
    for lam, c in x.terms.items():
        key = conjugate(lam)
        out[key] = out.get(key, 0) + c
    return make("S", x.degree, out)


# ---------------------------------------------------------------------------
# Schur constructions


def schur_jt(lam, mu=()) -> Element:
    """The (skew) Schur function as an H-basis element."""
    lam, mu = Partition(lam), Partition(mu)
    if len(mu) > len(lam) or any(m > l for l, m in zip(lam, mu)):
        raise ValueError(f"{tuple(mu)} is not contained in {tuple(lam)}")
    degree = lam.degree - mu.degree
    return make("H", degree, dict(_schur_h_row(lam, mu)))


def schur_of_composition(lam, alpha) -> Element:
    """The straightened skew determinant with a composition in place of mu.

    Vanishes exactly when two column indices coincide; otherwise equals the
    partition-indexed skew Schur function up to the straightening sign.
    """
    lam = Partition(lam)
    alpha = Composition(alpha)
    if len(alpha) > len(lam) or any(a > l for l, a in zip(lam, alpha)):
        raise ValueError(f"{tuple(alpha)} is not contained in {tuple(lam)}")
    k = len(lam)
    alpha_pad = tuple(alpha) + (0,) * (k - len(alpha))
    acc = {}
    for sigma in itertools.permutations(range(1, k + 1)):
        parts = [lam[i] - alpha_pad[sigma[i] - 1] - (i + 1) + sigma[i] for i in range(k)]
        if any(p < 0 for p in parts):
            continue
        idx = sort_to_partition(tuple(p for p in parts if p > 0))
        acc[idx] = acc.get(idx, 0) + permutation_sign(sigma)
    degree = lam.degree - alpha.degree
    return make("H", degree, acc)


def sigma_action(lam, sigma) -> Composition | None:
    """Reindex a partition by a permutation, or None when a part dies.

    sigma is given in one-line notation on 1..len(lam); position i receives
    lam[sigma_i] + i - sigma_i, and any nonpositive value kills the result.
    """
    lam = Partition(lam)
    k = len(lam)
    if sorted(sigma) != list(range(1, k + 1)):
        raise ValueError(f"{sigma} is not a permutation of 1..{k}")
    parts = [lam[sigma[i] - 1] + (i + 1) - sigma[i] for i in range(k)]
    if any(p <= 0 for p in parts):
        return None
    return Composition(parts)


def straightening_permutations(mu) -> list[tuple[int, ...]]:
    """All permutations tau with tau(mu) a composition, identity first."""
    mu = Partition(mu)
    k = len(mu)
    out = []
    for tau in itertools.permutations(range(1, k + 1)):
        if sigma_action(mu, tau) is not None:
            out.append(tau)
    out.sort(key=lambda t: (t != tuple(range(1, k + 1)), t))
    return out


# ---------------------------------------------------------------------------
# embedding into QSym


@lru_cache(maxsize=None)
def _h_monomial_in_m(lam: Partition) -> Element:
    out = qsym.one("M")
    for part in lam:
        factor = qsym.make(
            "M", part, {beta: 1 for beta in compositions_of(part)}
        )
        out = qsym.product_M(out, factor)
    return out


@lru_cache(maxsize=None)
def _e_monomial_in_m(lam: Partition) -> Element:
    out = qsym.one("M")
    for part in lam:
        factor = qsym.from_index("M", (1,) * part)
        out = qsym.product_M(out, factor)
    return out


def to_qsym(x: Element, basis: str = "M") -> Element:
    """Embed a commutative element into QSym (injective per degree)."""
    if x.space != "Sym":
        raise ValueError("to_qsym expects a Sym element")
    if x.basis == "S":
        x = convert(x, "H")
    mono = _h_monomial_in_m if x.basis == "H" else _e_monomial_in_m
    total = qsym.zero("M", x.degree)
    for lam, c in x.terms.items():
        total = total + mono(lam).scalar_mul(c)
    if basis == "M":
        return total
    return qsym.convert(total, basis)
