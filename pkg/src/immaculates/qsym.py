"""Quasisymmetric functions in the monomial, fundamental, dual immaculate
and row-strict dual immaculate bases.

The monomial basis is the internal pivot: every conversion routes through
M, where the duality pairing with the complete homogeneous words of NSym is
diagonal.  The change-of-basis data is:

- F_a = sum of M_b over refinements b of a, with the signed Moebius inverse
  back;
- the dual immaculate expansion into M counts immaculate tableaux by
  content (the K matrix), which is unitriangular along lex order, so M -> DI
  is integral back-substitution;
- the row-strict expansion into M counts row-strict immaculate tableaux
  (the Kstar matrix).  Kstar has no useful triangularity (its diagonal can
  vanish), so M -> RSDI is computed by twisting with the involution that
  complements fundamental indices, which swaps the two immaculate bases.

All matrices are computed once per degree and cached; elements are
immutable, so the caches are observationally pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .compositions import (
    Composition,
    comp_of,
    complement,
    compositions_of,
    refinements,
    reverse,
    set_of,
    transpose,
)
from .elements import Element, TensorElem
from .polynomials import Poly
from .tableaux import (
    IMMACULATE,
    ROW_STRICT,
    Shape,
    descents,
    enumerate_standard,
    enumerate_tableaux,
)

BASES = ("M", "F", "DI", "RSDI")

MATRIX_NAMES = ("K", "Kstar", "L", "Lstar")


def make(basis: str, degree: int, terms) -> Element:
    if basis not in BASES:
        raise ValueError(f"unknown QSym basis {basis!r}")
    return Element("QSym", basis, degree, terms)


def from_index(basis: str, index) -> Element:
    index = Composition(index)
    return make(basis, index.degree, {index: 1})


def zero(basis: str, degree: int) -> Element:
    return make(basis, degree, {})


def one(basis: str = "M") -> Element:
    """The unit, indexed by the empty composition."""
    return make(basis, 0, {Composition(): 1})


def scalar_mul(x: Element, c: int) -> Element:
    return x.scalar_mul(c)


# ---------------------------------------------------------------------------
# tableau-counting matrices


@dataclass(frozen=True)
class BasisMatrix:
    """Square array indexed by pairs of compositions of one degree."""

    name: str
    n: int
    entries: dict

    def entry(self, alpha, beta) -> int:
        return self.entries.get((Composition(alpha), Composition(beta)), 0)

    def compositions(self):
        return compositions_of(self.n)

    def to_rows(self) -> list[list[int]]:
        comps = self.compositions()
        return [[self.entry(a, b) for b in comps] for a in comps]

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "n": self.n,
            "compositions": [list(c) for c in self.compositions()],
            "entries": self.to_rows(),
        }


@lru_cache(maxsize=None)
def _content_row(alpha: Composition, kind: str) -> dict:
    """Counts of semistandard tableaux of a straight shape by content."""
    n = alpha.degree
    row = {}
    for t in enumerate_tableaux(Shape(alpha), kind, max(n, 1)):
        counts = [0] * n
        for e in t.entries():
            counts[e - 1] += 1
        while counts and counts[-1] == 0:
            counts.pop()
        if 0 in counts:
            continue  # content skips a letter; not a composition index
        beta = Composition(counts)
        row[beta] = row.get(beta, 0) + 1
    return row


@lru_cache(maxsize=None)
def _descent_row(alpha: Composition, kind: str) -> dict:
    """Counts of standard tableaux of shape alpha by descent composition."""
    row = {}
    for t in enumerate_standard(Shape(alpha)):
        beta = comp_of(descents(t, kind))
        row[beta] = row.get(beta, 0) + 1
    return row


@lru_cache(maxsize=None)
def matrix(name: str, n: int) -> BasisMatrix:
    """The K, Kstar, L or Lstar matrix at degree n."""
    if name not in MATRIX_NAMES:
        raise ValueError(f"unknown matrix {name!r}; pick from {MATRIX_NAMES}")
    entries = {}
    for alpha in compositions_of(n):
        if name == "K":
            row = _content_row(alpha, IMMACULATE)
        elif name == "Kstar":
            row = _content_row(alpha, ROW_STRICT)
        elif name == "L":
            row = _descent_row(alpha, IMMACULATE)
        else:
            row = _descent_row(alpha, ROW_STRICT)
        for beta, c in row.items():
            entries[(alpha, beta)] = c
    return BasisMatrix(name, n, entries)


# ---------------------------------------------------------------------------
# basis conversion


def _f_to_m(terms, degree):
    out = {}
    for alpha, c in terms.items():
        for beta in refinements(alpha):
            out[beta] = out.get(beta, 0) + c
    return out


def _m_to_f(terms, degree):
    out = {}
    for alpha, c in terms.items():
        for beta in refinements(alpha):
            sign = -1 if (len(alpha) - len(beta)) % 2 else 1
            out[beta] = out.get(beta, 0) + sign * c
    return out


def _counted_to_m(terms, kind):
    out = {}
    for alpha, c in terms.items():
        for beta, k in _content_row(alpha, kind).items():
            out[beta] = out.get(beta, 0) + c * k
    return out


def _m_to_di(terms, degree):
    """Peel along lex-decreasing order; K is unitriangular there."""
    work = {k: v for k, v in terms.items() if v}
    out = {}
    for alpha in compositions_of(degree):
        c = work.pop(alpha, 0)
        if c == 0:
            continue
        out[alpha] = c
        for beta, k in _content_row(alpha, IMMACULATE).items():
            if beta == alpha:
                continue
            v = work.get(beta, 0) - c * k
            if v:
                work[beta] = v
            elif beta in work:
                del work[beta]
    if work:
        raise ArithmeticError(f"back-substitution left a remainder: {work}")
    return out


def _complement_indices(terms):
    out = {}
    for alpha, c in terms.items():
        beta = complement(alpha)
        out[beta] = out.get(beta, 0) + c
    return out


def _m_psi(terms, degree):
    """psi on M coordinates, through the fundamental basis."""
    return _f_to_m(_complement_indices(_m_to_f(terms, degree)), degree)


def convert(x: Element, target: str) -> Element:
    """Re-express x in another basis of QSym."""
    if x.space != "QSym":
        raise ValueError("convert expects a QSym element")
    if target not in BASES:
        raise ValueError(f"unknown QSym basis {target!r}")
    if x.basis == target:
        return make(target, x.degree, x.terms)

    n = x.degree
    if x.basis == "M":
        m_terms = dict(x.terms)
    elif x.basis == "F":
        m_terms = _f_to_m(x.terms, n)
    elif x.basis == "DI":
        m_terms = _counted_to_m(x.terms, IMMACULATE)
    else:
        m_terms = _counted_to_m(x.terms, ROW_STRICT)

    if target == "M":
        out = m_terms
    elif target == "F":
        out = _m_to_f(m_terms, n)
    elif target == "DI":
        out = _m_to_di(m_terms, n)
    else:
        # x = sum c_a RSDI_a iff psi(x) = sum c_a DI_a
        out = _m_to_di(_m_psi(m_terms, n), n)
    return make(target, n, out)


# ---------------------------------------------------------------------------
# involutions


def _map_indices(x, basis, fn):
    out = {}
    for alpha, c in x.terms.items():
        beta = fn(alpha)
        out[beta] = out.get(beta, 0) + c
    return make(basis, x.degree, out)


def psi(x: Element) -> Element:
    """Index complement on F; swaps the two immaculate bases index-wise."""
    if x.basis == "F":
        return _map_indices(x, "F", complement)
    if x.basis == "DI":
        return make("RSDI", x.degree, x.terms)
    if x.basis == "RSDI":
        return make("DI", x.degree, x.terms)
    return convert(psi(convert(x, "F")), x.basis)


def rho(x: Element) -> Element:
    """Index reversal on F; swaps the immaculate bases reversing indices."""
    if x.basis == "F":
        return _map_indices(x, "F", reverse)
    if x.basis == "DI":
        return _map_indices(x, "RSDI", reverse)
    if x.basis == "RSDI":
        return _map_indices(x, "DI", reverse)
    return convert(rho(convert(x, "F")), x.basis)


def omega(x: Element) -> Element:
    """Index transpose on F; reverses indices on the immaculate bases."""
    if x.basis == "F":
        return _map_indices(x, "F", transpose)
    if x.basis in ("DI", "RSDI"):
        return _map_indices(x, x.basis, reverse)
    return convert(omega(convert(x, "F")), x.basis)


# ---------------------------------------------------------------------------
# product and coproduct


@lru_cache(maxsize=None)
def _quasi_shuffle(a: Composition, b: Composition) -> tuple:
    """Overlapping shuffles of two compositions, with multiplicities."""
    if not a:
        return ((b, 1),)
    if not b:
        return ((a, 1),)
    acc = {}

    def absorb(prefix, tail_pairs):
        for comp, mult in tail_pairs:
            key = Composition((prefix,) + tuple(comp))
            acc[key] = acc.get(key, 0) + mult

    absorb(a[0], _quasi_shuffle(Composition(a[1:]), b))
    absorb(b[0], _quasi_shuffle(a, Composition(b[1:])))
    absorb(a[0] + b[0], _quasi_shuffle(Composition(a[1:]), Composition(b[1:])))
    return tuple(acc.items())


def product_M(x: Element, y: Element) -> Element:
    """Quasi-shuffle product of two monomial-basis elements."""
    if x.basis != "M" or y.basis != "M":
        raise ValueError("product_M multiplies monomial-basis elements")
    terms = {}
    for a, ca in x.terms.items():
        for b, cb in y.terms.items():
            for comp, mult in _quasi_shuffle(a, b):
                terms[comp] = terms.get(comp, 0) + ca * cb * mult
    return make("M", x.degree + y.degree, terms)


def _splittings(alpha: Composition):
    """The n+1 coproduct splittings of a fundamental index."""
    n = alpha.degree
    cuts = set(set_of(alpha).elements)
    partial = 0
    j = 0
    for i in range(n + 1):
        if i == 0:
            yield Composition(), alpha
            continue
        if i == n:
            yield alpha, Composition()
            continue
        while partial + alpha[j] <= i:
            partial += alpha[j]
            j += 1
        if i in cuts:
            yield Composition(alpha[: j]), Composition(alpha[j:])
        else:
            left = alpha[:j] + (i - partial,)
            right = (partial + alpha[j] - i,) + alpha[j + 1 :]
            yield Composition(left), Composition(right)


def coproduct_F(x: Element) -> TensorElem:
    """Deconcatenation-plus-merge coproduct on the fundamental basis."""
    if x.basis != "F":
        raise ValueError("coproduct_F expects a fundamental-basis element")
    terms = {}
    for alpha, c in x.terms.items():
        for left, right in _splittings(alpha):
            key = (left, right)
            terms[key] = terms.get(key, 0) + c
    return TensorElem("QSym", "F", "F", x.degree, terms)


# ---------------------------------------------------------------------------
# polynomial realization


def realize(x: Element, nvars: int) -> Poly:
    """Evaluate in x_1..x_nvars exactly; faithful once nvars >= degree."""
    import itertools

    if nvars < 0:
        raise ValueError("variable count must be nonnegative")
    xm = convert(x, "M")
    terms = {}
    for alpha, c in xm.terms.items():
        k = len(alpha)
        if k > nvars:
            continue
        for positions in itertools.combinations(range(nvars), k):
            exps = [0] * nvars
            for p, part in zip(positions, alpha):
                exps[p] = part
            key = tuple(exps)
            terms[key] = terms.get(key, 0) + c
    return Poly(nvars, terms)


def extract_m_coefficients(p: Poly, degree: int) -> Element:
    """Read a quasisymmetric polynomial back off as an M-basis element.

    Only exponent vectors supported on a prefix of the variables are
    consulted; correct whenever p realizes an element of this degree in at
    least ``degree`` variables.
    """
    terms = {}
    for exps, c in p.terms.items():
        packed = [e for e in exps if e]
        if sum(packed) != degree:
            raise ValueError("polynomial is not homogeneous of the stated degree")
        if list(exps[: len(packed)]) == packed:
            terms[Composition(packed)] = c
    return make("M", degree, terms)
