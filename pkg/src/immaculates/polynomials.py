"""Exact sparse polynomials in one or two finite ordered alphabets.

These are only used as realization targets, so the API is deliberately
small: addition, multiplication, and exact equality over int coefficients.
"""

from __future__ import annotations


class Poly:
    """Polynomial in x_1..x_m; terms map exponent tuples to ints."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        clean = {}
        for exps, c in (terms or {}).items():
            c = int(c)
            if c == 0:
                continue
            exps = tuple(int(e) for e in exps)
            if len(exps) != nvars or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent vector {exps} for {nvars} variables")
            clean[exps] = clean.get(exps, 0) + c
        self.terms = {k: v for k, v in clean.items() if v != 0}

    @classmethod
    def zero(cls, nvars):
        return cls(nvars)

    @classmethod
    def one(cls, nvars):
        return cls(nvars, {(0,) * nvars: 1})

    @classmethod
    def monomial(cls, exps, coeff=1):
        return cls(len(exps), {tuple(exps): coeff})

    def is_zero(self):
        return not self.terms

    def coeff(self, exps) -> int:
        return self.terms.get(tuple(exps), 0)

    def _check(self, other):
        if not isinstance(other, Poly) or other.nvars != self.nvars:
            raise ValueError("polynomials must share the variable count")

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for k, v in other.terms.items():
            terms[k] = terms.get(k, 0) + v
        return Poly(self.nvars, terms)

    def __sub__(self, other):
        return self + other.scalar_mul(-1)

    def scalar_mul(self, c):
        return Poly(self.nvars, {k: int(c) * v for k, v in self.terms.items()})

    def __mul__(self, other):
        self._check(other)
        terms = {}
        for ka, va in self.terms.items():
            for kb, vb in other.terms.items():
                key = tuple(a + b for a, b in zip(ka, kb))
                terms[key] = terms.get(key, 0) + va * vb
        return Poly(self.nvars, terms)

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    __hash__ = None

    def __repr__(self):
        if self.is_zero():
            return "Poly(0)"
        bits = []
        for exps in sorted(self.terms, reverse=True):
            c = self.terms[exps]
            mono = "*".join(
                f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}"
                for i, e in enumerate(exps)
                if e
            )
            bits.append(f"{c}*{mono}" if mono else str(c))
        return " + ".join(bits)


class BiPoly:
    """Polynomial in two alphabets x_1..x_l and y_1..y_k."""

    __slots__ = ("l", "k", "terms")

    def __init__(self, l: int, k: int, terms=None):
        self.l = l
        self.k = k
        clean = {}
        for (xe, ye), c in (terms or {}).items():
            c = int(c)
            if c == 0:
                continue
            xe = tuple(int(e) for e in xe)
            ye = tuple(int(e) for e in ye)
            if len(xe) != l or len(ye) != k or min(xe + ye, default=0) < 0:
                raise ValueError(f"bad exponent vectors {(xe, ye)} for sizes {(l, k)}")
            key = (xe, ye)
            clean[key] = clean.get(key, 0) + c
        self.terms = {key: v for key, v in clean.items() if v != 0}

    @classmethod
    def zero(cls, l, k):
        return cls(l, k)

    @classmethod
    def from_product(cls, px: Poly, py: Poly) -> "BiPoly":
        """Outer product of an x-polynomial and a y-polynomial."""
        terms = {}
        for xe, cx in px.terms.items():
            for ye, cy in py.terms.items():
                key = (xe, ye)
                terms[key] = terms.get(key, 0) + cx * cy
        return cls(px.nvars, py.nvars, terms)

    def is_zero(self):
        return not self.terms

    def coeff(self, xe, ye) -> int:
        return self.terms.get((tuple(xe), tuple(ye)), 0)

    def _check(self, other):
        if not isinstance(other, BiPoly) or (other.l, other.k) != (self.l, self.k):
            raise ValueError("bipolynomials must share alphabet sizes")

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for key, v in other.terms.items():
            terms[key] = terms.get(key, 0) + v
        return BiPoly(self.l, self.k, terms)

    def __sub__(self, other):
        return self + other.scalar_mul(-1)

    def scalar_mul(self, c):
        return BiPoly(self.l, self.k, {key: int(c) * v for key, v in self.terms.items()})

    def __eq__(self, other):
        return (
            isinstance(other, BiPoly)
            and (self.l, self.k) == (other.l, other.k)
            and self.terms == other.terms
        )

    __hash__ = None

    def __repr__(self):
        if self.is_zero():
            return "BiPoly(0)"
        bits = []
        for xe, ye in sorted(self.terms, reverse=True):
            c = self.terms[(xe, ye)]
            mono = "*".join(
                [f"x{i + 1}^{e}" if e > 1 else f"x{i + 1}" for i, e in enumerate(xe) if e]
                + [f"y{i + 1}^{e}" if e > 1 else f"y{i + 1}" for i, e in enumerate(ye) if e]
            )
            bits.append(f"{c}*{mono}" if mono else str(c))
        return " + ".join(bits)

    def to_json(self) -> dict:
        return {
            "l": self.l,
            "k": self.k,
            "terms": [
                {"x": list(xe), "y": list(ye), "coeff": str(self.terms[(xe, ye)])}
                for xe, ye in sorted(self.terms, reverse=True)
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "BiPoly":
        terms = {
            (tuple(t["x"]), tuple(t["y"])): int(t["coeff"]) for t in data["terms"]
        }
        return cls(data["l"], data["k"], terms)
