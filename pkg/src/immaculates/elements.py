"""Sparse, degree-homogeneous elements of QSym, NSym and Sym.

An :class:`Element` is a basis-tagged integer-linear combination of
compositions of a single degree (partitions, for space "Sym").  Coefficients
are Python ints, so all arithmetic is exact.  Elements are immutable in
spirit: every operation returns a fresh element and nothing mutates terms
after construction.

The JSON wire format is::

    {"space": "QSym", "basis": "F", "degree": 5,
     "terms": [{"index": [2, 3], "coeff": "4"}]}

with coefficients as decimal strings, and terms sorted with indices in
lexicographically decreasing order.
"""

from __future__ import annotations

from .compositions import Composition, Partition

SPACES = ("QSym", "NSym", "Sym")


def _normalize_index(space: str, index) -> Composition:
    if space == "Sym":
        return Partition(index)
    return Composition(index)


class Element:
    """A homogeneous element: ``sum(terms[idx] * basis_idx)``."""

    __slots__ = ("space", "basis", "degree", "terms")

    def __init__(self, space, basis, degree, terms=None):
        if space not in SPACES:
            raise ValueError(f"unknown space {space!r}")
        if degree < 0:
            raise ValueError("degree must be nonnegative")
        clean = {}
        for idx, coeff in (terms or {}).items():
            coeff = int(coeff)
            if coeff == 0:
                continue
            idx = _normalize_index(space, idx)
            if idx.degree != degree:
                raise ValueError(
                    f"index {tuple(idx)} has degree {idx.degree}, element has degree {degree}"
                )
            clean[idx] = clean.get(idx, 0) + coeff
        self.space = space
        self.basis = basis
        self.degree = degree
        self.terms = {k: v for k, v in clean.items() if v != 0}

    # -- queries ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, index) -> int:
        return self.terms.get(_normalize_index(self.space, index), 0)

    def support(self):
        return sorted(self.terms, reverse=True)

    def items(self):
        """Terms with indices in canonical (lex-decreasing) order."""
        return [(idx, self.terms[idx]) for idx in self.support()]

    # -- arithmetic --------------------------------------------------------

    def _check_compatible(self, other):
        if (
            not isinstance(other, Element)
            or other.space != self.space
            or other.basis != self.basis
            or other.degree != self.degree
        ):
            raise ValueError("can only add elements of one space, basis and degree")

    def __add__(self, other):
        self._check_compatible(other)
        terms = dict(self.terms)
        for idx, c in other.terms.items():
            terms[idx] = terms.get(idx, 0) + c
        return Element(self.space, self.basis, self.degree, terms)

    def __sub__(self, other):
        return self + other.scalar_mul(-1)

    def __neg__(self):
        return self.scalar_mul(-1)

    def scalar_mul(self, c: int) -> "Element":
        c = int(c)
        return Element(
            self.space, self.basis, self.degree, {k: c * v for k, v in self.terms.items()}
        )

    def __rmul__(self, c):
        if isinstance(c, int):
            return self.scalar_mul(c)
        return NotImplemented

    def __eq__(self, other):
        return (
            isinstance(other, Element)
            and self.space == other.space
            and self.basis == other.basis
            and self.degree == other.degree
            and self.terms == other.terms
        )

    __hash__ = None

    def __repr__(self):
        if self.is_zero():
            return f"<{self.space}:{self.basis} 0 (deg {self.degree})>"
        bits = []
        for idx, c in self.items():
            word = f"{self.basis}{list(idx)}"
            if c == 1:
                bits.append(word)
            elif c == -1:
                bits.append(f"-{word}")
            else:
                bits.append(f"{c}*{word}")
        return " + ".join(bits).replace("+ -", "- ")

    # -- serialization ------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "space": self.space,
            "basis": self.basis,
            "degree": self.degree,
            "terms": [
                {"index": list(idx), "coeff": str(c)} for idx, c in self.items()
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Element":
        terms = {tuple(t["index"]): int(t["coeff"]) for t in data["terms"]}
        return cls(data["space"], data["basis"], data["degree"], terms)


class TensorElem:
    """A homogeneous element of a two-fold tensor square.

    Terms are indexed by pairs of compositions whose degrees sum to
    ``degree``; each side carries its own basis tag.
    """

    __slots__ = ("space", "left_basis", "right_basis", "degree", "terms")

    def __init__(self, space, left_basis, right_basis, degree, terms=None):
        if space not in SPACES:
            raise ValueError(f"unknown space {space!r}")
        self.space = space
        self.left_basis = left_basis
        self.right_basis = right_basis
        self.degree = degree
        clean = {}
        for (left, right), coeff in (terms or {}).items():
            coeff = int(coeff)
            if coeff == 0:
                continue
            left = _normalize_index(space, left)
            right = _normalize_index(space, right)
            if left.degree + right.degree != degree:
                raise ValueError("tensor term degrees must add up to the total degree")
            key = (left, right)
            clean[key] = clean.get(key, 0) + coeff
        self.terms = {k: v for k, v in clean.items() if v != 0}

    def is_zero(self) -> bool:
        return not self.terms

    def add_term(self, left, right, coeff):
        """Fresh tensor with one extra term (used by builders)."""
        terms = dict(self.terms)
        key = (
            _normalize_index(self.space, left),
            _normalize_index(self.space, right),
        )
        terms[key] = terms.get(key, 0) + int(coeff)
        return TensorElem(self.space, self.left_basis, self.right_basis, self.degree, terms)

    def __add__(self, other):
        if (
            not isinstance(other, TensorElem)
            or (other.space, other.left_basis, other.right_basis, other.degree)
            != (self.space, self.left_basis, self.right_basis, self.degree)
        ):
            raise ValueError("incompatible tensors")
        terms = dict(self.terms)
        for k, v in other.terms.items():
            terms[k] = terms.get(k, 0) + v
        return TensorElem(self.space, self.left_basis, self.right_basis, self.degree, terms)

    def items(self):
        return [(k, self.terms[k]) for k in sorted(self.terms, reverse=True)]

    def __eq__(self, other):
        return (
            isinstance(other, TensorElem)
            and self.space == other.space
            and self.left_basis == other.left_basis
            and self.right_basis == other.right_basis
            and self.degree == other.degree
            and self.terms == other.terms
        )

    __hash__ = None

    def __repr__(self):
        bits = [
            f"{c}*{self.left_basis}{list(l)}(x){self.right_basis}{list(r)}"
            for (l, r), c in self.items()
        ]
        return " + ".join(bits) if bits else "<tensor 0>"

    def to_json(self) -> dict:
        return {
            "space": self.space,
            "left_basis": self.left_basis,
            "right_basis": self.right_basis,
            "degree": self.degree,
            "terms": [
                {"left": list(l), "right": list(r), "coeff": str(c)}
                for (l, r), c in self.items()
            ],
        }
