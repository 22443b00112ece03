"""Integer compositions, the subset bijection, and the orders on them.

Compositions of n are the universal index type here: a composition is a
finite sequence of positive integers, and the empty composition () is the
unique composition of 0.  Diagrams are drawn with row 1 at the bottom.

Conventions:

- ``set_of`` / ``comp_of`` implement the bijection between compositions of n
  and subsets of {1, ..., n-1} via partial sums.
- ``refines(beta, alpha)`` means alpha is obtained by adding consecutive
  parts of beta (beta is the finer one).
- ``contains(beta, alpha)`` means beta dominates alpha componentwise with
  rows aligned at the bottom, i.e. alpha fits inside beta.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache


class Composition(tuple):
    """A finite sequence of positive integers."""

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts)
        for p in parts:
            if p <= 0:
                raise ValueError(f"composition parts must be positive, got {parts}")
        return super().__new__(cls, parts)

    @property
    def degree(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def __repr__(self):
        return f"Composition{tuple(self)!r}"


class Partition(Composition):
    """A composition whose parts weakly decrease."""

    def __new__(cls, parts=()):
        self = super().__new__(cls, parts)
        if any(self[i] < self[i + 1] for i in range(len(self) - 1)):
            raise ValueError(f"partition parts must weakly decrease, got {tuple(self)}")
        return self

    def __repr__(self):
        return f"Partition{tuple(self)!r}"


@dataclass(frozen=True)
class SubsetOfPrefix:
    """A subset of {1, ..., n-1}, stored sorted.

    These play two roles: the image of a composition under the partial-sum
    bijection, and descent sets of standard tableaux.
    """

    n: int
    elements: tuple[int, ...]

    def __post_init__(self):
        els = tuple(sorted(set(int(e) for e in self.elements)))
        object.__setattr__(self, "elements", els)
        if self.n < 0:
            raise ValueError("n must be nonnegative")
        for e in els:
            if not 1 <= e <= self.n - 1:
                raise ValueError(f"element {e} out of range 1..{self.n - 1}")

    def complement(self) -> "SubsetOfPrefix":
        missing = tuple(i for i in range(1, self.n) if i not in set(self.elements))
        return SubsetOfPrefix(self.n, missing)

    def to_json(self) -> dict:
        return {"n": self.n, "elements": list(self.elements)}


@lru_cache(maxsize=None)
def compositions_of(n: int) -> tuple[Composition, ...]:
    """All compositions of n in lexicographically decreasing order.

    There are 2^(n-1) of them for n >= 1; for n = 0 the lone empty one.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return (Composition(),)
    out = []
    for first in range(n, 0, -1):
        for rest in compositions_of(n - first):
            out.append(Composition((first,) + rest))
    return tuple(out)


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of n, largest-first lexicographically."""
    if n < 0:
        raise ValueError("n must be nonnegative")

    def gen(remaining, cap):
        if remaining == 0:
            yield ()
            return
        for first in range(min(cap, remaining), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    return tuple(Partition(p) for p in gen(n, n))


def set_of(alpha) -> SubsetOfPrefix:
    """The subset of {1, ..., n-1} of proper partial sums of alpha."""
    alpha = Composition(alpha)
    sums = tuple(itertools.accumulate(alpha))
    return SubsetOfPrefix(alpha.degree, sums[:-1])


def comp_of(s: SubsetOfPrefix) -> Composition:
    """Inverse of ``set_of``: successive differences, closing at n."""
    pts = s.elements + (s.n,)
    if s.n == 0:
        return Composition()
    prev = 0
    parts = []
    for p in pts:
        parts.append(p - prev)
        prev = p
    return Composition(parts)


def reverse(alpha) -> Composition:
    return Composition(tuple(reversed(Composition(alpha))))


def complement(alpha) -> Composition:
    """comp of the complementary subset."""
    return comp_of(set_of(alpha).complement())


def transpose(alpha) -> Composition:
    """comp of the complement of the set of the reverse."""
    return comp_of(set_of(reverse(alpha)).complement())


def refines(beta, alpha) -> bool:
    """True iff adding consecutive parts of beta yields alpha."""
    beta, alpha = Composition(beta), Composition(alpha)
    if beta.degree != alpha.degree:
        return False
    return set(set_of(alpha).elements) <= set(set_of(beta).elements)


def refinements(alpha) -> tuple[Composition, ...]:
    """All beta refining alpha (alpha included)."""
    alpha = Composition(alpha)
    n = alpha.degree
    fixed = set_of(alpha).elements
    free = [i for i in range(1, n) if i not in set(fixed)]
    out = []
    for r in range(len(free) + 1):
        for extra in itertools.combinations(free, r):
            out.append(comp_of(SubsetOfPrefix(n, fixed + extra)))
    return tuple(out)


def coarsenings(alpha) -> tuple[Composition, ...]:
    """All beta coarsening alpha (alpha included)."""
    alpha = Composition(alpha)
    n = alpha.degree
    els = set_of(alpha).elements
    out = []
    for r in range(len(els) + 1):
        for kept in itertools.combinations(els, r):
            out.append(comp_of(SubsetOfPrefix(n, kept)))
    return tuple(out)


def lex_compare(alpha, beta) -> int:
    """-1, 0 or 1 comparing part sequences lexicographically.

    Only defined within one homogeneous degree.
    """
    alpha, beta = Composition(alpha), Composition(beta)
    if alpha.degree != beta.degree:
        raise ValueError("lex order compares compositions of equal degree")
    if alpha < beta:
        return -1
    if alpha > beta:
        return 1
    return 0


def subset_s(alpha, beta, s: int) -> bool:
    """The boxed containment alpha inside beta adding s cells.

    Requires |beta| = |alpha| + s, componentwise domination on the rows of
    alpha, and at most one new row on top.
    """
    alpha, beta = Composition(alpha), Composition(beta)
    if s < 0:
        raise ValueError("s must be nonnegative")
    if beta.degree != alpha.degree + s:
        return False
    if len(beta) > len(alpha) + 1 or len(beta) < len(alpha):
        return False
    return all(alpha[j] <= beta[j] for j in range(len(alpha)))


def contains(beta, alpha) -> bool:
    """True iff beta dominates alpha componentwise (alpha fits in beta)."""
    beta, alpha = Composition(beta), Composition(alpha)
    if len(alpha) > len(beta):
        return False
    return all(alpha[j] <= beta[j] for j in range(len(alpha)))


def concat(beta, gamma) -> Composition:
    return Composition(tuple(Composition(beta)) + tuple(Composition(gamma)))


def near_concat(beta, gamma) -> Composition:
    """Concatenation merging the touching parts.  Both operands nonempty."""
    beta, gamma = Composition(beta), Composition(gamma)
    if not beta or not gamma:
        raise ValueError("near-concatenation needs nonempty operands")
    return Composition(beta[:-1] + (beta[-1] + gamma[0],) + gamma[1:])


def sort_to_partition(alpha) -> Partition:
    return Partition(sorted(Composition(alpha), reverse=True))


def conjugate(lam) -> Partition:
    """Transpose of the Young diagram of a partition."""
    lam = Partition(lam)
    if not lam:
        return Partition()
    cols = [sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1)]
    return Partition(cols)


def permutation_sign(sigma) -> int:
    """Sign of a permutation given in one-line notation (any base index)."""
    inv = sum(
        1
        for i in range(len(sigma))
        for j in range(i + 1, len(sigma))
        if sigma[i] > sigma[j]
    )
    return -1 if inv % 2 else 1
