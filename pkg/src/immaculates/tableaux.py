"""Tableaux on composition diagrams: enumeration, reading words,
standardization, descents, lattice paths, and the two-alphabet hook family.

Geometry conventions, used everywhere:

- row 1 is the bottom row, columns are 1-indexed;
- a skew shape outer/inner keeps, in row r, the cells in columns
  inner_r+1 .. outer_r (inner aligned at the bottom and padded with 0s);
- the canonical cell order is bottom row first, left to right within a row.

Validity is always a checkable predicate on a filling, never assumed:

- immaculate: surviving first-column entries strictly increase bottom to
  top, rows weakly increase left to right;
- row-strict: first column weakly increases, rows strictly increase;
- standard: a bijective filling by 1..n with strictly increasing rows and a
  strictly increasing surviving first column (the two families coincide
  there).

Hook tableaux use two alphabets 1 < ... < l < 1' < ... < k'; entries are
encoded as (tag, value) with tag 0 for unprimed and 1 for primed, so tuple
comparison realizes the total order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .compositions import Composition, SubsetOfPrefix, contains

IMMACULATE = "immaculate"
ROW_STRICT = "row-strict"

UNPRIMED = 0
PRIMED = 1


@dataclass(frozen=True)
class Shape:
    """A straight or skew composition shape."""

    outer: Composition
    inner: Composition = Composition()

    def __post_init__(self):
        object.__setattr__(self, "outer", Composition(self.outer))
        object.__setattr__(self, "inner", Composition(self.inner))
        if not contains(self.outer, self.inner):
            raise ValueError(
                f"inner shape {tuple(self.inner)} does not fit in {tuple(self.outer)}"
            )

    @property
    def size(self) -> int:
        return self.outer.degree - self.inner.degree

    @property
    def is_straight(self) -> bool:
        return not self.inner

    def inner_padded(self) -> tuple[int, ...]:
        return tuple(self.inner) + (0,) * (len(self.outer) - len(self.inner))

    def row_lengths(self) -> tuple[int, ...]:
        inner = self.inner_padded()
        return tuple(o - i for o, i in zip(self.outer, inner))

    def cells(self) -> list[tuple[int, int]]:
        """(row, col) pairs in canonical order."""
        inner = self.inner_padded()
        out = []
        for r, outer_r in enumerate(self.outer, start=1):
            out.extend((r, c) for c in range(inner[r - 1] + 1, outer_r + 1))
        return out

    def first_column_rows(self) -> list[int]:
        """Rows whose column-1 cell survives the skewing."""
        inner = self.inner_padded()
        return [r for r in range(1, len(self.outer) + 1) if inner[r - 1] == 0]


@dataclass(frozen=True)
class Tableau:
    """A filling of a shape; ``rows[r-1]`` lists row r left to right."""

    shape: Shape
    rows: tuple[tuple, ...]

    def __post_init__(self):
        rows = tuple(tuple(row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        lengths = self.shape.row_lengths()
        if len(rows) != len(lengths):
            raise ValueError("row count does not match the shape")
        for r, (row, want) in enumerate(zip(rows, lengths), start=1):
            if len(row) != want:
                raise ValueError(f"row {r} holds {len(row)} entries, expected {want}")

    @property
    def size(self) -> int:
        return self.shape.size

    def entries(self) -> list:
        """Entries in canonical cell order."""
        return [e for row in self.rows for e in row]

    def first_column(self) -> list:
        """Surviving column-1 entries, bottom to top."""
        return [self.rows[r - 1][0] for r in self.shape.first_column_rows()]

    def row_of(self, entry) -> int:
        for r, row in enumerate(self.rows, start=1):
            if entry in row:
                return r
        raise ValueError(f"entry {entry!r} not in tableau")

    def to_json(self) -> dict:
        return {
            "outer": list(self.shape.outer),
            "inner": list(self.shape.inner),
            "rows": [[entry_str(e) if isinstance(e, tuple) else e for e in row] for row in self.rows],
        }


def entry_str(entry) -> str:
    """Render a hook entry, e.g. (1, 3) -> "3'"."""
    tag, value = entry
    return f"{value}'" if tag == PRIMED else str(value)


def parse_entry(text: str) -> tuple[int, int]:
    text = str(text)
    if text.endswith("'"):
        return (PRIMED, int(text[:-1]))
    return (UNPRIMED, int(text))


# ---------------------------------------------------------------------------
# validity predicates


def _rows_weak(t: Tableau) -> bool:
    return all(a <= b for row in t.rows for a, b in zip(row, row[1:]))


def _rows_strict(t: Tableau) -> bool:
    return all(a < b for row in t.rows for a, b in zip(row, row[1:]))


def is_immaculate(t: Tableau) -> bool:
    col = t.first_column()
    return _rows_weak(t) and all(a < b for a, b in zip(col, col[1:]))


def is_row_strict(t: Tableau) -> bool:
    col = t.first_column()
    return _rows_strict(t) and all(a <= b for a, b in zip(col, col[1:]))


def is_standard(t: Tableau) -> bool:
    """Bijective filling by 1..n that is immaculate (equivalently row-strict)."""
    entries = t.entries()
    if sorted(entries) != list(range(1, t.size + 1)):
        return False
    col = t.first_column()
    return _rows_strict(t) and all(a < b for a, b in zip(col, col[1:]))


def _check_kind(kind: str):
    if kind not in (IMMACULATE, ROW_STRICT):
        raise ValueError(f"unknown tableau kind {kind!r}")


def is_valid(t: Tableau, kind: str) -> bool:
    _check_kind(kind)
    return is_immaculate(t) if kind == IMMACULATE else is_row_strict(t)


# ---------------------------------------------------------------------------
# enumeration


def _row_fillings(length, lo, hi, strict):
    """Increasing sequences of a row, entries in lo..hi, ascending order."""
    if strict:
        return itertools.combinations(range(lo, hi + 1), length)
    return itertools.combinations_with_replacement(range(lo, hi + 1), length)


def enumerate_tableaux(shape: Shape, kind: str, max_entry: int) -> list[Tableau]:
    """All valid fillings with entries in 1..max_entry, canonical order.

    Rows are filled bottom to top, within a row left to right, entries
    ascending, which pins the output order.
    """
    _check_kind(kind)
    if max_entry < 1:
        raise ValueError("max_entry must be at least 1")
    strict_rows = kind == ROW_STRICT
    strict_col = kind == IMMACULATE
    lengths = shape.row_lengths()
    col_rows = set(shape.first_column_rows())
    out = []

    def rec(r, col_prev, acc):
        if r > len(lengths):
            out.append(Tableau(shape, tuple(acc)))
            return
        if r in col_rows and col_prev is not None:
            lo = col_prev + 1 if strict_col else col_prev
        else:
            lo = 1
        for row in _row_fillings(lengths[r - 1], lo, max_entry, strict_rows):
            acc.append(row)
            rec(r + 1, row[0] if r in col_rows else col_prev, acc)
            acc.pop()

    rec(1, None, [])
    return out


@lru_cache(maxsize=None)
def _standard_cache(outer, inner) -> tuple[Tableau, ...]:
    shape = Shape(Composition(outer), Composition(inner))
    n = shape.size
    lengths = shape.row_lengths()
    out = []
    for perm in itertools.permutations(range(1, n + 1)):
        rows = []
        pos = 0
        for ln in lengths:
            rows.append(perm[pos : pos + ln])
            pos += ln
        t = Tableau(shape, tuple(rows))
        if is_standard(t):
            out.append(t)
    return tuple(out)


def enumerate_standard(shape: Shape) -> list[Tableau]:
    """All standard tableaux of a straight or skew shape."""
    return list(_standard_cache(tuple(shape.outer), tuple(shape.inner)))


# ---------------------------------------------------------------------------
# reading words, standardization, descents


def _reading_cells(t: Tableau, kind: str) -> list[tuple[int, int]]:
    """Cell coordinates (row index, position in row) in reading order."""
    _check_kind(kind)
    cells = []
    if kind == IMMACULATE:
        # top row first, each row left to right
        for r in range(len(t.rows), 0, -1):
            cells.extend((r, j) for j in range(len(t.rows[r - 1])))
    else:
        # bottom row first, each row right to left
        for r in range(1, len(t.rows) + 1):
            cells.extend((r, j) for j in reversed(range(len(t.rows[r - 1]))))
    return cells


def reading_word(t: Tableau, kind: str) -> tuple:
    return tuple(t.rows[r - 1][j] for r, j in _reading_cells(t, kind))


def standardize(t: Tableau, kind: str) -> Tableau:
    """Standardize by replacing equal values in reading order.

    The input must be valid for the given kind.
    """
    if not is_valid(t, kind):
        raise ValueError(f"tableau is not a valid {kind} tableau")
    order = _reading_cells(t, kind)
    ranked = sorted(
        range(len(order)), key=lambda i: (t.rows[order[i][0] - 1][order[i][1]], i)
    )
    new_rows = [list(row) for row in t.rows]
    for label, i in enumerate(ranked, start=1):
        r, j = order[i]
        new_rows[r - 1][j] = label
    return Tableau(t.shape, tuple(tuple(row) for row in new_rows))


def descents(t: Tableau, kind: str) -> SubsetOfPrefix:
    """Descent set of a standard tableau.

    immaculate: positions i with i+1 strictly above i;
    row-strict: positions i with i+1 weakly below i.
    """
    _check_kind(kind)
    if not is_standard(t):
        raise ValueError("descents are defined for standard tableaux")
    row_at = {}
    for r, row in enumerate(t.rows, start=1):
        for e in row:
            row_at[e] = r
    n = t.size
    if kind == IMMACULATE:
        els = [i for i in range(1, n) if row_at[i + 1] > row_at[i]]
    else:
        els = [i for i in range(1, n) if row_at[i + 1] <= row_at[i]]
    return SubsetOfPrefix(n, tuple(els))


# ---------------------------------------------------------------------------
# the removal poset and its paths


def remove_cell(comp, m: int) -> Composition:
    """Remove the rightmost cell of row m; the top row may vanish."""
    comp = Composition(comp)
    if not 1 <= m <= len(comp):
        raise ValueError(f"no row {m} in {tuple(comp)}")
    if comp[m - 1] == 1:
        if m != len(comp):
            raise ValueError(f"removing row {m} of {tuple(comp)} leaves a gap")
        return Composition(comp[:-1])
    return Composition(comp[: m - 1] + (comp[m - 1] - 1,) + comp[m:])


@dataclass(frozen=True)
class PosetPath:
    """A downward chain of single-cell removals, recorded by row labels."""

    start: Composition
    labels: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "start", Composition(self.start))
        object.__setattr__(self, "labels", tuple(int(m) for m in self.labels))
        self.shapes()  # raises on an invalid step

    def shapes(self) -> list[Composition]:
        """start, every intermediate, and the end shape."""
        cur = self.start
        out = [cur]
        for m in self.labels:
            cur = remove_cell(cur, m)
            out.append(cur)
        return out

    @property
    def end(self) -> Composition:
        return self.shapes()[-1]

    def __len__(self):
        return len(self.labels)


def path_to_tableau(p: PosetPath) -> Tableau:
    """The standard skew tableau labelling removed cells k, k-1, ..., 1."""
    outer = p.start
    inner = p.end
    k = len(p)
    next_col = {r: outer[r - 1] for r in range(1, len(outer) + 1)}
    entry_at = {}
    for i, m in enumerate(p.labels):
        entry_at[(m, next_col[m])] = k - i
        next_col[m] -= 1
    shape = Shape(outer, inner)
    inner_pad = shape.inner_padded()
    rows = tuple(
        tuple(entry_at[(r, c)] for c in range(inner_pad[r - 1] + 1, outer[r - 1] + 1))
        for r in range(1, len(outer) + 1)
    )
    return Tableau(shape, rows)


def tableau_to_path(t: Tableau) -> PosetPath:
    """Inverse of ``path_to_tableau``; the input must be standard."""
    if not is_standard(t):
        raise ValueError("only standard tableaux correspond to paths")
    labels = [t.row_of(e) for e in range(t.size, 0, -1)]
    p = PosetPath(t.shape.outer, tuple(labels))
    if p.end != t.shape.inner:
        raise ValueError("tableau does not peel down to its inner shape")
    return p


def path_descents(p: PosetPath) -> tuple[SubsetOfPrefix, SubsetOfPrefix]:
    """(descent set, weak ascent set) of a path; they partition 1..k-1."""
    k = len(p)
    des = [k - i for i in range(1, k) if p.labels[i - 1] > p.labels[i]]
    asc = [k - i for i in range(1, k) if p.labels[i - 1] <= p.labels[i]]
    return SubsetOfPrefix(k, tuple(des)), SubsetOfPrefix(k, tuple(asc))


def is_horizontal_strip(p: PosetPath) -> bool:
    return all(a <= b for a, b in zip(p.labels, p.labels[1:]))


def is_vertical_strip(p: PosetPath) -> bool:
    return all(a > b for a, b in zip(p.labels, p.labels[1:]))


def strip_kind(p: PosetPath) -> str:
    """"horizontal", "vertical" or "neither" (paths of length <= 1 count
    as horizontal first)."""
    if is_horizontal_strip(p):
        return "horizontal"
    if is_vertical_strip(p):
        return "vertical"
    return "neither"


def enumerate_paths(outer, inner) -> list[PosetPath]:
    """All removal paths from outer down to inner, label-lexicographic."""
    outer = Composition(outer)
    inner = Composition(inner)
    if not contains(outer, inner):
        raise ValueError("inner shape must fit inside outer")
    found = []

    def rec(cur, acc):
        if cur == inner:
            found.append(PosetPath(outer, tuple(acc)))
            return
        for m in range(1, len(cur) + 1):
            try:
                nxt = remove_cell(cur, m)
            except ValueError:
                continue
            if not contains(nxt, inner):
                continue
            acc.append(m)
            rec(nxt, acc)
            acc.pop()

    rec(outer, [])
    return found


# ---------------------------------------------------------------------------
# hook tableaux (two alphabets)


def _hook_row_le(a, b) -> bool:
    """left-to-right admissibility: weak in unprimed, strict in primed."""
    if a[0] != b[0]:
        return a[0] < b[0]
    return a[1] <= b[1] if a[0] == UNPRIMED else a[1] < b[1]


def _hook_col_le(a, b) -> bool:
    """bottom-to-top admissibility: strict in unprimed, weak in primed."""
    if a[0] != b[0]:
        return a[0] < b[0]
    return a[1] < b[1] if a[0] == UNPRIMED else a[1] <= b[1]


def is_hook_tableau(t: Tableau, l: int, k: int) -> bool:
    for row in t.rows:
        for e in row:
            tag, v = e
            if tag == UNPRIMED and not 1 <= v <= l:
                return False
            if tag == PRIMED and not 1 <= v <= k:
                return False
        if not all(_hook_row_le(a, b) for a, b in zip(row, row[1:])):
            return False
    col = t.first_column()
    return all(_hook_col_le(a, b) for a, b in zip(col, col[1:]))


def _hook_alphabet(l: int, k: int) -> list[tuple[int, int]]:
    return [(UNPRIMED, v) for v in range(1, l + 1)] + [
        (PRIMED, v) for v in range(1, k + 1)
    ]


def enumerate_hook(shape: Shape, l: int, k: int) -> list[Tableau]:
    """All semistandard hook tableaux with unprimed 1..l and primed 1'..k'."""
    if l < 0 or k < 0:
        raise ValueError("alphabet sizes must be nonnegative")
    alphabet = _hook_alphabet(l, k)
    lengths = shape.row_lengths()
    col_rows = set(shape.first_column_rows())
    out = []

    def row_options(length, first_ok):
        def grow(row):
            if len(row) == length:
                yield tuple(row)
                return
            for e in alphabet:
                if row:
                    if not _hook_row_le(row[-1], e):
                        continue
                elif not first_ok(e):
                    continue
                row.append(e)
                yield from grow(row)
                row.pop()

        yield from grow([])

    def rec(r, col_prev, acc):
        if r > len(lengths):
            out.append(Tableau(shape, tuple(acc)))
            return
        if r in col_rows and col_prev is not None:
            first_ok = lambda e: _hook_col_le(col_prev, e)
        else:
            first_ok = lambda e: True
        for row in row_options(lengths[r - 1], first_ok):
            acc.append(row)
            rec(r + 1, row[0] if r in col_rows else col_prev, acc)
            acc.pop()

    rec(1, None, [])
    return out


def standardize_hook(t: Tableau) -> Tableau:
    """Standardize a hook tableau into a standard (plain) tableau.

    Unprimed entries are renumbered first, scanned in the top-down
    left-to-right reading order; primed entries follow, scanned bottom-up
    right-to-left, continuing the numbering.
    """
    if not is_hook_tableau(t, 10 ** 9, 10 ** 9):
        raise ValueError("input is not a valid hook tableau")
    imm_cells = _reading_cells(t, IMMACULATE)
    rs_cells = _reading_cells(t, ROW_STRICT)
    unprimed = [
        (r, j) for r, j in imm_cells if t.rows[r - 1][j][0] == UNPRIMED
    ]
    primed = [(r, j) for r, j in rs_cells if t.rows[r - 1][j][0] == PRIMED]
    new_rows = [list(row) for row in t.rows]
    label = 1
    for cells in (unprimed, primed):
        ranked = sorted(
            range(len(cells)),
            key=lambda i: (t.rows[cells[i][0] - 1][cells[i][1]][1], i),
        )
        for i in ranked:
            r, j = cells[i]
            new_rows[r - 1][j] = label
            label += 1
    return Tableau(t.shape, tuple(tuple(row) for row in new_rows))


def hook_content(t: Tableau, l: int | None = None, k: int | None = None):
    """Multiplicity vectors (x over 1..l, y over 1..k) of a hook tableau."""
    entries = t.entries()
    if l is None:
        l = max((v for tag, v in entries if tag == UNPRIMED), default=0)
    if k is None:
        k = max((v for tag, v in entries if tag == PRIMED), default=0)
    xs = [0] * l
    ys = [0] * k
    for tag, v in entries:
        if tag == UNPRIMED:
            xs[v - 1] += 1
        else:
            ys[v - 1] += 1
    return tuple(xs), tuple(ys)
