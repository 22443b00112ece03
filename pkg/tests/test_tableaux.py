import itertools

import pytest

from immaculates.compositions import Composition, SubsetOfPrefix
from immaculates.tableaux import (
    IMMACULATE,
    PRIMED,
    ROW_STRICT,
    UNPRIMED,
    PosetPath,
    Shape,
    Tableau,
    descents,
    entry_str,
    enumerate_hook,
    enumerate_paths,
    enumerate_standard,
    enumerate_tableaux,
    hook_content,
    is_hook_tableau,
    is_immaculate,
    is_row_strict,
    is_standard,
    is_valid,
    parse_entry,
    path_descents,
    path_to_tableau,
    reading_word,
    remove_cell,
    standardize,
    standardize_hook,
    strip_kind,
    tableau_to_path,
)

# the worked immaculate tableau of shape (3,2,4,1,2), rows bottom to top
T_IMM = Tableau(
    Shape(Composition((3, 2, 4, 1, 2))),
    ((1, 1, 2), (2, 2), (3, 4, 4, 5), (5,), (6, 7)),
)

# the worked row-strict tableau of shape (3,2,4,1), rows bottom to top
T_RS = Tableau(
    Shape(Composition((3, 2, 4, 1))),
    ((1, 2, 6), (2, 5), (3, 4, 5, 6), (4,)),
)


def test_shape_validation():
    with pytest.raises(ValueError):
        Shape(Composition((2, 1)), Composition((3,)))
    with pytest.raises(ValueError):
        Tableau(Shape(Composition((2,))), ((1,),))
    s = Shape(Composition((3, 2, 3)), Composition((1, 1, 2)))
    assert s.size == 4
    assert s.cells() == [(1, 2), (1, 3), (2, 2), (3, 3)]
    assert s.first_column_rows() == []


def test_first_column_skew():
    s = Shape(Composition((2, 2, 1)), Composition((1,)))
    assert s.first_column_rows() == [2, 3]


def test_worked_examples_are_valid():
    assert is_immaculate(T_IMM)
    assert not is_row_strict(T_IMM)
    assert is_row_strict(T_RS)
    # strict rows and a strict first column make it immaculate as well
    assert is_immaculate(T_RS)


def test_single_row_trivia():
    t = Tableau(Shape(Composition((2,))), ((1, 1),))
    assert is_immaculate(t)
    assert not is_row_strict(t)


def test_reading_words():
    assert reading_word(T_IMM, IMMACULATE) == (6, 7, 5, 3, 4, 4, 5, 2, 2, 1, 1, 2)
    assert reading_word(T_RS, ROW_STRICT) == (6, 2, 1, 5, 2, 6, 5, 4, 3, 4)
    single = Tableau(Shape(Composition((1,))), ((5,),))
    assert reading_word(single, IMMACULATE) == (5,)
    assert reading_word(single, ROW_STRICT) == (5,)


def test_standardize_worked_examples():
    s = standardize(T_IMM, IMMACULATE)
    assert s.rows == ((1, 2, 5), (3, 4), (6, 7, 8, 10), (9,), (11, 12))
    u = standardize(T_RS, ROW_STRICT)
    assert u.rows == ((1, 2, 9), (3, 7), (4, 5, 8, 10), (6,))


def test_standardize_fixes_standard_tableaux():
    for shape in [Shape(Composition((2, 2))), Shape(Composition((1, 3)))]:
        for t in enumerate_standard(shape):
            assert standardize(t, IMMACULATE) == t
            assert standardize(t, ROW_STRICT) == t


def test_standardize_rejects_invalid():
    bad = Tableau(Shape(Composition((2,))), ((2, 1),))
    with pytest.raises(ValueError):
        standardize(bad, IMMACULATE)


def test_descents_worked_examples():
    s = standardize(T_IMM, IMMACULATE)
    assert descents(s, IMMACULATE) == SubsetOfPrefix(12, (2, 5, 8, 10))
    u = standardize(T_RS, ROW_STRICT)
    assert descents(u, ROW_STRICT) == SubsetOfPrefix(10, (1, 4, 6, 8))


def test_descent_kinds_are_complementary():
    for n in range(1, 6):
        from immaculates.compositions import compositions_of

        for alpha in compositions_of(n):
            for s in enumerate_standard(Shape(alpha)):
                d_imm = set(descents(s, IMMACULATE).elements)
                d_rs = set(descents(s, ROW_STRICT).elements)
                assert d_imm & d_rs == set()
                assert d_imm | d_rs == set(range(1, n))


def test_enumerate_small_shapes():
    got = enumerate_tableaux(Shape(Composition((2,))), ROW_STRICT, 2)
    assert [t.rows for t in got] == [((1, 2),)]
    got = enumerate_tableaux(Shape(Composition((1, 1))), ROW_STRICT, 2)
    assert [t.rows for t in got] == [((1,), (1,)), ((1,), (2,)), ((2,), (2,))]
    got = enumerate_tableaux(Shape(Composition((2,))), IMMACULATE, 2)
    assert [t.rows for t in got] == [((1, 1),), ((1, 2),), ((2, 2),)]


def test_enumerate_matches_validity_brute_force():
    # oracle: filter the full box of fillings through the predicates
    shapes = [
        Shape(Composition((2, 1))),
        Shape(Composition((1, 2))),
        Shape(Composition((2, 2)), Composition((1,))),
    ]
    for shape in shapes:
        lengths = shape.row_lengths()
        for kind in (IMMACULATE, ROW_STRICT):
            for m in (1, 2, 3):
                brute = []
                for values in itertools.product(range(1, m + 1), repeat=shape.size):
                    rows, pos = [], 0
                    for ln in lengths:
                        rows.append(values[pos : pos + ln])
                        pos += ln
                    t = Tableau(shape, tuple(rows))
                    if is_valid(t, kind):
                        brute.append(t)
                fast = enumerate_tableaux(shape, kind, m)
                assert sorted(t.rows for t in fast) == sorted(t.rows for t in brute)
                assert len(set(t.rows for t in fast)) == len(fast)


def test_enumerate_standard_counts():
    assert len(enumerate_standard(Shape(Composition((2, 2))))) == 3
    assert len(enumerate_standard(Shape(Composition((1, 2))))) == 1
    target = Shape(Composition((3, 2, 3)), Composition((1, 1, 2)))
    rows_seen = [t.rows for t in enumerate_standard(target)]
    assert ((3, 4), (2,), (1,)) in rows_seen


def test_remove_cell_rules():
    assert remove_cell((2, 1, 1), 1) == Composition((1, 1, 1))
    assert remove_cell((2, 1, 1), 3) == Composition((2, 1))
    with pytest.raises(ValueError):
        remove_cell((1, 2), 1)  # gap in the middle
    with pytest.raises(ValueError):
        remove_cell((2,), 5)


def test_path_worked_example_standard_skew():
    p = PosetPath(Composition((3, 2, 3)), (1, 1, 2, 3))
    assert p.end == Composition((1, 1, 2))
    t = path_to_tableau(p)
    assert t.rows == ((3, 4), (2,), (1,))
    assert tableau_to_path(t) == p
    d, a = path_descents(p)
    assert d.elements == ()
    assert a.elements == (1, 2, 3)


def test_path_worked_example_descents_figure():
    p = PosetPath(Composition((2, 3, 2)), (3, 1, 2, 3, 2, 2, 1))
    t = path_to_tableau(p)
    assert t.rows == ((1, 6), (2, 3, 5), (4, 7))
    d, a = path_descents(p)
    assert d == SubsetOfPrefix(7, (1, 3, 6))
    assert a == SubsetOfPrefix(7, (2, 4, 5))
    s = Tableau(Shape(Composition((2, 3, 2))), ((1, 6), (2, 3, 5), (4, 7)))
    assert descents(s, IMMACULATE) == d
    assert descents(s, ROW_STRICT) == a


def test_path_tableau_bijection_exhaustive():
    from immaculates.compositions import compositions_of, contains

    for n in range(1, 6):
        for outer in compositions_of(n):
            for inner in [c for m in range(n + 1) for c in compositions_of(m)]:
                if not contains(outer, inner):
                    continue
                tabs = enumerate_standard(Shape(outer, inner))
                paths = enumerate_paths(outer, inner)
                assert len(tabs) == len(paths)
                for t in tabs:
                    assert path_to_tableau(tableau_to_path(t)) == t
                for p in paths:
                    assert tableau_to_path(path_to_tableau(p)) == p
                    d, a = path_descents(p)
                    t = path_to_tableau(p)
                    assert descents(t, IMMACULATE) == d
                    assert descents(t, ROW_STRICT) == a


def test_invalid_path_rejected():
    with pytest.raises(ValueError):
        PosetPath(Composition((1, 2)), (1,))


def test_strip_kind():
    assert strip_kind(PosetPath(Composition((2, 2)), (1, 2))) == "horizontal"
    assert strip_kind(PosetPath(Composition((1, 1, 1)), (3, 2, 1))) == "vertical"
    assert strip_kind(PosetPath(Composition((2, 2, 2)), (1, 3, 2))) == "neither"


def test_destandardization_property():
    # words weakly increasing with strict rises exactly where allowed give
    # back valid row-strict tableaux
    from immaculates.compositions import compositions_of

    for n in range(1, 5):
        for alpha in compositions_of(n):
            for s in enumerate_standard(Shape(alpha)):
                des = set(descents(s, ROW_STRICT).elements)
                for word in itertools.combinations_with_replacement(range(1, 5), n):
                    if any(word[i - 1] == word[i] for i in des):
                        continue
                    rows = tuple(
                        tuple(word[e - 1] for e in row) for row in s.rows
                    )
                    assert is_row_strict(Tableau(s.shape, rows)), (s, word)


def test_hook_worked_example():
    rows = (
        ((0, 1), (0, 1), (0, 3)),
        ((0, 2),),
        ((0, 3), (1, 1)),
        ((1, 1), (1, 3), (1, 4), (1, 5)),
        ((1, 1), (1, 2), (1, 4)),
    )
    t = Tableau(Shape(Composition((3, 1, 2, 4, 3))), rows)
    assert is_hook_tableau(t, 3, 5)
    xs, ys = hook_content(t, 3, 5)
    assert xs == (2, 1, 2)
    assert ys == (3, 1, 1, 2, 1)
    s = standardize_hook(t)
    assert s.rows == ((1, 2, 5), (3,), (4, 6), (7, 10, 11, 13), (8, 9, 12))
    assert is_standard(s)


def test_hook_enumeration_small():
    got = enumerate_hook(Shape(Composition((1, 1))), 1, 1)
    rowset = sorted(t.rows for t in got)
    assert rowset == [
        (((0, 1),), ((1, 1),)),
        (((1, 1),), ((1, 1),)),
    ]


def test_hook_standardization_is_standard():
    from immaculates.compositions import compositions_of

    for n in range(1, 5):
        for alpha in compositions_of(n):
            for t in enumerate_hook(Shape(alpha), 2, 2):
                assert is_standard(standardize_hook(t))


def test_entry_parsing():
    assert entry_str((PRIMED, 3)) == "3'"
    assert entry_str((UNPRIMED, 3)) == "3"
    assert parse_entry("3'") == (PRIMED, 3)
    assert parse_entry("3") == (UNPRIMED, 3)
