"""Acceptance suite: every criterion is exact integer equality (tolerance
zero) over its stated range, and prints one pass/fail line.

Run with ``pytest tests/test_acceptance.py -s`` to see the per-criterion
report, or just ``pytest`` to enforce it.
"""

import pytest

from immaculates import verify
from immaculates.compositions import Composition, SubsetOfPrefix, comp_of, set_of, transpose
from immaculates.tableaux import (
    IMMACULATE,
    ROW_STRICT,
    PosetPath,
    Shape,
    Tableau,
    descents,
    hook_content,
    path_descents,
    path_to_tableau,
    standardize,
    standardize_hook,
    tableau_to_path,
)


def _report(number, title, records):
    passed = all(r.passed for r in records)
    witnesses = sum(r.witnesses for r in records)
    print(
        f"criterion {number:2d} [{'PASS' if passed else 'FAIL'}] {title} "
        f"({witnesses} exact checks)"
    )
    for r in records:
        if not r.passed:
            print("    " + r.line())
    assert passed, f"criterion {number} failed: {title}"


def test_criterion_01_psi_duality():
    _report(
        1,
        "psi and rho carry dual immaculates onto row-strict ones (n <= 7)",
        [verify.check_psi_duality(7), verify.check_rho_duality(7)],
    )


def test_criterion_02_definition_consistency():
    _report(
        2,
        "realizations equal brute-force tableau generating functions (n <= 5)",
        [verify.check_realization_definition(5)],
    )


def test_criterion_03_matrix_identities():
    _report(
        3,
        "Kstar/Lstar/L identities and the pairing route (n <= 6)",
        [verify.check_matrix_identities(6)],
    )


def test_criterion_04_creation_equals_jacobi_trudi():
    _report(
        4,
        "creation operators equal signed word expansions (|a| <= 7, len <= 4)",
        [verify.check_creation_vs_jacobi_trudi(7, 4), verify.check_column_row_units(7)],
    )


def test_criterion_05_pieri_rules():
    _report(
        5,
        "both multiplicity-free Pieri rules (|a| <= 5, len <= 4, s <= 3)",
        [verify.check_pieri_boxed(5, 4, 3), verify.check_pieri_vertical(5, 4, 3)],
    )


def test_criterion_06_ribbon_and_generator_expansions():
    _report(
        6,
        "ribbon and h/e expansions through the count matrices (n <= 6)",
        [verify.check_ribbon_expansions(6), verify.check_he_expansions(6)],
    )


def test_criterion_07_schur_expansions():
    _report(
        7,
        "Schur expansions, straight (n <= 6) and skew (n <= 5, two taus)",
        [verify.check_schur_straight(6), verify.check_schur_skew(5)],
    )


def test_criterion_08_skew_route_agreement():
    _report(
        8,
        "skew routes agree and coproducts match deconcatenation (n <= 5)",
        [verify.check_skew_routes(5), verify.check_coproducts(5)],
    )


def test_criterion_09_hook_theorems():
    _report(
        9,
        "hook factorization, super fundamental expansion, hook Schur (n <= 5)",
        [verify.check_hooks(5, 3, 3)],
    )


def test_criterion_10_worked_examples():
    failures = []
    count = 0

    def check(ok, label):
        nonlocal count
        count += 1
        if not ok:
            failures.append(label)

    # subset bijection, complement/transpose
    check(
        set_of((3, 1, 4, 2, 5, 1)) == SubsetOfPrefix(16, (3, 4, 8, 10, 15)),
        "partial-sum subset",
    )
    check(
        comp_of(SubsetOfPrefix(16, (2, 3, 5, 9, 10, 14)))
        == Composition((2, 1, 2, 4, 1, 4, 2)),
        "subset to composition",
    )
    check(
        transpose((3, 1, 2, 4)) == Composition((1, 1, 1, 2, 3, 1, 1)),
        "transpose",
    )

    # worked standardizations and descent sets
    t_imm = Tableau(
        Shape(Composition((3, 2, 4, 1, 2))),
        ((1, 1, 2), (2, 2), (3, 4, 4, 5), (5,), (6, 7)),
    )
    s_imm = standardize(t_imm, IMMACULATE)
    check(
        s_imm.rows == ((1, 2, 5), (3, 4), (6, 7, 8, 10), (9,), (11, 12)),
        "immaculate standardization",
    )
    check(
        descents(s_imm, IMMACULATE) == SubsetOfPrefix(12, (2, 5, 8, 10)),
        "immaculate descent set",
    )
    t_rs = Tableau(
        Shape(Composition((3, 2, 4, 1))),
        ((1, 2, 6), (2, 5), (3, 4, 5, 6), (4,)),
    )
    s_rs = standardize(t_rs, ROW_STRICT)
    check(
        s_rs.rows == ((1, 2, 9), (3, 7), (4, 5, 8, 10), (6,)),
        "row-strict standardization",
    )
    check(
        descents(s_rs, ROW_STRICT) == SubsetOfPrefix(10, (1, 4, 6, 8)),
        "row-strict descent set",
    )

    # the labelled path with its descent and ascent sets
    p = PosetPath(Composition((2, 3, 2)), (3, 1, 2, 3, 2, 2, 1))
    d, a = path_descents(p)
    check(d == SubsetOfPrefix(7, (1, 3, 6)), "path descent set")
    check(a == SubsetOfPrefix(7, (2, 4, 5)), "path ascent set")
    check(
        path_to_tableau(p).rows == ((1, 6), (2, 3, 5), (4, 7)),
        "path to tableau",
    )

    # the standard skew correspondence
    p2 = PosetPath(Composition((3, 2, 3)), (1, 1, 2, 3))
    t2 = path_to_tableau(p2)
    check(t2.shape.inner == Composition((1, 1, 2)), "skew path end shape")
    check(t2.rows == ((3, 4), (2,), (1,)), "skew path tableau")
    check(tableau_to_path(t2) == p2, "tableau back to path")
    d2, a2 = path_descents(p2)
    check(d2.elements == () and a2.elements == (1, 2, 3), "skew path descents")

    # hook content monomial and hook standardization
    hook = Tableau(
        Shape(Composition((3, 1, 2, 4, 3))),
        (
            ((0, 1), (0, 1), (0, 3)),
            ((0, 2),),
            ((0, 3), (1, 1)),
            ((1, 1), (1, 3), (1, 4), (1, 5)),
            ((1, 1), (1, 2), (1, 4)),
        ),
    )
    xs, ys = hook_content(hook, 3, 5)
    check(xs == (2, 1, 2) and ys == (3, 1, 1, 2, 1), "hook content monomial")
    check(
        standardize_hook(hook).rows
        == ((1, 2, 5), (3,), (4, 6), (7, 10, 11, 13), (8, 9, 12)),
        "hook standardization",
    )

    passed = not failures
    print(
        f"criterion 10 [{'PASS' if passed else 'FAIL'}] worked examples "
        f"reproduced bit-exactly ({count} exact checks)"
    )
    for label in failures:
        print(f"    FAILED: {label}")
    assert passed, f"criterion 10 failed: {failures}"
