import pytest

from immaculates import qsym, skewhook as sk
from immaculates.compositions import (
    Composition,
    Partition,
    compositions_of,
    contains,
    partitions_of,
)
from immaculates.elements import TensorElem
from immaculates.polynomials import BiPoly, Poly
from immaculates.tableaux import (
    IMMACULATE,
    ROW_STRICT,
    Shape,
    descents,
    enumerate_hook,
    standardize_hook,
)


def test_subcompositions():
    got = sk.subcompositions(Composition((2, 1)))
    assert Composition() in got
    assert Composition((2, 1)) in got
    assert Composition((1, 1)) in got
    assert Composition((2,)) in got
    assert len(got) == len(set(got))
    for g in got:
        assert contains((2, 1), g)


def test_skew_pairing_examples():
    both = {
        kind: sk.skew_pairing((2, 2), (1, 1), kind) for kind in ("DI", "RSDI")
    }
    want = qsym.make("M", 2, {(2,): 1, (1, 1): 2})
    assert both["DI"] == want and both["RSDI"] == want
    # inner equals outer: the unit in degree zero
    assert sk.skew_pairing((2, 1), (2, 1), "DI") == qsym.one("M")
    # empty inner: the straight function
    assert sk.skew_pairing((1, 2), (), "RSDI") == qsym.convert(
        qsym.from_index("RSDI", (1, 2)), "M"
    )


def test_skew_pairing_validates():
    with pytest.raises(ValueError):
        sk.skew_pairing((1, 1), (2,), "DI")
    with pytest.raises(ValueError):
        sk.skew_pairing((2, 2), (1, 1), "XX")


def test_skew_f_expansion_contains_known_filling():
    f = sk.skew_F_expansion((3, 2, 3), (1, 1, 2), "RSDI")
    assert f.coeff((1, 1, 1, 1)) >= 1
    # the fully skewed single standard filling contributes the top index
    assert sk.skew_F_expansion((2, 1), (2, 1), "DI") == qsym.one("F")


def test_skew_routes_agree():
    for kind in ("DI", "RSDI"):
        for n in range(1, 5):
            for alpha in compositions_of(n):
                for beta in sk.subcompositions(alpha):
                    pairing = sk.skew_pairing(alpha, beta, kind)
                    paths = sk.skew_F_expansion(alpha, beta, kind, "paths")
                    tabs = sk.skew_F_expansion(alpha, beta, kind, "tableaux")
                    assert paths == tabs
                    assert qsym.convert(paths, "M") == pairing
                    d = alpha.degree - beta.degree
                    nv = max(d, 1)
                    assert sk.skew_generating_function(
                        alpha, beta, kind, nv
                    ) == qsym.realize(pairing, nv)


def test_skew_own_basis_expansion():
    for alpha in compositions_of(4):
        for beta in sk.subcompositions(alpha):
            for kind in ("DI", "RSDI"):
                own = sk.skew_immaculate_expansion(alpha, beta, kind)
                assert qsym.convert(own, "F") == sk.skew_F_expansion(
                    alpha, beta, kind
                )


def test_skew_psi_exchange():
    for alpha in compositions_of(4):
        for beta in sk.subcompositions(alpha):
            assert qsym.psi(
                sk.skew_F_expansion(alpha, beta, "DI")
            ) == sk.skew_F_expansion(alpha, beta, "RSDI")


def test_generating_function_example():
    got = sk.skew_generating_function((2, 2), (1, 1), "DI", 2)
    assert got == Poly(2, {(2, 0): 1, (1, 1): 2, (0, 2): 1})


def test_coproduct_primitive_in_degree_one():
    cp = sk.coproduct_DI((1,))
    want = TensorElem(
        "QSym",
        "F",
        "F",
        1,
        {
            (Composition(), Composition((1,))): 1,
            (Composition((1,)), Composition()): 1,
        },
    )
    assert cp == want


def test_coproduct_matches_deconcatenation():
    for n in range(1, 5):
        for alpha in compositions_of(n):
            assert sk.coproduct_DI(alpha) == sk.coproduct_via_F(alpha, "DI")
            assert sk.coproduct_RSDI(alpha) == sk.coproduct_via_F(alpha, "RSDI")


def test_coproduct_bidegree_legs():
    cp = sk.coproduct_DI((1, 1))
    # the (1,1) bidegree piece: straight leg times the one-cell skew leg
    leg = {
        (l, r): c for (l, r), c in cp.terms.items() if l.degree == 1 and r.degree == 1
    }
    skew_leg = sk.skew_F_expansion((1, 1), (1,), "DI")
    want = {}
    for r, c in skew_leg.terms.items():
        want[(Composition((1,)), r)] = c
    assert leg == want


def test_super_fundamental_examples():
    q1 = sk.super_fundamental((1,), 2, 2)
    assert q1 == BiPoly(
        2,
        2,
        {
            ((1, 0), (0, 0)): 1,
            ((0, 1), (0, 0)): 1,
            ((0, 0), (1, 0)): 1,
            ((0, 0), (0, 1)): 1,
        },
    )
    assert sk.super_fundamental((2,), 1, 1) == BiPoly(
        1, 1, {((2,), (0,)): 1, ((1,), (1,)): 1}
    )
    assert sk.super_fundamental((1, 1), 1, 1) == BiPoly(
        1, 1, {((1,), (1,)): 1, ((0,), (2,)): 1}
    )


def test_super_fundamental_split_form():
    for n in range(1, 6):
        for alpha in compositions_of(n):
            assert sk.super_fundamental(alpha, 2, 2) == sk.super_fundamental_via_split(
                alpha, 2, 2
            ), alpha


def test_super_fundamental_single_alphabet_limits():
    for alpha in compositions_of(4):
        # no primed letters: the plain fundamental realization
        only_x = sk.super_fundamental(alpha, 3, 0)
        want_x = qsym.realize(qsym.from_index("F", alpha), 3)
        assert only_x == BiPoly.from_product(want_x, Poly(0, {(): 1}))
        # no unprimed letters: the complementary index on the y side
        only_y = sk.super_fundamental(alpha, 0, 3)
        from immaculates.compositions import complement

        want_y = qsym.realize(qsym.from_index("F", complement(alpha)), 3)
        assert only_y == BiPoly.from_product(Poly(0, {(): 1}), want_y)


def test_hook_dI_examples():
    assert sk.hook_dI((1, 1), 1, 1) == BiPoly(
        1, 1, {((1,), (1,)): 1, ((0,), (2,)): 1}
    )
    hp = sk.hook_dI((3, 1, 2, 4, 3), 3, 5)
    assert hp.coeff((2, 1, 2), (3, 1, 1, 2, 1)) >= 1


def test_hook_routes_agree():
    for n in range(1, 5):
        for alpha in compositions_of(n):
            via_tabs = sk.hook_dI(alpha, 2, 2)
            assert via_tabs == sk.hook_dI_via_factorization(alpha, 2, 2)
            assert via_tabs == sk.hook_fund_expansion(alpha, 2, 2)


def _split_hook(t):
    """Unprimed straight part and primed skew part of a hook tableau."""
    from immaculates.tableaux import Tableau

    outer = t.shape.outer
    prefix = []
    for row in t.rows:
        prefix.append(sum(1 for tag, _ in row if tag == 0))
    gamma = Composition(tuple(p for p in prefix if p))
    assert prefix == [p for p in prefix if p] + [0] * (len(prefix) - len(gamma))
    s_rows = tuple(
        tuple(v for tag, v in row if tag == 0) for row in t.rows[: len(gamma)]
    )
    straight = Tableau(Shape(gamma), s_rows)
    u_rows = tuple(tuple(v for tag, v in row if tag == 1) for row in t.rows)
    skew = Tableau(Shape(outer, gamma), u_rows)
    return straight, skew


def test_hook_descent_split_bookkeeping():
    # descents of the standardization decompose across the two alphabets:
    # the unprimed block keeps its descents, the primed block contributes
    # the shifted complement of its row-strict descents, and the seam joins
    # exactly when the first primed label sits strictly above the last
    # unprimed one
    from immaculates.tableaux import standardize

    for n in range(1, 6):
        for alpha in compositions_of(n):
            for t in enumerate_hook(Shape(alpha), 2, 2):
                s = standardize_hook(t)
                straight, skew = _split_hook(t)
                b = straight.size
                m = n - b
                want = set()
                if b:
                    want |= set(
                        descents(standardize(straight, IMMACULATE), IMMACULATE).elements
                    )
                if m:
                    rs = set(descents(standardize(skew, ROW_STRICT), ROW_STRICT).elements)
                    want |= {b + i for i in range(1, m) if i not in rs}
                if b and m:
                    row_at = {e: r for r, row in enumerate(s.rows, 1) for e in row}
                    if row_at[b + 1] > row_at[b]:
                        want.add(b)
                assert set(descents(s, IMMACULATE).elements) == want, (alpha, t)
    # the worked standardization has the documented descent set
    rows = (
        ((0, 1), (0, 1), (0, 3)),
        ((0, 2),),
        ((0, 3), (1, 1)),
        ((1, 1), (1, 3), (1, 4), (1, 5)),
        ((1, 1), (1, 2), (1, 4)),
    )
    from immaculates.tableaux import Tableau

    t = Tableau(Shape(Composition((3, 1, 2, 4, 3))), rows)
    s = standardize_hook(t)
    assert set(descents(s, IMMACULATE).elements) == {2, 3, 5, 6, 7, 11}


def test_hook_schur_examples():
    assert sk.hook_schur((1,), 2, 2) == sk.hook_dI((1,), 2, 2)
    hs = sk.hook_schur((1, 1), 1, 1)
    assert hs == BiPoly(1, 1, {((0,), (2,)): 1, ((1,), (1,)): 1})
    assert sk.hook_schur_expansion((1, 1), 1, 1) == hs


def test_hook_schur_two_routes():
    for n in range(1, 5):
        for lam in partitions_of(n):
            assert sk.hook_schur(lam, 2, 2) == sk.hook_schur_expansion(lam, 2, 2)


def test_partitions_inside():
    inside = sk._partitions_inside(Partition((2, 1)))
    assert set(map(tuple, inside)) == {(), (1,), (2,), (1, 1), (2, 1)}
