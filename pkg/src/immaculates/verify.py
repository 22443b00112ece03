"""Identity-verification suites.

Every function checks one family of identities exactly (integer equality,
no tolerances) over all instances up to a degree bound, and reports a
:class:`CheckRecord` carrying the witness count and the first failure, if
any.  The suites bundle related identities under the names exposed by the
command line and the service.

Where an identity has two independent derivations in this package (for
example semistandard content counts against standard descent counts, or
creation operators against signed word expansions) the check compares the
two routes rather than an implementation against itself.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .compositions import (
    Composition,
    comp_of,
    complement,
    compositions_of,
    contains,
    partitions_of,
    permutation_sign,
    reverse,
    set_of,
    subset_s,
)
from .elements import Element
from .polynomials import Poly
from .tableaux import (
    IMMACULATE,
    ROW_STRICT,
    Shape,
    descents,
    enumerate_standard,
    enumerate_tableaux,
)
from . import nsym
from . import operators
from . import qsym
from . import skewhook
from . import symfun


@dataclass
class CheckRecord:
    identity: str
    scope: str
    witnesses: int
    passed: bool
    detail: str = ""

    def line(self) -> str:
        mark = "pass" if self.passed else "FAIL"
        msg = f"[{mark}] {self.identity}  ({self.scope}; {self.witnesses} instances)"
        if self.detail:
            msg += f"  -- {self.detail}"
        return msg


class _Tally:
    """Counts instances and remembers the first failing witness."""

    def __init__(self):
        self.count = 0
        self.failure = ""

    def check(self, ok: bool, describe) -> None:
        self.count += 1
        if not ok and not self.failure:
            self.failure = describe() if callable(describe) else str(describe)

    def record(self, identity, scope) -> CheckRecord:
        return CheckRecord(identity, scope, self.count, not self.failure, self.failure)


def _all_compositions(max_n, min_n=1):
    for n in range(min_n, max_n + 1):
        yield from compositions_of(n)


# ---------------------------------------------------------------------------
# psi suite: duality of the two tableau families, definitions and matrices


def check_psi_duality(max_n: int) -> CheckRecord:
    t = _Tally()
    for alpha in _all_compositions(max_n):
        lhs = qsym.convert(qsym.psi(qsym.from_index("DI", alpha)), "F")
        rhs = qsym.convert(qsym.from_index("RSDI", alpha), "F")
        t.check(lhs == rhs, lambda a=alpha: f"index {tuple(a)}")
    return t.record(
        "psi of a dual immaculate function is the row-strict one", f"n <= {max_n}"
    )


def check_rho_duality(max_n: int) -> CheckRecord:
    t = _Tally()
    for alpha in _all_compositions(max_n):
        lhs = qsym.convert(qsym.rho(qsym.from_index("DI", alpha)), "F")
        rhs = qsym.convert(qsym.from_index("RSDI", reverse(alpha)), "F")
        t.check(lhs == rhs, lambda a=alpha: f"index {tuple(a)}")
    return t.record(
        "rho of a dual immaculate function reverses into the row-strict one",
        f"n <= {max_n}",
    )


def check_fundamental_expansions(max_n: int) -> CheckRecord:
    t = _Tally()
    for alpha in _all_compositions(max_n):
        for kind, basis in ((IMMACULATE, "DI"), (ROW_STRICT, "RSDI")):
            terms = {}
            for s in enumerate_standard(Shape(alpha)):
                idx = comp_of(descents(s, kind))
                terms[idx] = terms.get(idx, 0) + 1
            via_tableaux = qsym.make("F", alpha.degree, terms)
            via_matrix = qsym.convert(qsym.from_index(basis, alpha), "F")
            t.check(
                via_tableaux == via_matrix,
                lambda a=alpha, k=kind: f"index {tuple(a)}, {k}",
            )
    return t.record(
        "fundamental expansions match the standard-tableau descent sums",
        f"n <= {max_n}, both kinds",
    )


def check_realization_definition(max_n: int) -> CheckRecord:
    t = _Tally()
    for alpha in _all_compositions(max_n):
        n = alpha.degree
        for kind, basis in ((IMMACULATE, "DI"), (ROW_STRICT, "RSDI")):
            brute = Poly.zero(n)
            for tab in enumerate_tableaux(Shape(alpha), kind, n):
                exps = [0] * n
                for entry in tab.entries():
                    exps[entry - 1] += 1
                brute = brute + Poly.monomial(exps)
            t.check(
                qsym.realize(qsym.from_index(basis, alpha), n) == brute,
                lambda a=alpha, k=kind: f"index {tuple(a)}, {k}",
            )
    return t.record(
        "polynomial realization equals the defining tableau sum",
        f"n <= {max_n}, both kinds, n variables",
    )


def check_matrix_identities(max_n: int) -> CheckRecord:
    t = _Tally()
    for n in range(1, max_n + 1):
        K = qsym.matrix("K", n)
        Ks = qsym.matrix("Kstar", n)
        L = qsym.matrix("L", n)
        Ls = qsym.matrix("Lstar", n)
        comps = compositions_of(n)
        for a in comps:
            for g in comps:
                coarser = sum(
                    Ls.entry(a, b)
                    for b in comps
                    if set(set_of(b).elements) <= set(set_of(g).elements)
                )
                t.check(
                    Ks.entry(a, g) == coarser,
                    lambda a=a, g=g: f"Kstar[{tuple(a)},{tuple(g)}]",
                )
                t.check(
                    Ls.entry(a, g) == L.entry(a, complement(g)),
                    lambda a=a, g=g: f"Lstar[{tuple(a)},{tuple(g)}]",
                )
                pair_h = nsym.pair(nsym.h(g), qsym.from_index("RSDI", a))
                pair_e = nsym.pair(nsym.e(g), qsym.from_index("DI", a))
                t.check(
                    Ks.entry(a, g) == pair_h == pair_e,
                    lambda a=a, g=g: f"pairing Kstar[{tuple(a)},{tuple(g)}]",
                )
            # K is unitriangular along lex order
            t.check(K.entry(a, a) == 1, lambda a=a: f"K diagonal at {tuple(a)}")
            for g in comps:
                if tuple(g) > tuple(a):
                    t.check(
                        K.entry(a, g) == 0,
                        lambda a=a, g=g: f"K above diagonal at [{tuple(a)},{tuple(g)}]",
                    )
    return t.record(
        "tableau-count matrices satisfy the coarsening and pairing identities",
        f"n <= {max_n}",
    )


def check_rsdi_spans(max_n: int) -> CheckRecord:
    t = _Tally()
    for n in range(1, max_n + 1):
        comps = compositions_of(n)
        rows = [
            [Fraction(qsym.matrix("Kstar", n).entry(a, b)) for b in comps]
            for a in comps
        ]
        size = len(comps)
        rank = 0
        for col in range(size):
            pivot = next(
                (r for r in range(rank, size) if rows[r][col] != 0), None
            )
            if pivot is None:
                continue
            rows[rank], rows[pivot] = rows[pivot], rows[rank]
            inv = 1 / rows[rank][col]
            rows[rank] = [v * inv for v in rows[rank]]
            for r in range(size):
                if r != rank and rows[r][col] != 0:
                    factor = rows[r][col]
                    rows[r] = [v - factor * p for v, p in zip(rows[r], rows[rank])]
            rank += 1
        t.check(rank == size, lambda n=n: f"rank {rank} of {size} at degree {n}")
    return t.record(
        "row-strict monomial expansion matrix is invertible over the rationals",
        f"n <= {max_n}",
    )


def check_pairing_invariance(max_n: int) -> CheckRecord:
    t = _Tally()
    for n in range(1, max_n + 1):
        for a in compositions_of(n):
            for b in compositions_of(n):
                g, f = nsym.r(a), qsym.from_index("F", b)
                t.check(
                    nsym.pair(g, f) == nsym.pair(nsym.psi(g), qsym.psi(f)),
                    lambda a=a, b=b: f"r[{tuple(a)}] against F[{tuple(b)}]",
                )
    return t.record("the duality pairing is psi-invariant", f"n <= {max_n}")


def check_chi_psi(max_n: int) -> CheckRecord:
    t = _Tally()
    for alpha in _all_compositions(max_n):
        lhs = nsym.chi(nsym.psi(nsym.h(alpha)))
        rhs = symfun.omega(nsym.chi(nsym.h(alpha)))
        t.check(
            symfun.convert(lhs, "H") == symfun.convert(rhs, "H"),
            lambda a=alpha: f"index {tuple(a)}",
        )
    return t.record(
        "the forgetful map intertwines psi with the classical involution",
        f"n <= {max_n}",
    )


# ---------------------------------------------------------------------------
# jacobi-trudi suite: creation operators against signed word expansions


def check_creation_vs_jacobi_trudi(max_n: int, max_len: int = 4) -> CheckRecord:
    t = _Tally()
    for alpha in _all_compositions(max_n):
        if len(alpha) > max_len:
            continue
        t.check(
            operators.immaculate(alpha)
            == nsym.convert(nsym.from_index("IMM", alpha), "H"),
            lambda a=alpha: f"immaculate {tuple(a)}",
        )
        t.check(
            operators.rs_immaculate(alpha)
            == nsym.convert(nsym.from_index("RSIMM", alpha), "E"),
            lambda a=alpha: f"row-strict {tuple(a)}",
        )
    return t.record(
        "iterated creation operators equal the signed word expansions",
        f"|alpha| <= {max_n}, length <= {max_len}",
    )


def check_column_row_units(max_n: int) -> CheckRecord:
    t = _Tally()
    for n in range(1, max_n + 1):
        col = Composition((1,) * n)
        t.check(
            nsym.convert(nsym.from_index("IMM", col), "E") == nsym.e((n,)),
            lambda n=n: f"column of height {n} on the immaculate side",
        )
        t.check(
            nsym.convert(nsym.from_index("RSIMM", col), "H") == nsym.h((n,)),
            lambda n=n: f"column of height {n} on the row-strict side",
        )
    return t.record(
        "columns collapse to single generators", f"n <= {max_n}"
    )


def check_perp_on_columns(max_n: int) -> CheckRecord:
    t = _Tally()
    for n in range(1, max_n + 1):
        col = nsym.convert(nsym.from_index("IMM", Composition((1,) * n)), "H")
        rs_col = nsym.convert(nsym.from_index("RSIMM", Composition((1,) * n)), "H")
        for r_ in range(1, n + 1):
            want = nsym.convert(
                nsym.from_index("IMM", Composition((1,) * (n - r_)))
                if n - r_
                else nsym.one("IMM"),
                "H",
            )
            got = operators.perp(qsym.from_index("F", (1,) * r_), col)
            t.check(got == want, lambda n=n, r=r_: f"column perp ({n}, {r})")
            want_rs = nsym.convert(
                nsym.from_index("RSIMM", Composition((1,) * (n - r_)))
                if n - r_
                else nsym.one("RSIMM"),
                "H",
            )
            got_rs = operators.perp(qsym.from_index("F", (r_,)), rs_col)
            t.check(got_rs == want_rs, lambda n=n, r=r_: f"row perp ({n}, {r})")
        for s in range(2, n + 1):
            t.check(
                operators.perp(qsym.from_index("F", (s,)), col).is_zero(),
                lambda n=n, s=s: f"row perp of a column ({n}, {s})",
            )
            t.check(
                operators.perp(qsym.from_index("F", (1,) * s), rs_col).is_zero(),
                lambda n=n, s=s: f"column perp of a row-strict column ({n}, {s})",
            )
    return t.record(
        "perp operators peel columns one generator at a time", f"n <= {max_n}"
    )


def check_commutation(max_deg: int = 3, max_m: int = 3, max_s: int = 3) -> CheckRecord:
    t = _Tally()
    for n in range(0, max_deg + 1):
        for alpha in compositions_of(n):
            f = nsym.h(alpha) if alpha else nsym.one("H")
            fe = nsym.e(alpha) if alpha else nsym.one("E")
            for m in range(1, max_m + 1):
                for s in range(1, max_s + 1):
                    lhs = nsym.product(operators.bernstein(m, f), nsym.h((s,)))
                    rhs = operators.bernstein(m, nsym.product(f, nsym.h((s,))))
                    if s - 1:
                        rhs = rhs + nsym.product(
                            operators.bernstein(m + 1, f), nsym.h((s - 1,))
                        )
                    else:
                        rhs = rhs + operators.bernstein(m + 1, f)
                    t.check(
                        lhs == rhs, lambda a=alpha, m=m, s=s: f"h side {tuple(a)},{m},{s}"
                    )
                    lhs_e = nsym.convert(
                        nsym.product(operators.bernstein_rs(m, fe), nsym.e((s,))), "E"
                    )
                    rhs_e = operators.bernstein_rs(m, nsym.product(fe, nsym.e((s,))))
                    if s - 1:
                        rhs_e = rhs_e + nsym.convert(
                            nsym.product(operators.bernstein_rs(m + 1, fe), nsym.e((s - 1,))),
                            "E",
                        )
                    else:
                        rhs_e = rhs_e + operators.bernstein_rs(m + 1, fe)
                    t.check(
                        lhs_e == rhs_e,
                        lambda a=alpha, m=m, s=s: f"e side {tuple(a)},{m},{s}",
                    )
    return t.record(
        "creation operators commute with right multiplication as stated",
        f"deg f <= {max_deg}, m <= {max_m}, s <= {max_s}",
    )


def check_left_multiplication(max_deg: int = 4, max_m: int = 2) -> CheckRecord:
    t = _Tally()
    for n in range(0, max_deg + 1):
        for alpha in compositions_of(n):
            g = nsym.h(alpha) if alpha else nsym.one("H")
            ge = nsym.e(alpha) if alpha else nsym.one("E")
            for m in range(1, max_m + 1):
                t.check(
                    operators.left_mult_h_via_ops(m, g)
                    == nsym.product(nsym.h((m,)), g),
                    lambda a=alpha, m=m: f"h {tuple(a)}, m={m}",
                )
                t.check(
                    operators.left_mult_e_via_ops(m, ge)
                    == nsym.convert(nsym.product(nsym.e((m,)), ge), "E"),
                    lambda a=alpha, m=m: f"e {tuple(a)}, m={m}",
                )
    return t.record(
        "left multiplication by generators rewrites through creation operators",
        f"deg g <= {max_deg}, m <= {max_m}",
    )


# ---------------------------------------------------------------------------
# pieri suite


def check_pieri_boxed(max_n: int, max_len: int = 4, max_s: int = 3) -> CheckRecord:
    t = _Tally()
    for alpha in _all_compositions(max_n):
        if len(alpha) > max_len:
            continue
        for s in range(1, max_s + 1):
            target = alpha.degree + s
            betas = [b for b in compositions_of(target) if subset_s(alpha, b, s)]
            lhs = nsym.product(
                nsym.convert(nsym.from_index("IMM", alpha), "H"), nsym.h((s,))
            )
            rhs = nsym.zero("H", target)
            for b in betas:
                rhs = rhs + nsym.convert(nsym.from_index("IMM", b), "H")
            t.check(lhs == rhs, lambda a=alpha, s=s: f"h side {tuple(a)}, s={s}")
            lhs_e = nsym.product(
                nsym.convert(nsym.from_index("RSIMM", alpha), "E"), nsym.e((s,))
            )
            rhs_e = nsym.zero("E", target)
            for b in betas:
                rhs_e = rhs_e + nsym.convert(nsym.from_index("RSIMM", b), "E")
            t.check(lhs_e == rhs_e, lambda a=alpha, s=s: f"e side {tuple(a)}, s={s}")
    return t.record(
        "multiplicity-free right Pieri rule (single new row)",
        f"|alpha| <= {max_n}, length <= {max_len}, s <= {max_s}",
    )


def _vertical_pieri_indices(alpha, s):
    """Compositions adding at most one cell per row, any number of new rows."""
    target = alpha.degree + s
    out = []
    for beta in compositions_of(target):
        padded = tuple(alpha) + (0,) * (len(beta) - len(alpha))
        if len(beta) < len(alpha):
            continue
        if all(p <= b <= p + 1 for p, b in zip(padded, beta)):
            out.append(beta)
    return out


def check_pieri_vertical(max_n: int, max_len: int = 4, max_s: int = 3) -> CheckRecord:
    t = _Tally()
    for alpha in _all_compositions(max_n):
        if len(alpha) > max_len:
            continue
        for s in range(1, max_s + 1):
            target = alpha.degree + s
            betas = _vertical_pieri_indices(alpha, s)
            lhs = nsym.convert(
                nsym.product(
                    nsym.convert(nsym.from_index("IMM", alpha), "H"), nsym.e((s,))
                ),
                "H",
            )
            rhs = nsym.zero("H", target)
            for b in betas:
                rhs = rhs + nsym.convert(nsym.from_index("IMM", b), "H")
            t.check(lhs == rhs, lambda a=alpha, s=s: f"e on immaculate {tuple(a)}, s={s}")
            lhs_rs = nsym.convert(
                nsym.product(
                    nsym.convert(nsym.from_index("RSIMM", alpha), "E"), nsym.h((s,))
                ),
                "E",
            )
            rhs_rs = nsym.zero("E", target)
            for b in betas:
                rhs_rs = rhs_rs + nsym.convert(nsym.from_index("RSIMM", b), "E")
            t.check(
                lhs_rs == rhs_rs, lambda a=alpha, s=s: f"h on row-strict {tuple(a)}, s={s}"
            )
    return t.record(
        "multiplicity-free right Pieri rule (at most one cell per row)",
        f"|alpha| <= {max_n}, length <= {max_len}, s <= {max_s}",
    )


# ---------------------------------------------------------------------------
# ribbon suite


def check_ribbon_expansions(max_n: int) -> CheckRecord:
    t = _Tally()
    for n in range(1, max_n + 1):
        L = qsym.matrix("L", n)
        for beta in compositions_of(n):
            lhs = nsym.convert(nsym.r(beta), "H")
            rhs = nsym.zero("H", n)
            for a in compositions_of(n):
                c = L.entry(a, beta)
                if c:
                    rhs = rhs + nsym.convert(nsym.from_index("IMM", a), "H").scalar_mul(c)
            t.check(lhs == rhs, lambda b=beta: f"ribbon {tuple(b)}")
            lhs_c = nsym.convert(nsym.r(complement(beta)), "H")
            rhs_c = nsym.zero("H", n)
            for a in compositions_of(n):
                c = L.entry(a, beta)
                if c:
                    rhs_c = rhs_c + nsym.convert(
                        nsym.from_index("RSIMM", a), "H"
                    ).scalar_mul(c)
            t.check(lhs_c == rhs_c, lambda b=beta: f"complement ribbon {tuple(b)}")
    return t.record(
        "ribbons expand positively in both immaculate bases", f"n <= {max_n}"
    )


def check_he_expansions(max_n: int) -> CheckRecord:
    t = _Tally()
    for n in range(1, max_n + 1):
        K = qsym.matrix("K", n)
        Ks = qsym.matrix("Kstar", n)
        for beta in compositions_of(n):
            cases = (
                ("h by K into immaculates", nsym.h(beta), "IMM", K),
                ("e by K into row-stricts", nsym.e(beta), "RSIMM", K),
                ("h by Kstar into row-stricts", nsym.h(beta), "RSIMM", Ks),
                ("e by Kstar into immaculates", nsym.e(beta), "IMM", Ks),
            )
            for label, word, basis, mat in cases:
                lhs = nsym.convert(word, "H")
                rhs = nsym.zero("H", n)
                for a in compositions_of(n):
                    c = mat.entry(a, beta)
                    if c:
                        rhs = rhs + nsym.convert(
                            nsym.from_index(basis, a), "H"
                        ).scalar_mul(c)
                t.check(lhs == rhs, lambda b=beta, l=label: f"{l} at {tuple(b)}")
    return t.record(
        "generator words expand through the tableau-count matrices",
        f"n <= {max_n}",
    )


# ---------------------------------------------------------------------------
# schur suite


def _schur_in_immaculates(lam, kind) -> Element:
    total = qsym.zero("M", lam.degree)
    for sigma in itertools.permutations(range(1, len(lam) + 1)):
        idx = symfun.sigma_action(lam, sigma)
        if idx is None:
            continue
        x = qsym.convert(qsym.from_index(kind, idx), "M")
        total = total + x.scalar_mul(permutation_sign(sigma))
    return total


def check_schur_straight(max_n: int) -> CheckRecord:
    from .compositions import conjugate

    t = _Tally()
    for n in range(1, max_n + 1):
        for lam in partitions_of(n):
            want = symfun.to_qsym(symfun.schur_jt(lam))
            t.check(
                _schur_in_immaculates(lam, "DI") == want,
                lambda l=lam: f"straight {tuple(l)}",
            )
            want_c = symfun.to_qsym(symfun.schur_jt(conjugate(lam)))
            t.check(
                _schur_in_immaculates(lam, "RSDI") == want_c,
                lambda l=lam: f"conjugate {tuple(l)}",
            )
    return t.record(
        "Schur functions are signed sums of (row-strict) dual immaculates",
        f"partitions of n <= {max_n}",
    )


def _skew_schur_in_immaculates(lam, mu, tau, kind) -> Element:
    d = lam.degree - mu.degree
    total = qsym.zero("M", d)
    tmu = symfun.sigma_action(mu, tau) if mu else Composition()
    sign_tau = permutation_sign(tau) if mu else 1
    for sigma in itertools.permutations(range(1, len(lam) + 1)):
        slam = symfun.sigma_action(lam, sigma)
        if slam is None or not contains(slam, tmu):
            continue
        x = skewhook.skew_pairing(slam, tmu, kind)
        total = total + x.scalar_mul(permutation_sign(sigma) * sign_tau)
    return total


def check_schur_skew(max_n: int) -> CheckRecord:
    from .compositions import conjugate

    t = _Tally()
    for n in range(1, max_n + 1):
        for lam in partitions_of(n):
            for mu in skewhook._partitions_inside(lam):
                taus = symfun.straightening_permutations(mu) if mu else [()]
                chosen = taus[:2]  # the identity and one straightening twist
                want = symfun.to_qsym(symfun.schur_jt(lam, mu))
                want_c = symfun.to_qsym(
                    symfun.schur_jt(conjugate(lam), conjugate(mu))
                )
                for tau in chosen:
                    t.check(
                        _skew_schur_in_immaculates(lam, mu, tau, "DI") == want,
                        lambda l=lam, m=mu, s=tau: f"skew {tuple(l)}/{tuple(m)} tau={s}",
                    )
                    t.check(
                        _skew_schur_in_immaculates(lam, mu, tau, "RSDI") == want_c,
                        lambda l=lam, m=mu, s=tau: f"conjugate skew {tuple(l)}/{tuple(m)} tau={s}",
                    )
    return t.record(
        "skew Schur functions expand over reindexed skew immaculates",
        f"partitions of n <= {max_n}, identity and one twisted straightening",
    )


# ---------------------------------------------------------------------------
# skew suite


def _subshapes(alpha):
    for beta in skewhook.subcompositions(alpha):
        yield beta


def check_skew_routes(max_n: int) -> CheckRecord:
    t = _Tally()
    for alpha in _all_compositions(max_n):
        for beta in _subshapes(alpha):
            d = alpha.degree - beta.degree
            for kind in ("DI", "RSDI"):
                via_pairing = skewhook.skew_pairing(alpha, beta, kind)
                via_paths = skewhook.skew_F_expansion(alpha, beta, kind, "paths")
                via_tabs = skewhook.skew_F_expansion(alpha, beta, kind, "tableaux")
                t.check(
                    via_paths == via_tabs,
                    lambda a=alpha, b=beta, k=kind: f"paths vs tableaux {tuple(a)}/{tuple(b)} {k}",
                )
                t.check(
                    qsym.convert(via_paths, "M") == via_pairing,
                    lambda a=alpha, b=beta, k=kind: f"pairing vs paths {tuple(a)}/{tuple(b)} {k}",
                )
                nv = max(d, 1)
                t.check(
                    skewhook.skew_generating_function(alpha, beta, kind, nv)
                    == qsym.realize(via_pairing, nv),
                    lambda a=alpha, b=beta, k=kind: f"generating function {tuple(a)}/{tuple(b)} {k}",
                )
                own_basis = skewhook.skew_immaculate_expansion(alpha, beta, kind)
                t.check(
                    qsym.convert(own_basis, "F") == via_paths,
                    lambda a=alpha, b=beta, k=kind: f"own-basis legs {tuple(a)}/{tuple(b)} {k}",
                )
            t.check(
                qsym.psi(skewhook.skew_F_expansion(alpha, beta, "DI"))
                == skewhook.skew_F_expansion(alpha, beta, "RSDI"),
                lambda a=alpha, b=beta: f"psi exchange {tuple(a)}/{tuple(b)}",
            )
    return t.record(
        "all skew constructions agree and exchange under psi",
        f"|alpha| <= {max_n}, every contained inner shape, both kinds",
    )


# ---------------------------------------------------------------------------
# coproduct suite


def check_coproducts(max_n: int) -> CheckRecord:
    t = _Tally()
    for alpha in _all_compositions(max_n):
        for kind in ("DI", "RSDI"):
            lhs = skewhook._coproduct_via_skew(alpha, kind)
            rhs = skewhook.coproduct_via_F(alpha, kind)
            t.check(lhs == rhs, lambda a=alpha, k=kind: f"{k} at {tuple(a)}")
            # counit law: empty legs reproduce the fundamental expansion
            target = qsym.convert(
                qsym.from_index("DI" if kind == "DI" else "RSDI", alpha), "F"
            )
            empty = Composition()
            left_unit = {}
            right_unit = {}
            for (le, ri), c in lhs.terms.items():
                if le == empty:
                    left_unit[ri] = left_unit.get(ri, 0) + c
                if ri == empty:
                    right_unit[le] = right_unit.get(le, 0) + c
            t.check(
                qsym.make("F", alpha.degree, left_unit) == target
                and qsym.make("F", alpha.degree, right_unit) == target,
                lambda a=alpha, k=kind: f"counit {k} at {tuple(a)}",
            )
    return t.record(
        "tableau-defined coproducts match deconcatenation and satisfy the counit law",
        f"n <= {max_n}, both kinds",
    )


# ---------------------------------------------------------------------------
# hook suite


def check_hooks(max_n: int, l: int = 3, k: int = 3) -> CheckRecord:
    t = _Tally()
    for alpha in _all_compositions(max_n):
        t.check(
            skewhook.hook_dI(alpha, l, k)
            == skewhook.hook_dI_via_factorization(alpha, l, k),
            lambda a=alpha: f"factorization at {tuple(a)}",
        )
        t.check(
            skewhook.hook_dI(alpha, l, k)
            == skewhook.hook_fund_expansion(alpha, l, k),
            lambda a=alpha: f"super fundamental expansion at {tuple(a)}",
        )
        t.check(
            skewhook.super_fundamental(alpha, l, k)
            == skewhook.super_fundamental_via_split(alpha, l, k),
            lambda a=alpha: f"split form at {tuple(a)}",
        )
    for n in range(1, max_n + 1):
        for lam in partitions_of(n):
            t.check(
                skewhook.hook_schur(lam, l, k)
                == skewhook.hook_schur_expansion(lam, l, k),
                lambda lm=lam: f"hook Schur at {tuple(lm)}",
            )
    return t.record(
        "hook functions factor, expand and match their Schur analogue",
        f"|alpha|, |lambda| <= {max_n}, alphabets {l} and {k}",
    )


# ---------------------------------------------------------------------------
# suite registry


def suite_psi(max_n: int) -> list[CheckRecord]:
    return [
        check_psi_duality(max_n),
        check_rho_duality(max_n),
        check_fundamental_expansions(max_n),
        check_realization_definition(min(max_n, 5)),
        check_matrix_identities(min(max_n, 6)),
        check_rsdi_spans(min(max_n, 6)),
        check_pairing_invariance(min(max_n, 5)),
        check_chi_psi(min(max_n, 5)),
    ]


def suite_pieri(max_n: int) -> list[CheckRecord]:
    return [check_pieri_boxed(max_n), check_pieri_vertical(max_n)]


def suite_jacobi_trudi(max_n: int) -> list[CheckRecord]:
    return [
        check_creation_vs_jacobi_trudi(max_n),
        check_column_row_units(max_n),
        check_perp_on_columns(max_n),
        check_commutation(min(max_n, 3)),
        check_left_multiplication(min(max_n, 4)),
    ]


def suite_ribbon(max_n: int) -> list[CheckRecord]:
    return [check_ribbon_expansions(max_n), check_he_expansions(max_n)]


def suite_schur(max_n: int) -> list[CheckRecord]:
    return [check_schur_straight(max_n), check_schur_skew(max(max_n - 1, 1))]


def suite_skew(max_n: int) -> list[CheckRecord]:
    return [check_skew_routes(max_n)]


def suite_coproduct(max_n: int) -> list[CheckRecord]:
    return [check_coproducts(max_n)]


def suite_hook(max_n: int) -> list[CheckRecord]:
    return [check_hooks(max_n)]


SUITES = {
    "psi": suite_psi,
    "pieri": suite_pieri,
    "jacobi-trudi": suite_jacobi_trudi,
    "ribbon": suite_ribbon,
    "schur": suite_schur,
    "skew": suite_skew,
    "coproduct": suite_coproduct,
    "hook": suite_hook,
}

SUITE_NAMES = tuple(SUITES) + ("all",)


def run_suite(name: str, max_n: int) -> list[CheckRecord]:
    """Run one named suite (or all of them) at the given degree bound."""
    if name == "all":
        records = []
        for suite_name in SUITES:
            records.extend(SUITES[suite_name](max_n))
        return records
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; pick from {SUITE_NAMES}")
    return SUITES[name](max_n)
