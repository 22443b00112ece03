"""Command-line front end.

A thin client over the service layer: flags are parsed into the same
request models the HTTP endpoints take, the shared handlers do the work in
process, and the response models are rendered as text or JSON.

Exit codes: 0 on success (and on a fully verified suite), 1 when a
verification suite finds a failing identity, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import sys

from pydantic import ValidationError

from .service import models
from .service.app import (
    handle_compositions,
    handle_expand,
    handle_hook,
    handle_matrix,
    handle_pair,
    handle_skew,
    handle_tableaux,
    handle_verify,
)


def _parse_parts(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(p) for p in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _parse_basis_index(text: str) -> tuple[str, list[int]]:
    if ":" not in text:
        raise argparse.ArgumentTypeError(
            f"expected BASIS:parts, e.g. H:2,1 or M:1,2, got {text!r}"
        )
    basis, _, parts = text.partition(":")
    return basis.strip(), _parse_parts(parts)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="immaculates",
        description=(
            "Exact computations with the dual immaculate and row-strict dual "
            "immaculate bases of QSym/NSym."
        ),
    )
    parser.add_argument(
        "--format",
        choices=("json", "text"),
        default="text",
        help="output format (default: text)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compositions", help="list the compositions of n")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("tableaux", help="enumerate tableaux of a shape")
    p.add_argument("--shape", type=_parse_parts, required=True)
    p.add_argument("--inner", type=_parse_parts, default=[])
    p.add_argument(
        "--kind",
        choices=("immaculate", "row-strict", "standard", "hook"),
        required=True,
    )
    p.add_argument("--max-entry", type=int, default=None)
    p.add_argument("--l", type=int, default=None)
    p.add_argument("--k", type=int, default=None)

    p = sub.add_parser("expand", help="re-express a basis element")
    p.add_argument("--space", choices=("QSym", "NSym"), required=True)
    p.add_argument("--basis", required=True)
    p.add_argument("--index", type=_parse_parts, required=True)
    p.add_argument("--into", required=True)

    p = sub.add_parser("pair", help="duality pairing of basis elements")
    p.add_argument("--nsym", type=_parse_basis_index, required=True, metavar="B:parts")
    p.add_argument("--qsym", type=_parse_basis_index, required=True, metavar="B:parts")

    p = sub.add_parser("matrix", help="tableau-count change-of-basis matrix")
    p.add_argument("--name", choices=("K", "Kstar", "L", "Lstar"), required=True)
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("skew", help="skew function by a chosen route")
    p.add_argument("--outer", type=_parse_parts, required=True)
    p.add_argument("--inner", type=_parse_parts, default=[])
    p.add_argument("--kind", choices=("DI", "RSDI"), required=True)
    p.add_argument(
        "--route", choices=("pairing", "paths", "tableaux"), default="pairing"
    )

    p = sub.add_parser("hook", help="two-alphabet hook function")
    p.add_argument("--shape", type=_parse_parts, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--route", choices=("tableaux", "fundamental"), default="tableaux")

    p = sub.add_parser("verify", help="machine-verify identity suites")
    p.add_argument(
        "--suite",
        choices=(
            "psi",
            "pieri",
            "jacobi-trudi",
            "ribbon",
            "schur",
            "skew",
            "coproduct",
            "hook",
            "all",
        ),
        required=True,
    )
    p.add_argument("--max-n", type=int, required=True)

    return parser


# ---------------------------------------------------------------------------
# text renderers


def _fmt_index(index: list[int]) -> str:
    return "(" + ",".join(str(p) for p in index) + ")"


def _fmt_element(model: models.ElementModel) -> str:
    if not model.terms:
        return f"0  (degree {model.degree} in basis {model.basis})"
    bits = []
    for term in model.terms:
        word = f"{model.basis}{_fmt_index(term.index)}"
        if term.coeff == "1":
            bits.append(word)
        elif term.coeff == "-1":
            bits.append(f"-{word}")
        else:
            bits.append(f"{term.coeff}*{word}")
    return " + ".join(bits).replace("+ -", "- ")


def _fmt_tableau(model: models.TableauModel) -> str:
    rows = " | ".join(
        " ".join(str(e) for e in row) if row else "-" for row in model.rows
    )
    return rows


def _fmt_bipoly(model: models.BiPolyModel) -> str:
    if not model.terms:
        return "0"
    bits = []
    for term in model.terms:
        mono = []
        for i, e in enumerate(term.x):
            if e:
                mono.append(f"x{i + 1}" + (f"^{e}" if e > 1 else ""))
        for i, e in enumerate(term.y):
            if e:
                mono.append(f"y{i + 1}" + (f"^{e}" if e > 1 else ""))
        body = "*".join(mono) if mono else "1"
        bits.append(body if term.coeff == "1" else f"{term.coeff}*{body}")
    return " + ".join(bits)


def _print_verify_text(resp: models.VerifyResponse) -> None:
    width = max(len(r.identity) for r in resp.records)
    print(f"suite {resp.suite!r} at max degree {resp.max_n}")
    for r in resp.records:
        mark = "pass" if r.passed else "FAIL"
        line = f"  [{mark}] {r.identity:<{width}}  {r.scope}; {r.witnesses} instances"
        if r.detail:
            line += f"  -- first failure: {r.detail}"
        print(line)
    print("verified" if resp.passed else "VERIFICATION FAILED")


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)

    try:
        if args.command == "compositions":
            resp = handle_compositions(models.CompositionsRequest(n=args.n))
            if args.format == "json":
                print(resp.model_dump_json(indent=2))
            else:
                print(f"{resp.count} compositions of {resp.n}")
                for comp in resp.compositions:
                    print(" ", _fmt_index(comp) if comp else "()")
        elif args.command == "tableaux":
            resp = handle_tableaux(
                models.TableauxRequest(
                    shape=args.shape,
                    inner=args.inner,
                    kind=args.kind,
                    max_entry=args.max_entry,
                    l=args.l,
                    k=args.k,
                )
            )
            if args.format == "json":
                print(resp.model_dump_json(indent=2))
            else:
                print(f"{resp.count} tableaux (rows bottom to top)")
                for t in resp.tableaux:
                    print(" ", _fmt_tableau(t))
        elif args.command == "expand":
            resp = handle_expand(
                models.ExpandRequest(
                    space=args.space,
                    basis=args.basis,
                    index=args.index,
                    into=args.into,
                )
            )
            print(resp.model_dump_json(indent=2) if args.format == "json" else _fmt_element(resp))
        elif args.command == "pair":
            nb, ni = args.nsym
            qb, qi = args.qsym
            from .service.app import resolve_basis

            resp = handle_pair(
                models.PairRequest(
                    nsym_basis=resolve_basis("NSym", nb),
                    nsym_index=ni,
                    qsym_basis=resolve_basis("QSym", qb),
                    qsym_index=qi,
                )
            )
            print(resp.model_dump_json(indent=2) if args.format == "json" else resp.value)
        elif args.command == "matrix":
            resp = handle_matrix(models.MatrixRequest(name=args.name, n=args.n))
            if args.format == "json":
                print(resp.model_dump_json(indent=2))
            else:
                comps = [_fmt_index(c) for c in resp.compositions]
                width = max(len(c) for c in comps)
                print(f"{resp.name} at degree {resp.n}; rows and columns indexed by")
                header = " " * (width + 2) + "  ".join(f"{c:>{width}}" for c in comps)
                print(header)
                for label, row in zip(comps, resp.entries):
                    cells = "  ".join(f"{v:>{width}}" for v in row)
                    print(f"{label:>{width}}  {cells}")
        elif args.command == "skew":
            resp = handle_skew(
                models.SkewRequest(
                    outer=args.outer,
                    inner=args.inner,
                    kind=args.kind,
                    route=args.route,
                )
            )
            print(resp.model_dump_json(indent=2) if args.format == "json" else _fmt_element(resp))
        elif args.command == "hook":
            resp = handle_hook(
                models.HookRequest(shape=args.shape, l=args.l, k=args.k, route=args.route)
            )
            print(resp.model_dump_json(indent=2) if args.format == "json" else _fmt_bipoly(resp))
        elif args.command == "verify":
            resp = handle_verify(
                models.VerifyRequest(suite=args.suite, max_n=args.max_n)
            )
            if args.format == "json":
                print(resp.model_dump_json(indent=2))
            else:
                _print_verify_text(resp)
            return 0 if resp.passed else 1
        return 0
    except (ValueError, ValidationError) as exc:
        parser.exit(2, f"{parser.prog}: error: {exc}\n{parser.format_usage()}")
        return 2  # unreachable; parser.exit raises SystemExit


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
