"""FastAPI service exposing the computation library.

The handler functions hold all the request/response logic; the HTTP layer
is a thin registration of them, and the command line calls the same
handlers in process.  A long-running service amortizes the per-degree
conversion-matrix caches across requests.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from ..compositions import Composition, compositions_of
from ..elements import Element
from ..tableaux import Shape, enumerate_hook, enumerate_standard, enumerate_tableaux
from .. import nsym
from .. import qsym
from .. import skewhook
from .. import verify
from . import models

QSYM_ALIASES = {
    "M": "M",
    "F": "F",
    "DI": "DI",
    "DISTAR": "DI",
    "SSTAR": "DI",
    "RSDI": "RSDI",
    "RSDISTAR": "RSDI",
    "RSSTAR": "RSDI",
}

NSYM_ALIASES = {
    "H": "H",
    "E": "E",
    "R": "R",
    "RIBBON": "R",
    "IMM": "IMM",
    "S": "IMM",
    "IMMACULATE": "IMM",
    "RSIMM": "RSIMM",
    "RS": "RSIMM",
    "ROWSTRICT": "RSIMM",
}


def resolve_basis(space: str, name: str) -> str:
    table = QSYM_ALIASES if space == "QSym" else NSYM_ALIASES
    key = name.replace("*", "star").replace("-", "").upper()
    if key not in table:
        raise ValueError(f"unknown {space} basis {name!r}")
    return table[key]


def _bad_request(exc: ValueError) -> HTTPException:
    return HTTPException(status_code=400, detail=str(exc))


# ---------------------------------------------------------------------------
# handlers (shared by HTTP and the command line)


def handle_compositions(req: models.CompositionsRequest) -> models.CompositionsResponse:
    comps = compositions_of(req.n)
    return models.CompositionsResponse(
        n=req.n, count=len(comps), compositions=[list(c) for c in comps]
    )


def handle_tableaux(req: models.TableauxRequest) -> models.TableauxResponse:
    shape = Shape(Composition(req.shape), Composition(req.inner))
    if req.kind == "standard":
        tabs = enumerate_standard(shape)
    elif req.kind == "hook":
        if req.l is None or req.k is None:
            raise ValueError("hook tableaux need both alphabet sizes l and k")
        tabs = enumerate_hook(shape, req.l, req.k)
    else:
        if req.max_entry is None:
            raise ValueError(f"{req.kind} tableaux need max_entry")
        tabs = enumerate_tableaux(shape, req.kind, req.max_entry)
    return models.TableauxResponse(
        count=len(tabs), tableaux=[models.TableauModel.from_tableau(t) for t in tabs]
    )


def handle_expand(req: models.ExpandRequest) -> models.ElementModel:
    basis = resolve_basis(req.space, req.basis)
    target = resolve_basis(req.space, req.into)
    index = Composition(req.index)
    if req.space == "QSym":
        out = qsym.convert(qsym.from_index(basis, index), target)
    else:
        out = nsym.convert(nsym.from_index(basis, index), target)
    return models.ElementModel.from_element(out)


def handle_pair(req: models.PairRequest) -> models.PairResponse:
    g = nsym.from_index(req.nsym_basis, Composition(req.nsym_index))
    f = qsym.from_index(req.qsym_basis, Composition(req.qsym_index))
    return models.PairResponse(value=str(nsym.pair(g, f)))


def handle_matrix(req: models.MatrixRequest) -> models.MatrixModel:
    return models.MatrixModel.from_matrix(qsym.matrix(req.name, req.n))


def handle_skew(req: models.SkewRequest) -> models.ElementModel:
    outer = Composition(req.outer)
    inner = Composition(req.inner)
    if req.route == "pairing":
        out = skewhook.skew_pairing(outer, inner, req.kind)
    else:
        out = skewhook.skew_F_expansion(outer, inner, req.kind, via=req.route)
    return models.ElementModel.from_element(out)


def handle_hook(req: models.HookRequest) -> models.BiPolyModel:
    shape = Composition(req.shape)
    if req.route == "tableaux":
        out = skewhook.hook_dI(shape, req.l, req.k)
    else:
        out = skewhook.hook_fund_expansion(shape, req.l, req.k)
    return models.BiPolyModel.from_bipoly(out)


def handle_verify(req: models.VerifyRequest) -> models.VerifyResponse:
    records = verify.run_suite(req.suite, req.max_n)
    return models.VerifyResponse(
        suite=req.suite,
        max_n=req.max_n,
        passed=all(r.passed for r in records),
        records=[models.VerifyRecordModel.from_record(r) for r in records],
    )


# ---------------------------------------------------------------------------
# HTTP wiring

app = FastAPI(
    title="immaculates",
    description=(
        "Exact computations with the dual immaculate and row-strict dual "
        "immaculate bases of QSym/NSym, plus an identity-verification "
        "harness."
    ),
    version="0.1.0",
)


@app.get("/health")
def health() -> dict:
    return {"status": "ok"}


def _wrap(handler, req):
    try:
        return handler(req)
    except ValueError as exc:
        raise _bad_request(exc) from exc


@app.post("/compositions", response_model=models.CompositionsResponse)
def compositions_endpoint(req: models.CompositionsRequest):
    return _wrap(handle_compositions, req)


@app.post("/tableaux", response_model=models.TableauxResponse)
def tableaux_endpoint(req: models.TableauxRequest):
    return _wrap(handle_tableaux, req)


@app.post("/expand", response_model=models.ElementModel)
def expand_endpoint(req: models.ExpandRequest):
    return _wrap(handle_expand, req)


@app.post("/pair", response_model=models.PairResponse)
def pair_endpoint(req: models.PairRequest):
    return _wrap(handle_pair, req)


@app.post("/matrix", response_model=models.MatrixModel)
def matrix_endpoint(req: models.MatrixRequest):
    return _wrap(handle_matrix, req)


@app.post("/skew", response_model=models.ElementModel)
def skew_endpoint(req: models.SkewRequest):
    return _wrap(handle_skew, req)


@app.post("/hook", response_model=models.BiPolyModel)
def hook_endpoint(req: models.HookRequest):
    return _wrap(handle_hook, req)


@app.post("/verify", response_model=models.VerifyResponse)
def verify_endpoint(req: models.VerifyRequest):
    return _wrap(handle_verify, req)
