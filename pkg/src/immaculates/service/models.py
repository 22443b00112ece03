"""Pydantic request/response models for the computation service.

These mirror the package's JSON wire formats: elements carry coefficients
as decimal strings with indices sorted lexicographically decreasing, and
hook-tableau entries render their primed letters with a trailing quote.
"""

from __future__ import annotations

from typing import Literal, Optional, Union

from pydantic import BaseModel, Field

from ..compositions import Composition
from ..elements import Element, TensorElem
from ..polynomials import BiPoly
from ..qsym import BasisMatrix
from ..tableaux import Tableau
from ..verify import CheckRecord

QSymBasisName = Literal["M", "F", "DI", "RSDI"]
NSymBasisName = Literal["H", "E", "R", "IMM", "RSIMM"]
SpaceName = Literal["QSym", "NSym"]
SkewKind = Literal["DI", "RSDI"]
TableauKind = Literal["immaculate", "row-strict", "standard", "hook"]
MatrixName = Literal["K", "Kstar", "L", "Lstar"]
SkewRoute = Literal["pairing", "paths", "tableaux"]
HookRoute = Literal["tableaux", "fundamental"]
SuiteName = Literal[
    "psi",
    "pieri",
    "jacobi-trudi",
    "ribbon",
    "schur",
    "skew",
    "coproduct",
    "hook",
    "all",
]


class TermModel(BaseModel):
    index: list[int]
    coeff: str


class ElementModel(BaseModel):
    space: Literal["QSym", "NSym", "Sym"]
    basis: str
    degree: int
    terms: list[TermModel]

    @classmethod
    def from_element(cls, x: Element) -> "ElementModel":
        return cls.model_validate(x.to_json())

    def to_element(self) -> Element:
        return Element.from_json(self.model_dump())


class TensorTermModel(BaseModel):
    left: list[int]
    right: list[int]
    coeff: str


class TensorModel(BaseModel):
    space: Literal["QSym", "NSym", "Sym"]
    left_basis: str
    right_basis: str
    degree: int
    terms: list[TensorTermModel]

    @classmethod
    def from_tensor(cls, x: TensorElem) -> "TensorModel":
        return cls.model_validate(x.to_json())


class CompositionsRequest(BaseModel):
    n: int = Field(ge=0, le=14)


class CompositionsResponse(BaseModel):
    n: int
    count: int
    compositions: list[list[int]]


class TableauModel(BaseModel):
    outer: list[int]
    inner: list[int]
    rows: list[list[Union[int, str]]]

    @classmethod
    def from_tableau(cls, t: Tableau) -> "TableauModel":
        return cls.model_validate(t.to_json())


class TableauxRequest(BaseModel):
    shape: list[int] = Field(min_length=0)
    inner: list[int] = Field(default_factory=list)
    kind: TableauKind
    max_entry: Optional[int] = Field(default=None, ge=1)
    l: Optional[int] = Field(default=None, ge=0)
    k: Optional[int] = Field(default=None, ge=0)


class TableauxResponse(BaseModel):
    count: int
    tableaux: list[TableauModel]


class ExpandRequest(BaseModel):
    space: SpaceName
    basis: str
    index: list[int]
    into: str


class PairRequest(BaseModel):
    nsym_basis: NSymBasisName
    nsym_index: list[int]
    qsym_basis: QSymBasisName
    qsym_index: list[int]


class PairResponse(BaseModel):
    value: str


class MatrixRequest(BaseModel):
    name: MatrixName
    n: int = Field(ge=1, le=9)


class MatrixModel(BaseModel):
    name: str
    n: int
    compositions: list[list[int]]
    entries: list[list[int]]

    @classmethod
    def from_matrix(cls, m: BasisMatrix) -> "MatrixModel":
        return cls.model_validate(m.to_json())


class SkewRequest(BaseModel):
    outer: list[int]
    inner: list[int] = Field(default_factory=list)
    kind: SkewKind
    route: SkewRoute = "pairing"


class BiPolyTermModel(BaseModel):
    x: list[int]
    y: list[int]
    coeff: str


class BiPolyModel(BaseModel):
    l: int
    k: int
    terms: list[BiPolyTermModel]

    @classmethod
    def from_bipoly(cls, p: BiPoly) -> "BiPolyModel":
        return cls.model_validate(p.to_json())

    def to_bipoly(self) -> BiPoly:
        return BiPoly.from_json(self.model_dump())


class HookRequest(BaseModel):
    shape: list[int]
    l: int = Field(ge=0)
    k: int = Field(ge=0)
    route: HookRoute = "tableaux"


class VerifyRequest(BaseModel):
    suite: SuiteName
    max_n: int = Field(ge=1, le=8)


class VerifyRecordModel(BaseModel):
    identity: str
    scope: str
    witnesses: int
    passed: bool
    detail: str = ""

    @classmethod
    def from_record(cls, r: CheckRecord) -> "VerifyRecordModel":
        return cls(
            identity=r.identity,
            scope=r.scope,
            witnesses=r.witnesses,
            passed=r.passed,
            detail=r.detail,
        )


class VerifyResponse(BaseModel):
    suite: str
    max_n: int
    passed: bool
    records: list[VerifyRecordModel]
