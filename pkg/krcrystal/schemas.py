from typing import Any, Literal

from pydantic import BaseModel, Field

from krcrystal.services.cartan import CartanType

Status = Literal["pass", "fail", "skipped", "info"]


class HealthResponse(BaseModel):
    status: str
    cached_crystals: int


class CrystalRef(BaseModel):
    cartan: tuple[str, int, int] = Field(examples=[["D", 4, 1]])
    r: int = Field(ge=1)
    s: int = Field(ge=1)

    def cartan_type(self) -> CartanType:
        return CartanType.from_triple(*self.cartan)


class ElementDoc(CrystalRef):
    rows: list[list[int]] = Field(examples=[[[3], [1]]])


class StepRequest(ElementDoc):
    i: int = Field(ge=0)
    direction: Literal["e", "f"]


class RowsResponse(BaseModel):
    rows: list[list[int]] | None


class EpsPhiResponse(BaseModel):
    epsilon: list[int]
    phi: list[int]
    level: int


class WeightRequest(CrystalRef):
    weight: list[int]


class MinimalEntry(BaseModel):
    epsilon: list[int]
    phi: list[int]
    rows: list[list[int]]


class DiagramRequest(CrystalRef):
    diagram: list[list[str]]


class DiagramResponse(BaseModel):
    diagram: list[list[str]]


class StringResponse(BaseModel):
    string: list[int]


class PairRequest(CrystalRef):
    P: list[list[str]]
    p: list[list[str]]


class PairResponse(BaseModel):
    P: list[list[str]]
    p: list[list[str]]


class ComponentSummary(BaseModel):
    shape: list[int]
    size: int


class CrystalSummary(BaseModel):
    crystal: str
    cartan: tuple[str, int, int]
    r: int
    s: int
    size: int
    components: list[ComponentSummary]


class ConditionResult(BaseModel):
    condition: str
    status: Status
    detail: str | None = None
    witness: Any | None = None


class VerificationReport(BaseModel):
    crystal: str
    kind: Literal["perfect", "properties"]
    passed: bool
    level: int | None = None
    conditions: list[ConditionResult]


class VerifyRequest(CrystalRef):
    kind: Literal["perfect", "properties"] = "perfect"


class E1Response(BaseModel):
    pair: PairResponse | None


class DotRequest(CrystalRef):
    classical: bool = False
