from typing import Literal

from pydantic import BaseModel, Field

Status = Literal["pass", "fail", "skip"]


class CheckEntry(BaseModel):
    fixture: str
    name: str
    status: Status
    detail: str = ""
    residual: float | None = None


class Report(BaseModel):
    command: str
    checks: list[CheckEntry] = Field(default_factory=list)
    status: Literal["pass", "fail"] = "pass"
    warnings: list[str] = Field(default_factory=list)


class ViolationOut(BaseModel):
    axiom: str
    witness: list[int]
    detail: str


class ValidationPayload(BaseModel):
    kind: Literal["ring", "functor", "group"]
    name: str
    valid: bool
    violations: list[ViolationOut] = Field(default_factory=list)


class FPDimPayload(BaseModel):
    ring: str
    labels: list[str]
    dims: list[float]
    ring_dim: float
    residual: float
    iterations: int


class MemberSetPayload(BaseModel):
    ring: str
    operation: str
    subring: list[str]
    members: list[str]
    is_subring: bool


class CosetPayload(BaseModel):
    ring: str
    left: list[str]
    right: list[str]
    blocks: list[list[str]]
    eigenvalue: float
    checks: list[CheckEntry] = Field(default_factory=list)


class FunctorPayload(BaseModel):
    functor: str
    source: str
    target: str
    valid: bool
    violations: list[ViolationOut] = Field(default_factory=list)
    kernel: list[str] = Field(default_factory=list)
    dominant_image: list[str] = Field(default_factory=list)
    up_classes: list[list[str]] = Field(default_factory=list)
    down_classes: list[list[str]] = Field(default_factory=list)
    up_transitive: bool | None = None
    is_normal: bool | None = None
    is_dominant: bool | None = None
    index: float | None = None
    checks: list[CheckEntry] = Field(default_factory=list)


class GradingComponent(BaseModel):
    label: str
    members: list[str]


class GradingPayload(BaseModel):
    ring: str
    source: Literal["universal", "explicit", "cosets"]
    components: list[GradingComponent]
    group_table: list[list[int]]
    subgroups: list[list[int]] = Field(default_factory=list)
    checks: list[CheckEntry] = Field(default_factory=list)


class BlocksPayload(BaseModel):
    group: str
    k: list[str]
    l: list[str]
    blocks: list[list[str]]
