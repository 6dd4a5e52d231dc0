from __future__ import annotations

from typing import List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field

from .colors import top_color
from .partitions import ColoredPart, MonochromePartition, Overpartition, Staircase, Statistics


class PartDoc(BaseModel):
    value: int = Field(ge=1)
    color: int = Field(ge=1)
    overlined: bool = False


class PartitionDoc(BaseModel):
    """{"k": int, "parts": [{"value", "color", "overlined"}, ...]}, largest part first.

    A mu document uses the same shape with every part in color 2^(k-1).
    """

    k: int = Field(ge=1)
    parts: List[PartDoc] = Field(default_factory=list)

    @classmethod
    def from_overpartition(cls, op: Overpartition, k: int) -> "PartitionDoc":
        return cls(k=k, parts=[PartDoc(value=p.value, color=p.color, overlined=p.overlined) for p in op])

    @classmethod
    def from_monochrome(cls, mu: MonochromePartition, k: int) -> "PartitionDoc":
        return cls(k=k, parts=[PartDoc(value=p, color=mu.color) for p in mu.parts])

    def to_overpartition(self) -> Overpartition:
        return Overpartition(tuple(ColoredPart(p.value, p.color, p.overlined) for p in self.parts))

    def to_monochrome(self) -> MonochromePartition:
        colors = {p.color for p in self.parts}
        if len(colors) > 1:
            raise ValueError(f"mu parts must share one color, got colors {sorted(colors)}")
        if any(p.overlined for p in self.parts):
            raise ValueError("mu parts cannot be overlined")
        color = colors.pop() if colors else top_color(self.k)
        return MonochromePartition(tuple(p.value for p in self.parts), color)


class MapDoc(BaseModel):
    """One-level merge input / split output."""

    model_config = ConfigDict(populate_by_name=True)

    k: int = Field(ge=2)
    lam: PartitionDoc = Field(alias="lambda")
    mu: PartitionDoc


class FullMapDoc(BaseModel):
    """Base in color 1 plus one partition per level 2..k (colors 2, 4, ...)."""

    k: int = Field(ge=1)
    base: PartitionDoc
    mus: List[PartitionDoc] = Field(default_factory=list)


class TraceEntry(BaseModel):
    label: str
    kind: Literal["overpartition", "monochrome", "staircase"]
    parts: Optional[List[PartDoc]] = None
    staircase: Optional[List[int]] = None

    @classmethod
    def from_snapshot(cls, label: str, snap: object) -> "TraceEntry":
        if isinstance(snap, Overpartition):
            parts = [PartDoc(value=p.value, color=p.color, overlined=p.overlined) for p in snap]
            return cls(label=label, kind="overpartition", parts=parts)
        if isinstance(snap, MonochromePartition):
            return cls(label=label, kind="monochrome", parts=[PartDoc(value=p, color=snap.color) for p in snap.parts])
        if isinstance(snap, Staircase):
            return cls(label=label, kind="staircase", staircase=list(snap.parts))
        raise TypeError(f"cannot serialize snapshot {snap!r}")


class StatisticsDoc(BaseModel):
    weight: int
    length: int
    nonoverlined: int
    x: List[int]
    vcounts: List[int]
    s: int

    @classmethod
    def from_statistics(cls, st: Statistics) -> "StatisticsDoc":
        return cls(
            weight=st.weight,
            length=st.length,
            nonoverlined=st.nonoverlined,
            x=list(st.x),
            vcounts=list(st.vcounts),
            s=st.s,
        )


class MembershipDoc(BaseModel):
    family: str
    member: bool
    violated: Optional[str] = None
    location: Optional[int] = None
    detail: str = ""
    statistics: Optional[StatisticsDoc] = None


class CountRow(BaseModel):
    n: int
    m: int
    x: List[int]
    count: int


class VerifyReport(BaseModel):
    family: str
    k: int
    j: Optional[int] = None
    N: int
    matched: bool
    compared: int
    mismatches: int
    first_mismatch: Optional[List[int]] = None
    count_at_mismatch: Optional[int] = None
    coeff_at_mismatch: Optional[int] = None


class RunConfig(BaseModel):
    """Validated command-line options."""

    command: Literal["verify", "map", "unmap", "enumerate", "check"]
    family: Optional[str] = None
    k: Optional[int] = Field(default=None, ge=1)
    j: Optional[int] = Field(default=None, ge=1)
    N: Optional[int] = Field(default=None, ge=0)
    input: Optional[str] = None
    out: Optional[str] = None
    format: Literal["json", "csv"] = "json"
    checked: bool = False
    trace: bool = False
    full: bool = False
    table: bool = False
    workers: int = Field(default=1, ge=1)
