"""File formats of the structures glat reads and writes."""

from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator

from src.errors import NotFullRank
from src.finlat import FiniteLattice, build_lattice
from src.germ import GermTable
from src.latmod import BeamParams, PLattice, canonicalize
from src.ybe import CycleSet, RMap


class LatticeFile(BaseModel):
    """A finite lattice given by its cover pairs.

    Attributes:
        n: Number of elements, ids ``0..n-1``
        covers: Cover pairs ``[lower, upper]``
        labels: Optional display names
    """

    n: int = Field(..., ge=1, description="Number of elements")
    covers: List[Tuple[int, int]] = Field(
        default_factory=list, description="Cover pairs [lower, upper]"
    )
    labels: Optional[List[str]] = Field(None, description="Optional element names")

    def to_lattice(self) -> FiniteLattice:
        return build_lattice(self.covers, n=self.n, labels=self.labels)

    @classmethod
    def from_lattice(cls, lattice: FiniteLattice) -> "LatticeFile":
        return cls.model_validate(lattice.to_dict())


class PLatticeFile(BaseModel):
    """An R-lattice ``p^(-scale) · colspan(H)``.

    ``H`` need not be canonical; its columns are re-reduced on load.
    """

    p: int = Field(..., description="Prime of the valuation ring")
    delta: int = Field(..., ge=1, description="Dimension of the ambient space")
    scale: int = Field(0, description="Power of p divided out of H")
    H: List[List[int]] = Field(..., description="Square integer matrix, generators as columns")

    @field_validator("H")
    @classmethod
    def _square(cls, value: List[List[int]]) -> List[List[int]]:
        if any(len(row) != len(value) for row in value):
            raise ValueError("H must be a square matrix")
        return value

    def to_plattice(self) -> PLattice:
        params = BeamParams(p=self.p, delta=self.delta)
        if len(self.H) != self.delta:
            raise NotFullRank(f"H must be {self.delta} x {self.delta}")
        factor = Fraction(params.p) ** (-self.scale)
        columns = [
            [factor * self.H[i][j] for i in range(self.delta)] for j in range(self.delta)
        ]
        return canonicalize(params, columns)

    @classmethod
    def from_plattice(cls, a: PLattice) -> "PLatticeFile":
        return cls.model_validate(a.to_dict())


class GermFile(BaseModel):
    """A germ table; products with the identity may be omitted."""

    elements: List[str]
    identity: str
    delta: str
    degree: Dict[str, int]
    product: List[Tuple[str, str, str]] = Field(default_factory=list)

    def to_table(self) -> GermTable:
        return GermTable.from_dict(self.model_dump())

    @classmethod
    def from_table(cls, table: GermTable) -> "GermFile":
        return cls.model_validate(table.to_dict())


class SolutionFile(BaseModel):
    """A solution ``{"n": 2, "R": [[[x, y], [a, b]], ...]}``."""

    model_config = ConfigDict(populate_by_name=True)

    n: int = Field(..., ge=1)
    r: List[Tuple[Tuple[int, int], Tuple[int, int]]] = Field(..., alias="R")

    def to_solution(self) -> RMap:
        return RMap.from_dict({"n": self.n, "R": self.r})

    @classmethod
    def from_solution(cls, r: RMap) -> "SolutionFile":
        return cls.model_validate(r.to_dict())

    def dump(self) -> Dict[str, object]:
        return self.model_dump(by_alias=True)


class CycleSetFile(BaseModel):
    """A cycle set ``{"n": 2, "op": [[x·y for y] for x]}``."""

    n: int = Field(..., ge=1)
    op: List[List[int]]

    def to_cycle_set(self) -> CycleSet:
        return CycleSet.from_dict(self.model_dump())

    @classmethod
    def from_cycle_set(cls, c: CycleSet) -> "CycleSetFile":
        return cls.model_validate(c.to_dict())
