"""Source and sink descriptions and the assembled load vector."""

from typing import Annotated, Literal, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator


class Box(BaseModel):
    """Axis-aligned rectangle carrying a constant signed source density."""

    x_min: float
    x_max: float
    y_min: float
    y_max: float
    value: float

    model_config = ConfigDict(extra="forbid", frozen=True)

    @model_validator(mode="after")
    def _check_extent(self) -> "Box":
        if not (self.x_min < self.x_max and self.y_min < self.y_max):
            raise ValueError("box must satisfy x_min < x_max and y_min < y_max")
        return self

    @property
    def area(self) -> float:
        return (self.x_max - self.x_min) * (self.y_max - self.y_min)


class PointSource(BaseModel):
    """Dirac mass of signed weight at (x, y)."""

    x: float
    y: float
    weight: float

    model_config = ConfigDict(extra="forbid", frozen=True)


class BoxesForcing(BaseModel):
    kind: Literal["boxes"] = "boxes"
    boxes: list[Box] = Field(min_length=1)

    model_config = ConfigDict(extra="forbid", frozen=True)


class RadialForcing(BaseModel):
    """Piecewise constant radial density: c1 on r < 1/3, c2 on r > 2/3."""

    kind: Literal["radial"] = "radial"
    c1: float = 1.0
    c2: float | None = None

    model_config = ConfigDict(extra="forbid", frozen=True)

    @property
    def resolved_c2(self) -> float:
        """c2, defaulting to the value balancing c1 on the unit disk."""
        return self.c2 if self.c2 is not None else -self.c1 / 5.0


class DiracForcing(BaseModel):
    kind: Literal["dirac"] = "dirac"
    sources: list[PointSource] = Field(min_length=1)
    seed: int | None = Field(
        default=None, description="Seed the point set was drawn with, when random."
    )

    model_config = ConfigDict(extra="forbid", frozen=True)


ForcingSpec = Annotated[
    Union[BoxesForcing, RadialForcing, DiracForcing], Field(discriminator="kind")
]


class RhsVector(BaseModel):
    """Mass-balanced load vector on the fine nodes."""

    values: np.ndarray
    positive_total: float
    negative_total: float
    balance_factor: float = Field(
        description="Factor the negative entries were multiplied by."
    )

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.values))
