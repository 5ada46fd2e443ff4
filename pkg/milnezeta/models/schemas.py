import math
from enum import Enum
from typing import List

from pydantic import BaseModel, ConfigDict, Field, FiniteFloat, field_validator, model_validator


class CoulombParams(BaseModel):
    """Reduced parameters of the repulsive Coulomb problem."""

    model_config = ConfigDict(frozen=True)

    # reduced spectral parameter
    eps: FiniteFloat
    # reduced wavenumber, in units of 1/y
    k: FiniteFloat = Field(default=1.0, gt=0)
    # partial wave number
    l_r: FiniteFloat = -0.25


class WaveSample(BaseModel):
    """One point (y, phi, dphi/dy) of a solution of the Coulomb equation."""

    model_config = ConfigDict(frozen=True)

    y: FiniteFloat = Field(gt=0)
    phi: float
    dphi: float


class PhaseState(BaseModel):
    """Canonical state: y is the Hamiltonian time, q the coordinate, p the momentum."""

    model_config = ConfigDict(frozen=True)

    y: FiniteFloat = Field(gt=0)
    q: float
    p: float


class MilneSample(BaseModel):
    """One point of the Milne amplitude with its density n_m = 1/rho**2."""

    model_config = ConfigDict(frozen=True)

    y: FiniteFloat = Field(gt=0)
    rho: float = Field(gt=0)
    drho: float
    n_m: float = Field(gt=0)

    @model_validator(mode='after')
    def check_density(self):
        if abs(self.n_m * self.rho ** 2 - 1.0) > 1e-12:
            raise ValueError(f"n_m={self.n_m} is not 1/rho**2 for rho={self.rho}")
        return self

    @classmethod
    def from_amplitude(cls, y: float, rho: float, drho: float) -> 'MilneSample':
        return cls(y=y, rho=rho, drho=drho, n_m=1.0 / rho ** 2)


class SuperpositionConstants(BaseModel):
    """Constants alpha, beta of the Milne closed form."""

    model_config = ConfigDict(frozen=True)

    alpha: FiniteFloat
    beta: FiniteFloat


class DensityKind(str, Enum):
    ZETA = 'zeta'
    COULOMB = 'coulomb'
    MILNE = 'milne'
    ZETA_EMPIRICAL = 'zeta-empirical'


class DensityCurve(BaseModel):
    """A density per unit eps sampled on an increasing eps axis."""

    epsilons: List[float]
    values: List[float]
    kind: DensityKind

    @model_validator(mode='after')
    def check_axes(self):
        if len(self.values) != len(self.epsilons):
            raise ValueError("values and epsilons differ in length")
        if any(b <= a for a, b in zip(self.epsilons, self.epsilons[1:])):
            raise ValueError("epsilons must be strictly increasing")
        return self

    def to_frame(self):
        import pandas as pd
        return pd.DataFrame({'eps': self.epsilons, self.kind.value: self.values})


class GridSpec(BaseModel):
    """Cartesian (y, eps) domain; defaults are the [0.1, 10] x [0.1, 10] square."""

    y_min: FiniteFloat = Field(default=0.1, gt=0)
    y_max: FiniteFloat = Field(default=10.0, gt=0)
    eps_min: FiniteFloat = Field(default=0.1, gt=0)
    eps_max: FiniteFloat = Field(default=10.0, gt=0)
    y_count: int = Field(default=100, ge=2)
    eps_count: int = Field(default=100, ge=2)

    @model_validator(mode='after')
    def check_order(self):
        if self.y_min >= self.y_max:
            raise ValueError(f"y range is inverted or empty: [{self.y_min}, {self.y_max}]")
        if self.eps_min >= self.eps_max:
            raise ValueError(f"eps range is inverted or empty: [{self.eps_min}, {self.eps_max}]")
        return self


class MilneGrid(BaseModel):
    """n_M over a (y, eps) grid: one row per eps, one column per y.

    Rows whose eps made alpha degenerate hold NaN and are listed in degenerate_eps.
    """

    y_axis: List[float]
    eps_axis: List[float]
    values: List[List[float]]
    degenerate_eps: List[float] = []

    @model_validator(mode='after')
    def check_shape(self):
        if len(self.values) != len(self.eps_axis):
            raise ValueError("one row per eps expected")
        skipped = set(self.degenerate_eps)
        for eps, row in zip(self.eps_axis, self.values):
            if len(row) != len(self.y_axis):
                raise ValueError(f"row for eps={eps} has {len(row)} columns, expected {len(self.y_axis)}")
            if eps in skipped:
                continue
            if not all(math.isfinite(v) and v > 0 for v in row):
                raise ValueError(f"row for eps={eps} holds non-finite or non-positive values")
        return self

    def to_frame(self):
        """Long format, eps-major then y."""
        import numpy as np
        import pandas as pd
        eps, y = np.meshgrid(self.eps_axis, self.y_axis, indexing='ij')
        return pd.DataFrame({
            'y': y.ravel(),
            'eps': eps.ravel(),
            'n_M': np.asarray(self.values, dtype=float).ravel(),
        })


class ZeroTable(BaseModel):
    """Ordinates t > 1 of zeta zeros 1/2 + it, strictly increasing."""

    ordinates: List[float] = []

    @field_validator('ordinates')
    @classmethod
    def check_ordinates(cls, ordinates):
        if any(t <= 1 for t in ordinates):
            raise ValueError("ordinates must exceed 1")
        if any(b <= a for a, b in zip(ordinates, ordinates[1:])):
            raise ValueError("ordinates must be strictly increasing")
        return ordinates

    def __len__(self):
        return len(self.ordinates)
