from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, Field, FilePath, FiniteFloat, field_validator, model_validator

from .schemas import GridSpec


class Command(str, Enum):
    DENSITY = 'density'
    MILNE_GRID = 'milne-grid'
    COMPARE_ZEROS = 'compare-zeros'
    PINNEY_CHECK = 'pinney-check'
    DYNAMICS_DEMO = 'dynamics-demo'


class DensityConfig(BaseModel):
    eps_min: FiniteFloat = Field(default=0.1, gt=0)
    eps_max: FiniteFloat = Field(default=10.0, gt=0)
    steps: int = Field(default=100, ge=2)
    k: FiniteFloat = Field(default=1.0, gt=0)
    # adds an n_M column evaluated at this y
    milne_y: Optional[FiniteFloat] = Field(default=None, gt=0)

    @model_validator(mode='after')
    def check_order(self):
        if self.eps_min >= self.eps_max:
            raise ValueError(f"eps range is inverted or empty: [{self.eps_min}, {self.eps_max}]")
        return self


class MilneGridConfig(GridSpec):
    k: FiniteFloat = Field(default=1.0, gt=0)


class CompareZerosConfig(BaseModel):
    t_max: FiniteFloat = Field(default=100.0, ge=10.0, le=200.0)
    grid_step: FiniteFloat = Field(default=0.01, gt=0, le=0.05)
    window: FiniteFloat = Field(default=20.0, gt=0)
    probes: List[FiniteFloat] = [20.0, 50.0, 100.0]
    table: Optional[FilePath] = None
    cache_dir: Optional[str] = None
    density_out: Optional[str] = None

    @field_validator('probes')
    @classmethod
    def check_probes(cls, probes):
        if not probes or any(T <= 0 for T in probes):
            raise ValueError("probes must be positive heights")
        return probes


class PinneyCheckConfig(BaseModel):
    eps: FiniteFloat = 2.0
    k: FiniteFloat = Field(default=1.0, gt=0)
    y0s: List[FiniteFloat] = [2.0, 4.0, 8.0]
    y_end: FiniteFloat = Field(default=10.0, gt=0)
    q_const: Optional[FiniteFloat] = Field(default=None, gt=0)
    tolerance: FiniteFloat = Field(default=1e-10, ge=1e-13, le=1e-2)

    @model_validator(mode='after')
    def check_starts(self):
        if not self.y0s or any(not 0 < y0 < self.y_end for y0 in self.y0s):
            raise ValueError(f"every y0 must lie in (0, {self.y_end})")
        return self


class DynamicsDemoConfig(BaseModel):
    eps: FiniteFloat = 2.0
    k: FiniteFloat = Field(default=1.0, gt=0)
    q0: FiniteFloat = 1.0
    p0: FiniteFloat = 0.0
    rho0: FiniteFloat = Field(default=1.0, gt=0)
    drho0: FiniteFloat = 0.0
    y_start: FiniteFloat = Field(default=1.0, gt=0)
    y_end: FiniteFloat = Field(default=10.0, gt=0)
    steps: int = Field(default=200, ge=2)
    q_const: Optional[FiniteFloat] = Field(default=None, gt=0)
    tolerance: FiniteFloat = Field(default=1e-10, ge=1e-13, le=1e-2)

    @model_validator(mode='after')
    def check_order(self):
        if self.y_start >= self.y_end:
            raise ValueError(f"y range is inverted or empty: [{self.y_start}, {self.y_end}]")
        return self


COMMAND_MODELS = {
    Command.DENSITY: DensityConfig,
    Command.MILNE_GRID: MilneGridConfig,
    Command.COMPARE_ZEROS: CompareZerosConfig,
    Command.PINNEY_CHECK: PinneyCheckConfig,
    Command.DYNAMICS_DEMO: DynamicsDemoConfig,
}


class RunConfig(BaseModel):
    """A validated command: its name, its parameters and where the output goes."""

    command: Command
    out: str = '-'
    params: BaseModel

    @classmethod
    def build(cls, command, values: dict, out: str = '-') -> 'RunConfig':
        command = Command(command)
        return cls(command=command, out=out, params=COMMAND_MODELS[command](**values))
