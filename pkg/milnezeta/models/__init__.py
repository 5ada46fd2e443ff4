from .config import COMMAND_MODELS, Command, RunConfig
from .schemas import (
    CoulombParams,
    DensityCurve,
    DensityKind,
    GridSpec,
    MilneGrid,
    MilneSample,
    PhaseState,
    SuperpositionConstants,
    WaveSample,
    ZeroTable,
)
