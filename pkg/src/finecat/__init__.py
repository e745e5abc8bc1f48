"""finecat - the Fine-Catalan invert-transform tower in exact arithmetic."""

__version__ = "1.0.0"

from .core import (
    PascalPower,
    SeriesPoly,
    Sequence,
    Triangle,
    catalan,
    convolution_triangle,
    fine_sequence,
    fine_tower,
    invert_transform,
    pascal_power,
    series_power_coefficient,
)
from .closedforms import partial_bell
from .identities import REGISTRY, IdentityRecord, VerdictReport, run_all, run_identity
from .levels import LEVEL_REGISTRY, LevelConfig, get_level_config, get_supported_levels
from .oracle import BallotWord, ColoredDyckPath, DyckPath, count_colored
from .validators import InexactDivisionError, ResourceBoundError, UnknownIdentityError

__all__ = [
    "BallotWord",
    "ColoredDyckPath",
    "DyckPath",
    "IdentityRecord",
    "InexactDivisionError",
    "LEVEL_REGISTRY",
    "LevelConfig",
    "PascalPower",
    "REGISTRY",
    "ResourceBoundError",
    "SeriesPoly",
    "Sequence",
    "Triangle",
    "UnknownIdentityError",
    "VerdictReport",
    "catalan",
    "convolution_triangle",
    "count_colored",
    "fine_sequence",
    "fine_tower",
    "get_level_config",
    "get_supported_levels",
    "invert_transform",
    "partial_bell",
    "pascal_power",
    "run_all",
    "run_identity",
    "series_power_coefficient",
]
