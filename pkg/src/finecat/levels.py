"""Level registry for the Fine tower f_0, ..., f_4 and its triangles G_1, ..., G_4."""

from dataclasses import dataclass
from typing import Dict, Optional

from .closedforms import CLOSED_FORMS


@dataclass(frozen=True)
class LevelConfig:
    """What one level of the tower counts and how it is computed."""

    level: int
    name: str
    sequence: str
    paths: str
    # closedforms function for g_m; level 0 has no triangle
    closed_form: Optional[str] = None
    triangle: Optional[str] = None

    @property
    def has_triangle(self) -> bool:
        return self.closed_form is not None


LEVEL_REGISTRY: Dict[int, LevelConfig] = {
    0: LevelConfig(
        level=0,
        name="Fine numbers",
        sequence="F(n)",
        paths="Dyck paths of semilength n-1 without hills",
    ),
    1: LevelConfig(
        level=1,
        name="Catalan, shifted",
        sequence="C(n-1)",
        paths="Dyck paths of semilength n-1 (one hill color)",
        closed_form=CLOSED_FORMS[1],
        triangle="k/n sum_i (-2)^(i-k) C(i,k) C(2n, n-i)",
    ),
    2: LevelConfig(
        level=2,
        name="Catalan",
        sequence="C(n)",
        paths="Dyck paths of semilength n-1, hills in 2 colors",
        closed_form=CLOSED_FORMS[2],
        triangle="k/(n-k) C(2n-k-1, n), g(n,n) = 1",
    ),
    3: LevelConfig(
        level=3,
        name="Central binomial halves",
        sequence="C(2n-1, n)",
        paths="Dyck paths of semilength n-1, hills in 3 colors",
        closed_form=CLOSED_FORMS[3],
        triangle="k/n C(2n, n-k)",
    ),
    4: LevelConfig(
        level=4,
        name="Fourth invert transform",
        sequence="f4(n)",
        paths="Dyck paths of semilength n-1, hills in 4 colors; ternary words of length 2n-1",
        closed_form=CLOSED_FORMS[4],
        triangle="2^(n-k)/n! sum_i (-1)^(k-i) C(k,i) i(i+2)...(i+2n-2)",
    ),
}


def get_level_config(m: int) -> LevelConfig:
    """Get configuration for a tower level."""
    if m not in LEVEL_REGISTRY:
        available = ", ".join(str(level) for level in LEVEL_REGISTRY)
        raise ValueError(f"Unknown level: {m}. Available: {available}")
    return LEVEL_REGISTRY[m]


def get_supported_levels() -> list[int]:
    """Levels with a sequence, 0..4."""
    return list(LEVEL_REGISTRY.keys())


def get_triangle_levels() -> list[int]:
    """Levels with a triangle G_m, 1..4."""
    return [m for m, config in LEVEL_REGISTRY.items() if config.has_triangle]
