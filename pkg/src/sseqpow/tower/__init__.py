"""The spectral sequence of a tower, from long-exact-sequence data."""

from .datum import TowerDatum, validate_tower
from .pages import (
    PageElement,
    SSeqReport,
    boundaries,
    cycles,
    d_relation,
    differential,
    einfinity,
    page,
    report,
)
from .build import (
    ChainComplex,
    FilteredComplexTower,
    TwoStageTower,
    random_exact_tower,
    tower_from_filtered_complex,
    two_stage,
    zero_tower,
)
from . import serialize

__all__ = [
    "TowerDatum",
    "validate_tower",
    "PageElement",
    "SSeqReport",
    "boundaries",
    "cycles",
    "d_relation",
    "differential",
    "einfinity",
    "page",
    "report",
    "ChainComplex",
    "FilteredComplexTower",
    "TwoStageTower",
    "random_exact_tower",
    "tower_from_filtered_complex",
    "two_stage",
    "zero_tower",
    "serialize",
]
