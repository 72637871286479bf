"""Propagation of nonadditive operations through spectral sequence pages."""

from .system import PowerSystem, SyntheticTowerSystem, synthetic_suite
from .ops import (
    detect_power,
    q_apply,
    shifted_power,
    transport_boundaries,
    transport_cycles,
    transport_differential,
    transport_generic,
)

__all__ = [
    "PowerSystem",
    "SyntheticTowerSystem",
    "synthetic_suite",
    "detect_power",
    "q_apply",
    "shifted_power",
    "transport_boundaries",
    "transport_cycles",
    "transport_differential",
    "transport_generic",
]
