"""Finite permutation groups, class functions, Euler classes, norms."""

from .group import FiniteGroup, group_from_generators, parse_cycles, cycles_str
from .classfn import ClassFunction
from .reps import (
    PermRep,
    ReducedPermRep,
    VirtualCharacter,
    adams_operation,
    bott_power_euler,
    euler_character_identity,
    euler_class,
    euler_gset,
    exterior_powers,
    perm_character,
)
from .dixon import CharacterTable, character_table
from .allowable import is_ku_allowable
from .norm import norm_epsilon
from . import corpus

__all__ = [
    "FiniteGroup",
    "group_from_generators",
    "parse_cycles",
    "cycles_str",
    "ClassFunction",
    "PermRep",
    "ReducedPermRep",
    "VirtualCharacter",
    "adams_operation",
    "bott_power_euler",
    "euler_character_identity",
    "euler_class",
    "euler_gset",
    "exterior_powers",
    "perm_character",
    "CharacterTable",
    "character_table",
    "is_ku_allowable",
    "norm_epsilon",
    "corpus",
]
