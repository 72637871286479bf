"""Exact linear algebra over Z and truncated p-adic integers.

Finitely generated modules in invariant-factor normal form, homomorphisms,
subquotients, additive relations and their induced partial functions.
"""

from .ring import CoeffRing, ZZ, Zp
from .matrix import SNFResult, smith_normal_form
from .module import (
    FgModule,
    Hom,
    Submodule,
    SubQuotient,
    direct_sum,
    kernel,
    image,
    cokernel,
    fiber_product,
)
from .relation import AdditiveRelation, RelationFunction, relation_to_function
from . import serialize

__all__ = [
    "CoeffRing",
    "ZZ",
    "Zp",
    "SNFResult",
    "smith_normal_form",
    "FgModule",
    "Hom",
    "Submodule",
    "SubQuotient",
    "direct_sum",
    "kernel",
    "image",
    "cokernel",
    "fiber_product",
    "AdditiveRelation",
    "RelationFunction",
    "relation_to_function",
    "serialize",
]
